#pragma once

#include <any>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "maxpair/presentation.hpp"

namespace maxpair {

using Elem = std::uint32_t;
using Bits = boost::dynamic_bitset<std::uint64_t>;

/// Default refusal threshold for constructions (elements).
inline constexpr std::size_t kDefaultElementCap = 20000;

/// Process-wide element cap; the CLI exposes it as --cap.
std::size_t element_cap();
void set_element_cap(std::size_t cap);
void check_cap(std::size_t order, const std::string& what);

/// A fully enumerated finite group.  Element 0 is the identity.  Immutable
/// after construction; lattice-level results are memoized per instance.
class Group {
 public:
  /// `table` is row-major n x n.  The constructor derives the inverse table
  /// and checks identity and Latin-square structure (not associativity).
  Group(std::string label, std::size_t order, std::vector<Elem> table, std::vector<Elem> gens,
        std::optional<PcPresentation> presentation = std::nullopt);

  std::size_t order() const noexcept { return n_; }
  Elem mul(Elem a, Elem b) const noexcept { return table_[static_cast<std::size_t>(a) * n_ + b]; }
  Elem inv(Elem a) const noexcept { return inv_[a]; }
  Elem pow(Elem a, std::int64_t k) const;
  /// a^-1 b^-1 a b
  Elem comm(Elem a, Elem b) const noexcept { return mul(mul(inv_[a], inv_[b]), mul(a, b)); }
  /// b^-1 a b
  Elem conj(Elem a, Elem b) const noexcept { return mul(mul(inv_[b], a), b); }

  std::span<const Elem> row(Elem a) const noexcept {
    return {table_.data() + static_cast<std::size_t>(a) * n_, n_};
  }
  const std::vector<Elem>& table() const noexcept { return table_; }
  const std::vector<Elem>& gens() const noexcept { return gens_; }
  const std::string& label() const noexcept { return label_; }

  /// Present only for presentation-born groups; element index is then the
  /// mixed-radix encoding of the exponent vector (g_1 most significant).
  const std::optional<PcPresentation>& presentation() const noexcept { return pres_; }
  ExponentVector exponents(Elem x) const;
  Elem from_exponents(const ExponentVector& v) const;
  /// Evaluates a word in the pc generators (presentation-born groups only).
  Elem evaluate(const Word& w) const;

  /// Write-once memo: the first completed computation for `key` wins and is
  /// returned to every caller.  Safe under concurrent readers.
  template <class T, class F>
  const T& memo(const std::string& key, F&& compute) const {
    {
      std::lock_guard lock(memo_->mutex);
      auto it = memo_->values.find(key);
      if (it != memo_->values.end()) return *std::static_pointer_cast<const T>(it->second);
    }
    auto value = std::make_shared<const T>(compute());
    std::lock_guard lock(memo_->mutex);
    auto [it, inserted] = memo_->values.emplace(key, value);
    return *std::static_pointer_cast<const T>(it->second);
  }

 private:
  struct Memo {
    std::mutex mutex;
    std::map<std::string, std::shared_ptr<const void>> values;
  };

  std::string label_;
  std::size_t n_;
  std::vector<Elem> table_;
  std::vector<Elem> inv_;
  std::vector<Elem> gens_;
  std::optional<PcPresentation> pres_;
  std::unique_ptr<Memo> memo_;
};

using GroupPtr = std::shared_ptr<const Group>;

/// A subgroup of a parent group as a membership bit-vector.  Keeps a small
/// generating set alongside the members.  The parent must outlive it.
class Subgroup {
 public:
  Subgroup() = default;
  Subgroup(const Group& parent, Bits members, std::vector<Elem> generators);

  const Group& parent() const noexcept { return *parent_; }
  const Bits& members() const noexcept { return members_; }
  std::size_t order() const noexcept { return order_; }
  bool contains(Elem x) const noexcept { return members_.test(x); }
  const std::vector<Elem>& generators() const noexcept { return gens_; }
  std::vector<Elem> elements() const;

  bool is_subset_of(const Subgroup& other) const { return members_.is_subset_of(other.members_); }
  bool is_trivial() const noexcept { return order_ == 1; }
  bool is_whole() const noexcept { return order_ == parent_->order(); }

  friend bool operator==(const Subgroup& a, const Subgroup& b) { return a.members_ == b.members_; }

 private:
  const Group* parent_ = nullptr;
  Bits members_;
  std::size_t order_ = 0;
  std::vector<Elem> gens_;
};

/// Deterministic lattice order: by order, then lexicographically by member
/// indices.
bool lattice_less(const Subgroup& a, const Subgroup& b);

std::size_t hash_bits(const Bits& b);

}  // namespace maxpair
