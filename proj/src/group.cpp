#include "maxpair/group.hpp"

#include <atomic>
#include <bit>

#include "maxpair/error.hpp"

namespace maxpair {

namespace {
std::atomic<std::size_t> g_element_cap{kDefaultElementCap};
}

std::size_t element_cap() { return g_element_cap.load(); }
void set_element_cap(std::size_t cap) { g_element_cap.store(cap); }

void check_cap(std::size_t order, const std::string& what) {
  if (order > element_cap())
    throw CapExceeded(what + " would have " + std::to_string(order) +
                      " elements, above the cap of " + std::to_string(element_cap()));
}

Group::Group(std::string label, std::size_t order, std::vector<Elem> table,
             std::vector<Elem> gens, std::optional<PcPresentation> presentation)
    : label_(std::move(label)),
      n_(order),
      table_(std::move(table)),
      gens_(std::move(gens)),
      pres_(std::move(presentation)),
      memo_(std::make_unique<Memo>()) {
  if (n_ == 0) throw PreconditionError("a group has at least one element");
  if (table_.size() != n_ * n_) throw PreconditionError("multiplication table has wrong size");
  inv_.assign(n_, static_cast<Elem>(n_));
  std::vector<std::uint32_t> seen(n_, 0);
  for (std::size_t a = 0; a < n_; ++a) {
    if (table_[a] != a || table_[a * n_] != a)
      throw PreconditionError("element 0 is not the identity");
    for (std::size_t b = 0; b < n_; ++b) {
      Elem c = table_[a * n_ + b];
      if (c >= n_) throw PreconditionError("table entry out of range");
      if (seen[c] == a + 1) throw PreconditionError("table row is not a permutation");
      seen[c] = static_cast<std::uint32_t>(a + 1);
      if (c == 0) inv_[a] = static_cast<Elem>(b);
    }
  }
  for (std::size_t a = 0; a < n_; ++a)
    if (table_[static_cast<std::size_t>(inv_[a]) * n_ + a] != 0)
      throw PreconditionError("left and right inverses differ");
  for (Elem g : gens_)
    if (g >= n_) throw PreconditionError("generator index out of range");
}

Elem Group::pow(Elem a, std::int64_t k) const {
  if (k < 0) {
    a = inv_[a];
    k = -k;
  }
  Elem result = 0;
  Elem base = a;
  while (k > 0) {
    if (k & 1) result = mul(result, base);
    base = mul(base, base);
    k >>= 1;
  }
  return result;
}

ExponentVector Group::exponents(Elem x) const {
  if (!pres_) throw PreconditionError("group '" + label_ + "' has no pc presentation");
  const auto& orders = pres_->rel_orders;
  ExponentVector v(orders.size(), 0);
  for (std::size_t k = orders.size(); k-- > 0;) {
    v[k] = static_cast<int>(x % orders[k]);
    x /= orders[k];
  }
  return v;
}

Elem Group::from_exponents(const ExponentVector& v) const {
  if (!pres_) throw PreconditionError("group '" + label_ + "' has no pc presentation");
  Elem x = 0;
  for (std::size_t k = 0; k < v.size(); ++k)
    x = x * static_cast<Elem>(pres_->rel_orders[k]) + static_cast<Elem>(v[k]);
  return x;
}

Elem Group::evaluate(const Word& w) const {
  if (!pres_) throw PreconditionError("group '" + label_ + "' has no pc presentation");
  Elem x = 0;
  for (auto [g, e] : w.factors) {
    if (g < 0 || static_cast<std::size_t>(g) >= pres_->generator_count())
      throw PreconditionError("generator index out of range");
    ExponentVector unit(pres_->generator_count(), 0);
    unit[g] = 1;
    x = mul(x, pow(from_exponents(unit), e));
  }
  return x;
}

Subgroup::Subgroup(const Group& parent, Bits members, std::vector<Elem> generators)
    : parent_(&parent),
      members_(std::move(members)),
      order_(members_.count()),
      gens_(std::move(generators)) {}

std::vector<Elem> Subgroup::elements() const {
  std::vector<Elem> out;
  out.reserve(order_);
  for (auto i = members_.find_first(); i != Bits::npos; i = members_.find_next(i))
    out.push_back(static_cast<Elem>(i));
  return out;
}

bool lattice_less(const Subgroup& a, const Subgroup& b) {
  if (a.order() != b.order()) return a.order() < b.order();
  Bits diff = a.members() ^ b.members();
  auto first = diff.find_first();
  if (first == Bits::npos) return false;
  return a.members().test(first);
}

std::size_t hash_bits(const Bits& b) {
  std::size_t h = 0xcbf29ce484222325ull;
  std::vector<std::uint64_t> blocks(b.num_blocks());
  boost::to_block_range(b, blocks.begin());
  for (auto w : blocks) {
    h ^= w + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  }
  return h;
}

}  // namespace maxpair
