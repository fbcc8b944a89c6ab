#pragma once

#include <vector>

#include "maxpair/group.hpp"

namespace maxpair {

/// A homomorphism between two enumerated groups, stored as a total element
/// map.  Construction does not verify the homomorphism property; use
/// hom_from_images for that.
class GroupMap {
 public:
  GroupMap(GroupPtr source, GroupPtr target, std::vector<Elem> table);

  static GroupMap identity(const GroupPtr& g);

  const GroupPtr& source() const noexcept { return source_; }
  const GroupPtr& target() const noexcept { return target_; }
  const std::vector<Elem>& table() const noexcept { return table_; }
  /// Images of source().gens(), in order.
  const std::vector<Elem>& images() const noexcept { return images_; }

  Elem operator()(Elem x) const noexcept { return table_[x]; }

  bool is_endomorphism() const noexcept { return source_ == target_; }
  bool is_bijective() const;
  bool is_identity() const;

  /// (after o this)(x) = after(this(x)).
  GroupMap then(const GroupMap& after) const;
  GroupMap inverse() const;

  /// Image of a subgroup of the source.
  Bits image(const Bits& members) const;

  friend bool operator==(const GroupMap& a, const GroupMap& b) {
    return a.source_ == b.source_ && a.target_ == b.target_ && a.table_ == b.table_;
  }

 private:
  GroupPtr source_;
  GroupPtr target_;
  std::vector<Elem> table_;
  std::vector<Elem> images_;
};

}  // namespace maxpair
