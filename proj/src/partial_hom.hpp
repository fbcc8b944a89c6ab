#pragma once

#include <utility>
#include <vector>

#include "maxpair/group.hpp"

namespace maxpair::detail {

/// A homomorphism defined on the subgroup generated by the generators added
/// so far.  add() extends it by one more generator image and reports false
/// when the images are inconsistent (no homomorphism exists) or, with
/// `injective`, when two elements collide.
class PartialHom {
 public:
  static constexpr Elem kUnset = static_cast<Elem>(-1);

  PartialHom(const Group& source, const Group& target, bool injective)
      : src_(&source), dst_(&target), injective_(injective), table_(source.order(), kUnset),
        used_(target.order(), false) {
    table_[0] = 0;
    used_[0] = true;
    reached_.push_back(0);
  }

  bool add(Elem gen, Elem image) {
    const std::size_t old_size = reached_.size();
    const std::size_t old_gens = gens_.size();
    gens_.push_back(gen);
    images_.push_back(image);
    for (std::size_t i = 0; i < reached_.size(); ++i) {
      const Elem x = reached_[i];
      const Elem fx = table_[x];
      for (std::size_t k = i < old_size ? old_gens : 0; k < gens_.size(); ++k) {
        const Elem y = src_->mul(x, gens_[k]);
        const Elem fy = dst_->mul(fx, images_[k]);
        if (table_[y] == kUnset) {
          if (injective_ && used_[fy]) {
            witness_ = {x, gens_[k]};
            return false;
          }
          table_[y] = fy;
          used_[fy] = true;
          reached_.push_back(y);
        } else if (table_[y] != fy) {
          witness_ = {x, gens_[k]};
          return false;
        }
      }
    }
    return true;
  }

  /// The pair (x, g) whose product broke consistency in the last add().
  std::pair<Elem, Elem> witness() const noexcept { return witness_; }
  std::size_t domain_size() const noexcept { return reached_.size(); }
  const std::vector<Elem>& table() const noexcept { return table_; }
  bool total() const noexcept { return reached_.size() == src_->order(); }

 private:
  const Group* src_;
  const Group* dst_;
  bool injective_;
  std::vector<Elem> table_;
  std::vector<bool> used_;
  std::vector<Elem> reached_;
  std::vector<Elem> gens_;
  std::vector<Elem> images_;
  std::pair<Elem, Elem> witness_{0, 0};
};

}  // namespace maxpair::detail
