#include "maxpair/group_map.hpp"

#include "maxpair/error.hpp"

namespace maxpair {

GroupMap::GroupMap(GroupPtr source, GroupPtr target, std::vector<Elem> table)
    : source_(std::move(source)), target_(std::move(target)), table_(std::move(table)) {
  if (table_.size() != source_->order()) throw PreconditionError("map table has wrong size");
  for (Elem y : table_)
    if (y >= target_->order()) throw PreconditionError("map image out of range");
  images_.reserve(source_->gens().size());
  for (Elem g : source_->gens()) images_.push_back(table_[g]);
}

GroupMap GroupMap::identity(const GroupPtr& g) {
  std::vector<Elem> t(g->order());
  for (std::size_t x = 0; x < t.size(); ++x) t[x] = static_cast<Elem>(x);
  return GroupMap(g, g, std::move(t));
}

bool GroupMap::is_bijective() const {
  if (source_->order() != target_->order()) return false;
  std::vector<bool> hit(target_->order(), false);
  for (Elem y : table_) {
    if (hit[y]) return false;
    hit[y] = true;
  }
  return true;
}

bool GroupMap::is_identity() const {
  if (source_ != target_) return false;
  for (std::size_t x = 0; x < table_.size(); ++x)
    if (table_[x] != x) return false;
  return true;
}

GroupMap GroupMap::then(const GroupMap& after) const {
  if (after.source_ != target_) throw PreconditionError("maps are not composable");
  std::vector<Elem> t(table_.size());
  for (std::size_t x = 0; x < t.size(); ++x) t[x] = after.table_[table_[x]];
  return GroupMap(source_, after.target_, std::move(t));
}

GroupMap GroupMap::inverse() const {
  if (!is_bijective()) throw PreconditionError("map is not bijective");
  std::vector<Elem> t(table_.size());
  for (std::size_t x = 0; x < t.size(); ++x) t[table_[x]] = static_cast<Elem>(x);
  return GroupMap(target_, source_, std::move(t));
}

Bits GroupMap::image(const Bits& members) const {
  Bits out(target_->order());
  for (auto i = members.find_first(); i != Bits::npos; i = members.find_next(i))
    out.set(table_[i]);
  return out;
}

}  // namespace maxpair
