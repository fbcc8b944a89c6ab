#pragma once

#include <string>
#include <vector>

#include "maxpair/group.hpp"
#include "maxpair/presentation.hpp"

namespace maxpair {

/// Enumerates the presented group and verifies that collection defines a
/// group of order prod(rel_orders).  Groups of at most
/// kFullAssociativityLimit elements are checked on every triple; larger ones
/// on every triple whose middle factor is a pc generator, which is
/// equivalent because every element is a product of pc generators.
/// Throws InconsistentPresentation or CapExceeded.
GroupPtr build_group(const PcPresentation& pres);

inline constexpr std::size_t kFullAssociativityLimit = 1000;

/// Wraps a verified table.  Associativity is checked the same way as in
/// build_group, with `gens` as the middle factors above the full-check
/// limit; `gens` must generate the group.
GroupPtr group_from_table(std::string label, std::size_t order, std::vector<Elem> table,
                          std::vector<Elem> gens);

/// Element indices of the pc generators of a presentation-born group.
std::vector<Elem> pc_generator_elements(const Group& g);

/// The subgroup as a group in its own right.  Element i of the result is
/// the i-th smallest member of `h`; `embedding`, when given, receives that
/// list.
GroupPtr subgroup_as_group(const Subgroup& h, std::vector<Elem>* embedding = nullptr);

}  // namespace maxpair
