#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <unordered_map>
#include <vector>

#include "maxpair/group.hpp"

namespace maxpair {

/// Every subgroup of a group, sorted by lattice_less and deduplicated.
struct SubgroupLattice {
  std::vector<Subgroup> all;
  /// Indices into `all` of the maximal subgroups.
  std::vector<std::size_t> maximal;
  /// Subgroup order -> indices into `all`.
  std::map<std::size_t, std::vector<std::size_t>> by_order;

  std::optional<std::size_t> index_of(const Bits& members) const;
  std::size_t size() const noexcept { return all.size(); }

  /// Sorts, deduplicates and fills the derived fields.
  static SubgroupLattice from(std::vector<Subgroup> subgroups);

 private:
  std::unordered_multimap<std::size_t, std::size_t> index_;
};

/// The lattice, memoized on the group.  Solvable groups are enumerated by
/// prime-index cyclic extension (every nontrivial subgroup of a solvable
/// group has a normal subgroup of prime index), extending each subgroup of a
/// generation in parallel.  Other groups fall back to the join-closure.
const SubgroupLattice& all_subgroups(const Group& g);

/// Reference enumeration: join-closure of all cyclic subgroups, breadth
/// first, serial.  Complete for every finite group.
SubgroupLattice all_subgroups_join_closure(const Group& g);

std::vector<Subgroup> maximal_subgroups(const Group& g);

/// Intersection of the maximal subgroups (trivial for |G| = 1).
Subgroup frattini_subgroup(const Group& g);

/// d(G): the least number of generators.  Computed on G / Phi(G); for
/// p-groups this is log_p |G : Phi(G)|.
int min_generators(const Group& g);

/// Least k with some k elements generating g, or limit + 1 when no tuple of
/// at most `limit` elements generates.
int generation_rank(const Group& g, int limit);

/// d(H) for a subgroup.  p-subgroups use Phi(H) = Agemo_1(H)[H, H]; other
/// subgroups search on H / X where X is the join of the Frattini subgroups
/// of the normal Sylow subgroups of H (X lies in Phi(H)).  With `limit`,
/// returns limit + 1 as soon as d(H) > limit is certain.
int subgroup_rank(const Subgroup& h, int limit = -1);

/// Phi(H) for a p-subgroup H via the basis identity.
Subgroup p_subgroup_frattini(const Subgroup& h);

/// d(H) for every lattice member, memoized; entry i belongs to all[i].
const std::vector<int>& lattice_ranks(const Group& g);

struct JumpSet {
  Subgroup subgroup;
  std::vector<int> jumps;
};

/// All j with H meet gamma_j != H meet gamma_{j+1}.  Throws
/// PreconditionError for non-nilpotent g.
JumpSet jumps(const Group& g, const Subgroup& h);

}  // namespace maxpair
