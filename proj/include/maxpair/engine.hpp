#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "maxpair/group.hpp"
#include "maxpair/group_map.hpp"

namespace maxpair {

// ---------------------------------------------------------------------------
// Elements

std::uint64_t element_order(const Group& g, Elem x);
/// Orders of all elements, memoized on the group.
const std::vector<std::uint32_t>& element_orders(const Group& g);
/// lcm of the element orders.
std::uint64_t exponent(const Group& g);
std::uint64_t exponent(const Subgroup& h);

/// The prime p when |G| is a power of p (trivial group: none).
std::optional<std::uint64_t> p_group_prime(const Group& g);
std::optional<std::uint64_t> p_group_prime(const Subgroup& h);

// ---------------------------------------------------------------------------
// Subgroups

Subgroup trivial_subgroup(const Group& g);
Subgroup whole_group(const Group& g);

/// Least subgroup containing `seed`.
Subgroup closure(const Group& g, std::span<const Elem> seed);
/// Least subgroup containing h and `more`.
Subgroup extend(const Subgroup& h, std::span<const Elem> more);
Subgroup join(const Subgroup& a, const Subgroup& b);
Subgroup intersection(const Subgroup& a, const Subgroup& b);
/// Wraps a member set known to be a subgroup, choosing generators greedily.
Subgroup subgroup_from_members(const Group& g, const Bits& members);

/// Least subgroup of g containing h and normalized by every element of
/// `by`.
Subgroup normal_closure(const Subgroup& h, const Subgroup& by);
bool normalizes(const Group& g, Elem x, const Subgroup& h);
bool is_normal(const Subgroup& n, const Subgroup& in);
bool is_normal(const Subgroup& n);

/// [A, B] = < [a, b] : a in A, b in B >, computed as the normal closure in
/// <A, B> of the commutators of generators.
Subgroup commutator_subgroup(const Group& g, const Subgroup& a, const Subgroup& b);
/// Direct definition: closure of all |A|*|B| commutators.
Subgroup commutator_subgroup_bruteforce(const Group& g, const Subgroup& a, const Subgroup& b);

Subgroup center(const Group& g);
Subgroup centralizer(const Group& g, const Subgroup& a);
Subgroup normalizer(const Group& g, const Subgroup& a);

bool is_abelian(const Subgroup& h);

/// Omega_k(H) = < x in H : x^{p^k} = 1 >.
Subgroup omega(const Subgroup& h, std::uint64_t p, int k);
/// Agemo_k(H) = < x^{p^k} : x in H >.
Subgroup agemo(const Subgroup& h, std::uint64_t p, int k);
/// Whole-group versions; throw PreconditionError for non-p-groups.
Subgroup omega_n(const Group& g, int k);
Subgroup agemo_n(const Group& g, int k);

// ---------------------------------------------------------------------------
// Series

struct Series {
  enum class Kind { LowerCentral, Derived, Custom };

  Kind kind = Kind::Custom;
  std::vector<Subgroup> terms;
  std::vector<std::string> labels;

  bool reaches_trivial() const { return !terms.empty() && terms.back().is_trivial(); }
  /// Number of nontrivial steps; -1 when the series stalls above 1.
  int length() const { return reaches_trivial() ? static_cast<int>(terms.size()) - 1 : -1; }
  std::vector<std::size_t> orders() const;
};

/// gamma_1 = G, gamma_{i+1} = [gamma_i, G] until stable.  Memoized.
const Series& lower_central_series(const Group& g);
/// Nilpotency class, or -1 for non-nilpotent groups.
int nilpotency_class(const Group& g);
/// gamma_i for i >= 1; the trivial subgroup past the end of the series.
Subgroup gamma(const Group& g, int i);
Series derived_series(const Group& g);
bool is_solvable(const Group& g);

// ---------------------------------------------------------------------------
// Regularity

struct RegularityResult {
  bool regular = true;
  std::optional<std::pair<Elem, Elem>> witness;
};

/// (xy)^p == x^p y^p modulo Agemo_1(gamma_2(<x, y>)) for all x, y.
RegularityResult is_regular(const Group& g);
/// Reference: every ordered pair, no reductions.
RegularityResult is_regular_serial(const Group& g);

// ---------------------------------------------------------------------------
// Constructions

struct Quotient {
  GroupPtr group;
  GroupMap projection;
  /// Coset representative (least element index) of each quotient element.
  std::vector<Elem> representatives;
};

/// G / N.  Throws PreconditionError when N is not normal.
Quotient quotient_group(const GroupPtr& g, const Subgroup& n);

/// The map induced on G/N by an endomorphism f of G with f(N) = N.
GroupMap induced_map(const Quotient& q, const GroupMap& f);

struct Product {
  GroupPtr group;
  GroupMap embed_left;
  GroupMap embed_right;
};

/// Element (a, b) has index a * |H| + b.
Product direct_product(const GroupPtr& g, const GroupPtr& h);

/// P x| <beta> with beta generating a cyclic group of order m: pairs (x, i)
/// with (x, i)(y, j) = (x beta^i(y), i + j mod m).  Element (x, i) has index
/// i * |P| + x.  Requires order(beta) | m.
GroupPtr semidirect_product(const GroupPtr& p, const GroupMap& beta, std::uint64_t m);

/// Automorphism order: least k >= 1 with f^k = id.  Throws for maps that are
/// not bijective endomorphisms.
std::uint64_t map_order(const GroupMap& f);

/// Conjugation x -> b^-1 x b restricted to a normal subgroup, as an
/// automorphism of that subgroup viewed as a group.
GroupMap conjugation_action(const GroupPtr& sub, const std::vector<Elem>& embedding,
                            const Group& g, Elem b);

// ---------------------------------------------------------------------------
// Isomorphism

struct Fingerprint {
  std::size_t order = 0;
  std::uint64_t exponent = 0;
  std::vector<std::pair<std::uint32_t, std::size_t>> order_histogram;
  std::size_t center = 0;
  std::size_t frattini = 0;
  std::size_t derived = 0;
  std::vector<std::size_t> lower_central;
  int rank = 0;

  bool operator==(const Fingerprint&) const = default;
};

Fingerprint fingerprint(const Group& g);

struct IsomorphismResult {
  bool isomorphic = false;
  std::optional<GroupMap> map;  // G -> H when isomorphic
};

IsomorphismResult is_isomorphic(const GroupPtr& g, const GroupPtr& h);

/// A generating set of least size (d(G) elements): lifted Frattini basis for
/// p-groups, exhaustive tuple search otherwise.
std::vector<Elem> minimal_generating_set(const Group& g);

}  // namespace maxpair
