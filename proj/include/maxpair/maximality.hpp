#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "maxpair/actions.hpp"
#include "maxpair/group.hpp"
#include "maxpair/group_map.hpp"

namespace maxpair {

struct MaximalityReport {
  std::string label;
  int d = 0;
  bool is_d_maximal = false;
  /// First proper subgroup in lattice order with d(H) >= d.
  std::optional<Subgroup> witness;
  int witness_rank = -1;
  std::size_t subgroups = 0;
  double seconds = 0;
};

MaximalityReport is_d_maximal(const Group& g);

struct PairCheckReport {
  std::uint64_t p = 0;
  std::uint64_t q = 0;
  int d = 0;

  /// (a) d(H) <= d for every subgroup H.
  bool cond_a = false;
  std::optional<Subgroup> witness_a;
  int witness_a_rank = -1;

  /// (b) alpha acts on P / Phi(P) as a nontrivial scalar.
  bool cond_b = false;
  std::optional<CharacterValue> character;
  std::string witness_b;

  /// (c) no proper invariant H with d(H) = d carries a nontrivial scalar.
  bool cond_c = false;
  std::optional<Subgroup> witness_c;
  std::optional<CharacterValue> witness_c_character;

  double seconds = 0;

  bool verdict() const noexcept { return cond_a && cond_b && cond_c; }
};

/// Evaluates the three pair conditions.  Throws PreconditionError when P is
/// trivial or not a p-group, alpha is not an automorphism of order q, or q
/// does not divide p - 1.
PairCheckReport check_pair(const GroupMap& alpha, std::uint64_t q);

/// P x| C_{q^t}, the generator of the cyclic factor acting as alpha.
GroupPtr build_group_from_pair(const GroupMap& alpha, std::uint64_t q, int t);

/// A p-group with an automorphism.
struct Pair {
  GroupPtr group;
  GroupMap alpha;
};

/// (P/N, induced map).  N must be normal, alpha-invariant and inside Phi(P).
Pair quotient_pair(const GroupMap& alpha, const Subgroup& n);

/// (P x Q, alpha x beta).  Both pairs must share p and the Frattini
/// character value.
Pair product_pair(const GroupMap& alpha, const GroupMap& beta);

/// Recovers (P, alpha) from G = P x| <b>: P is the normal Sylow subgroup for
/// the largest prime, b the least element generating a complement, and
/// alpha(x) = b x b^-1.  Also returns q, the order of alpha.
struct StrippedPair {
  Pair pair;
  std::uint64_t q = 0;
  std::vector<Elem> embedding;  // element i of P is embedding[i] in G
  Elem complement_generator = 0;
};
StrippedPair strip_pair(const GroupPtr& g);

enum class Verdict { Pass, Fail, Vacuous };

std::string to_string(Verdict v);

struct Assertion {
  std::string id;
  std::string statement;
  Verdict verdict = Verdict::Vacuous;
  std::string detail;
};

struct StructuralReport {
  std::vector<Assertion> assertions;

  bool passed() const;
  const Assertion& get(const std::string& id) const;
};

struct StructuralOptions {
  /// Round trip through the built (d+1)-maximal group only when its order
  /// is at most this; larger instances are recorded as vacuous.
  std::size_t round_trip_cap = 8000;
};

/// Evaluates the structural assertions A1-A12 on a pair.  Throws
/// PreconditionError when the pair fails check_pair.
StructuralReport structural_report(const GroupMap& alpha, std::uint64_t q,
                                   const StructuralOptions& options = {});

}  // namespace maxpair
