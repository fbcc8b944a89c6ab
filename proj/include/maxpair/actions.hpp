#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "maxpair/group.hpp"
#include "maxpair/group_map.hpp"

namespace maxpair {

/// Extends generator images to a homomorphism.  `images[k]` is the image of
/// source->gens()[k].  Throws NotHomomorphism with a witness pair (x, g),
/// g a source generator, when no homomorphism has these images.
GroupMap hom_from_images(const GroupPtr& source, const GroupPtr& target,
                         std::span<const Elem> images);

/// Same, for images of an arbitrary generating list of the source.
GroupMap hom_from_images(const GroupPtr& source, const GroupPtr& target,
                         std::span<const Elem> generators, std::span<const Elem> images);

/// Whether f(xg) = f(x) f(g) for every x and every source generator g,
/// which is equivalent to f being a homomorphism.
bool is_homomorphism(const GroupMap& f);

/// A bijective endomorphism.
bool is_automorphism(const GroupMap& f);

/// A character value k mod p, with the unreduced exponent on the section.
struct CharacterValue {
  std::uint64_t modulus = 0;        // the prime p
  std::uint64_t value = 1;          // k mod p, in [1, p)
  std::uint64_t order = 1;          // multiplicative order of value mod p
  std::uint64_t section_value = 1;  // least k in [1, exponent] that works
  std::uint64_t section_exponent = 1;

  bool trivial() const noexcept { return value % modulus == 1 % modulus; }
  bool operator==(const CharacterValue&) const = default;
};

/// The least k with f(x) = x^k modulo B for every x in A, if any.  Requires
/// B normal in A, f(A) = A, f(B) = B and A/B a p-group; throws
/// PreconditionError otherwise.
std::optional<CharacterValue> acts_through_character(const GroupMap& f, const Subgroup& a,
                                                     const Subgroup& b);

/// Character of f on G / Phi(G), or none when the induced map is not scalar.
std::optional<CharacterValue> frattini_scalar(const GroupMap& f);

struct AutomorphismConstraints {
  std::uint64_t order = 2;
  std::uint64_t scalar = 1;  // action on G / Phi(G), as a unit mod p
  std::size_t limit = 0;     // 0 = all
};

/// Automorphisms of the p-group g with the given order and Frattini scalar,
/// in deterministic candidate order.
std::vector<GroupMap> search_automorphisms(const GroupPtr& g, const AutomorphismConstraints& c);

struct PlusMinusSplit {
  Subgroup plus;   // fixed pointwise
  Subgroup minus;  // inverted pointwise
};

/// Eigenspace split of an abelian p-group M (p odd) under an involution f
/// preserving M.
PlusMinusSplit plus_minus_split(const Subgroup& m, const GroupMap& f);

/// If f inverts N pointwise and induces inversion on P/N, checks that P is
/// abelian and f is inversion.  True when the hypothesis fails.
bool inversion_forces_abelian_check(const Subgroup& n, const GroupMap& f);

/// Whether x -> x^p is an endomorphism of h.
bool power_map_is_endomorphism(const Subgroup& h, std::uint64_t p);

/// f(H) == H as sets.
bool is_invariant(const GroupMap& f, const Subgroup& h);

}  // namespace maxpair
