#include "maxpair/actions.hpp"

#include <functional>
#include <numeric>

#include "maxpair/engine.hpp"
#include "maxpair/error.hpp"
#include "maxpair/lattice.hpp"
#include "maxpair/numtheory.hpp"
#include "partial_hom.hpp"

namespace maxpair {

GroupMap hom_from_images(const GroupPtr& source, const GroupPtr& target,
                         std::span<const Elem> images) {
  return hom_from_images(source, target, source->gens(), images);
}

GroupMap hom_from_images(const GroupPtr& source, const GroupPtr& target,
                         std::span<const Elem> generators, std::span<const Elem> images) {
  if (generators.size() != images.size())
    throw PreconditionError("expected " + std::to_string(generators.size()) + " images, got " +
                            std::to_string(images.size()));
  for (Elem y : images)
    if (y >= target->order()) throw PreconditionError("image out of range");
  // Every f(xg) = f(x) f(g) with g a generator is checked while extending,
  // which forces f(xy) = f(x) f(y) for all pairs.
  detail::PartialHom partial(*source, *target, false);
  for (std::size_t k = 0; k < generators.size(); ++k)
    if (!partial.add(generators[k], images[k])) {
      auto [x, g] = partial.witness();
      throw NotHomomorphism("images do not extend to a homomorphism: f(x*g) != f(x)*f(g) for x=" +
                                std::to_string(x) + ", g=" + std::to_string(g),
                            x, g);
    }
  if (!partial.total()) throw PreconditionError("listed elements do not generate the source");
  return GroupMap(source, target, partial.table());
}

bool is_homomorphism(const GroupMap& f) {
  const Group& s = *f.source();
  const Group& t = *f.target();
  for (std::size_t x = 0; x < s.order(); ++x)
    for (Elem g : s.gens())
      if (f(s.mul(static_cast<Elem>(x), g)) != t.mul(f(static_cast<Elem>(x)), f(g))) return false;
  return true;
}

bool is_automorphism(const GroupMap& f) {
  return f.is_endomorphism() && f.is_bijective() && is_homomorphism(f);
}

std::optional<CharacterValue> acts_through_character(const GroupMap& f, const Subgroup& a,
                                                     const Subgroup& b) {
  const Group& g = a.parent();
  if (f.source().get() != &g || f.target().get() != &g)
    throw PreconditionError("map is not an endomorphism of the ambient group");
  if (&b.parent() != &g || !b.is_subset_of(a)) throw PreconditionError("B is not a subgroup of A");
  if (!is_normal(b, a)) throw PreconditionError("B is not normal in A");
  if (!is_invariant(f, a) || !is_invariant(f, b))
    throw PreconditionError("A and B must be invariant under the map");
  const std::size_t index = a.order() / b.order();
  std::uint64_t p = 0;
  if (index > 1) {
    auto base = prime_power_base(index);
    if (!base) throw PreconditionError("A/B is not a p-group");
    p = *base;
  } else {
    p = p_group_prime(g).value_or(1);
  }

  const std::vector<Elem> elems = a.elements();
  std::uint64_t e = 1;
  for (Elem x : elems) {
    std::uint64_t m = 1;
    for (Elem y = x; !b.contains(y); y = g.mul(y, x)) ++m;
    e = std::lcm(e, m);
  }
  auto works = [&](Elem x, std::uint64_t k) {
    return b.contains(g.mul(g.inv(g.pow(x, static_cast<std::int64_t>(k))), f(x)));
  };
  for (std::uint64_t k = 1; k <= e; ++k) {
    bool ok = true;
    for (Elem x : a.generators())
      if (!works(x, k)) {
        ok = false;
        break;
      }
    if (!ok) continue;
    for (Elem x : elems)
      if (!works(x, k)) {
        ok = false;
        break;
      }
    if (!ok) continue;
    CharacterValue c;
    c.modulus = p;
    c.value = p > 1 ? k % p : 1;
    c.order = p > 1 ? multiplicative_order(c.value, p) : 1;
    c.section_value = k;
    c.section_exponent = e;
    return c;
  }
  return std::nullopt;
}

std::optional<CharacterValue> frattini_scalar(const GroupMap& f) {
  const Group& g = *f.source();
  return acts_through_character(f, whole_group(g), frattini_subgroup(g));
}

std::vector<GroupMap> search_automorphisms(const GroupPtr& gp, const AutomorphismConstraints& c) {
  const Group& g = *gp;
  if (g.order() == 1) return {GroupMap::identity(gp)};
  const auto p = p_group_prime(g);
  if (!p) throw PreconditionError("automorphism search needs a p-group");
  if (c.scalar % *p == 0) throw PreconditionError("scalar must be a unit mod p");

  const std::vector<Elem> gens = minimal_generating_set(g);
  const Quotient q = quotient_group(gp, frattini_subgroup(g));
  const auto& ords = element_orders(g);
  std::vector<std::vector<Elem>> candidates(gens.size());
  for (std::size_t i = 0; i < gens.size(); ++i) {
    const Elem target_coset = q.projection(g.pow(gens[i], static_cast<std::int64_t>(c.scalar)));
    for (std::size_t y = 0; y < g.order(); ++y)
      if (ords[y] == ords[gens[i]] && q.projection(static_cast<Elem>(y)) == target_coset)
        candidates[i].push_back(static_cast<Elem>(y));
  }

  auto explore = [&](Elem first, std::vector<GroupMap>& out) {
    std::function<void(const detail::PartialHom&, std::size_t)> rec =
        [&](const detail::PartialHom& partial, std::size_t depth) {
          if (c.limit && out.size() >= c.limit) return;
          if (depth == gens.size()) {
            GroupMap f(gp, gp, partial.table());
            if (partial.total() && f.is_bijective() && map_order(f) == c.order)
              out.push_back(std::move(f));
            return;
          }
          for (Elem y : candidates[depth]) {
            detail::PartialHom next = partial;
            if (next.add(gens[depth], y)) rec(next, depth + 1);
          }
        };
    detail::PartialHom root(g, g, false);
    if (root.add(gens[0], first)) rec(root, 1);
  };

  std::vector<std::vector<GroupMap>> per_first(candidates[0].size());
#pragma omp parallel for schedule(dynamic, 1)
  for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(candidates[0].size()); ++i)
    explore(candidates[0][i], per_first[i]);
  std::vector<GroupMap> out;
  for (auto& batch : per_first)
    for (auto& f : batch) {
      if (c.limit && out.size() >= c.limit) return out;
      out.push_back(std::move(f));
    }
  return out;
}

bool is_invariant(const GroupMap& f, const Subgroup& h) {
  return f.image(h.members()) == h.members();
}

PlusMinusSplit plus_minus_split(const Subgroup& m, const GroupMap& f) {
  const Group& g = m.parent();
  const auto p = p_group_prime(m);
  if (!m.is_trivial() && (!p || *p == 2)) throw PreconditionError("M must be a p-group for odd p");
  if (!is_abelian(m)) throw PreconditionError("M must be abelian");
  if (f.source().get() != &g || !is_invariant(f, m))
    throw PreconditionError("map must preserve M");
  Bits plus(g.order()), minus(g.order());
  for (Elem x : m.elements()) {
    if (f(f(x)) != x) throw PreconditionError("map is not an involution on M");
    plus.set(g.mul(x, f(x)));
    minus.set(g.mul(x, g.inv(f(x))));
  }
  return {subgroup_from_members(g, plus), subgroup_from_members(g, minus)};
}

bool inversion_forces_abelian_check(const Subgroup& n, const GroupMap& f) {
  const Group& g = n.parent();
  if (f.source().get() != &g || f.target().get() != &g) return true;
  if (!is_normal(n) || !is_invariant(f, n)) return true;
  for (Elem x : n.elements())
    if (f(x) != g.inv(x)) return true;
  for (std::size_t x = 0; x < g.order(); ++x)
    if (!n.contains(g.mul(static_cast<Elem>(x), f(static_cast<Elem>(x))))) return true;
  if (!is_abelian(whole_group(g))) return false;
  for (std::size_t x = 0; x < g.order(); ++x)
    if (f(static_cast<Elem>(x)) != g.inv(static_cast<Elem>(x))) return false;
  return true;
}

bool power_map_is_endomorphism(const Subgroup& h, std::uint64_t p) {
  const Group& g = h.parent();
  const std::vector<Elem> elems = h.elements();
  std::vector<Elem> pth(g.order());
  for (Elem x : elems) pth[x] = g.pow(x, static_cast<std::int64_t>(p));
  for (Elem x : elems)
    for (Elem y : elems)
      if (pth[g.mul(x, y)] != g.mul(pth[x], pth[y])) return false;
  return true;
}

}  // namespace maxpair
