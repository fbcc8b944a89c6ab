#include <doctest.h>

#include "maxpair/actions.hpp"
#include "maxpair/catalog.hpp"
#include "maxpair/engine.hpp"
#include "maxpair/error.hpp"
#include "maxpair/lattice.hpp"
#include "maxpair/numtheory.hpp"

using namespace maxpair;

namespace {

Elem gen(const Group& g, int k, int e = 1) { return g.evaluate(Word{{{k, e}}}); }

}  // namespace

TEST_CASE("hom_from_images") {
  const CatalogGroup e = get_group("ea-3-2");
  const GroupPtr& g = e.group;
  const GroupMap id = hom_from_images(g, g, g->gens());
  CHECK(id.is_identity());
  CHECK(id == GroupMap::identity(g));

  const std::vector<Elem> inv = {g->inv(g->gens()[0]), g->inv(g->gens()[1])};
  const GroupMap f = hom_from_images(g, g, inv);
  CHECK(is_automorphism(f));
  CHECK(f == e.automorphism("inversion").map);
  CHECK(f.images() == inv);

  const std::vector<Elem> short_list = {g->gens()[0]};
  CHECK_THROWS_AS(hom_from_images(g, g, short_list), PreconditionError);

  // Q8: i -> j, j -> i is fine on its own, but i^2 -> i cannot hold.
  const GroupPtr q8 = get_group("q8").group;
  const std::vector<Elem> bad = {gen(*q8, 1), gen(*q8, 0), gen(*q8, 0)};
  try {
    hom_from_images(q8, q8, bad);
    FAIL("accepted an incompatible assignment");
  } catch (const NotHomomorphism& ex) {
    CHECK(ex.witness_x() < q8->order());
    CHECK(ex.witness_y() < q8->order());
  }

  // Swapping i and j with i^2 = j^2 fixed is an automorphism of Q8.
  const std::vector<Elem> swap = {gen(*q8, 1), gen(*q8, 0), gen(*q8, 2)};
  CHECK(is_automorphism(hom_from_images(q8, q8, swap)));
}

TEST_CASE("homomorphism check agrees with the full pair scan") {
  const GroupPtr g = get_group("heis-3").group;
  // Every assignment of the two top generators to elements of the group.
  std::size_t homs = 0;
  for (Elem a = 0; a < g->order(); ++a)
    for (Elem b = 0; b < g->order(); b += 4) {
      const Elem gens[2] = {g->gens()[0], g->gens()[1]};
      const Elem images[2] = {a, b};
      try {
        const GroupMap f = hom_from_images(g, g, gens, images);
        bool all = true;
        for (Elem x = 0; x < g->order(); ++x)
          for (Elem y = 0; y < g->order(); ++y)
            all = all && f(g->mul(x, y)) == g->mul(f(x), f(y));
        CHECK(all);
        ++homs;
      } catch (const NotHomomorphism&) {
      }
    }
  // Any two elements define a homomorphism from a free class-2 exponent-3 group.
  CHECK(homs == 27 * 7);
}

TEST_CASE("map_order") {
  const CatalogGroup e = get_group("ea-3-2");
  CHECK(map_order(GroupMap::identity(e.group)) == 1);
  CHECK(map_order(e.automorphism("inversion").map) == 2);
  CHECK(map_order(get_group("sg-81-10").automorphism("alpha").map) == 2);
  CHECK(map_order(get_group("heis-7").automorphism("scalar-q3").map) == 3);
  CHECK(map_order(get_group("c7").automorphism("inversion").map) == 2);
  const GroupPtr c9 = get_group("c9").group;
  const GroupMap zero(c9, c9, std::vector<Elem>(c9->order(), 0));
  CHECK_THROWS(map_order(zero));
}

TEST_CASE("acts_through_character") {
  const CatalogGroup e = get_group("ea-3-2");
  const GroupPtr& g = e.group;
  const auto inv = acts_through_character(e.automorphism("inversion").map, whole_group(*g),
                                          trivial_subgroup(*g));
  REQUIRE(inv);
  CHECK(inv->value == 2);
  CHECK(inv->order == 2);
  CHECK(inv->modulus == 3);

  const std::vector<Elem> diag = {g->gens()[0], g->inv(g->gens()[1])};
  CHECK_FALSE(acts_through_character(hom_from_images(g, g, diag), whole_group(*g),
                                     trivial_subgroup(*g)));

  for (const char* id : {"heis-3", "heis-5", "heis-7"}) {
    const CatalogGroup h = get_group(id);
    for (const auto& aut : h.automorphisms) {
      const auto c = frattini_scalar(aut.map);
      REQUIRE(c);
      const auto on_center = acts_through_character(aut.map, gamma(*h.group, 2), gamma(*h.group, 3));
      REQUIRE(on_center);
      CHECK(on_center->value == c->value * c->value % c->modulus);
    }
  }

  // f(B) != B is a precondition failure.
  const GroupPtr v = get_group("ea-3-2").group;
  const Elem one[1] = {v->gens()[0]};
  const Subgroup line = closure(*v, one);
  const std::vector<Elem> swap = {v->gens()[1], v->gens()[0]};
  CHECK_THROWS_AS(acts_through_character(hom_from_images(v, v, swap), whole_group(*v), line),
                  PreconditionError);
}

TEST_CASE("frattini_scalar") {
  for (std::uint64_t p : {3, 5, 7}) {
    const CatalogGroup e = get_group("ea-" + std::to_string(p) + "-2");
    const auto c = frattini_scalar(e.automorphism("inversion").map);
    REQUIRE(c);
    CHECK(c->value == p - 1);
    CHECK(frattini_scalar(GroupMap::identity(e.group))->value == 1);
    CHECK(frattini_scalar(GroupMap::identity(e.group))->trivial());
  }
  for (const char* id : {"p5-unique-3", "p5-unique-5", "sg-81-10"}) {
    const CatalogGroup c = get_group(id);
    const auto s = frattini_scalar(c.automorphism("alpha").map);
    REQUIRE(s);
    CHECK(s->value == s->modulus - 1);
  }
}

TEST_CASE("search_automorphisms") {
  const CatalogGroup e = get_group("ea-3-2");
  const auto found = search_automorphisms(e.group, {.order = 2, .scalar = 2});
  CHECK(std::find(found.begin(), found.end(), e.automorphism("inversion").map) != found.end());

  CHECK_FALSE(search_automorphisms(get_group("sg-81-10").group, {.order = 2, .scalar = 2}).empty());
  CHECK(search_automorphisms(get_group("c9").group, {.order = 2, .scalar = 1}).empty());
  CHECK(search_automorphisms(get_group("sg-81-10").group, {.order = 2, .scalar = 2, .limit = 3})
            .size() == 3);

  // Phi(C3 x C3) is trivial, so scalar 1 leaves only the identity.
  CHECK(search_automorphisms(e.group, {.order = 3, .scalar = 1}).empty());
}

TEST_CASE("search results have the requested order and scalar") {
  struct Case {
    const char* id;
    std::uint64_t order, scalar;
  };
  for (const Case c : {Case{"ea-3-2", 2, 2}, Case{"heis-3", 2, 2}, Case{"heis-5", 4, 2},
                       Case{"heis-7", 3, 2}, Case{"sg-81-10", 2, 2},
                       Case{"g32", 2, 1}, Case{"p5-unique-3", 2, 2}}) {
    const GroupPtr g = get_group(c.id).group;
    const auto found = search_automorphisms(g, {.order = c.order, .scalar = c.scalar, .limit = 40});
    CHECK_MESSAGE(!found.empty(), c.id);
    for (const GroupMap& f : found) {
      CHECK(is_automorphism(f));
      CHECK(hom_from_images(g, g, f.images()) == f);
      CHECK(map_order(f) == c.order);
      const auto s = frattini_scalar(f);
      REQUIRE(s);
      CHECK(s->value == c.scalar);
    }
    // Deterministic order.
    CHECK(found == search_automorphisms(g, {.order = c.order, .scalar = c.scalar, .limit = 40}));
  }
}

TEST_CASE("plus_minus_split") {
  const CatalogGroup e = get_group("ea-3-2");
  const Subgroup m = whole_group(*e.group);
  const PlusMinusSplit inv = plus_minus_split(m, e.automorphism("inversion").map);
  CHECK(inv.plus.is_trivial());
  CHECK(inv.minus.is_whole());
  const PlusMinusSplit id = plus_minus_split(m, GroupMap::identity(e.group));
  CHECK(id.plus.is_whole());
  CHECK(id.minus.is_trivial());

  // Omega_1 of the centralizer of gamma_2 in the order p^5 group at p = 5.
  // (Omega_1 / gamma_3 itself is not abelian there.)
  const CatalogGroup u = get_group("p5-unique-5");
  const GroupMap& alpha = u.automorphism("alpha").map;
  const Subgroup c = centralizer(*u.group, gamma(*u.group, 2));
  const Subgroup sec = omega(c, 5, 1);
  REQUIRE(is_abelian(sec));
  CHECK(sec.order() == 125);
  REQUIRE(is_invariant(alpha, sec));
  const PlusMinusSplit s = plus_minus_split(sec, alpha);
  CHECK_FALSE(s.plus.is_trivial());
  CHECK_FALSE(s.minus.is_trivial());
  CHECK(s.plus.order() * s.minus.order() == sec.order());
  CHECK(intersection(s.plus, s.minus).is_trivial());
  for (Elem x : s.plus.elements()) CHECK(alpha(x) == x);
  for (Elem x : s.minus.elements()) CHECK(alpha(x) == u.group->inv(x));

  const GroupPtr h = get_group("heis-3").group;
  CHECK_THROWS_AS(plus_minus_split(whole_group(*h), GroupMap::identity(h)), PreconditionError);
}

TEST_CASE("plus and minus orders multiply to |M| on abelian catalog groups") {
  for (const char* id : {"ea-3-3", "ea-5-2", "ea-7-2", "c9xc3", "c9", "c5"}) {
    const CatalogGroup c = get_group(id);
    const GroupMap& f = c.automorphism("inversion").map;
    for (const Subgroup& m : all_subgroups(*c.group).all) {
      const PlusMinusSplit s = plus_minus_split(m, f);
      CHECK(s.plus.order() * s.minus.order() == m.order());
    }
  }
}

TEST_CASE("inversion_forces_abelian_check") {
  const CatalogGroup e = get_group("ea-3-2");
  for (const Subgroup& n : all_subgroups(*e.group).all)
    CHECK(inversion_forces_abelian_check(n, e.automorphism("inversion").map));

  const CatalogGroup h = get_group("heis-3");
  CHECK(inversion_forces_abelian_check(center(*h.group), h.automorphism("scalar-q2").map));

  const CatalogGroup c9 = get_group("c9");
  CHECK(inversion_forces_abelian_check(omega_n(*c9.group, 1), c9.automorphism("inversion").map));
}

TEST_CASE("layer characters are powers of the top character") {
  // If f acts through k on G / gamma_2, it acts through k^i on each layer.
  std::size_t layers = 0;
  auto check = [&](const GroupMap& f) {
    const Group& g = *f.source();
    const auto top = acts_through_character(f, whole_group(g), gamma(g, 2));
    if (!top) return;
    const Series& s = lower_central_series(g);
    for (std::size_t i = 0; i + 1 < s.terms.size(); ++i) {
      const auto layer = acts_through_character(f, s.terms[i], s.terms[i + 1]);
      REQUIRE(layer);
      const std::uint64_t expect = powmod(top->value, i + 1, top->modulus);
      CHECK(layer->value == expect);
      ++layers;
    }
  };
  for (const CatalogPair& cp : catalog_pairs())
    check(get_group(cp.group_id).automorphism(cp.automorphism).map);
  for (const char* id : {"heis-3", "sg-81-10", "heis-5", "p5-unique-3"})
    for (const GroupMap& f : search_automorphisms(get_group(id).group, {.order = 2, .scalar = 2, .limit = 10}))
      check(f);
  CHECK(layers > 20);
}

TEST_CASE("characters pass to quotients along surjections") {
  std::size_t instances = 0;
  for (const CatalogPair& cp : catalog_pairs()) {
    const CatalogGroup c = get_group(cp.group_id);
    const GroupMap& f = c.automorphism(cp.automorphism).map;
    const Group& g = *c.group;
    const auto k = acts_through_character(f, whole_group(g), gamma(g, 2));
    REQUIRE(k);
    for (const Subgroup& n : all_subgroups(g).all) {
      if (n.is_trivial() || !is_normal(n) || !is_invariant(f, n)) continue;
      const Quotient q = quotient_group(c.group, n);
      const GroupMap induced = induced_map(q, f);
      // The projection is a surjection respecting f.
      bool respects = true;
      for (Elem x = 0; x < g.order(); ++x) respects = respects && q.projection(f(x)) == induced(q.projection(x));
      REQUIRE(respects);
      const Group& qg = *q.group;
      const auto kq = acts_through_character(induced, whole_group(qg), gamma(qg, 2));
      REQUIRE(kq);
      if (qg.order() > gamma(qg, 2).order()) CHECK(kq->value == k->value);
      ++instances;
    }
  }
  CHECK(instances > 50);
}
