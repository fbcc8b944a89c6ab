#include <doctest.h>

#include "maxpair/actions.hpp"
#include "maxpair/catalog.hpp"
#include "maxpair/engine.hpp"
#include "maxpair/error.hpp"
#include "maxpair/lattice.hpp"
#include "maxpair/maximality.hpp"
#include "oracles.hpp"

using namespace maxpair;

namespace {

const GroupMap& aut(const CatalogGroup& c, const std::string& name) { return c.automorphism(name).map; }

// Brute-force d-maximality straight from the definition.
bool oracle_d_maximal(const Group& g) {
  const int d = oracle::min_generators(g);
  for (const auto& h : oracle::all_subgroups(g))
    if (oracle::count(h) < g.order() && oracle::min_generators(g, h) >= d) return false;
  return true;
}

}  // namespace

TEST_CASE("is_d_maximal examples") {
  const MaximalityReport c5 = is_d_maximal(*get_group("c5").group);
  CHECK(c5.d == 1);
  CHECK(c5.is_d_maximal);
  CHECK_FALSE(c5.witness);

  const MaximalityReport q8 = is_d_maximal(*get_group("q8").group);
  CHECK(q8.d == 2);
  CHECK(q8.is_d_maximal);

  const CatalogGroup c4 = get_group("c4");
  const MaximalityReport r = is_d_maximal(*c4.group);
  CHECK(r.d == 1);
  CHECK_FALSE(r.is_d_maximal);
  REQUIRE(r.witness);
  CHECK(r.witness->order() == 2);
  CHECK(r.witness_rank == 1);
}

TEST_CASE("is_d_maximal report invariants against the oracle") {
  for (const char* id : {"c2", "c3", "c4", "c9", "ea-2-2", "ea-3-2", "ea-2-3", "q8", "d8", "c2xq8",
                         "c4oq8", "heis-3", "c7:c3", "sd-ea-3-2", "sd-ea-3-2-t2", "c12"}) {
    const GroupPtr g = get_group(id).group;
    const MaximalityReport r = is_d_maximal(*g);
    CHECK_MESSAGE(r.is_d_maximal == oracle_d_maximal(*g), id);
    CHECK(r.is_d_maximal == !r.witness.has_value());
    CHECK(r.subgroups == all_subgroups(*g).size());
    if (r.witness) {
      CHECK_FALSE(r.witness->is_whole());
      CHECK(r.witness_rank >= r.d);
      CHECK(subgroup_rank(*r.witness) == r.witness_rank);
    }
  }
}

TEST_CASE("the witness is the first offender in lattice order") {
  const GroupPtr g = get_group("c9xc3").group;
  const MaximalityReport r = is_d_maximal(*g);
  REQUIRE(r.witness);
  const SubgroupLattice& lat = all_subgroups(*g);
  const std::vector<int>& ranks = lattice_ranks(*g);
  for (std::size_t i = 0; i < lat.size(); ++i) {
    if (lat.all[i].is_whole() || ranks[i] < r.d) continue;
    CHECK(lat.all[i] == *r.witness);
    break;
  }
}

TEST_CASE("check_pair examples") {
  const CatalogGroup e = get_group("ea-3-2");
  const PairCheckReport a = check_pair(aut(e, "inversion"), 2);
  CHECK(a.verdict());
  CHECK(a.d == 2);
  CHECK(a.p == 3);
  CHECK(a.q == 2);
  REQUIRE(a.character);
  CHECK(a.character->value == 2);

  const CatalogGroup c9 = get_group("c9");
  const PairCheckReport b = check_pair(aut(c9, "inversion"), 2);
  CHECK(b.cond_a);
  CHECK(b.cond_b);
  CHECK_FALSE(b.cond_c);
  CHECK_FALSE(b.verdict());
  REQUIRE(b.witness_c);
  CHECK(b.witness_c->order() == 3);
  REQUIRE(b.witness_c_character);
  CHECK(b.witness_c_character->value == 2);

  const CatalogGroup x = get_group("sg-81-10");
  const PairCheckReport c = check_pair(aut(x, "alpha"), 2);
  CHECK(c.verdict());
  CHECK(c.d == 2);
}

TEST_CASE("check_pair preconditions") {
  const CatalogGroup e = get_group("ea-3-2");
  CHECK_THROWS_AS(check_pair(aut(e, "inversion"), 3), PreconditionError);  // wrong order
  const CatalogGroup e5 = get_group("ea-5-2");
  CHECK_THROWS_AS(check_pair(aut(e5, "scalar-q4"), 4), PreconditionError);  // q not prime
  const CatalogGroup c73 = get_group("c7:c3");
  CHECK_THROWS_AS(check_pair(GroupMap::identity(c73.group), 1), PreconditionError);
  const Quotient trivial = quotient_group(e.group, whole_group(*e.group));
  CHECK_THROWS_AS(check_pair(GroupMap::identity(trivial.group), 1), PreconditionError);
  const GroupPtr c9 = get_group("c9").group;
  const GroupMap zero(c9, c9, std::vector<Elem>(c9->order(), 0));
  CHECK_THROWS_AS(check_pair(zero, 2), PreconditionError);
}

TEST_CASE("every catalog pair passes") {
  for (const CatalogPair& cp : catalog_pairs()) {
    const CatalogGroup c = get_group(cp.group_id);
    const PairCheckReport r = check_pair(aut(c, cp.automorphism), cp.q);
    CHECK_MESSAGE(r.verdict(), cp.group_id);
    CHECK((r.p - 1) % r.q == 0);
    CHECK(r.verdict() == (r.cond_a && r.cond_b && r.cond_c));
  }
}

TEST_CASE("rank-1 pairs have prime order") {
  for (const char* id : {"c3", "c5", "c7", "c9"}) {
    const CatalogGroup c = get_group(id);
    const PairCheckReport r = check_pair(aut(c, "inversion"), 2);
    CHECK(r.d == 1);
    CHECK_MESSAGE(r.verdict() == (c.group->order() == r.p), id);
  }
}

TEST_CASE("build_group_from_pair") {
  const CatalogGroup e = get_group("ea-3-2");
  const GroupPtr g18 = build_group_from_pair(aut(e, "inversion"), 2, 1);
  CHECK(g18->order() == 18);
  const MaximalityReport r18 = is_d_maximal(*g18);
  CHECK(r18.d == 3);
  CHECK(r18.is_d_maximal);

  const GroupPtr g36 = build_group_from_pair(aut(e, "inversion"), 2, 2);
  CHECK(g36->order() == 36);
  const MaximalityReport r36 = is_d_maximal(*g36);
  CHECK(r36.d == 3);
  CHECK(r36.is_d_maximal);
  CHECK(oracle_d_maximal(*g36));

  const CatalogGroup x = get_group("sg-81-10");
  const GroupPtr g162 = build_group_from_pair(aut(x, "alpha"), 2, 1);
  CHECK(g162->order() == 162);
  CHECK(is_isomorphic(g162, get_group("sg-162-22").group).isomorphic);

  for (const char* id : {"heis-3", "ea-5-2"}) {
    const CatalogPair cp = [&] {
      for (const auto& p : catalog_pairs())
        if (p.group_id == id) return p;
      return CatalogPair{};
    }();
    const CatalogGroup c = get_group(cp.group_id);
    const GroupPtr built = build_group_from_pair(aut(c, cp.automorphism), cp.q, 1);
    const MaximalityReport rep = is_d_maximal(*built);
    CHECK_MESSAGE(rep.is_d_maximal, id);
    CHECK(rep.d == min_generators(*c.group) + 1);
  }
}

TEST_CASE("strip_pair recovers the pair") {
  const CatalogGroup x = get_group("sg-81-10");
  const StrippedPair s = strip_pair(build_group_from_pair(aut(x, "alpha"), 2, 1));
  CHECK(s.q == 2);
  CHECK(s.pair.group->order() == 81);
  CHECK(is_isomorphic(s.pair.group, x.group).isomorphic);
  CHECK(check_pair(s.pair.alpha, s.q).verdict());
  CHECK_THROWS_AS(strip_pair(get_group("ea-3-2").group), PreconditionError);
}

TEST_CASE("quotient_pair") {
  const CatalogGroup x = get_group("sg-81-10");
  const GroupMap& alpha = aut(x, "alpha");

  const Pair same = quotient_pair(alpha, trivial_subgroup(*x.group));
  CHECK(same.group->order() == 81);
  CHECK(map_order(same.alpha) == 2);

  const Pair q = quotient_pair(alpha, gamma(*x.group, 3));
  CHECK(q.group->order() == 27);
  const PairCheckReport r = check_pair(q.alpha, 2);
  CHECK(r.verdict());
  CHECK(r.d == 2);

  // A subgroup of Phi that alpha moves.
  bool tested = false;
  for (const Subgroup& n : all_subgroups(*x.group).all) {
    if (!n.is_subset_of(frattini_subgroup(*x.group)) || is_invariant(alpha, n)) continue;
    CHECK_THROWS_AS(quotient_pair(alpha, n), PreconditionError);
    tested = true;
    break;
  }
  CHECK(tested);

  // Invariant and normal but not inside Phi.
  const CatalogGroup e = get_group("ea-3-2");
  const Elem g1[1] = {e.group->gens()[0]};
  CHECK_THROWS_AS(quotient_pair(aut(e, "inversion"), closure(*e.group, g1)), PreconditionError);
}

TEST_CASE("quotients of pairs by invariant normal subgroups of Phi stay pairs") {
  for (const CatalogPair& cp : catalog_pairs()) {
    const CatalogGroup c = get_group(cp.group_id);
    if (c.group->order() > 243) continue;
    const GroupMap& alpha = aut(c, cp.automorphism);
    const Subgroup phi = frattini_subgroup(*c.group);
    for (const Subgroup& n : all_subgroups(*c.group).all) {
      if (!n.is_subset_of(phi) || !is_normal(n) || !is_invariant(alpha, n)) continue;
      const Pair qp = quotient_pair(alpha, n);
      CHECK_MESSAGE(check_pair(qp.alpha, cp.q).verdict(), cp.group_id << " / " << n.order());
    }
  }
}

TEST_CASE("product_pair") {
  const CatalogGroup c3 = get_group("c3");
  const Pair sq = product_pair(aut(c3, "inversion"), aut(c3, "inversion"));
  CHECK(sq.group->order() == 9);
  CHECK(is_isomorphic(sq.group, get_group("ea-3-2").group).isomorphic);
  const PairCheckReport r = check_pair(sq.alpha, 2);
  CHECK(r.verdict());
  CHECK(r.d == 2);

  const CatalogGroup x = get_group("sg-81-10");
  const Pair big = product_pair(aut(c3, "inversion"), aut(x, "alpha"));
  CHECK(big.group->order() == 243);
  const PairCheckReport rb = check_pair(big.alpha, 2);
  CHECK(rb.verdict());
  CHECK(rb.d == 3);

  CHECK_THROWS_AS(product_pair(aut(c3, "inversion"), aut(get_group("c5"), "inversion")),
                  PreconditionError);
  // Same p, different character: inversion against the identity.
  CHECK_THROWS_AS(product_pair(aut(c3, "inversion"), GroupMap::identity(c3.group)),
                  PreconditionError);
}

TEST_CASE("structural reports") {
  const CatalogGroup h = get_group("heis-3");
  const StructuralReport rh = structural_report(aut(h, "scalar-q2"), 2);
  CHECK(rh.passed());
  std::set<std::string> ids;
  for (const Assertion& a : rh.assertions) {
    CHECK(ids.insert(a.id).second);
    CHECK(a.verdict != Verdict::Fail);
  }
  CHECK(ids.size() == 12);
  CHECK(rh.get("A9").verdict == Verdict::Vacuous);  // class 2

  const CatalogGroup x = get_group("sg-81-10");
  const StructuralReport rx = structural_report(aut(x, "alpha"), 2);
  CHECK(rx.passed());
  CHECK(rx.get("A6").verdict == Verdict::Pass);
  CHECK(rx.get("A10").verdict == Verdict::Pass);

  const CatalogGroup u = get_group("p5-unique-5");
  const StructuralReport ru = structural_report(aut(u, "alpha"), 2);
  CHECK(ru.passed());
  CHECK(ru.get("A9").verdict == Verdict::Pass);
  CHECK(ru.get("A8").verdict == Verdict::Vacuous);  // p = 5 < 2d

  const CatalogGroup h7 = get_group("heis-7");
  const StructuralReport r7 = structural_report(aut(h7, "scalar-q3"), 3);
  CHECK(r7.passed());
  CHECK(r7.get("A7").verdict == Verdict::Pass);
  CHECK(r7.get("A8").verdict == Verdict::Pass);
  CHECK(r7.get("A12").verdict == Verdict::Pass);

  CHECK_THROWS_AS(structural_report(aut(get_group("c9"), "inversion"), 2), PreconditionError);
  CHECK_THROWS(rh.get("A13"));
}

TEST_CASE("verdict names") {
  CHECK(to_string(Verdict::Pass) == "pass");
  CHECK(to_string(Verdict::Fail) == "fail");
  CHECK(to_string(Verdict::Vacuous) == "vacuous");
}
