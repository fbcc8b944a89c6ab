#include <doctest.h>

#include "maxpair/actions.hpp"
#include "maxpair/build.hpp"
#include "maxpair/catalog.hpp"
#include "maxpair/engine.hpp"
#include "maxpair/error.hpp"
#include "maxpair/lattice.hpp"
#include "oracles.hpp"

using namespace maxpair;

namespace {

GroupPtr grp(const std::string& id) { return get_group(id).group; }

std::set<oracle::Members> as_oracle_set(const SubgroupLattice& lat) {
  std::set<oracle::Members> out;
  for (const Subgroup& h : lat.all) out.insert(oracle::from_bits(h.members()));
  return out;
}

// Lower central series by repeated brute-force commutators.
std::vector<oracle::Members> oracle_series(const Group& g) {
  std::vector<oracle::Members> s{oracle::Members(g.order(), true)};
  while (true) {
    oracle::Members next = oracle::commutator(g, s.back(), s.front());
    if (next == s.back()) break;
    s.push_back(next);
  }
  return s;
}

std::vector<int> oracle_jumps(const Group& g, const oracle::Members& h) {
  std::vector<oracle::Members> s = oracle_series(g);
  s.push_back(oracle::Members(g.order(), false));
  std::vector<int> out;
  for (std::size_t j = 0; j + 1 < s.size(); ++j) {
    std::size_t a = 0, b = 0;
    for (std::size_t x = 0; x < g.order(); ++x) {
      a += h[x] && s[j][x];
      b += h[x] && (s[j + 1][x] || x == 0);
    }
    if (a != b) out.push_back(static_cast<int>(j + 1));
  }
  return out;
}

const std::vector<std::string> kOracleGroups = {
    "c2",      "c4",     "c6",      "c8",       "c12",    "ea-2-2", "ea-2-3",   "ea-2-4",
    "ea-3-2",  "ea-3-3", "ea-5-2",  "q8",       "d8",     "c2xq8",  "c4oq8",    "g32",
    "heis-3",  "p4-3",   "c9xc3",   "sg-81-10", "c7:c3",  "sd-ea-3-2", "sd-heis-3-2",
    "sd-ea-5-2", "sd-ea-3-2-t2"};

}  // namespace

TEST_CASE("subgroup counts") {
  CHECK(all_subgroups(*grp("ea-2-2")).size() == 5);
  CHECK(all_subgroups(*grp("q8")).size() == 6);
  CHECK(all_subgroups(*grp("c12")).size() == 6);
  const GroupPtr h = grp("heis-3");
  CHECK(all_subgroups(*h).size() == oracle::all_subgroups(*h).size());
  // Elementary abelian 2^3: 1 + 7 + 7 + 1.
  CHECK(all_subgroups(*grp("ea-2-3")).size() == 16);
}

TEST_CASE("lattice agrees with the brute-force oracle") {
  for (const auto& id : kOracleGroups) {
    const GroupPtr g = grp(id);
    CHECK_MESSAGE(as_oracle_set(all_subgroups(*g)) == oracle::all_subgroups(*g), id);
  }
}

TEST_CASE("cyclic extension agrees with join-closure") {
  for (const char* id : {"sg-162-22", "c3xsg-81-10", "heis-5", "sd-ea-7-3", "p5-unique-3"}) {
    const GroupPtr g = grp(id);
    const SubgroupLattice& fast = all_subgroups(*g);
    const SubgroupLattice slow = all_subgroups_join_closure(*g);
    REQUIRE_MESSAGE(fast.size() == slow.size(), id);
    for (std::size_t i = 0; i < fast.size(); ++i) CHECK(fast.all[i] == slow.all[i]);
    CHECK(fast.maximal == slow.maximal);
  }
}

TEST_CASE("lattice is sorted, deduplicated and indexed") {
  const GroupPtr g = grp("sg-81-10");
  const SubgroupLattice& lat = all_subgroups(*g);
  for (std::size_t i = 0; i + 1 < lat.size(); ++i) CHECK(lattice_less(lat.all[i], lat.all[i + 1]));
  CHECK(lat.all.front().is_trivial());
  CHECK(lat.all.back().is_whole());
  for (std::size_t i = 0; i < lat.size(); ++i) CHECK(lat.index_of(lat.all[i].members()) == i);
  std::size_t total = 0;
  for (const auto& [order, idx] : lat.by_order) {
    total += idx.size();
    for (std::size_t i : idx) CHECK(lat.all[i].order() == order);
  }
  CHECK(total == lat.size());
}

TEST_CASE("maximal subgroups") {
  CHECK(maximal_subgroups(*grp("c5")).size() == 1);
  const auto q8 = maximal_subgroups(*grp("q8"));
  CHECK(q8.size() == 3);
  for (const Subgroup& m : q8) CHECK(m.order() == 4);
  for (std::uint64_t p : {3, 5, 7}) {
    const GroupPtr e = grp("ea-" + std::to_string(p) + "-2");
    CHECK(maximal_subgroups(*e).size() == p + 1);
  }
  // In a p-group every maximal subgroup is normal of index p.
  const GroupPtr x = grp("sg-81-10");
  for (const Subgroup& m : maximal_subgroups(*x)) {
    CHECK(m.order() * 3 == x->order());
    CHECK(is_normal(m));
  }
}

TEST_CASE("frattini of non-p-groups is the meet of maximal subgroups") {
  for (const char* id : {"c12", "c7:c3", "sd-ea-3-2", "sg-162-22", "c6"}) {
    const GroupPtr g = grp(id);
    Bits meet(g->order());
    meet.set();
    for (const Subgroup& m : maximal_subgroups(*g)) meet &= m.members();
    CHECK_MESSAGE(frattini_subgroup(*g).members() == meet, id);
  }
  CHECK(frattini_subgroup(*grp("c12")).order() == 2);
}

TEST_CASE("minimal number of generators") {
  const GroupPtr q8 = grp("q8");
  CHECK(subgroup_rank(trivial_subgroup(*q8)) == 0);
  CHECK(min_generators(*grp("c16")) == 1);
  CHECK(min_generators(*grp("sg-81-10")) == 2);
  CHECK(min_generators(*grp("p5-unique-3")) == 3);
  CHECK(min_generators(*grp("p5-unique-5")) == 3);
  CHECK(min_generators(*grp("ea-2-4")) == 4);
  CHECK(min_generators(*grp("c7:c3")) == 2);
  for (const auto& id : kOracleGroups) {
    const GroupPtr g = grp(id);
    CHECK_MESSAGE(min_generators(*g) == oracle::min_generators(*g), id);
    CHECK_MESSAGE(generation_rank(*g, 8) == oracle::min_generators(*g), id);
  }
  CHECK(generation_rank(*grp("ea-2-4"), 2) == 3);
}

TEST_CASE("subgroup ranks agree with brute force") {
  for (const char* id : {"sg-81-10", "sd-ea-3-2-t2", "sd-heis-3-2", "c2xq8", "c12"}) {
    const GroupPtr g = grp(id);
    const SubgroupLattice& lat = all_subgroups(*g);
    const std::vector<int>& ranks = lattice_ranks(*g);
    REQUIRE(ranks.size() == lat.size());
    for (std::size_t i = 0; i < lat.size(); ++i) {
      const int expected = oracle::min_generators(*g, oracle::from_bits(lat.all[i].members()));
      CHECK_MESSAGE(ranks[i] == expected, id << " subgroup " << i);
      CHECK(subgroup_rank(lat.all[i]) == expected);
      if (expected > 0) CHECK(subgroup_rank(lat.all[i], expected - 1) == expected);
    }
  }
}

TEST_CASE("frattini of p-subgroups by the basis identity") {
  const GroupPtr g = grp("sg-162-22");
  for (const Subgroup& h : all_subgroups(*g).all) {
    if (!p_group_prime(h) || h.is_trivial()) continue;
    const GroupPtr standalone = subgroup_as_group(h);
    CHECK(p_subgroup_frattini(h).order() == frattini_subgroup(*standalone).order());
  }
}

TEST_CASE("jumps") {
  const GroupPtr h = grp("heis-3");
  CHECK(jumps(*h, whole_group(*h)).jumps == std::vector<int>{1, 2});
  CHECK(jumps(*h, gamma(*h, 2)).jumps == std::vector<int>{2});
  CHECK(jumps(*h, trivial_subgroup(*h)).jumps.empty());

  const GroupPtr x = grp("sg-81-10");
  const Subgroup g2 = gamma(*x, 2), g3 = gamma(*x, 3);
  int seen = 0;
  for (Elem e = 1; e < x->order(); ++e) {
    if (!g2.contains(e) || g3.contains(e) || element_order(*x, e) != 3) continue;
    const Elem one[1] = {e};
    CHECK(jumps(*x, closure(*x, one)).jumps == std::vector<int>{2});
    ++seen;
  }
  CHECK(seen > 0);

  CHECK_THROWS_AS(jumps(*grp("c7:c3"), whole_group(*grp("c7:c3"))), PreconditionError);
}

TEST_CASE("jumps agree with intersections of the brute-force series") {
  for (const char* id : {"sg-81-10", "g32", "p4-3", "p5-unique-3"}) {
    const GroupPtr g = grp(id);
    const int cls = nilpotency_class(*g);
    for (const Subgroup& s : all_subgroups(*g).all) {
      const std::vector<int> j = jumps(*g, s).jumps;
      CHECK(j == oracle_jumps(*g, oracle::from_bits(s.members())));
      for (int v : j) CHECK((v >= 1 && v <= cls));
    }
  }
}

TEST_CASE("power jumps are preceded by a congruent jump of the subgroup") {
  // For an invariant H on which x -> x^p is an endomorphism, each jump l of
  // Agemo_1(H) has a jump i of H with i < l and i = l (mod q).
  std::size_t instances = 0;
  for (const CatalogPair& cp : catalog_pairs()) {
    const CatalogGroup c = get_group(cp.group_id);
    const GroupMap& alpha = c.automorphism(cp.automorphism).map;
    const Group& g = *c.group;
    const std::uint64_t p = *p_group_prime(g);
    const auto q = static_cast<int>(cp.q);
    for (const Subgroup& h : all_subgroups(g).all) {
      if (!is_invariant(alpha, h) || !power_map_is_endomorphism(h, p)) continue;
      const std::vector<int> hj = jumps(g, h).jumps;
      for (int l : jumps(g, agemo(h, p, 1)).jumps) {
        bool found = false;
        for (int i : hj) found = found || (i < l && (l - i) % q == 0);
        CHECK_MESSAGE(found, cp.group_id << " jump " << l);
        ++instances;
      }
    }
  }
  CHECK(instances > 0);
}
