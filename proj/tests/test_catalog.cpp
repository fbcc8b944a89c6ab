#include <doctest.h>

#include <algorithm>

#include "maxpair/actions.hpp"
#include "maxpair/build.hpp"
#include "maxpair/catalog.hpp"
#include "maxpair/engine.hpp"
#include "maxpair/error.hpp"
#include "maxpair/lattice.hpp"

using namespace maxpair;

namespace {

bool listed(const std::vector<CatalogSummary>& list, const std::string& id) {
  return std::any_of(list.begin(), list.end(), [&](const CatalogSummary& s) { return s.id == id; });
}

}  // namespace

TEST_CASE("list_catalog is sorted and contains the named groups") {
  const auto list = list_catalog();
  CHECK(std::is_sorted(list.begin(), list.end(),
                       [](const CatalogSummary& a, const CatalogSummary& b) { return a.id < b.id; }));
  for (const char* id : {"ea-3-2", "sg-81-10", "p5-unique-5", "q8", "c2xq8", "c4oq8", "g32",
                         "p4-3", "p4-5", "heis-3", "heis-5", "heis-7", "sg-162-22", "c7:c3"})
    CHECK_MESSAGE(listed(list, id), id);
  for (const char* slot : {"sg-81-7", "sg-81-8", "sg-81-9", "sg-243-26", "sg-729-148"}) {
    const auto it = std::find_if(list.begin(), list.end(),
                                 [&](const CatalogSummary& s) { return s.id == slot; });
    REQUIRE(it != list.end());
    CHECK(it->extension_slot);
    CHECK(it->slot_expected.order.has_value());
  }
}

TEST_CASE("every entry loads and matches its fingerprint") {
  for (const auto& entry : list_catalog()) {
    if (entry.extension_slot) continue;
    const CatalogGroup c = get_group(entry.id);
    const Group& g = *c.group;
    CHECK(c.id == entry.id);
    const ExpectedFingerprint& e = c.expected;
    if (e.order) CHECK_MESSAGE(g.order() == *e.order, entry.id);
    if (e.d) CHECK_MESSAGE(min_generators(g) == *e.d, entry.id);
    if (e.nilpotency_class) CHECK_MESSAGE(nilpotency_class(g) == *e.nilpotency_class, entry.id);
    if (e.exponent) CHECK_MESSAGE(exponent(g) == *e.exponent, entry.id);
    if (e.lower_central) CHECK_MESSAGE(lower_central_series(g).orders() == *e.lower_central, entry.id);
    for (const NamedAutomorphism& a : c.automorphisms) {
      CHECK_MESSAGE(is_automorphism(a.map), entry.id << " " << a.name);
      CHECK(map_order(a.map) == a.order);
    }
  }
}

TEST_CASE("family ids take explicit parameters") {
  const CatalogGroup h = get_group("heis", {.p = 3});
  CHECK(h.id == "heis-3");
  CHECK(h.group->order() == 27);
  CHECK(exponent(*h.group) == 3);
  CHECK(get_group("ea", {.p = 5, .k = 3}).group->order() == 125);
  CHECK(get_group("c", {.m = 12}).group->order() == 12);
  CHECK(get_group("p5-unique", {.p = 3}).group->order() == 243);
  CHECK(get_group("sd-ea", {.p = 7, .q = 3}).group->order() == 147);
  CHECK(get_group("sd-ea", {.p = 3, .q = 2, .t = 2}).group->order() == 36);
  CHECK(catalog_presentation("heis", {.p = 5}).has_value());
}

TEST_CASE("named catalog facts") {
  CHECK(get_group("sg-162-22").group->order() == 162);
  const GroupPtr g32 = get_group("g32").group;
  CHECK(g32->order() == 32);
  CHECK(min_generators(*g32) == 3);
  CHECK_FALSE(is_isomorphic(get_group("c2xq8").group, get_group("c4oq8").group).isomorphic);
  CHECK(nilpotency_class(*get_group("c7:c3").group) == -1);
  CHECK(get_group("c7:c3").group->order() == 21);
}

TEST_CASE("bad ids, slots and parameter caps") {
  CHECK_THROWS_AS(get_group("no-such-group"), PreconditionError);
  CHECK_THROWS_AS(get_group("sg-243-26"), PreconditionError);
  CHECK_THROWS_AS(get_group("heis", {.p = 11}), PreconditionError);
  CHECK_THROWS_AS(get_group("heis"), PreconditionError);
  CHECK_THROWS_AS(get_group("ea-3-5"), PreconditionError);
  CHECK_THROWS_AS(get_group("c17"), PreconditionError);
  CHECK_THROWS_AS(get_group("p4-7"), PreconditionError);
  CHECK_THROWS_AS(get_group("sd-ea", {.p = 5, .q = 3}), PreconditionError);  // 3 does not divide 4
  CHECK_THROWS_AS(get_group("sd-ea", {.p = 3, .q = 2, .t = 3}), PreconditionError);
  CHECK_THROWS_AS(get_group("q8").automorphism("alpha"), PreconditionError);
  CHECK_FALSE(catalog_presentation("c9xc3").has_value());
}

TEST_CASE("sg-81-10 inside sg-162-22 is the standalone copy") {
  const GroupPtr big = get_group("sg-162-22").group;
  std::vector<Elem> bcde;
  for (int k = 1; k <= 4; ++k) bcde.push_back(big->evaluate(Word{{{k, 1}}}));
  const Subgroup s = closure(*big, bcde);
  REQUIRE(s.order() == 81);
  CHECK(is_isomorphic(subgroup_as_group(s), get_group("sg-81-10").group).isomorphic);
}

TEST_CASE("Omega_1 of sg-81-10 is the derived subgroup") {
  const GroupPtr x = get_group("sg-81-10").group;
  const Subgroup w = whole_group(*x);
  CHECK(omega_n(*x, 1) == commutator_subgroup(*x, w, w));
}

TEST_CASE("catalog pairs reference existing automorphisms") {
  const auto pairs = catalog_pairs();
  CHECK(pairs.size() == 10);
  for (const CatalogPair& cp : pairs) {
    const CatalogGroup c = get_group(cp.group_id);
    const NamedAutomorphism& a = c.automorphism(cp.automorphism);
    CHECK(a.order == cp.q);
  }
}

TEST_CASE("c4oq8 is the central product") {
  // C4 * Q8 has 7 involutions, C2 x Q8 only 3.
  auto involutions = [](const Group& g) {
    std::size_t n = 0;
    for (Elem x = 1; x < g.order(); ++x) n += element_order(g, x) == 2;
    return n;
  };
  CHECK(involutions(*get_group("c4oq8").group) == 7);
  CHECK(involutions(*get_group("c2xq8").group) == 3);
  CHECK(center(*get_group("c4oq8").group).order() == 4);
}
