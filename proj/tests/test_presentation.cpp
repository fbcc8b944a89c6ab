#include <doctest.h>

#include <random>

#include "maxpair/build.hpp"
#include "maxpair/catalog.hpp"
#include "maxpair/error.hpp"
#include "maxpair/kernels.hpp"
#include "maxpair/presentation.hpp"

using namespace maxpair;

namespace {

const char* kHeis3 = R"(group heis-3
gens 3
order g1 3
order g2 3
order g3 3
conj 2 1 : g2 g3
end
)";

Word random_word(std::mt19937& rng, int gens, int length) {
  std::uniform_int_distribution<int> g(0, gens - 1), e(-7, 7);
  Word w;
  for (int i = 0; i < length; ++i) {
    int x = e(rng);
    if (x != 0) w.factors.push_back({g(rng), x});
  }
  return w;
}

}  // namespace

TEST_CASE("single cyclic generator") {
  const PcPresentation p = parse_presentation("group T\ngens 1\norder g1 3\nend");
  CHECK(p.name == "T");
  CHECK(p.generator_count() == 1);
  CHECK(p.rel_orders == std::vector<int>{3});
  CHECK(p.power[0].empty());
  CHECK(normal_form(p, Word{{{0, 3}}}).empty());
  CHECK(normal_form(p, Word{}).empty());
}

TEST_CASE("order p^4 family refines a of order p^2 into two generators") {
  const auto text = catalog_presentation("p4-3");
  REQUIRE(text);
  const PcPresentation p = parse_presentation(*text);
  CHECK(p.generator_count() == 4);
  CHECK(p.order() == 81);
}

TEST_CASE("parse errors carry positions") {
  SUBCASE("wrong conjugate order") {
    CHECK_THROWS_AS(parse_presentation("group G\ngens 2\norder g1 2\norder g2 2\nconj 1 2 : g2\nend"),
                    ParseError);
  }
  SUBCASE("composite relative order") {
    try {
      parse_presentation("group G\ngens 1\norder g1 4\nend");
      FAIL("accepted a composite order");
    } catch (const ParseError& e) {
      CHECK(e.line() == 3);
      CHECK(e.column() > 1);
    }
  }
  SUBCASE("support violation") {
    CHECK_THROWS_AS(parse_presentation("group G\ngens 2\norder g1 2\norder g2 2\npow 2 : g1\nend"),
                    ParseError);
  }
  SUBCASE("exponent out of range") {
    CHECK_THROWS_AS(
        parse_presentation("group G\ngens 2\norder g1 3\norder g2 3\npow 1 : g2^3\nend"),
        ParseError);
  }
  SUBCASE("unknown generator") {
    CHECK_THROWS_AS(parse_presentation("group G\ngens 1\norder g1 3\npow 1 : g7\nend"),
                    ParseError);
  }
  SUBCASE("missing end") {
    CHECK_THROWS_AS(parse_presentation("group G\ngens 1\norder g1 3\n"), ParseError);
  }
}

TEST_CASE("heisenberg collection: y x = x y z") {
  const PcPresentation p = parse_presentation(kHeis3);
  // y^x = y z, so y x = x (x^-1 y x) = x y z.
  CHECK(normal_form(p, Word{{{1, 1}, {0, 1}}}) == Word{{{0, 1}, {1, 1}, {2, 1}}});
  // [x, y] = (y^-1)^x y = z^-1.
  CHECK(normal_form(p, Word{{{0, -1}, {1, -1}, {0, 1}, {1, 1}}}) == Word{{{2, 2}}});
}

TEST_CASE("normal_form is idempotent and agrees with the table") {
  std::mt19937 rng(7);
  for (const char* id : {"heis-3", "sg-81-10", "sg-162-22", "q8", "p5-unique-3", "g32"}) {
    const PcPresentation p = parse_presentation(*catalog_presentation(id));
    const GroupPtr g = build_group(p);
    for (int trial = 0; trial < 200; ++trial) {
      const Word w = random_word(rng, static_cast<int>(p.generator_count()), 12);
      const Word nf = normal_form(p, w);
      CHECK(normal_form(p, nf) == nf);
      Elem x = 0;
      for (auto [gen, e] : w.factors) x = g->mul(x, g->pow(g->evaluate(Word{{{gen, 1}}}), e));
      CHECK(g->evaluate(nf) == x);
    }
  }
}

TEST_CASE("render round trip") {
  for (const auto& entry : list_catalog()) {
    const auto text = catalog_presentation(entry.id);
    if (!text) continue;
    const PcPresentation p = parse_presentation(*text);
    CHECK_MESSAGE(parse_presentation(render_presentation(p)) == p, entry.id);
  }
}

TEST_CASE("build_group has order prod(rel_orders)") {
  for (const auto& entry : list_catalog()) {
    const auto text = catalog_presentation(entry.id);
    if (!text) continue;
    const PcPresentation p = parse_presentation(*text);
    CHECK_MESSAGE(build_group(p)->order() == p.order(), entry.id);
  }
  const GroupPtr q8 = build_group(parse_presentation(*catalog_presentation("q8")));
  CHECK(q8->order() == 8);
  const GroupPtr big = build_group(parse_presentation(*catalog_presentation("sg-162-22")));
  CHECK(big->order() == 162);
}

TEST_CASE("corrupted heisenberg relation is inconsistent") {
  // z^x = y makes conjugation by x send z -> y -> y z -> y^2 z, so x^3 = 1
  // cannot act trivially.
  std::string text = kHeis3;
  text.replace(text.find("end"), 3, "conj 3 1 : g2\nend");
  const PcPresentation p = parse_presentation(text);
  CHECK_THROWS_AS(build_group(p), InconsistentPresentation);

  // Confirmed by the full triple scan on the collected table.
  const std::vector<Elem> table = kernels::build_table(p);
  std::vector<Elem> all(27);
  for (Elem i = 0; i < 27; ++i) all[i] = i;
  CHECK(kernels::find_nonassociative_serial(table, 27, all).has_value());
}

TEST_CASE("element cap is enforced") {
  const std::size_t old = element_cap();
  set_element_cap(100);
  CHECK_THROWS_AS(build_group(parse_presentation(*catalog_presentation("sg-162-22"))), CapExceeded);
  set_element_cap(old);
}
