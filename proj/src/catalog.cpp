#include "maxpair/catalog.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <regex>
#include <string_view>

#include "maxpair/actions.hpp"
#include "maxpair/build.hpp"
#include "maxpair/engine.hpp"
#include "maxpair/error.hpp"
#include "maxpair/lattice.hpp"
#include "maxpair/maximality.hpp"
#include "maxpair/numtheory.hpp"

namespace maxpair {

namespace {

// Presentation templates from catalog/*.pc, embedded at configure time.
const std::map<std::string_view, std::string_view> kTemplates = {
#include "catalog_data.inc"
};

std::string substitute(std::string text, std::uint64_t p) {
  auto replace_all = [&](const std::string& from, const std::string& to) {
    for (std::size_t pos = text.find(from); pos != std::string::npos; pos = text.find(from, pos))
      text.replace(pos, from.size(), to);
  };
  replace_all("{p-1}", std::to_string(p - 1));
  replace_all("{p}", std::to_string(p));
  return text;
}

std::string cyclic_text(std::uint64_t m) {
  const auto primes = prime_factors(m);
  std::string s = "group c" + std::to_string(m) + "\ngens " + std::to_string(primes.size()) + "\n";
  for (std::size_t i = 0; i < primes.size(); ++i)
    s += "order g" + std::to_string(i + 1) + " " + std::to_string(primes[i]) + "\n";
  for (std::size_t i = 0; i + 1 < primes.size(); ++i)
    s += "pow " + std::to_string(i + 1) + " : g" + std::to_string(i + 2) + "\n";
  return s + "end\n";
}

std::string elementary_text(std::uint64_t p, std::uint64_t k) {
  std::string s = "group ea-" + std::to_string(p) + "-" + std::to_string(k) + "\ngens " +
                  std::to_string(k) + "\n";
  for (std::uint64_t i = 0; i < k; ++i)
    s += "order g" + std::to_string(i + 1) + " " + std::to_string(p) + "\n";
  return s + "end\n";
}

void require(bool ok, const std::string& message) {
  if (!ok) throw PreconditionError(message);
}

std::uint64_t need(const std::optional<std::uint64_t>& v, const char* name, const std::string& id) {
  require(v.has_value(), "catalog entry '" + id + "' needs parameter " + name);
  return *v;
}

GroupMap power_map(const GroupPtr& g, std::uint64_t c) {
  std::vector<Elem> images;
  for (Elem x : g->gens()) images.push_back(g->pow(x, static_cast<std::int64_t>(c)));
  return hom_from_images(g, g, images);
}

/// Scalar automorphisms x -> x^c of an abelian group, one per prime q | p-1.
void add_scalars(CatalogGroup& out, std::uint64_t p) {
  for (std::uint64_t q = 2; q < p; ++q) {
    if (!is_prime(q) || (p - 1) % q != 0) continue;
    const std::uint64_t c = *unit_of_order(q, p);
    out.automorphisms.push_back({"scalar-q" + std::to_string(q), power_map(out.group, c), q});
  }
}

void add_inversion(CatalogGroup& out) {
  const GroupPtr& g = out.group;
  std::vector<Elem> images;
  for (Elem x : g->gens()) images.push_back(g->inv(x));
  GroupMap f = hom_from_images(g, g, images);
  const std::uint64_t ord = map_order(f);
  out.automorphisms.push_back({"inversion", std::move(f), ord});
}

/// Scalar pair on a 2-generator group: g1 -> g1^c, g2 -> g2^c.
void add_generator_scalars(CatalogGroup& out, std::uint64_t p) {
  const GroupPtr& g = out.group;
  const std::vector<Elem> gens = {g->gens()[0], g->gens()[1]};
  for (std::uint64_t q = 2; q < p; ++q) {
    if (!is_prime(q) || (p - 1) % q != 0) continue;
    const auto c = static_cast<std::int64_t>(*unit_of_order(q, p));
    const std::vector<Elem> images = {g->pow(gens[0], c), g->pow(gens[1], c)};
    out.automorphisms.push_back(
        {"scalar-q" + std::to_string(q), hom_from_images(g, g, gens, images), q});
  }
}

GroupPtr build_text(const std::string& text) { return build_group(parse_presentation(text)); }

std::string template_text(const std::string& name, std::uint64_t p) {
  auto it = kTemplates.find(name);
  if (it == kTemplates.end()) throw Error("missing embedded presentation " + name);
  return substitute(std::string(it->second), p);
}

struct Entry {
  std::string id;
  std::string description;
  std::string parameters;
  bool slot = false;
  ExpectedFingerprint slot_expected;
};

const std::vector<Entry>& entries() {
  static const std::vector<Entry> list = [] {
    std::vector<Entry> v = {
        {"q8", "quaternion group of order 8", ""},
        {"d8", "dihedral group of order 8", ""},
        {"c2xq8", "direct product C2 x Q8", ""},
        {"c4oq8", "central product C4 o Q8 = (C4 x Q8)/<(c^2, z)>", ""},
        {"g32", "rank-3 group of order 32, a^c = a b^2, b^c = b a^2", ""},
        {"sg-81-10", "maximal class group of order 81, Sylow 3-subgroup of sg-162-22", ""},
        {"sg-162-22", "3-maximal group of order 162 from its pc relations", ""},
        {"c3xsg-81-10", "C3 x sg-81-10 with the componentwise automorphism", ""},
        {"c9xc3", "C9 x C3", ""},
        {"c7:c3", "non-abelian group of order 21, C7 x| C3", ""},
    };
    for (std::uint64_t m = 2; m <= 16; ++m)
      v.push_back({"c" + std::to_string(m), "cyclic group of order " + std::to_string(m), "m = " + std::to_string(m)});
    for (std::uint64_t p : {2, 3, 5, 7})
      for (std::uint64_t k = 1; k <= 4; ++k)
        v.push_back({"ea-" + std::to_string(p) + "-" + std::to_string(k),
                     "elementary abelian group of order " + std::to_string(p) + "^" + std::to_string(k),
                     "p = " + std::to_string(p) + ", k = " + std::to_string(k)});
    for (std::uint64_t p : {3, 5, 7})
      v.push_back({"heis-" + std::to_string(p), "extraspecial group of order p^3 and exponent p",
                   "p = " + std::to_string(p)});
    for (std::uint64_t p : {3, 5}) {
      v.push_back({"p4-" + std::to_string(p), "order p^4 group with [c,b] = a^p, a of order p^2",
                   "p = " + std::to_string(p)});
      v.push_back({"p5-unique-" + std::to_string(p),
                   "rank-3 group of order p^5 with x1^p = x5, [x2,x3] = x4, [x2,x4] = x5",
                   "p = " + std::to_string(p)});
    }
    for (auto [p, q] : std::vector<std::pair<std::uint64_t, std::uint64_t>>{{3, 2}, {5, 2}, {7, 2}, {7, 3}})
      for (int t : {1, 2}) {
        const std::string suffix = std::to_string(p) + "-" + std::to_string(q) + (t == 1 ? "" : "-t2");
        const std::string prm = "p = " + std::to_string(p) + ", q = " + std::to_string(q) +
                                ", t = " + std::to_string(t);
        v.push_back({"sd-ea-" + suffix, "(C_p x C_p) x| C_{q^t}, generator acting as a scalar of order q", prm});
        v.push_back({"sd-heis-" + suffix, "(extraspecial p^3) x| C_{q^t}, generator acting as a scalar pair", prm});
      }
    const auto slot_fp = [](std::size_t order, int cls) {
      ExpectedFingerprint e;
      e.order = order;
      e.nilpotency_class = cls;
      return e;
    };
    const std::string mc81 =
        "extension slot: order 81, maximal class, with an involutory automorphism inverting the "
        "Frattini quotient; elements of order 3 generate a subgroup of order >= 27";
    v.push_back({"sg-81-7", mc81, "", true, slot_fp(81, 3)});
    v.push_back({"sg-81-8", mc81, "", true, slot_fp(81, 3)});
    v.push_back({"sg-81-9", mc81, "", true, slot_fp(81, 3)});
    v.push_back({"sg-243-26",
                 "extension slot: order 243, maximal class, with an involutory automorphism "
                 "inverting the Frattini quotient; quotient by the center is sg-81-9",
                 "", true, slot_fp(243, 4)});
    v.push_back({"sg-729-148",
                 "extension slot: order 729, class 3, rank-3 group of a (3,2)-pair whose "
                 "semidirect product of order 1458 is 4-maximal",
                 "", true, slot_fp(729, 3)});
    std::sort(v.begin(), v.end(), [](const Entry& a, const Entry& b) { return a.id < b.id; });
    return v;
  }();
  return list;
}

/// Splits a concrete id like "heis-5" or "sd-ea-3-2-t2" into a family and
/// parameters.
std::pair<std::string, CatalogParams> resolve(const std::string& id, CatalogParams params) {
  std::smatch m;
  auto num = [&](int i) { return static_cast<std::uint64_t>(std::stoull(m[i].str())); };
  if (std::regex_match(id, m, std::regex(R"(c(\d+))"))) {
    params.m = num(1);
    return {"c", params};
  }
  if (std::regex_match(id, m, std::regex(R"(ea-(\d+)-(\d+))"))) {
    params.p = num(1);
    params.k = num(2);
    return {"ea", params};
  }
  if (std::regex_match(id, m, std::regex(R"((heis|p4|p5-unique)-(\d+))"))) {
    params.p = num(2);
    return {m[1].str(), params};
  }
  if (std::regex_match(id, m, std::regex(R"(sd-(ea|heis)-(\d+)-(\d+)(?:-t(\d+))?)"))) {
    params.p = num(2);
    params.q = num(3);
    if (m[4].matched) params.t = static_cast<int>(num(4));
    return {"sd-" + m[1].str(), params};
  }
  return {id, params};
}

std::string canonical_id(const std::string& family, const CatalogParams& prm) {
  auto s = [](const std::optional<std::uint64_t>& v) { return v ? std::to_string(*v) : "?"; };
  if (family == "c") return "c" + s(prm.m);
  if (family == "ea") return "ea-" + s(prm.p) + "-" + s(prm.k);
  if (family == "heis" || family == "p4" || family == "p5-unique") return family + "-" + s(prm.p);
  if (family == "sd-ea" || family == "sd-heis") {
    const int t = prm.t.value_or(1);
    return family + "-" + s(prm.p) + "-" + s(prm.q) + (t == 1 ? "" : "-t" + std::to_string(t));
  }
  return family;
}

ExpectedFingerprint fp(std::size_t order, int d, int cls, std::optional<std::uint64_t> exp,
                       std::optional<std::vector<std::size_t>> lcs = std::nullopt) {
  return {order, d, cls, exp, std::move(lcs)};
}

std::size_t pw(std::uint64_t p, unsigned k) { return static_cast<std::size_t>(ipow(p, k)); }

void verify(const CatalogGroup& g) {
  const ExpectedFingerprint& e = g.expected;
  const Group& grp = *g.group;
  auto fail = [&](const std::string& what) {
    throw Error("catalog entry '" + g.id + "' fingerprint mismatch: " + what);
  };
  if (e.order && grp.order() != *e.order) fail("order " + std::to_string(grp.order()));
  if (e.exponent && exponent(grp) != *e.exponent) fail("exponent " + std::to_string(exponent(grp)));
  if (e.lower_central && lower_central_series(grp).orders() != *e.lower_central)
    fail("lower central series");
  if (e.nilpotency_class && nilpotency_class(grp) != *e.nilpotency_class)
    fail("class " + std::to_string(nilpotency_class(grp)));
  if (e.d && min_generators(grp) != *e.d) fail("d = " + std::to_string(min_generators(grp)));
}

CatalogGroup make(const std::string& family, const CatalogParams& prm, const std::string& id) {
  CatalogGroup out;
  out.id = id;
  if (family == "c") {
    const std::uint64_t m = need(prm.m, "m", id);
    require(m >= 2 && m <= 16, "cyclic order must be in [2, 16]");
    out.group = build_text(cyclic_text(m));
    add_inversion(out);
    out.expected = fp(m, 1, 1, m, std::vector<std::size_t>{m, 1});
  } else if (family == "ea") {
    const std::uint64_t p = need(prm.p, "p", id), k = need(prm.k, "k", id);
    require(p == 2 || p == 3 || p == 5 || p == 7, "p must be in {2,3,5,7}");
    require(k >= 1 && k <= 4, "k must be in [1, 4]");
    out.group = build_text(elementary_text(p, k));
    if (p > 2) add_inversion(out);
    add_scalars(out, p);
    out.expected = fp(pw(p, k), static_cast<int>(k), 1, p, std::vector<std::size_t>{pw(p, k), 1});
  } else if (family == "q8" || family == "d8") {
    out.group = build_text(template_text(family, 2));
    out.expected = fp(8, 2, 2, 4, std::vector<std::size_t>{8, 2, 1});
  } else if (family == "c2xq8") {
    Product prod = direct_product(build_text(cyclic_text(2)), build_text(template_text("q8", 2)));
    out.group = prod.group;
    out.expected = fp(16, 3, 2, 4, std::vector<std::size_t>{16, 2, 1});
  } else if (family == "c4oq8") {
    GroupPtr c4 = build_text(cyclic_text(4));
    GroupPtr q8 = build_text(template_text("q8", 2));
    Product prod = direct_product(c4, q8);
    const Elem c2 = prod.embed_left(c4->pow(c4->gens()[0], 2));
    const Elem z = prod.embed_right(q8->evaluate(Word{{{2, 1}}}));
    const Elem glued[1] = {prod.group->mul(c2, z)};
    Quotient q = quotient_group(prod.group, closure(*prod.group, glued));
    out.group = q.group;
    out.expected = fp(16, 3, 2, 4, std::vector<std::size_t>{16, 2, 1});
  } else if (family == "g32") {
    out.group = build_text(template_text("g32", 2));
    out.expected = fp(32, 3, 2, 4, std::vector<std::size_t>{32, 4, 1});
  } else if (family == "p4") {
    const std::uint64_t p = need(prm.p, "p", id);
    require(p == 3 || p == 5, "p must be 3 or 5");
    out.group = build_text(template_text("p4", p));
    out.expected = fp(pw(p, 4), 3, 2, p * p, std::vector<std::size_t>{pw(p, 4), p, 1});
  } else if (family == "heis") {
    const std::uint64_t p = need(prm.p, "p", id);
    require(p == 3 || p == 5 || p == 7, "p must be in {3,5,7}");
    out.group = build_text(template_text("heis", p));
    add_generator_scalars(out, p);
    out.expected = fp(pw(p, 3), 2, 2, p, std::vector<std::size_t>{pw(p, 3), p, 1});
  } else if (family == "sg-81-10") {
    out.group = build_text(template_text("sg-81-10", 3));
    // Conjugation by a in sg-162-22: b -> b^2 e, c -> c^2 e, d -> d e^2, e -> e^2.
    const Group& g = *out.group;
    const std::vector<Elem> images = {g.evaluate(Word{{{0, 2}, {3, 1}}}),
                                      g.evaluate(Word{{{1, 2}, {3, 1}}}),
                                      g.evaluate(Word{{{2, 1}, {3, 2}}}),
                                      g.evaluate(Word{{{3, 2}}})};
    out.automorphisms.push_back({"alpha", hom_from_images(out.group, out.group, images), 2});
    out.expected = fp(81, 2, 3, 9, std::vector<std::size_t>{81, 9, 3, 1});
  } else if (family == "sg-162-22") {
    out.group = build_text(template_text("sg-162-22", 3));
    out.expected = fp(162, 3, -1, std::nullopt, std::vector<std::size_t>{162, 81});
  } else if (family == "c3xsg-81-10") {
    CatalogGroup c3 = make("c", CatalogParams{.m = 3}, "c3");
    CatalogGroup x = make("sg-81-10", {}, "sg-81-10");
    Pair pr = product_pair(c3.automorphism("inversion").map, x.automorphism("alpha").map);
    out.group = pr.group;
    out.automorphisms.push_back({"alpha", std::move(pr.alpha), 2});
    out.expected = fp(243, 3, 3, 9, std::vector<std::size_t>{243, 9, 3, 1});
  } else if (family == "p5-unique") {
    const std::uint64_t p = need(prm.p, "p", id);
    require(p == 3 || p == 5, "p must be 3 or 5");
    out.group = build_text(template_text("p5-unique", p));
    const Group& g = *out.group;
    // Inverting x1, x2, x3 determines the map; x4 is then fixed modulo x5.
    const std::vector<Elem> gens = {g.gens()[0], g.gens()[1], g.gens()[2]};
    const std::vector<Elem> images = {g.inv(gens[0]), g.inv(gens[1]), g.inv(gens[2])};
    out.automorphisms.push_back({"alpha", hom_from_images(out.group, out.group, gens, images), 2});
    out.expected =
        fp(pw(p, 5), 3, 3, p * p, std::vector<std::size_t>{pw(p, 5), p * p, p, 1});
  } else if (family == "c9xc3") {
    out.group = direct_product(build_text(cyclic_text(9)), build_text(cyclic_text(3))).group;
    add_inversion(out);
    out.expected = fp(27, 2, 1, 9, std::vector<std::size_t>{27, 1});
  } else if (family == "c7:c3") {
    CatalogGroup c7 = make("c", CatalogParams{.m = 7}, "c7");
    const std::uint64_t c = *unit_of_order(3, 7);
    out.group = build_group_from_pair(power_map(c7.group, c), 3, 1);
    out.expected = fp(21, 2, -1, 21, std::vector<std::size_t>{21, 7});
  } else if (family == "sd-ea" || family == "sd-heis") {
    const std::uint64_t p = need(prm.p, "p", id), q = need(prm.q, "q", id);
    const int t = prm.t.value_or(1);
    require(p == 3 || p == 5 || p == 7, "p must be in {3,5,7}");
    require(is_prime(q) && (p - 1) % q == 0, "q must be a prime dividing p - 1");
    require(t == 1 || t == 2, "t must be 1 or 2");
    const bool heis = family == "sd-heis";
    CatalogGroup base = heis ? make("heis", CatalogParams{.p = p}, "heis")
                             : make("ea", CatalogParams{.p = p, .k = 2}, "ea");
    const GroupMap& alpha = base.automorphism("scalar-q" + std::to_string(q)).map;
    out.group = build_group_from_pair(alpha, q, t);
    const std::size_t order = pw(p, heis ? 3 : 2) * pw(q, static_cast<unsigned>(t));
    out.expected = fp(order, 3, -1, std::nullopt);
  } else {
    for (const auto& e : entries())
      if (e.id == family && e.slot)
        throw PreconditionError("catalog entry '" + family +
                                "' is an extension slot: no presentation is shipped");
    throw PreconditionError("unknown catalog id '" + id + "'");
  }
  verify(out);
  return out;
}

}  // namespace

const NamedAutomorphism& CatalogGroup::automorphism(const std::string& name) const {
  for (const auto& a : automorphisms)
    if (a.name == name) return a;
  throw PreconditionError("catalog entry '" + id + "' has no automorphism '" + name + "'");
}

std::vector<CatalogSummary> list_catalog() {
  std::vector<CatalogSummary> out;
  for (const auto& e : entries())
    out.push_back({e.id, e.description, e.parameters, e.slot, e.slot_expected});
  return out;
}

CatalogGroup get_group(const std::string& id, const CatalogParams& params) {
  auto [family, prm] = resolve(id, params);
  return make(family, prm, canonical_id(family, prm));
}

std::optional<std::string> catalog_presentation(const std::string& id, const CatalogParams& params) {
  auto [family, prm] = resolve(id, params);
  if (family == "c" && prm.m) return cyclic_text(*prm.m);
  if (family == "ea" && prm.p && prm.k) return elementary_text(*prm.p, *prm.k);
  if ((family == "heis" || family == "p4" || family == "p5-unique") && prm.p)
    return template_text(family, *prm.p);
  if (family == "q8" || family == "d8" || family == "g32" || family == "sg-81-10" ||
      family == "sg-162-22")
    return template_text(family, 2);
  return std::nullopt;
}

std::vector<CatalogPair> catalog_pairs() {
  return {
      {"ea-3-2", "scalar-q2", 2},       {"ea-5-2", "scalar-q2", 2},
      {"ea-7-2", "scalar-q3", 3},       {"heis-3", "scalar-q2", 2},
      {"heis-5", "scalar-q2", 2},       {"heis-7", "scalar-q3", 3},
      {"sg-81-10", "alpha", 2},         {"c3xsg-81-10", "alpha", 2},
      {"p5-unique-3", "alpha", 2},      {"p5-unique-5", "alpha", 2},
  };
}

}  // namespace maxpair
