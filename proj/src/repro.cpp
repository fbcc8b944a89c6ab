#include "maxpair/repro.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <functional>
#include <map>
#include <thread>

#include "maxpair/catalog.hpp"
#include "maxpair/engine.hpp"
#include "maxpair/lattice.hpp"
#include "maxpair/maximality.hpp"

namespace maxpair {

namespace {

struct Outcome {
  bool ok = false;
  Json measured = Json::object();
  std::string detail;
};

struct Task {
  int criterion;
  std::string id;
  std::string description;
  std::function<Outcome()> run;
};

struct CriterionInfo {
  int id;
  std::string description;
  std::string anchor;
  std::vector<std::string> tags;
};

const std::vector<CriterionInfo>& criteria_info() {
  static const std::vector<CriterionInfo> info = {
      {1, "C_p is 1-maximal for p in {2,3,5,7}; C4 and C9 are not", "1-maximal groups",
       {"sanity", "rank0", "rank1", "dmax"}},
      {2, "C3 x C3, C5 x C5, Q8 and C7 x| C3 are 2-maximal", "2-maximal groups",
       {"miller-moreno", "dmax"}},
      {3, "rank-2 pairs pass check_pair with rank 2", "rank-2 pairs", {"rank2", "pair"}},
      {4, "(C9 x C3, inversion) and (C9, inversion) fail condition (c) with a witness",
       "rank-2 non-pairs", {"rank2", "pair", "negative"}},
      {5, "every group of the 3-maximal list is 3-maximal", "3-maximal groups",
       {"rank3", "dmax", "three-maximal"}},
      {6, "rank-3 pairs pass check_pair; order-3125 invariants at p = 5", "rank-3 pairs",
       {"rank3", "pair"}},
      {7, "pairs with |P| <= 243 build a (d+1)-maximal group that strips back to a pair",
       "pair construction round trip", {"round-trip", "pair"}},
      {8, "structural assertions A1-A12 hold on every pair; A9 and A7 fire",
       "structural consequences of maximality", {"structural", "pair"}},
      {9, "lattice and rank agree with brute-force oracles on groups of order <= 200",
       "oracle equivalence", {"oracle"}},
      {10, "quotient and product pairs re-pass check_pair with the predicted ranks",
       "pair closure under quotients and products", {"closure", "pair"}},
  };
  return info;
}

Json subgroup_summary(const Subgroup& h) {
  return Json{{"order", h.order()}, {"generators", h.generators()}};
}

// ---------------------------------------------------------------------------
// Task bodies

Outcome dmax_task(const std::string& id, int d, bool expected) {
  CatalogGroup g = get_group(id);
  const MaximalityReport r = is_d_maximal(*g.group);
  Outcome o;
  o.ok = r.d == d && r.is_d_maximal == expected;
  o.measured = {{"order", g.group->order()}, {"d", r.d}, {"is_d_maximal", r.is_d_maximal},
                {"subgroups", r.subgroups}};
  if (r.witness) o.measured["witness"] = subgroup_summary(*r.witness);
  if (!o.ok)
    o.detail = "expected d = " + std::to_string(d) + (expected ? ", d-maximal" : ", not d-maximal");
  return o;
}

Outcome pair_task(const std::string& id, const std::string& aut, int d) {
  CatalogGroup g = get_group(id);
  const NamedAutomorphism& a = g.automorphism(aut);
  const PairCheckReport r = check_pair(a.map, a.order);
  Outcome o;
  o.ok = r.verdict() && r.d == d;
  o.measured = {{"order", g.group->order()}, {"p", r.p}, {"q", r.q}, {"d", r.d},
                {"cond_a", r.cond_a}, {"cond_b", r.cond_b}, {"cond_c", r.cond_c}};
  if (r.character) o.measured["character"] = r.character->value;
  if (!o.ok) o.detail = "expected a passing pair of rank " + std::to_string(d);
  return o;
}

Outcome negative_pair_task(const std::string& id) {
  CatalogGroup g = get_group(id);
  const NamedAutomorphism& a = g.automorphism("inversion");
  const PairCheckReport r = check_pair(a.map, a.order);
  Outcome o;
  o.ok = !r.cond_c && r.witness_c.has_value() && !r.verdict();
  o.measured = {{"order", g.group->order()}, {"d", r.d}, {"cond_a", r.cond_a},
                {"cond_b", r.cond_b}, {"cond_c", r.cond_c}};
  if (r.witness_c) o.measured["witness_c"] = subgroup_summary(*r.witness_c);
  if (!o.ok) o.detail = "expected condition (c) to fail with a witness";
  return o;
}

Outcome p5_invariants_task() {
  CatalogGroup g = get_group("p5-unique-5");
  const Group& pg = *g.group;
  const Subgroup g2 = gamma(pg, 2), g3 = gamma(pg, 3);
  const Subgroup om = omega(whole_group(pg), 5, 1);
  const Subgroup om_derived = commutator_subgroup(pg, om, om);
  const Subgroup cent = centralizer(pg, g2);
  const std::size_t cent_omega = omega(cent, 5, 1).order();
  const auto& alpha = g.automorphism("alpha");
  Outcome o;
  o.measured = {{"gamma2_order", g2.order()},       {"gamma2_exponent", exponent(g2)},
                {"gamma3_order", g3.order()},       {"omega1_order", om.order()},
                {"gamma2_of_omega1_is_gamma2", om_derived == g2},
                {"centralizer_order", cent.order()}, {"centralizer_exponent", exponent(cent)},
                {"centralizer_abelian", is_abelian(cent)}, {"centralizer_omega1", cent_omega},
                {"q", alpha.order}};
  o.ok = g2.order() == 25 && exponent(g2) == 5 && g3.order() == 5 && om.order() == 625 &&
         om_derived == g2 && cent.order() == 625 && exponent(cent) == 25 && is_abelian(cent) &&
         cent_omega == 125 && alpha.order == 2;
  if (!o.ok) o.detail = "invariants differ from C25 x C5 x C5 centralizer profile";
  return o;
}

Outcome round_trip_task(const std::string& id, const std::string& aut) {
  CatalogGroup g = get_group(id);
  const NamedAutomorphism& a = g.automorphism(aut);
  const PairCheckReport r = check_pair(a.map, a.order);
  GroupPtr built = build_group_from_pair(a.map, a.order, 1);
  const MaximalityReport m = is_d_maximal(*built);
  const StrippedPair back = strip_pair(built);
  const PairCheckReport again = check_pair(back.pair.alpha, back.q);
  Outcome o;
  o.ok = r.verdict() && m.is_d_maximal && m.d == r.d + 1 && again.verdict() && again.d == r.d &&
         back.q == a.order && back.pair.group->order() == g.group->order();
  o.measured = {{"built_order", built->order()},      {"built_d", m.d},
                {"built_d_maximal", m.is_d_maximal},   {"stripped_order", back.pair.group->order()},
                {"stripped_q", back.q},                {"stripped_d", again.d},
                {"stripped_pass", again.verdict()}};
  if (!o.ok) o.detail = "round trip did not reproduce a (d+1)-maximal group and a passing pair";
  return o;
}

Outcome structural_task(const std::string& id, const std::string& aut,
                        std::vector<std::string> must_fire) {
  CatalogGroup g = get_group(id);
  const NamedAutomorphism& a = g.automorphism(aut);
  const StructuralReport r = structural_report(a.map, a.order);
  Outcome o;
  o.ok = r.passed();
  Json verdicts = Json::object();
  for (const auto& s : r.assertions) {
    verdicts[s.id] = to_string(s.verdict);
    if (s.verdict == Verdict::Fail) o.detail += s.id + ": " + s.detail + "; ";
  }
  for (const auto& id_ : must_fire)
    if (r.get(id_).verdict != Verdict::Pass) {
      o.ok = false;
      o.detail += id_ + " did not fire; ";
    }
  o.measured = {{"assertions", verdicts}, {"must_fire", must_fire}};
  return o;
}

Outcome oracle_task(const std::string& id) {
  CatalogGroup g = get_group(id);
  const Group& grp = *g.group;
  const SubgroupLattice& fast = all_subgroups(grp);
  const SubgroupLattice slow = all_subgroups_join_closure(grp);
  bool same = fast.all.size() == slow.all.size();
  for (std::size_t i = 0; same && i < fast.all.size(); ++i) same = fast.all[i] == slow.all[i];
  const int d = min_generators(grp);
  const int d_oracle = min_generators_bruteforce(grp);
  Outcome o;
  o.ok = same && d == d_oracle;
  o.measured = {{"order", grp.order()}, {"subgroups", fast.all.size()},
                {"subgroups_oracle", slow.all.size()}, {"d", d}, {"d_oracle", d_oracle}};
  if (!o.ok) o.detail = same ? "rank differs from oracle" : "lattice differs from oracle";
  return o;
}

Outcome count_task(const std::string& id, std::size_t expected) {
  CatalogGroup g = get_group(id);
  const std::size_t n = all_subgroups(*g.group).all.size();
  Outcome o;
  o.ok = n == expected;
  o.measured = {{"subgroups", n}, {"expected", expected}};
  return o;
}

Outcome closure_result(const Pair& pr, std::uint64_t q, int expected_rank) {
  const PairCheckReport r = check_pair(pr.alpha, q);
  Outcome o;
  o.ok = r.verdict() && r.d == expected_rank;
  o.measured = {{"order", pr.group->order()}, {"d", r.d}, {"expected_rank", expected_rank},
                {"pass", r.verdict()}};
  if (!o.ok) o.detail = "expected a passing pair of rank " + std::to_string(expected_rank);
  return o;
}

Outcome quotient_task(const std::string& id, const std::string& aut, int rank) {
  CatalogGroup g = get_group(id);
  const NamedAutomorphism& a = g.automorphism(aut);
  const Pair pr = quotient_pair(a.map, gamma(*g.group, 3));
  return closure_result(pr, a.order, rank);
}

Outcome product_task(const std::string& left, const std::string& left_aut, const std::string& right,
                     const std::string& right_aut, int rank) {
  CatalogGroup l = get_group(left), r = get_group(right);
  const NamedAutomorphism& a = l.automorphism(left_aut);
  const Pair pr = product_pair(a.map, r.automorphism(right_aut).map);
  return closure_result(pr, a.order, rank);
}

Outcome product_of_quotient_task() {
  CatalogGroup c3 = get_group("c3"), x = get_group("sg-81-10");
  const NamedAutomorphism& a = x.automorphism("alpha");
  const Pair quotient = quotient_pair(a.map, gamma(*x.group, 3));
  const Pair pr = product_pair(c3.automorphism("inversion").map, quotient.alpha);
  return closure_result(pr, 2, 3);
}

// ---------------------------------------------------------------------------

std::vector<Task> all_tasks() {
  std::vector<Task> t;
  auto add = [&](int c, std::string id, std::string desc, std::function<Outcome()> fn) {
    t.push_back({c, std::to_string(c) + "." + id, std::move(desc), std::move(fn)});
  };

  for (int p : {2, 3, 5, 7}) {
    const std::string id = "c" + std::to_string(p);
    add(1, id, "C" + std::to_string(p) + " is 1-maximal", [id] { return dmax_task(id, 1, true); });
  }
  for (const char* id : {"c4", "c9"})
    add(1, id, std::string(id) + " is not 1-maximal",
        [id = std::string(id)] { return dmax_task(id, 1, false); });

  for (const char* id : {"ea-3-2", "ea-5-2", "q8", "c7:c3"})
    add(2, id, std::string(id) + " is 2-maximal",
        [id = std::string(id)] { return dmax_task(id, 2, true); });

  struct PairRef {
    std::string id;
    std::string aut;
    std::size_t order;
  };
  const std::vector<PairRef> rank2 = {
      {"ea-3-2", "scalar-q2", 9},    {"ea-5-2", "scalar-q2", 25},   {"ea-7-2", "scalar-q3", 49},
      {"heis-3", "scalar-q2", 27},   {"heis-5", "scalar-q2", 125},  {"heis-7", "scalar-q3", 343},
      {"sg-81-10", "alpha", 81}};
  for (const auto& [id, aut, order] : rank2)
    add(3, id, "(" + id + ", " + aut + ") is a rank-2 pair",
        [id, aut] { return pair_task(id, aut, 2); });

  for (const char* id : {"c9xc3", "c9"})
    add(4, id, std::string("(") + id + ", inversion) fails condition (c)",
        [id = std::string(id)] { return negative_pair_task(id); });

  for (const char* id : {"ea-2-3", "c2xq8", "c4oq8", "g32", "ea-3-3", "ea-5-3", "p4-3", "p4-5",
                         "sd-ea-3-2", "sd-ea-5-2", "sd-ea-7-3", "sd-heis-3-2", "sd-heis-5-2",
                         "sd-heis-7-3", "sg-162-22", "sd-ea-3-2-t2"})
    add(5, id, std::string(id) + " is 3-maximal",
        [id = std::string(id)] { return dmax_task(id, 3, true); });

  const std::vector<PairRef> rank3 = {
      {"c3xsg-81-10", "alpha", 243}, {"p5-unique-3", "alpha", 243}, {"p5-unique-5", "alpha", 3125}};
  for (const auto& [id, aut, order] : rank3)
    add(6, id, "(" + id + ", " + aut + ") is a rank-3 pair",
        [id, aut] { return pair_task(id, aut, 3); });
  add(6, "p5-unique-5-invariants", "series, Omega_1 and centralizer values at p = 5",
      p5_invariants_task);

  for (const auto& list : {rank2, rank3})
    for (const auto& [id, aut, order] : list) {
      if (order > 243) continue;
      add(7, id, "round trip through P x| C_q for " + id,
          [id, aut] { return round_trip_task(id, aut); });
    }

  for (const auto& list : {rank2, rank3})
    for (const auto& [id, aut, order] : list) {
      std::vector<std::string> fire;
      if (aut == "scalar-q3") fire.push_back("A7");
      if (id == "p5-unique-5") fire.push_back("A9");
      add(8, id, "structural assertions on (" + id + ", " + aut + ")",
          [id, aut, fire] { return structural_task(id, aut, fire); });
    }

  for (const char* id :
       {"c2", "c3", "c4", "c5", "c6", "c7", "c8", "c9", "c10", "c12", "c16", "ea-2-2", "ea-2-3",
        "ea-2-4", "ea-3-2", "ea-3-3", "ea-3-4", "ea-5-2", "ea-5-3", "ea-7-2", "q8", "d8", "c2xq8",
        "c4oq8", "g32", "heis-3", "heis-5", "p4-3", "sg-81-10", "sg-162-22", "c9xc3", "c7:c3",
        "sd-ea-3-2", "sd-ea-3-2-t2", "sd-ea-5-2", "sd-ea-7-3", "sd-heis-3-2"})
    add(9, id, std::string("lattice and rank of ") + id + " match the oracles",
        [id = std::string(id)] { return oracle_task(id); });
  add(9, "count-c2xc2", "C2 x C2 has 5 subgroups", [] { return count_task("ea-2-2", 5); });
  add(9, "count-q8", "Q8 has 6 subgroups", [] { return count_task("q8", 6); });

  add(10, "quotient-sg-81-10", "sg-81-10 / gamma_3 is a rank-2 pair",
      [] { return quotient_task("sg-81-10", "alpha", 2); });
  add(10, "quotient-p5-unique-3", "p5-unique-3 / gamma_3 is a rank-3 pair",
      [] { return quotient_task("p5-unique-3", "alpha", 3); });
  add(10, "product-c3-sg-81-10", "C3 x sg-81-10 is a pair of rank 1 + 2",
      [] { return product_task("c3", "inversion", "sg-81-10", "alpha", 3); });
  add(10, "product-ea-3-2-heis-3", "C3^2 x heis-3 is a pair of rank 2 + 2",
      [] { return product_task("ea-3-2", "scalar-q2", "heis-3", "scalar-q2", 4); });
  add(10, "product-c5-heis-5", "C5 x heis-5 is a pair of rank 1 + 2",
      [] { return product_task("c5", "inversion", "heis-5", "scalar-q2", 3); });
  add(10, "product-c3-quotient", "C3 x (sg-81-10 / gamma_3) is a pair of rank 1 + 2",
      product_of_quotient_task);
  return t;
}

std::vector<CriterionRecord> skip_entries() {
  auto skip = [](std::string id, std::string description, std::string detail) {
    CriterionRecord r;
    r.id = "skip." + std::move(id);
    r.description = std::move(description);
    r.status = "skip";
    r.detail = std::move(detail);
    r.measured = Json::object();
    return r;
  };
  return {
      skip("library-exhaustiveness",
           "exhaustive searches over all groups of orders 2^8, 3^4, 3^6 and 3^7",
           "needs a group database; none is bundled"),
      skip("order-81-maximal-class",
           "exactly four groups of order 81 and maximal class",
           "sg-81-7, sg-81-8 and sg-81-9 are extension slots without presentations"),
      skip("sg-243-26", "claims about the group sg-243-26",
           "extension slot without a presentation"),
      skip("sg-729-148", "claims about the group sg-729-148",
           "extension slot without a presentation"),
      skip("order-1458", "claims about groups of order 1458",
           "no presentations available"),
  };
}

bool matches(const ReproOptions& options, const Task& task) {
  if (options.filters.empty()) return true;
  const auto& info = criteria_info()[static_cast<std::size_t>(task.criterion - 1)];
  for (const auto& f : options.filters) {
    if (f == std::to_string(task.criterion)) return true;
    if (std::find(info.tags.begin(), info.tags.end(), f) != info.tags.end()) return true;
    // Id prefixes end at a separator, so "1" does not pick up "10.x".
    if (task.id.rfind(f, 0) == 0 &&
        (task.id.size() == f.size() || task.id[f.size()] == '.' || task.id[f.size()] == '-'))
      return true;
  }
  return false;
}

}  // namespace

RuntimeLimit criterion_limit(int criterion) {
  switch (criterion) {
    case 1: return {1.0, false};
    case 2: return {1.0, true};
    case 3: return {5.0, true};
    case 4: return {1.0, false};
    case 5: return {30.0, false};
    case 6: return {300.0, false};
    case 7: return {60.0, false};
    case 8: return {300.0, false};
    case 9: return {60.0, false};
    case 10: return {10.0, false};
    default: return {0.0, false};
  }
}

int min_generators_bruteforce(const Group& g) {
  if (g.order() == 1) return 0;
  std::vector<Bits> seen;
  std::vector<Elem> reps;
  for (std::size_t x = 1; x < g.order(); ++x) {
    const Elem e[1] = {static_cast<Elem>(x)};
    const Subgroup c = closure(g, e);
    if (std::find(seen.begin(), seen.end(), c.members()) != seen.end()) continue;
    seen.push_back(c.members());
    reps.push_back(static_cast<Elem>(x));
  }
  for (std::size_t k = 1; k <= reps.size(); ++k) {
    std::vector<std::size_t> idx(k);
    for (std::size_t i = 0; i < k; ++i) idx[i] = i;
    while (true) {
      std::vector<Elem> seed;
      for (std::size_t i : idx) seed.push_back(reps[i]);
      if (closure(g, seed).is_whole()) return static_cast<int>(k);
      std::size_t i = k;
      while (i > 0 && idx[i - 1] == reps.size() - k + i - 1) --i;
      if (i == 0) break;
      ++idx[i - 1];
      for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
  }
  return static_cast<int>(reps.size());
}

ReproReport reproduce(const ReproOptions& options) {
  std::vector<Task> tasks;
  for (auto& t : all_tasks())
    if (matches(options, t)) tasks.push_back(std::move(t));

  std::vector<CriterionRecord> records(tasks.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < tasks.size(); i = next++) {
      const Task& task = tasks[i];
      CriterionRecord& rec = records[i];
      rec.id = task.id;
      rec.criterion = task.criterion;
      rec.description = task.description;
      const auto start = std::chrono::steady_clock::now();
      try {
        Outcome o = task.run();
        rec.status = o.ok ? "pass" : "fail";
        rec.measured = std::move(o.measured);
        rec.detail = std::move(o.detail);
      } catch (const std::exception& e) {
        rec.status = "fail";
        rec.measured = Json::object();
        rec.detail = std::string("error: ") + e.what();
      }
      rec.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    }
  };
  const int workers = std::clamp(options.workers, 1, std::max(1, static_cast<int>(tasks.size())));
  {
    std::vector<std::jthread> pool;
    for (int w = 1; w < workers; ++w) pool.emplace_back(worker);
    worker();
  }

  ReproReport report;
  report.records = std::move(records);
  report.overall_pass = true;
  for (const auto& info : criteria_info()) {
    CriterionSummary s;
    s.id = info.id;
    s.description = info.description;
    s.anchor = info.anchor;
    s.tags = info.tags;
    const RuntimeLimit limit = criterion_limit(info.id);
    s.limit_seconds = limit.seconds;
    s.limit_kind = limit.per_record ? "each" : "total";
    bool ok = true;
    double slowest = 0;
    for (const auto& r : report.records) {
      if (r.criterion != info.id) continue;
      ++s.records;
      s.seconds += r.seconds;
      slowest = std::max(slowest, r.seconds);
      ok = ok && r.status == "pass";
    }
    if (s.records == 0) continue;
    ok = ok && (limit.per_record ? slowest : s.seconds) <= limit.seconds;
    s.status = ok ? "pass" : "fail";
    report.overall_pass = report.overall_pass && ok;
    report.criteria.push_back(std::move(s));
  }
  if (options.filters.empty()) report.skipped = skip_entries();
  return report;
}

Json repro_to_json(const ReproReport& report) {
  Json doc;
  doc["schema"] = kReproSchema;
  doc["suite_version"] = report.suite_version;
  doc["overall_pass"] = report.overall_pass;
  Json criteria = Json::array();
  Json timings = Json::object();
  Json criterion_timings = Json::object();
  for (const auto& c : report.criteria) {
    criteria.push_back({{"id", c.id},
                        {"description", c.description},
                        {"anchor", c.anchor},
                        {"tags", c.tags},
                        {"verdict", c.status},
                        {"records", c.records},
                        {"limit_seconds", c.limit_seconds},
                        {"limit_kind", c.limit_kind}});
    criterion_timings[std::to_string(c.id)] = c.seconds;
  }
  doc["criteria"] = criteria;
  Json records = Json::array();
  Json record_timings = Json::object();
  for (const auto& r : report.records) {
    records.push_back({{"id", r.id},
                       {"criterion", r.criterion},
                       {"description", r.description},
                       {"verdict", r.status},
                       {"measured", r.measured},
                       {"detail", r.detail}});
    record_timings[r.id] = r.seconds;
  }
  doc["records"] = records;
  Json skipped = Json::array();
  for (const auto& r : report.skipped)
    skipped.push_back({{"id", r.id}, {"description", r.description}, {"verdict", r.status},
                       {"detail", r.detail}});
  doc["skipped"] = skipped;
  timings["criteria"] = criterion_timings;
  timings["records"] = record_timings;
  doc["timings"] = timings;
  return doc;
}

}  // namespace maxpair
