// maxpair command-line front end.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>

#include <omp.h>

#include <CLI11.hpp>

#include "maxpair/catalog.hpp"
#include "maxpair/engine.hpp"
#include "maxpair/error.hpp"
#include "maxpair/lattice.hpp"
#include "maxpair/maximality.hpp"
#include "maxpair/repro.hpp"
#include "maxpair/serialize.hpp"

using namespace maxpair;

namespace {

struct Globals {
  bool json = false;
  std::size_t cap = kDefaultElementCap;
  int workers = 0;
  CatalogParams params;
};

struct Resolved {
  std::string label;
  GroupPtr group;
  std::vector<NamedAutomorphism> automorphisms;
};

/// Catalog ids first, then files.
Resolved resolve(const std::string& ref, const CatalogParams& params) {
  try {
    CatalogGroup g = get_group(ref, params);
    return {g.id, g.group, std::move(g.automorphisms)};
  } catch (const PreconditionError& e) {
    if (!std::filesystem::exists(ref)) throw;
  }
  GroupPtr g = read_group_file(ref);
  return {g->label(), g, {}};
}

GroupMap resolve_automorphism(const Resolved& r, const std::string& text) {
  const std::string prefix = "catalog:";
  if (text.rfind(prefix, 0) == 0) {
    const std::string name = text.substr(prefix.size());
    for (const auto& a : r.automorphisms)
      if (a.name == name) return a.map;
    std::string known;
    for (const auto& a : r.automorphisms) known += " " + a.name;
    throw PreconditionError("no automorphism '" + name + "' for " + r.label +
                            (known.empty() ? "" : "; known:" + known));
  }
  return parse_automorphism(r.group, text);
}

void print(const Json& j) { std::cout << j.dump(2) << "\n"; }

std::string join(const std::vector<std::size_t>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + std::to_string(v[i]);
  return "[" + s + "]";
}

std::string describe(const Subgroup& h) {
  std::string s = "order " + std::to_string(h.order()) + ", generators [";
  for (std::size_t i = 0; i < h.generators().size(); ++i)
    s += (i ? ", " : "") + std::to_string(h.generators()[i]);
  return s + "]";
}

// ---------------------------------------------------------------------------

int cmd_catalog(const Globals& g, const std::string& id) {
  if (!id.empty()) {
    auto text = catalog_presentation(id, g.params);
    if (!text) throw PreconditionError("'" + id + "' is not presentation-backed");
    std::cout << *text;
    return 0;
  }
  const auto list = list_catalog();
  if (g.json) {
    Json arr = Json::array();
    for (const auto& e : list)
      arr.push_back({{"id", e.id},
                     {"description", e.description},
                     {"parameters", e.parameters},
                     {"extension_slot", e.extension_slot}});
    print(arr);
    return 0;
  }
  for (const auto& e : list) {
    std::cout << e.id << (e.extension_slot ? "  [slot]" : "") << "\n    " << e.description;
    if (!e.parameters.empty()) std::cout << " (" << e.parameters << ")";
    std::cout << "\n";
  }
  return 0;
}

int cmd_info(const Globals& gl, const std::string& ref, bool series) {
  const Resolved r = resolve(ref, gl.params);
  const Group& g = *r.group;
  const auto p = p_group_prime(g);
  Json j;
  j["group"] = r.label;
  j["order"] = g.order();
  j["d"] = min_generators(g);
  j["exponent"] = exponent(g);
  j["nilpotency_class"] = nilpotency_class(g);
  j["solvable"] = is_solvable(g);
  j["abelian"] = is_abelian(whole_group(g));
  j["prime"] = p ? Json(*p) : Json(nullptr);
  j["regular"] = p ? Json(is_regular(g).regular) : Json(nullptr);
  j["center"] = center(g).order();
  j["frattini"] = frattini_subgroup(g).order();
  if (series) {
    j["lower_central"] = lower_central_series(g).orders();
    j["derived"] = derived_series(g).orders();
  }
  Json auts = Json::array();
  for (const auto& a : r.automorphisms) auts.push_back({{"name", a.name}, {"order", a.order}});
  j["automorphisms"] = auts;
  if (gl.json) {
    print(j);
    return 0;
  }
  std::cout << r.label << "\n  order " << g.order() << "\n  d " << j["d"] << "\n  exponent "
            << j["exponent"] << "\n  class " << j["nilpotency_class"] << "\n  regular "
            << (j["regular"].is_null() ? "n/a (not a p-group)" : j["regular"].dump()) << "\n  |Z| " << j["center"] << ", |Phi| " << j["frattini"] << "\n";
  if (series) {
    std::cout << "  lower central " << join(lower_central_series(g).orders()) << "\n";
    std::cout << "  derived " << join(derived_series(g).orders()) << "\n";
  }
  for (const auto& a : r.automorphisms)
    std::cout << "  automorphism " << a.name << " of order " << a.order << "\n";
  return 0;
}

int cmd_dmax(const Globals& gl, const std::string& ref) {
  const Resolved r = resolve(ref, gl.params);
  MaximalityReport m = is_d_maximal(*r.group);
  m.label = r.label;
  if (gl.json) {
    print(dmax_to_json(m));
  } else {
    std::cout << r.label << ": d = " << m.d << ", " << (m.is_d_maximal ? "" : "not ") << m.d
              << "-maximal (" << m.subgroups << " subgroups)\n";
    if (m.witness)
      std::cout << "  witness: " << describe(*m.witness) << " with d(H) = " << m.witness_rank << "\n";
  }
  return m.is_d_maximal ? 0 : 1;
}

int cmd_pair(const Globals& gl, const std::string& ref, const std::string& aut,
             std::uint64_t q, bool structural) {
  const Resolved r = resolve(ref, gl.params);
  const GroupMap alpha = resolve_automorphism(r, aut);
  if (q == 0) q = map_order(alpha);
  const PairCheckReport rep = check_pair(alpha, q);
  std::optional<StructuralReport> s;
  if (structural && rep.verdict()) s = structural_report(alpha, q);
  if (gl.json) {
    print(pair_to_json(r.label, rep, s ? &*s : nullptr));
  } else {
    std::cout << r.label << ": p = " << rep.p << ", q = " << q << ", d = " << rep.d << "\n";
    std::cout << "  (a) " << (rep.cond_a ? "holds" : "fails");
    if (rep.witness_a) std::cout << ", witness " << describe(*rep.witness_a);
    std::cout << "\n  (b) " << (rep.cond_b ? "holds" : "fails");
    if (rep.character) std::cout << ", scalar " << rep.character->value << " mod " << rep.p;
    if (!rep.witness_b.empty()) std::cout << ", " << rep.witness_b;
    std::cout << "\n  (c) " << (rep.cond_c ? "holds" : "fails");
    if (rep.witness_c) std::cout << ", witness " << describe(*rep.witness_c);
    std::cout << "\n  verdict: " << (rep.verdict() ? "pair" : "not a pair") << "\n";
    if (s)
      for (const auto& a : s->assertions)
        std::cout << "  " << a.id << " " << to_string(a.verdict)
                  << (a.detail.empty() ? "" : "  (" + a.detail + ")") << "\n";
  }
  if (s && !s->passed()) return 1;
  return rep.verdict() ? 0 : 1;
}

int cmd_search_aut(const Globals& gl, const std::string& ref, std::uint64_t order,
                   std::uint64_t scalar, std::size_t limit) {
  const Resolved r = resolve(ref, gl.params);
  const auto found = search_automorphisms(r.group, {order, scalar, limit});
  if (gl.json) {
    Json arr = Json::array();
    for (const auto& f : found) arr.push_back({{"generator_images", f.images()}});
    print(Json{{"group", r.label}, {"order", order}, {"scalar", scalar},
               {"count", found.size()}, {"automorphisms", arr}});
  } else {
    std::cout << found.size() << " automorphism(s) of order " << order << " acting as " << scalar
              << " on the Frattini quotient\n";
    for (const auto& f : found) std::cout << "  " << join({f.images().begin(), f.images().end()}) << "\n";
  }
  return found.empty() ? 1 : 0;
}

int cmd_semidirect(const Globals& gl, const std::string& ref, const std::string& aut,
                   std::uint64_t q, int t, const std::string& out) {
  const Resolved r = resolve(ref, gl.params);
  const GroupMap alpha = resolve_automorphism(r, aut);
  if (q == 0) q = map_order(alpha);
  GroupPtr built = build_group_from_pair(alpha, q, t);
  const std::string text = serialize_group(*built);
  if (out.empty()) {
    std::cout << text;
  } else {
    std::ofstream(out) << text;
    std::cerr << "wrote group of order " << built->order() << " to " << out << "\n";
  }
  return 0;
}

int cmd_subgroups(const Globals& gl, const std::string& ref, bool full) {
  const Resolved r = resolve(ref, gl.params);
  const SubgroupLattice& lat = all_subgroups(*r.group);
  std::map<std::size_t, std::size_t> counts;
  for (const auto& h : lat.all) ++counts[h.order()];
  if (gl.json) {
    Json j = Json::object();
    if (full) {
      Json arr = Json::array();
      for (const auto& h : lat.all) {
        std::string bits;
        boost::to_string(h.members(), bits);
        std::reverse(bits.begin(), bits.end());
        arr.push_back({{"order", h.order()}, {"bits", bits}});
      }
      j["group"] = r.label;
      j["subgroups"] = arr;
    } else {
      for (auto [order, n] : counts) j[std::to_string(order)] = n;
    }
    print(j);
    return 0;
  }
  std::cout << r.label << ": " << lat.all.size() << " subgroups, " << lat.maximal.size()
            << " maximal\n";
  for (auto [order, n] : counts) std::cout << "  order " << order << ": " << n << "\n";
  if (full)
    for (const auto& h : lat.all) std::cout << "  " << describe(h) << "\n";
  return 0;
}

int cmd_iso(const Globals& gl, const std::string& a, const std::string& b) {
  const Resolved ra = resolve(a, gl.params), rb = resolve(b, gl.params);
  const IsomorphismResult res = is_isomorphic(ra.group, rb.group);
  if (gl.json) {
    Json j{{"left", ra.label}, {"right", rb.label}, {"isomorphic", res.isomorphic}};
    if (res.map) j["generator_images"] = res.map->images();
    print(j);
  } else {
    std::cout << ra.label << (res.isomorphic ? " ~= " : " !~= ") << rb.label << "\n";
  }
  return res.isomorphic ? 0 : 1;
}

int cmd_reproduce(const Globals& gl, const std::vector<std::string>& filters,
                  const std::string& out) {
  ReproOptions options;
  options.filters = filters;
  options.workers = gl.workers > 0 ? gl.workers : 1;
  const ReproReport report = reproduce(options);
  const Json doc = repro_to_json(report);
  if (!out.empty()) std::ofstream(out) << doc.dump(2) << "\n";
  if (gl.json && out.empty()) {
    print(doc);
  } else {
    std::printf("%-4s %-8s %8s %9s  %s\n", "id", "verdict", "seconds", "limit", "description");
    for (const auto& c : report.criteria)
      std::printf("%-4d %-8s %8.3f %8.0fs  %s (%zu checks)\n", c.id, c.status.c_str(), c.seconds,
                  c.limit_seconds, c.description.c_str(), c.records);
    for (const auto& r : report.records)
      if (r.status != "pass") std::printf("  FAIL %s: %s\n", r.id.c_str(), r.detail.c_str());
    for (const auto& s : report.skipped)
      std::printf("SKIP %s: %s\n", s.id.c_str(), s.detail.c_str());
    std::printf("overall: %s (%zu checks)\n", report.overall_pass ? "pass" : "fail",
                report.records.size());
  }
  return report.overall_pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite group d-maximality and (p,q)-pair checks"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals gl;
  app.add_flag("--json", gl.json, "Print JSON instead of text");
  app.add_option("--cap", gl.cap, "Element cap for constructions")->capture_default_str();
  app.add_option("--workers", gl.workers, "Worker threads (0 = runtime default)");
  app.add_option("--p", gl.params.p, "Catalog family prime p");
  app.add_option("--m", gl.params.m, "Catalog cyclic order m");
  app.add_option("--k", gl.params.k, "Catalog elementary abelian rank k");
  app.add_option("--t", gl.params.t, "Catalog exponent t of the cyclic top");

  std::string ref, ref2, aut, out, id;
  std::uint64_t q = 0, order = 2, scalar = 1;
  std::size_t limit = 0;
  int t = 1;
  bool series = false, structural = false, full = false;
  std::vector<std::string> filters;

  auto* catalog = app.add_subcommand("catalog", "List entries, or print one presentation");
  catalog->add_option("id", id, "Entry id");

  auto* info = app.add_subcommand("info", "Summarize a group");
  info->add_option("group", ref, "Catalog id or group file")->required();
  info->add_flag("--series", series, "Include series orders");

  auto* dmax = app.add_subcommand("dmax", "Decide d-maximality");
  dmax->add_option("group", ref, "Catalog id or group file")->required();

  auto* pair = app.add_subcommand("pair", "Check the pair conditions");
  pair->add_option("group", ref, "Catalog id or group file")->required();
  pair->add_option("--aut", aut, "g1->word, ... or catalog:<name>")->required();
  pair->add_option("--q", q, "Order of the automorphism (default: its order)");
  pair->add_flag("--structural", structural, "Also evaluate assertions A1-A12");

  auto* search = app.add_subcommand("search-aut", "Search automorphisms");
  search->add_option("group", ref, "Catalog id or group file")->required();
  search->add_option("--order", order, "Automorphism order")->capture_default_str();
  search->add_option("--scalar", scalar, "Action on the Frattini quotient")->capture_default_str();
  search->add_option("--limit", limit, "Stop after this many (0 = all)");

  auto* semi = app.add_subcommand("semidirect", "Build P x| C_{q^t} from a pair");
  semi->add_option("group", ref, "Catalog id or group file")->required();
  semi->add_option("--aut", aut, "g1->word, ... or catalog:<name>")->required();
  semi->add_option("--q", q, "Order of the automorphism (default: its order)");
  semi->add_option("--qt", t, "Exponent t of the cyclic top")->capture_default_str();
  semi->add_option("--out", out, "Output file (default: stdout)");

  auto* subs = app.add_subcommand("subgroups", "Subgroup lattice summary");
  subs->add_option("group", ref, "Catalog id or group file")->required();
  subs->add_flag("--full", full, "Dump every subgroup");

  auto* iso = app.add_subcommand("iso", "Decide isomorphism");
  iso->add_option("left", ref, "Catalog id or group file")->required();
  iso->add_option("right", ref2, "Catalog id or group file")->required();

  auto* repro = app.add_subcommand("reproduce", "Run the verification suite");
  repro->add_option("--filter", filters, "Criterion number, tag or record-id prefix");
  repro->add_option("--json", out, "Write the JSON report to this file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    set_element_cap(gl.cap);
    if (gl.workers > 0) omp_set_num_threads(gl.workers);
    if (*catalog) return cmd_catalog(gl, id);
    if (*info) return cmd_info(gl, ref, series);
    if (*dmax) return cmd_dmax(gl, ref);
    if (*pair) return cmd_pair(gl, ref, aut, q, structural);
    if (*search) return cmd_search_aut(gl, ref, order, scalar, limit);
    if (*semi) return cmd_semidirect(gl, ref, aut, q, t, out);
    if (*subs) return cmd_subgroups(gl, ref, full);
    if (*iso) return cmd_iso(gl, ref, ref2);
    if (*repro) return cmd_reproduce(gl, filters, out);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
