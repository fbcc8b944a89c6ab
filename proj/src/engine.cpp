#include "maxpair/engine.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>

#include "maxpair/build.hpp"
#include "maxpair/error.hpp"
#include "maxpair/lattice.hpp"
#include "maxpair/numtheory.hpp"
#include "partial_hom.hpp"

namespace maxpair {

// ---------------------------------------------------------------------------
// Elements

std::uint64_t element_order(const Group& g, Elem x) {
  std::uint64_t k = 1;
  for (Elem y = x; y != 0; y = g.mul(y, x)) ++k;
  return k;
}

const std::vector<std::uint32_t>& element_orders(const Group& g) {
  return g.memo<std::vector<std::uint32_t>>("element_orders", [&] {
    std::vector<std::uint32_t> out(g.order());
    for (std::size_t x = 0; x < g.order(); ++x)
      out[x] = static_cast<std::uint32_t>(element_order(g, static_cast<Elem>(x)));
    return out;
  });
}

std::uint64_t exponent(const Group& g) {
  std::uint64_t e = 1;
  for (auto o : element_orders(g)) e = std::lcm(e, static_cast<std::uint64_t>(o));
  return e;
}

std::uint64_t exponent(const Subgroup& h) {
  const auto& ords = element_orders(h.parent());
  std::uint64_t e = 1;
  const Bits& m = h.members();
  for (auto i = m.find_first(); i != Bits::npos; i = m.find_next(i))
    e = std::lcm(e, static_cast<std::uint64_t>(ords[i]));
  return e;
}

std::optional<std::uint64_t> p_group_prime(const Group& g) { return prime_power_base(g.order()); }

std::optional<std::uint64_t> p_group_prime(const Subgroup& h) {
  return prime_power_base(h.order());
}

// ---------------------------------------------------------------------------
// Subgroups

namespace {

/// Closes (members, elems) under right multiplication by gens.  Elements
/// below `old_size` are already closed under gens[0, old_gens).
void close_up(const Group& g, Bits& members, std::vector<Elem>& elems,
              const std::vector<Elem>& gens, std::size_t old_size, std::size_t old_gens) {
  for (std::size_t i = 0; i < elems.size(); ++i) {
    const std::size_t first_gen = i < old_size ? old_gens : 0;
    const Elem x = elems[i];
    for (std::size_t k = first_gen; k < gens.size(); ++k) {
      const Elem y = g.mul(x, gens[k]);
      if (!members.test(y)) {
        members.set(y);
        elems.push_back(y);
      }
    }
  }
}

struct Builder {
  const Group& g;
  Bits members;
  std::vector<Elem> elems;
  std::vector<Elem> gens;

  explicit Builder(const Group& group) : g(group), members(group.order()) {
    members.set(0);
    elems.push_back(0);
  }

  Builder(const Subgroup& h) : g(h.parent()), members(h.members()), gens(h.generators()) {
    elems = h.elements();
  }

  bool add(Elem s) {
    if (members.test(s)) return false;
    const std::size_t old_size = elems.size();
    const std::size_t old_gens = gens.size();
    gens.push_back(s);
    close_up(g, members, elems, gens, old_size, old_gens);
    return true;
  }

  Subgroup finish() { return Subgroup(g, std::move(members), std::move(gens)); }
};

}  // namespace

Subgroup trivial_subgroup(const Group& g) {
  Bits m(g.order());
  m.set(0);
  return Subgroup(g, std::move(m), {});
}

Subgroup whole_group(const Group& g) { return closure(g, g.gens()); }

Subgroup closure(const Group& g, std::span<const Elem> seed) {
  Builder b(g);
  for (Elem s : seed) b.add(s);
  return b.finish();
}

Subgroup extend(const Subgroup& h, std::span<const Elem> more) {
  Builder b(h);
  for (Elem s : more) b.add(s);
  return b.finish();
}

Subgroup join(const Subgroup& a, const Subgroup& b) {
  if (b.is_subset_of(a)) return a;
  if (a.is_subset_of(b)) return b;
  return extend(a, b.generators());
}

Subgroup subgroup_from_members(const Group& g, const Bits& members) {
  Builder b(g);
  for (auto i = members.find_first(); i != Bits::npos; i = members.find_next(i)) {
    b.add(static_cast<Elem>(i));
    if (b.members == members) break;
  }
  if (b.members != members) throw PreconditionError("member set is not a subgroup");
  return b.finish();
}

Subgroup intersection(const Subgroup& a, const Subgroup& b) {
  return subgroup_from_members(a.parent(), a.members() & b.members());
}

Subgroup normal_closure(const Subgroup& h, const Subgroup& by) {
  const Group& g = h.parent();
  Builder b(h);
  for (std::size_t k = 0; k < b.gens.size(); ++k)
    for (Elem t : by.generators()) b.add(g.conj(b.gens[k], t));
  return b.finish();
}

bool normalizes(const Group& g, Elem x, const Subgroup& h) {
  for (Elem y : h.generators())
    if (!h.contains(g.conj(y, x))) return false;
  return true;
}

bool is_normal(const Subgroup& n, const Subgroup& in) {
  for (Elem t : in.generators())
    if (!normalizes(n.parent(), t, n)) return false;
  return true;
}

bool is_normal(const Subgroup& n) { return is_normal(n, whole_group(n.parent())); }

Subgroup commutator_subgroup(const Group& g, const Subgroup& a, const Subgroup& b) {
  std::vector<Elem> seeds;
  for (Elem x : a.generators())
    for (Elem y : b.generators()) seeds.push_back(g.comm(x, y));
  return normal_closure(closure(g, seeds), join(a, b));
}

Subgroup commutator_subgroup_bruteforce(const Group& g, const Subgroup& a, const Subgroup& b) {
  Builder builder(g);
  for (Elem x : a.elements())
    for (Elem y : b.elements()) builder.add(g.comm(x, y));
  return builder.finish();
}

Subgroup centralizer(const Group& g, const Subgroup& a) {
  Bits m(g.order());
  for (std::size_t x = 0; x < g.order(); ++x) {
    bool ok = true;
    for (Elem y : a.generators())
      if (g.mul(static_cast<Elem>(x), y) != g.mul(y, static_cast<Elem>(x))) {
        ok = false;
        break;
      }
    if (ok) m.set(x);
  }
  return subgroup_from_members(g, m);
}

Subgroup center(const Group& g) { return centralizer(g, whole_group(g)); }

Subgroup normalizer(const Group& g, const Subgroup& a) {
  Bits m(g.order());
  for (std::size_t x = 0; x < g.order(); ++x)
    if (normalizes(g, static_cast<Elem>(x), a)) m.set(x);
  return subgroup_from_members(g, m);
}

bool is_abelian(const Subgroup& h) {
  const Group& g = h.parent();
  const auto& gens = h.generators();
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = i + 1; j < gens.size(); ++j)
      if (g.mul(gens[i], gens[j]) != g.mul(gens[j], gens[i])) return false;
  return true;
}

Subgroup omega(const Subgroup& h, std::uint64_t p, int k) {
  const Group& g = h.parent();
  const auto e = static_cast<std::int64_t>(ipow(p, static_cast<unsigned>(k)));
  Builder b(g);
  for (Elem x : h.elements())
    if (g.pow(x, e) == 0) b.add(x);
  return b.finish();
}

Subgroup agemo(const Subgroup& h, std::uint64_t p, int k) {
  const Group& g = h.parent();
  const auto e = static_cast<std::int64_t>(ipow(p, static_cast<unsigned>(k)));
  Builder b(g);
  for (Elem x : h.elements()) b.add(g.pow(x, e));
  return b.finish();
}

namespace {
std::uint64_t require_p_group(const Group& g) {
  if (g.order() == 1) return 2;
  auto p = p_group_prime(g);
  if (!p) throw PreconditionError("group '" + g.label() + "' is not a p-group");
  return *p;
}
}  // namespace

Subgroup omega_n(const Group& g, int k) { return omega(whole_group(g), require_p_group(g), k); }
Subgroup agemo_n(const Group& g, int k) { return agemo(whole_group(g), require_p_group(g), k); }

// ---------------------------------------------------------------------------
// Series

std::vector<std::size_t> Series::orders() const {
  std::vector<std::size_t> out;
  for (const auto& t : terms) out.push_back(t.order());
  return out;
}

const Series& lower_central_series(const Group& g) {
  return g.memo<Series>("lower_central_series", [&] {
    Series s;
    s.kind = Series::Kind::LowerCentral;
    const Subgroup whole = whole_group(g);
    s.terms.push_back(whole);
    s.labels.push_back("gamma_1");
    while (!s.terms.back().is_trivial()) {
      Subgroup next = commutator_subgroup(g, s.terms.back(), whole);
      if (next == s.terms.back()) break;
      s.terms.push_back(std::move(next));
      s.labels.push_back("gamma_" + std::to_string(s.terms.size()));
    }
    return s;
  });
}

int nilpotency_class(const Group& g) { return lower_central_series(g).length(); }

Subgroup gamma(const Group& g, int i) {
  if (i < 1) throw PreconditionError("lower central terms are indexed from 1");
  const Series& s = lower_central_series(g);
  if (static_cast<std::size_t>(i) <= s.terms.size()) return s.terms[i - 1];
  return s.reaches_trivial() ? trivial_subgroup(g) : s.terms.back();
}

Series derived_series(const Group& g) {
  Series s;
  s.kind = Series::Kind::Derived;
  s.terms.push_back(whole_group(g));
  s.labels.push_back("G^(0)");
  while (!s.terms.back().is_trivial()) {
    Subgroup next = commutator_subgroup(g, s.terms.back(), s.terms.back());
    if (next == s.terms.back()) break;
    s.terms.push_back(std::move(next));
    s.labels.push_back("G^(" + std::to_string(s.terms.size() - 1) + ")");
  }
  return s;
}

bool is_solvable(const Group& g) {
  return g.memo<bool>("solvable", [&] { return derived_series(g).reaches_trivial(); });
}

// ---------------------------------------------------------------------------
// Constructions

Quotient quotient_group(const GroupPtr& gp, const Subgroup& n) {
  const Group& g = *gp;
  if (&n.parent() != &g) throw PreconditionError("subgroup belongs to another group");
  if (!is_normal(n)) throw PreconditionError("subgroup is not normal");
  const std::size_t size = g.order();
  std::vector<Elem> coset(size, static_cast<Elem>(size));
  std::vector<Elem> reps;
  const auto members = n.elements();
  for (std::size_t x = 0; x < size; ++x) {
    if (coset[x] != size) continue;
    const Elem id = static_cast<Elem>(reps.size());
    reps.push_back(static_cast<Elem>(x));
    for (Elem m : members) coset[g.mul(static_cast<Elem>(x), m)] = id;
  }
  const std::size_t k = reps.size();
  std::vector<Elem> table(k * k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) table[i * k + j] = coset[g.mul(reps[i], reps[j])];
  std::vector<Elem> gens;
  for (Elem t : g.gens()) {
    Elem c = coset[t];
    if (c != 0 && std::find(gens.begin(), gens.end(), c) == gens.end()) gens.push_back(c);
  }
  auto q = std::make_shared<const Group>(
      "quotient(" + g.label() + "/" + std::to_string(n.order()) + ")", k, std::move(table),
      std::move(gens));
  GroupMap proj(gp, q, coset);
  return Quotient{q, std::move(proj), std::move(reps)};
}

GroupMap induced_map(const Quotient& q, const GroupMap& f) {
  const GroupMap& proj = q.projection;
  if (f.source() != proj.source() || f.target() != proj.source())
    throw PreconditionError("map is not an endomorphism of the quotiented group");
  std::vector<Elem> t(q.group->order());
  for (std::size_t i = 0; i < t.size(); ++i) t[i] = proj(f(q.representatives[i]));
  // f(N) = N iff the induced table is well defined on every coset member.
  for (std::size_t x = 0; x < proj.table().size(); ++x)
    if (proj(f(static_cast<Elem>(x))) != t[proj(static_cast<Elem>(x))])
      throw PreconditionError("map does not preserve the normal subgroup");
  return GroupMap(q.group, q.group, std::move(t));
}

Product direct_product(const GroupPtr& gp, const GroupPtr& hp) {
  const Group& g = *gp;
  const Group& h = *hp;
  const std::size_t a = g.order(), b = h.order(), n = a * b;
  check_cap(n, "direct product");
  std::vector<Elem> table(n * n);
  for (std::size_t x = 0; x < n; ++x) {
    const Elem x1 = static_cast<Elem>(x / b), x2 = static_cast<Elem>(x % b);
    for (std::size_t y = 0; y < n; ++y) {
      const Elem y1 = static_cast<Elem>(y / b), y2 = static_cast<Elem>(y % b);
      table[x * n + y] = static_cast<Elem>(g.mul(x1, y1) * b + h.mul(x2, y2));
    }
  }
  std::vector<Elem> gens;
  for (Elem t : g.gens()) gens.push_back(static_cast<Elem>(t * b));
  for (Elem t : h.gens()) gens.push_back(t);
  auto prod = std::make_shared<const Group>("product(" + g.label() + "," + h.label() + ")", n,
                                            std::move(table), std::move(gens));
  std::vector<Elem> left(a), right(b);
  for (std::size_t x = 0; x < a; ++x) left[x] = static_cast<Elem>(x * b);
  for (std::size_t y = 0; y < b; ++y) right[y] = static_cast<Elem>(y);
  return Product{prod, GroupMap(gp, prod, std::move(left)), GroupMap(hp, prod, std::move(right))};
}

std::uint64_t map_order(const GroupMap& f) {
  if (!f.is_endomorphism() || !f.is_bijective())
    throw PreconditionError("map is not a bijective endomorphism");
  std::vector<Elem> cur = f.table();
  std::uint64_t k = 1;
  auto is_id = [](const std::vector<Elem>& t) {
    for (std::size_t x = 0; x < t.size(); ++x)
      if (t[x] != x) return false;
    return true;
  };
  while (!is_id(cur)) {
    for (auto& y : cur) y = f(y);
    ++k;
  }
  return k;
}

GroupPtr semidirect_product(const GroupPtr& pp, const GroupMap& beta, std::uint64_t m) {
  const Group& p = *pp;
  if (beta.source() != pp || beta.target() != pp)
    throw PreconditionError("beta must be an endomorphism of P");
  if (m == 0) throw PreconditionError("extension order must be positive");
  const std::uint64_t ord = map_order(beta);
  if (m % ord != 0)
    throw PreconditionError("automorphism order " + std::to_string(ord) +
                            " does not divide extension order " + std::to_string(m));
  const std::size_t a = p.order(), n = a * m;
  check_cap(n, "semidirect product");
  std::vector<std::vector<Elem>> powers(m, std::vector<Elem>(a));
  for (std::size_t y = 0; y < a; ++y) powers[0][y] = static_cast<Elem>(y);
  for (std::size_t i = 1; i < m; ++i)
    for (std::size_t y = 0; y < a; ++y) powers[i][y] = beta(powers[i - 1][y]);
  std::vector<Elem> table(n * n);
  for (std::size_t u = 0; u < n; ++u) {
    const std::size_t i = u / a;
    const Elem x = static_cast<Elem>(u % a);
    for (std::size_t v = 0; v < n; ++v) {
      const std::size_t j = v / a;
      const Elem y = static_cast<Elem>(v % a);
      table[u * n + v] = static_cast<Elem>(((i + j) % m) * a + p.mul(x, powers[i][y]));
    }
  }
  std::vector<Elem> gens(p.gens().begin(), p.gens().end());
  if (m > 1) gens.push_back(static_cast<Elem>(a));
  return std::make_shared<const Group>(
      "semidirect(" + p.label() + ",C" + std::to_string(m) + ")", n, std::move(table),
      std::move(gens));
}

GroupMap conjugation_action(const GroupPtr& sub, const std::vector<Elem>& embedding,
                            const Group& g, Elem b) {
  std::vector<Elem> t(embedding.size());
  for (std::size_t i = 0; i < embedding.size(); ++i) {
    const Elem y = g.conj(embedding[i], b);
    auto it = std::lower_bound(embedding.begin(), embedding.end(), y);
    if (it == embedding.end() || *it != y)
      throw PreconditionError("conjugation does not preserve the subgroup");
    t[i] = static_cast<Elem>(it - embedding.begin());
  }
  return GroupMap(sub, sub, std::move(t));
}

// ---------------------------------------------------------------------------
// Regularity

namespace {

/// Least element of each conjugacy class.
const std::vector<Elem>& class_representatives(const Group& g) {
  return g.memo<std::vector<Elem>>("class_representatives", [&] {
    Bits seen(g.order());
    std::vector<Elem> reps;
    for (std::size_t x = 0; x < g.order(); ++x) {
      if (seen.test(x)) continue;
      reps.push_back(static_cast<Elem>(x));
      for (std::size_t t = 0; t < g.order(); ++t)
        seen.set(g.conj(static_cast<Elem>(x), static_cast<Elem>(t)));
    }
    return reps;
  });
}

/// Whether (xy)^p = x^p y^p modulo Agemo_1(gamma_2(<x, y>)).  `coarse` is a
/// subgroup containing every such Agemo_1(gamma_2(<x, y>)); membership in
/// it is necessary.
bool pair_is_regular(const Group& g, std::uint64_t p, const std::vector<Elem>& pth, Elem x,
                     Elem y, const Subgroup* coarse) {
  const Elem lhs = pth[g.mul(x, y)];
  const Elem rhs = g.mul(pth[x], pth[y]);
  if (lhs == rhs) return true;
  const Elem w = g.mul(g.inv(rhs), lhs);
  if (coarse && !coarse->contains(w)) return false;
  const Elem pair[2] = {x, y};
  const Subgroup k = closure(g, pair);
  const Subgroup d = commutator_subgroup(g, k, k);
  return agemo(d, p, 1).contains(w);
}

std::uint64_t regularity_prime(const Group& g) {
  if (g.order() == 1) return 2;
  auto p = p_group_prime(g);
  if (!p) throw PreconditionError("regularity is defined for p-groups only");
  return *p;
}

std::vector<Elem> pth_powers(const Group& g, std::uint64_t p) {
  std::vector<Elem> out(g.order());
  for (std::size_t x = 0; x < g.order(); ++x)
    out[x] = g.pow(static_cast<Elem>(x), static_cast<std::int64_t>(p));
  return out;
}

}  // namespace

RegularityResult is_regular(const Group& g) {
  const std::uint64_t p = regularity_prime(g);
  if (g.order() == 1) return {};
  const auto pth = pth_powers(g, p);
  const Subgroup whole = whole_group(g);
  const Subgroup coarse = agemo(commutator_subgroup(g, whole, whole), p, 1);
  // The congruence is invariant under simultaneous conjugation, so x runs
  // over class representatives; the least failing y is kept per x.
  const auto& reps = class_representatives(g);
  const std::size_t n = g.order();
  std::vector<std::size_t> first_bad(reps.size(), n);
#pragma omp parallel for schedule(dynamic, 1)
  for (std::ptrdiff_t ri = 0; ri < static_cast<std::ptrdiff_t>(reps.size()); ++ri) {
    const Elem x = reps[ri];
    for (std::size_t y = 0; y < n; ++y)
      if (!pair_is_regular(g, p, pth, x, static_cast<Elem>(y), &coarse)) {
        first_bad[ri] = y;
        break;
      }
  }
  for (std::size_t ri = 0; ri < reps.size(); ++ri)
    if (first_bad[ri] != n)
      return {false, std::make_pair(reps[ri], static_cast<Elem>(first_bad[ri]))};
  return {};
}

RegularityResult is_regular_serial(const Group& g) {
  const std::uint64_t p = regularity_prime(g);
  const auto pth = pth_powers(g, p);
  for (std::size_t x = 0; x < g.order(); ++x)
    for (std::size_t y = 0; y < g.order(); ++y)
      if (!pair_is_regular(g, p, pth, static_cast<Elem>(x), static_cast<Elem>(y), nullptr))
        return {false, std::make_pair(static_cast<Elem>(x), static_cast<Elem>(y))};
  return {};
}

// ---------------------------------------------------------------------------
// Isomorphism

Fingerprint fingerprint(const Group& g) {
  return g.memo<Fingerprint>("fingerprint", [&] {
    Fingerprint f;
    f.order = g.order();
    f.exponent = exponent(g);
    std::map<std::uint32_t, std::size_t> hist;
    for (auto o : element_orders(g)) ++hist[o];
    f.order_histogram.assign(hist.begin(), hist.end());
    f.center = center(g).order();
    f.frattini = frattini_subgroup(g).order();
    const Subgroup whole = whole_group(g);
    f.derived = commutator_subgroup(g, whole, whole).order();
    f.lower_central = lower_central_series(g).orders();
    f.rank = min_generators(g);
    return f;
  });
}

std::vector<Elem> minimal_generating_set(const Group& g) {
  if (g.order() == 1) return {};
  const auto& ords = element_orders(g);
  std::vector<Elem> by_order(g.order());
  std::iota(by_order.begin(), by_order.end(), Elem{0});
  std::stable_sort(by_order.begin(), by_order.end(),
                   [&](Elem a, Elem b) { return ords[a] > ords[b]; });
  const Subgroup phi = frattini_subgroup(g);
  const int d = min_generators(g);

  if (p_group_prime(g)) {
    // Any lift of a basis of G / Phi(G) generates G.
    std::vector<Elem> out;
    Subgroup span = phi;
    for (Elem x : by_order) {
      if (span.contains(x)) continue;
      const Elem one[1] = {x};
      span = extend(span, one);
      out.push_back(x);
      if (span.is_whole()) break;
    }
    return out;
  }

  // Depth-first search for d elements generating G modulo Phi(G); lifts of
  // such a tuple generate G.
  std::vector<Elem> chosen;
  std::function<bool(const Subgroup&, std::size_t)> search = [&](const Subgroup& span,
                                                                 std::size_t start) {
    if (span.is_whole()) return true;
    if (static_cast<int>(chosen.size()) == d) return false;
    for (std::size_t i = start; i < by_order.size(); ++i) {
      const Elem x = by_order[i];
      if (span.contains(x)) continue;
      const Elem one[1] = {x};
      chosen.push_back(x);
      if (search(extend(span, one), i + 1)) return true;
      chosen.pop_back();
    }
    return false;
  };
  if (!search(phi, 0)) throw Error("no generating tuple of size d(G) found");
  return chosen;
}

IsomorphismResult is_isomorphic(const GroupPtr& gp, const GroupPtr& hp) {
  const Group& g = *gp;
  const Group& h = *hp;
  if (g.order() != h.order()) return {};
  check_cap(g.order(), "isomorphism test");
  if (!(fingerprint(g) == fingerprint(h))) return {};

  const std::vector<Elem> gens = minimal_generating_set(g);
  const auto& g_ords = element_orders(g);
  const auto& h_ords = element_orders(h);
  std::vector<std::vector<Elem>> candidates(gens.size());
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t y = 0; y < h.order(); ++y)
      if (h_ords[y] == g_ords[gens[i]]) candidates[i].push_back(static_cast<Elem>(y));

  std::optional<std::vector<Elem>> found;
  std::function<void(const detail::PartialHom&, std::size_t)> search =
      [&](const detail::PartialHom& partial, std::size_t depth) {
        if (found) return;
        if (depth == gens.size()) {
          if (partial.total()) found = partial.table();
          return;
        }
        for (Elem y : candidates[depth]) {
          detail::PartialHom next = partial;
          if (next.add(gens[depth], y)) search(next, depth + 1);
          if (found) return;
        }
      };
  search(detail::PartialHom(g, h, true), 0);
  if (!found) return {};
  return {true, GroupMap(gp, hp, std::move(*found))};
}

}  // namespace maxpair
