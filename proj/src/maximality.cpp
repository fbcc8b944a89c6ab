#include "maxpair/maximality.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <limits>

#include "maxpair/build.hpp"
#include "maxpair/engine.hpp"
#include "maxpair/error.hpp"
#include "maxpair/lattice.hpp"
#include "maxpair/numtheory.hpp"

namespace maxpair {

namespace {

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

}  // namespace

MaximalityReport is_d_maximal(const Group& g) {
  const auto start = std::chrono::steady_clock::now();
  check_cap(g.order(), "d-maximality check");
  MaximalityReport r;
  r.label = g.label();
  r.d = min_generators(g);
  const auto& lat = all_subgroups(g);
  r.subgroups = lat.size();

  // The witness is the least lattice index, whatever the schedule.
  const std::size_t none = std::numeric_limits<std::size_t>::max();
  std::atomic<std::size_t> best{none};
  const int d = r.d;
#pragma omp parallel for schedule(dynamic, 4)
  for (std::ptrdiff_t ii = 0; ii < static_cast<std::ptrdiff_t>(lat.size()); ++ii) {
    const std::size_t i = static_cast<std::size_t>(ii);
    if (i >= best.load(std::memory_order_relaxed)) continue;
    const Subgroup& h = lat.all[i];
    if (h.is_whole() || subgroup_rank(h, d - 1) < d) continue;
    std::size_t cur = best.load();
    while (i < cur && !best.compare_exchange_weak(cur, i)) {
    }
  }
  if (best.load() != none) {
    r.witness = lat.all[best.load()];
    r.witness_rank = subgroup_rank(*r.witness);
  }
  r.is_d_maximal = !r.witness;
  r.seconds = seconds_since(start);
  return r;
}

PairCheckReport check_pair(const GroupMap& alpha, std::uint64_t q) {
  const auto start = std::chrono::steady_clock::now();
  const Group& pg = *alpha.source();
  if (!is_automorphism(alpha)) throw PreconditionError("alpha is not an automorphism of P");
  if (pg.order() == 1) throw PreconditionError("P must be nontrivial");
  const auto p = p_group_prime(pg);
  if (!p) throw PreconditionError("P is not a p-group");
  if (!is_prime(q) || (*p - 1) % q != 0)
    throw PreconditionError("q = " + std::to_string(q) + " must be a prime dividing p - 1 = " +
                            std::to_string(*p - 1));
  const std::uint64_t ord = map_order(alpha);
  if (ord != q)
    throw PreconditionError("alpha has order " + std::to_string(ord) + ", expected " +
                            std::to_string(q));

  PairCheckReport r;
  r.p = *p;
  r.q = q;
  r.d = min_generators(pg);
  const auto& lat = all_subgroups(pg);
  const auto& ranks = lattice_ranks(pg);

  r.cond_a = true;
  for (std::size_t i = 0; i < lat.size(); ++i)
    if (ranks[i] > r.d) {
      r.cond_a = false;
      r.witness_a = lat.all[i];
      r.witness_a_rank = ranks[i];
      break;
    }

  r.character = frattini_scalar(alpha);
  if (!r.character)
    r.witness_b = "induced map on P/Phi(P) is not a scalar";
  else if (r.character->trivial())
    r.witness_b = "induced scalar on P/Phi(P) is 1";
  else
    r.cond_b = true;

  r.cond_c = true;
  for (std::size_t i = 0; i < lat.size(); ++i) {
    const Subgroup& h = lat.all[i];
    if (h.is_whole() || ranks[i] != r.d || !is_invariant(alpha, h)) continue;
    auto ch = acts_through_character(alpha, h, p_subgroup_frattini(h));
    if (ch && !ch->trivial()) {
      r.cond_c = false;
      r.witness_c = h;
      r.witness_c_character = ch;
      break;
    }
  }
  r.seconds = seconds_since(start);
  return r;
}

GroupPtr build_group_from_pair(const GroupMap& alpha, std::uint64_t q, int t) {
  if (t < 1) throw PreconditionError("t must be at least 1");
  if (!is_prime(q)) throw PreconditionError("q must be prime");
  return semidirect_product(alpha.source(), alpha, ipow(q, static_cast<unsigned>(t)));
}

Pair quotient_pair(const GroupMap& alpha, const Subgroup& n) {
  const GroupPtr& pp = alpha.source();
  if (!alpha.is_endomorphism() || &n.parent() != pp.get())
    throw PreconditionError("N must be a subgroup of the pair's group");
  if (!is_normal(n)) throw PreconditionError("N is not normal");
  if (!is_invariant(alpha, n)) throw PreconditionError("N is not invariant under alpha");
  if (!n.is_subset_of(frattini_subgroup(*pp)))
    throw PreconditionError("N is not contained in Phi(P)");
  Quotient q = quotient_group(pp, n);
  GroupMap induced = induced_map(q, alpha);
  return {q.group, std::move(induced)};
}

Pair product_pair(const GroupMap& alpha, const GroupMap& beta) {
  const GroupPtr& a = alpha.source();
  const GroupPtr& b = beta.source();
  if (!alpha.is_endomorphism() || !beta.is_endomorphism())
    throw PreconditionError("pair maps must be endomorphisms");
  const auto pa = p_group_prime(*a);
  const auto pb = p_group_prime(*b);
  if (!pa || !pb || *pa != *pb) throw PreconditionError("pairs must share the prime p");
  const auto ca = frattini_scalar(alpha);
  const auto cb = frattini_scalar(beta);
  if (!ca || !cb || ca->value != cb->value)
    throw PreconditionError("pairs must act through the same Frattini character");
  Product prod = direct_product(a, b);
  const std::size_t nb = b->order();
  std::vector<Elem> t(prod.group->order());
  for (std::size_t x = 0; x < t.size(); ++x)
    t[x] = static_cast<Elem>(alpha(static_cast<Elem>(x / nb)) * nb + beta(static_cast<Elem>(x % nb)));
  return {prod.group, GroupMap(prod.group, prod.group, std::move(t))};
}

StrippedPair strip_pair(const GroupPtr& gp) {
  const Group& g = *gp;
  auto primes = prime_factors(g.order());
  primes.erase(std::unique(primes.begin(), primes.end()), primes.end());
  if (primes.size() != 2) throw PreconditionError("group order must have two prime divisors");
  const std::uint64_t p = primes.back();
  std::size_t part = 1;
  for (std::size_t m = g.order(); m % p == 0; m /= p) part *= p;
  const auto& ords = element_orders(g);
  Bits sylow(g.order());
  for (std::size_t x = 0; x < g.order(); ++x)
    if (part % ords[x] == 0) sylow.set(x);
  if (sylow.count() != part) throw PreconditionError("Sylow subgroup for the largest prime is not normal");
  const std::size_t complement = g.order() / part;
  Elem b = 0;
  for (std::size_t x = 0; x < g.order() && b == 0; ++x)
    if (ords[x] == complement) b = static_cast<Elem>(x);
  if (b == 0) throw PreconditionError("no cyclic complement to the normal Sylow subgroup");

  StrippedPair out{{nullptr, GroupMap::identity(gp)}, 0, {}, b};
  GroupPtr pgroup = subgroup_as_group(subgroup_from_members(g, sylow), &out.embedding);
  GroupMap alpha = conjugation_action(pgroup, out.embedding, g, g.inv(b));
  out.q = map_order(alpha);
  out.pair = Pair{pgroup, std::move(alpha)};
  return out;
}

// ---------------------------------------------------------------------------
// Structural report

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Pass:
      return "pass";
    case Verdict::Fail:
      return "fail";
    case Verdict::Vacuous:
      return "vacuous";
  }
  return "unknown";
}

bool StructuralReport::passed() const {
  return std::none_of(assertions.begin(), assertions.end(),
                      [](const Assertion& a) { return a.verdict == Verdict::Fail; });
}

const Assertion& StructuralReport::get(const std::string& id) const {
  for (const auto& a : assertions)
    if (a.id == id) return a;
  throw PreconditionError("no assertion " + id);
}

namespace {

/// Collects the parts of a multi-part assertion: fails if any part fails,
/// passes if at least one part fired, vacuous otherwise.
class Parts {
 public:
  void check(bool holds, const std::string& what) {
    fired_ = true;
    if (!holds) {
      failed_ = true;
      detail_ += (detail_.empty() ? "" : "; ") + ("failed: " + what);
    }
  }

  void note(const std::string& text) { detail_ += (detail_.empty() ? "" : "; ") + text; }

  Assertion finish(std::string id, std::string statement) const {
    Verdict v = failed_ ? Verdict::Fail : fired_ ? Verdict::Pass : Verdict::Vacuous;
    return {std::move(id), std::move(statement), v, detail_};
  }

 private:
  bool fired_ = false;
  bool failed_ = false;
  std::string detail_;
};

std::string str(std::uint64_t v) { return std::to_string(v); }

}  // namespace

StructuralReport structural_report(const GroupMap& alpha, std::uint64_t q,
                                   const StructuralOptions& options) {
  const PairCheckReport pair = check_pair(alpha, q);
  if (!pair.verdict()) throw PreconditionError("structural report needs a pair passing check_pair");
  const Group& pg = *alpha.source();
  const std::uint64_t p = pair.p;
  const int d = pair.d;
  const int n = log_base(pg.order(), p);
  const std::uint64_t chi = pair.character->value;
  const Series& lcs = lower_central_series(pg);
  const int c = lcs.length();
  auto gam = [&](int i) { return gamma(pg, i); };
  auto index = [](const Subgroup& a, const Subgroup& b) { return a.order() / b.order(); };
  const Subgroup whole = whole_group(pg);

  StructuralReport report;
  auto add = [&](Assertion a) { report.assertions.push_back(std::move(a)); };

  {
    Parts parts;
    parts.check(frattini_subgroup(pg) == gam(2), "Phi(P) != gamma_2(P)");
    parts.note("|Phi| = " + str(frattini_subgroup(pg).order()) + ", |gamma_2| = " + str(gam(2).order()));
    add(parts.finish("A1", "Phi(P) = gamma_2(P)"));
  }
  {
    Parts parts;
    for (int i = 1; i <= c; ++i)
      parts.check(p_subgroup_frattini(gam(i)).is_subset_of(gam(i + 1)),
                  "gamma_" + str(i) + "/gamma_" + str(i + 1) + " not elementary abelian");
    add(parts.finish("A2", "every gamma_i/gamma_{i+1} is elementary abelian"));
  }
  {
    Parts parts;
    for (int i = 1; i <= c; ++i) {
      const auto ch = acts_through_character(alpha, gam(i), gam(i + 1));
      const std::uint64_t expected = powmod(chi, static_cast<std::uint64_t>(i), p);
      parts.check(ch && ch->value == expected,
                  "layer " + str(i) + " expected " + str(expected) + ", got " +
                      (ch ? str(ch->value) : std::string("no character")));
    }
    parts.note("chi = " + str(chi));
    add(parts.finish("A3", "alpha acts on gamma_i/gamma_{i+1} through chi^i"));
  }
  {
    Parts parts;
    for (int i = 1; i <= c; ++i) {
      const Subgroup lower = join(p_subgroup_frattini(gam(i)), gam(i + 1));
      const int rank = log_base(index(gam(i), lower), p);
      parts.check(rank <= d, "d(gamma_" + str(i) + "/gamma_" + str(i + 1) + ") = " + str(rank) + " > d");
      if (i >= 2 && rank == d)
        parts.check(powmod(chi, static_cast<std::uint64_t>(i), p) == 1,
                    "layer " + str(i) + " has rank d but chi^i != 1");
    }
    add(parts.finish("A4", "d(gamma_i/gamma_{i+1}) <= d, and chi^i = 1 when equality holds for i >= 2"));
  }
  {
    Parts parts;
    for (int i = 1; i <= c; ++i) {
      const Subgroup bound = join(gam(i + static_cast<int>(q)), gam(2 * i));
      parts.check(agemo(gam(i), p, 1).is_subset_of(bound),
                  "Agemo_1(gamma_" + str(i) + ") not in gamma_" + str(i + q) + " gamma_" + str(2 * i));
    }
    parts.check(agemo(gam(2), p, 1).is_subset_of(gam(4)), "Agemo_1(gamma_2) not in gamma_4");
    add(parts.finish("A5", "Agemo_1(gamma_i) <= gamma_{i+q} gamma_{2i}; Agemo_1(gamma_2) <= gamma_4"));
  }
  {
    Parts parts;
    if (c == 3) parts.check(exponent(pg) != p, "class 3 with exponent p");
    parts.note("class " + std::to_string(c) + ", exponent " + str(exponent(pg)));
    add(parts.finish("A6", "class 3 implies exponent != p"));
  }
  {
    Parts parts;
    if (q > 2) parts.check(c <= 2, "q > 2 with class " + std::to_string(c));
    add(parts.finish("A7", "q > 2 implies class <= 2"));
  }

  const RegularityResult regular = is_regular(pg);
  {
    Parts parts;
    if (p >= static_cast<std::uint64_t>(2 * d)) parts.check(regular.regular, "P is not regular");
    parts.note(std::string("regular: ") + (regular.regular ? "yes" : "no"));
    add(parts.finish("A8", "p >= 2d implies P regular"));
  }
  {
    Parts parts;
    if (regular.regular && c >= 3) {
      parts.check(agemo(whole, p, 1) == gam(3), "Agemo_1(P) != gamma_3");
      for (int i = 1; i <= c; ++i)
        parts.check(agemo(gam(i), p, 1) == gam(i + 2),
                    "Agemo_1(gamma_" + str(i) + ") != gamma_" + str(i + 2));
      for (int i = 1; i <= c; ++i)
        for (int j = 1; j <= c; ++j)
          if (i % 2 == 1 || j % 2 == 1)
            parts.check(commutator_subgroup(pg, gam(i), gam(j)) == gam(i + j),
                        "[gamma_" + str(i) + ", gamma_" + str(j) + "] != gamma_" + str(i + j));
      for (int i = 2; i <= c; ++i)
        parts.check(index(gam(i), gam(i + 2)) <= ipow(p, static_cast<unsigned>(d)),
                    "|gamma_" + str(i) + " : gamma_" + str(i + 2) + "| > p^d");
      for (int a = 1; 1 + 2 * a <= c; ++a)
        if (index(gam(1 + 2 * a), gam(2 + 2 * a)) == p)
          parts.check(c == 1 + 2 * a, "layer " + str(1 + 2 * a) + " has order p but class is " +
                                          std::to_string(c));
    }
    add(parts.finish("A9", "regular pairs of class >= 3: Agemo and commutator identities"));
  }
  {
    Parts parts;
    if (d == 2) {
      parts.check(c == n - 1, "rank 2 but not of maximal class");
      if (p > 3) {
        parts.check(n <= 3, "rank 2, p > 3 with |P| = p^" + std::to_string(n));
        if (n == 2) parts.check(exponent(pg) == p && c == 1, "order p^2 but not elementary abelian");
        if (n == 3)
          parts.check(exponent(pg) == p && center(pg).order() == p && gam(2).order() == p &&
                          frattini_subgroup(pg).order() == p,
                      "order p^3 but not extraspecial of exponent p");
      }
    }
    if (d == 3 && c == 2)
      parts.check(n == 4 && gam(2).order() == p && exponent(pg) == p,
                  "rank 3, class 2 but not of order p^4 with |gamma_2| = p and exponent p");
    if (d == 3 && p > 3) parts.check(n <= 5, "rank 3, p > 3 with |P| = p^" + std::to_string(n));
    add(parts.finish("A10", "rank 2: maximal class and small order for p > 3; rank 3 order bounds"));
  }
  {
    Parts parts;
    const std::size_t built_order = pg.order() * q;
    if (built_order <= options.round_trip_cap) {
      GroupPtr built = build_group_from_pair(alpha, q, 1);
      const MaximalityReport m = is_d_maximal(*built);
      parts.check(m.is_d_maximal && m.d == d + 1,
                  "built group: d = " + std::to_string(m.d) + ", d-maximal " +
                      (m.is_d_maximal ? "yes" : "no"));
      const StrippedPair back = strip_pair(built);
      const PairCheckReport again = check_pair(back.pair.alpha, back.q);
      parts.check(again.verdict() && again.d == d, "stripped pair does not pass check_pair");
    } else {
      parts.note("built group of order " + str(built_order) + " above round-trip cap " +
                 str(options.round_trip_cap));
    }
    add(parts.finish("A11", "P x| C_q is (d+1)-maximal and strips back to a pair"));
  }
  {
    Parts parts;
    if (q % 2 == 1)
      parts.check(n <= 2 * d - 1, "|P| = p^" + std::to_string(n) + " exceeds p^(2d-1)");
    add(parts.finish("A12", "q odd implies |P| <= p^(2d-1)"));
  }
  return report;
}

}  // namespace maxpair
