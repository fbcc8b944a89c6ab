#include "maxpair/lattice.hpp"

#include <algorithm>

#include "maxpair/build.hpp"
#include "maxpair/engine.hpp"
#include "maxpair/error.hpp"
#include "maxpair/numtheory.hpp"

namespace maxpair {

namespace {

/// Insertion-ordered set of subgroups keyed by member bits.
class Registry {
 public:
  bool insert(Subgroup h) {
    const std::size_t key = hash_bits(h.members());
    auto range = index_.equal_range(key);
    for (auto it = range.first; it != range.second; ++it)
      if (list_[it->second] == h) return false;
    index_.emplace(key, list_.size());
    list_.push_back(std::move(h));
    return true;
  }

  std::vector<Subgroup>& list() noexcept { return list_; }

 private:
  std::unordered_multimap<std::size_t, std::size_t> index_;
  std::vector<Subgroup> list_;
};

/// Non-owning handle for APIs that take a GroupPtr.
GroupPtr borrow(const Group& g) { return GroupPtr(GroupPtr(), &g); }

/// One element generating each cyclic subgroup.
std::vector<Elem> cyclic_generators(const Group& g) {
  const auto& ords = element_orders(g);
  Bits seen(g.order());
  std::vector<Elem> out;
  for (std::size_t x = 1; x < g.order(); ++x) {
    if (seen.test(x)) continue;
    out.push_back(static_cast<Elem>(x));
    const std::uint64_t o = ords[x];
    Elem y = static_cast<Elem>(x);
    for (std::uint64_t k = 1; k < o; ++k, y = g.mul(y, static_cast<Elem>(x)))
      if (std::gcd(k, o) == 1) seen.set(y);
  }
  return out;
}

/// Overgroups K of h with h normal in K of prime index.
std::vector<Subgroup> prime_index_overgroups(const Subgroup& h) {
  const Group& g = h.parent();
  const std::size_t n = g.order();
  const std::vector<Elem> members = h.elements();
  Bits done = h.members();
  std::vector<Subgroup> out;
  for (std::size_t xi = 0; xi < n; ++xi) {
    const Elem x = static_cast<Elem>(xi);
    if (done.test(x) || !normalizes(g, x, h)) continue;
    // Order of xH in N(H)/H.
    std::uint64_t m = 1;
    std::vector<Elem> powers = {x};
    for (Elem y = x; !h.contains(y);) {
      y = g.mul(y, x);
      if (!h.contains(y)) powers.push_back(y);
      ++m;
    }
    if (!is_prime(m)) {
      for (Elem t : members) done.set(g.mul(x, t));
      continue;
    }
    Bits k = h.members();
    for (Elem xp : powers)
      for (Elem t : members) {
        const Elem y = g.mul(xp, t);
        k.set(y);
        done.set(y);
      }
    std::vector<Elem> gens = h.generators();
    gens.push_back(x);
    out.emplace_back(g, std::move(k), std::move(gens));
  }
  return out;
}

SubgroupLattice cyclic_extension(const Group& g) {
  Registry all;
  std::map<std::size_t, std::vector<std::size_t>> pending;
  all.insert(trivial_subgroup(g));
  pending[1].push_back(0);
  while (!pending.empty()) {
    const std::vector<std::size_t> layer = std::move(pending.begin()->second);
    pending.erase(pending.begin());
    std::vector<std::vector<Subgroup>> found(layer.size());
#pragma omp parallel for schedule(dynamic, 1)
    for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(layer.size()); ++i)
      found[i] = prime_index_overgroups(all.list()[layer[i]]);
    for (auto& batch : found)
      for (auto& k : batch) {
        const std::size_t order = k.order();
        if (all.insert(std::move(k))) pending[order].push_back(all.list().size() - 1);
      }
  }
  return SubgroupLattice::from(std::move(all.list()));
}

}  // namespace

std::optional<std::size_t> SubgroupLattice::index_of(const Bits& members) const {
  auto range = index_.equal_range(hash_bits(members));
  for (auto it = range.first; it != range.second; ++it)
    if (all[it->second].members() == members) return it->second;
  return std::nullopt;
}

SubgroupLattice SubgroupLattice::from(std::vector<Subgroup> subgroups) {
  SubgroupLattice lat;
  std::sort(subgroups.begin(), subgroups.end(), lattice_less);
  subgroups.erase(std::unique(subgroups.begin(), subgroups.end()), subgroups.end());
  lat.all = std::move(subgroups);
  for (std::size_t i = 0; i < lat.all.size(); ++i) {
    lat.by_order[lat.all[i].order()].push_back(i);
    lat.index_.emplace(hash_bits(lat.all[i].members()), i);
  }
  // Every proper subgroup lies in a maximal one of larger order, so a
  // descending scan only has to test the maximal subgroups found so far.
  for (std::size_t i = lat.all.size(); i-- > 0;) {
    const Subgroup& h = lat.all[i];
    if (h.is_whole()) continue;
    bool covered = false;
    for (std::size_t m : lat.maximal)
      if (lat.all[m].order() > h.order() && h.is_subset_of(lat.all[m])) {
        covered = true;
        break;
      }
    if (!covered) lat.maximal.push_back(i);
  }
  std::sort(lat.maximal.begin(), lat.maximal.end());
  return lat;
}

SubgroupLattice all_subgroups_join_closure(const Group& g) {
  check_cap(g.order(), "subgroup lattice");
  Registry all;
  all.insert(trivial_subgroup(g));
  std::vector<Subgroup> cyclic;
  for (Elem x : cyclic_generators(g)) {
    const Elem one[1] = {x};
    Subgroup c = closure(g, one);
    if (all.insert(c)) cyclic.push_back(std::move(c));
  }
  std::vector<Subgroup> frontier = cyclic;
  while (!frontier.empty()) {
    std::stable_sort(frontier.begin(), frontier.end(),
                     [](const Subgroup& a, const Subgroup& b) { return a.order() < b.order(); });
    std::vector<Subgroup> next;
    for (const Subgroup& h : frontier)
      for (const Subgroup& c : cyclic) {
        if (c.is_subset_of(h)) continue;
        Subgroup k = join(h, c);
        if (all.insert(k)) next.push_back(std::move(k));
      }
    frontier = std::move(next);
  }
  return SubgroupLattice::from(std::move(all.list()));
}

const SubgroupLattice& all_subgroups(const Group& g) {
  check_cap(g.order(), "subgroup lattice");
  return g.memo<SubgroupLattice>("lattice", [&] {
    return is_solvable(g) ? cyclic_extension(g) : all_subgroups_join_closure(g);
  });
}

std::vector<Subgroup> maximal_subgroups(const Group& g) {
  const auto& lat = all_subgroups(g);
  std::vector<Subgroup> out;
  for (std::size_t i : lat.maximal) out.push_back(lat.all[i]);
  return out;
}

Subgroup frattini_subgroup(const Group& g) {
  return g.memo<Subgroup>("frattini", [&] {
    if (g.order() == 1) return trivial_subgroup(g);
    const auto& lat = all_subgroups(g);
    Bits m(g.order());
    m.set();
    for (std::size_t i : lat.maximal) m &= lat.all[i].members();
    return subgroup_from_members(g, m);
  });
}

int generation_rank(const Group& g, int limit) {
  if (g.order() == 1) return 0;
  const std::vector<Elem> reps = cyclic_generators(g);
  std::vector<Subgroup> level = {trivial_subgroup(g)};
  for (int k = 1; k <= limit; ++k) {
    Registry next;
    for (const Subgroup& h : level)
      for (Elem x : reps) {
        if (h.contains(x)) continue;
        const Elem one[1] = {x};
        Subgroup grown = extend(h, one);
        if (grown.is_whole()) return k;
        next.insert(std::move(grown));
      }
    level = std::move(next.list());
  }
  return limit + 1;
}

int min_generators(const Group& g) {
  return g.memo<int>("min_generators", [&] {
    if (g.order() == 1) return 0;
    const Subgroup phi = frattini_subgroup(g);
    if (auto p = p_group_prime(g)) return log_base(g.order() / phi.order(), *p);
    const Quotient q = quotient_group(borrow(g), phi);
    return generation_rank(*q.group, log_base(q.group->order(), 2));
  });
}

Subgroup p_subgroup_frattini(const Subgroup& h) {
  const Group& g = h.parent();
  if (h.is_trivial()) return h;
  const auto p = p_group_prime(h);
  if (!p) throw PreconditionError("subgroup is not a p-group");
  const auto& gens = h.generators();
  std::vector<Elem> seeds;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    seeds.push_back(g.pow(gens[i], static_cast<std::int64_t>(*p)));
    for (std::size_t j = i + 1; j < gens.size(); ++j) seeds.push_back(g.comm(gens[i], gens[j]));
  }
  return normal_closure(closure(g, seeds), h);
}

int subgroup_rank(const Subgroup& h, int limit) {
  const Group& g = h.parent();
  if (h.is_trivial()) return 0;
  if (auto p = p_group_prime(h)) {
    const int d = log_base(h.order() / p_subgroup_frattini(h).order(), *p);
    return limit >= 0 && d > limit ? limit + 1 : d;
  }
  // Frattini subgroups of normal subgroups lie in Phi(H); a Sylow
  // subgroup is normal iff it holds every element of its prime power order.
  const auto& ords = element_orders(g);
  const std::vector<Elem> elems = h.elements();
  Subgroup x = trivial_subgroup(g);
  std::vector<std::uint64_t> primes = prime_factors(h.order());
  primes.erase(std::unique(primes.begin(), primes.end()), primes.end());
  for (std::uint64_t r : primes) {
    std::size_t part = 1;
    for (std::size_t m = h.order(); m % r == 0; m /= r) part *= r;
    Bits sylow(g.order());
    for (Elem e : elems)
      if (part % ords[e] == 0) sylow.set(e);
    if (sylow.count() != part) continue;
    x = join(x, p_subgroup_frattini(subgroup_from_members(g, sylow)));
  }
  std::vector<Elem> embedding;
  GroupPtr local = subgroup_as_group(h, &embedding);
  Bits xs(local->order());
  for (std::size_t i = 0; i < embedding.size(); ++i)
    if (x.contains(embedding[i])) xs.set(i);
  const Quotient q = quotient_group(local, subgroup_from_members(*local, xs));
  const int cap = limit >= 0 ? limit : log_base(q.group->order(), 2);
  return generation_rank(*q.group, cap);
}

const std::vector<int>& lattice_ranks(const Group& g) {
  return g.memo<std::vector<int>>("lattice_ranks", [&] {
    const auto& lat = all_subgroups(g);
    std::vector<int> ranks(lat.size());
#pragma omp parallel for schedule(dynamic, 4)
    for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(lat.size()); ++i)
      ranks[i] = subgroup_rank(lat.all[i]);
    return ranks;
  });
}

JumpSet jumps(const Group& g, const Subgroup& h) {
  const Series& s = lower_central_series(g);
  if (!s.reaches_trivial()) throw PreconditionError("jumps need a nilpotent group");
  JumpSet out{h, {}};
  for (std::size_t j = 0; j + 1 < s.terms.size(); ++j) {
    const auto here = (h.members() & s.terms[j].members()).count();
    const auto below = (h.members() & s.terms[j + 1].members()).count();
    if (here != below) out.jumps.push_back(static_cast<int>(j + 1));
  }
  return out;
}

}  // namespace maxpair
