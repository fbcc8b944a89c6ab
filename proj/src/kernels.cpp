#include "maxpair/kernels.hpp"

#include <atomic>
#include <limits>

namespace maxpair::kernels {

namespace {

std::vector<std::size_t> strides(const PcPresentation& pres) {
  const std::size_t m = pres.generator_count();
  std::vector<std::size_t> s(m, 1);
  for (std::size_t k = m; k-- > 1;) s[k - 1] = s[k] * static_cast<std::size_t>(pres.rel_orders[k]);
  return s;
}

ExponentVector decode(std::size_t x, const PcPresentation& pres) {
  const auto& orders = pres.rel_orders;
  ExponentVector v(orders.size(), 0);
  for (std::size_t k = orders.size(); k-- > 0;) {
    v[k] = static_cast<int>(x % orders[k]);
    x /= orders[k];
  }
  return v;
}

Elem encode(const ExponentVector& v, const std::vector<std::size_t>& stride) {
  std::size_t x = 0;
  for (std::size_t k = 0; k < v.size(); ++k) x += stride[k] * static_cast<std::size_t>(v[k]);
  return static_cast<Elem>(x);
}

}  // namespace

std::vector<Elem> build_table(const PcPresentation& pres) {
  const std::size_t n = pres.order();
  const std::size_t m = pres.generator_count();
  const auto stride = strides(pres);
  Collector collector(pres);

  std::vector<std::vector<Elem>> right(m, std::vector<Elem>(n));
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t xi = 0; xi < static_cast<std::ptrdiff_t>(n); ++xi) {
    const ExponentVector base = decode(static_cast<std::size_t>(xi), pres);
    for (std::size_t k = 0; k < m; ++k) {
      ExponentVector v = base;
      collector.multiply_generator(v, static_cast<int>(k));
      right[k][xi] = encode(v, stride);
    }
  }

  std::vector<ExponentVector> exps(n);
  for (std::size_t y = 0; y < n; ++y) exps[y] = decode(y, pres);

  std::vector<Elem> table(n * n);
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t xi = 0; xi < static_cast<std::ptrdiff_t>(n); ++xi) {
    const std::size_t x = static_cast<std::size_t>(xi);
    Elem* row = table.data() + x * n;
    for (std::size_t y = 0; y < n; ++y) {
      Elem cur = static_cast<Elem>(x);
      const ExponentVector& e = exps[y];
      for (std::size_t k = 0; k < m; ++k)
        for (int r = 0; r < e[k]; ++r) cur = right[k][cur];
      row[y] = cur;
    }
  }
  return table;
}

std::vector<Elem> build_table_serial(const PcPresentation& pres) {
  const std::size_t n = pres.order();
  const auto stride = strides(pres);
  Collector collector(pres);
  std::vector<Word> words(n);
  for (std::size_t x = 0; x < n; ++x) words[x] = word_from_exponents(decode(x, pres));
  std::vector<Elem> table(n * n);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      Word w = words[x];
      w.factors.insert(w.factors.end(), words[y].factors.begin(), words[y].factors.end());
      table[x * n + y] = encode(collector.collect(w), stride);
    }
  return table;
}

std::optional<Triple> find_nonassociative(std::span<const Elem> table, std::size_t n,
                                          std::span<const Elem> middles) {
  // Smallest failing a wins so the witness does not depend on scheduling.
  std::atomic<std::size_t> best{std::numeric_limits<std::size_t>::max()};
#pragma omp parallel for schedule(dynamic, 8)
  for (std::ptrdiff_t ai = 0; ai < static_cast<std::ptrdiff_t>(n); ++ai) {
    const std::size_t a = static_cast<std::size_t>(ai);
    if (a >= best.load(std::memory_order_relaxed)) continue;
    const Elem* ra = table.data() + a * n;
    bool bad = false;
    for (Elem b : middles) {
      const Elem* rab = table.data() + static_cast<std::size_t>(ra[b]) * n;
      const Elem* rb = table.data() + static_cast<std::size_t>(b) * n;
      for (std::size_t c = 0; c < n; ++c)
        if (rab[c] != ra[rb[c]]) {
          bad = true;
          break;
        }
      if (bad) break;
    }
    if (bad) {
      std::size_t cur = best.load();
      while (a < cur && !best.compare_exchange_weak(cur, a)) {
      }
    }
  }
  if (best.load() == std::numeric_limits<std::size_t>::max()) return std::nullopt;
  // Recover the full witness for the winning row serially.
  const std::size_t a = best.load();
  for (Elem b : middles)
    for (std::size_t c = 0; c < n; ++c)
      if (table[table[a * n + b] * n + c] != table[a * n + table[b * n + c]])
        return Triple{static_cast<Elem>(a), b, static_cast<Elem>(c)};
  return std::nullopt;
}

std::optional<Triple> find_nonassociative_serial(std::span<const Elem> table, std::size_t n,
                                                 std::span<const Elem> middles) {
  for (std::size_t a = 0; a < n; ++a)
    for (Elem b : middles)
      for (std::size_t c = 0; c < n; ++c) {
        const Elem left = table[table[a * n + b] * n + c];
        const Elem right = table[a * n + table[b * n + c]];
        if (left != right) return Triple{static_cast<Elem>(a), b, static_cast<Elem>(c)};
      }
  return std::nullopt;
}

}  // namespace maxpair::kernels
