#include "maxpair/build.hpp"

#include <algorithm>

#include "maxpair/engine.hpp"
#include "maxpair/error.hpp"
#include "maxpair/kernels.hpp"

namespace maxpair {

namespace {

std::string describe(const kernels::Triple& t) {
  return "(" + std::to_string(t[0]) + " * " + std::to_string(t[1]) + ") * " +
         std::to_string(t[2]) + " differs from " + std::to_string(t[0]) + " * (" +
         std::to_string(t[1]) + " * " + std::to_string(t[2]) + ")";
}

std::vector<Elem> all_elements(std::size_t n) {
  std::vector<Elem> out(n);
  for (std::size_t x = 0; x < n; ++x) out[x] = static_cast<Elem>(x);
  return out;
}

std::optional<kernels::Triple> associativity_failure(const std::vector<Elem>& table,
                                                     std::size_t n,
                                                     const std::vector<Elem>& gens) {
  if (n <= kFullAssociativityLimit) return kernels::find_nonassociative(table, n, all_elements(n));
  return kernels::find_nonassociative(table, n, gens);
}

}  // namespace

std::vector<Elem> pc_generator_elements(const Group& g) {
  if (!g.presentation()) throw PreconditionError("group '" + g.label() + "' has no pc presentation");
  const std::size_t m = g.presentation()->generator_count();
  std::vector<Elem> out;
  for (std::size_t k = 0; k < m; ++k) {
    ExponentVector v(m, 0);
    v[k] = 1;
    out.push_back(g.from_exponents(v));
  }
  return out;
}

GroupPtr build_group(const PcPresentation& pres) {
  const std::size_t n = pres.order();
  check_cap(n, "presentation '" + pres.name + "'");
  std::vector<Elem> table = kernels::build_table(pres);

  // Unit exponent vectors; g_1 is the most significant digit.
  std::vector<Elem> gens(pres.generator_count());
  std::size_t stride = 1;
  for (std::size_t k = gens.size(); k-- > 0;) {
    gens[k] = static_cast<Elem>(stride);
    stride *= static_cast<std::size_t>(pres.rel_orders[k]);
  }

  if (auto bad = associativity_failure(table, n, gens))
    throw InconsistentPresentation("presentation '" + pres.name +
                                   "' is inconsistent: " + describe(*bad));
  try {
    return std::make_shared<const Group>(pres.name, n, std::move(table), std::move(gens), pres);
  } catch (const PreconditionError& e) {
    throw InconsistentPresentation("presentation '" + pres.name + "' is inconsistent: " +
                                   e.what());
  }
}

GroupPtr group_from_table(std::string label, std::size_t order, std::vector<Elem> table,
                          std::vector<Elem> gens) {
  check_cap(order, "group '" + label + "'");
  if (table.size() != order * order) throw PreconditionError("multiplication table has wrong size");
  for (Elem x : table)
    if (x >= order) throw PreconditionError("table entry out of range");
  if (auto bad = associativity_failure(table, order, gens))
    throw PreconditionError("table is not associative: " + describe(*bad));
  auto g = std::make_shared<const Group>(std::move(label), order, std::move(table), std::move(gens));
  if (whole_group(*g).order() != order)
    throw PreconditionError("listed generators do not generate the group");
  return g;
}

GroupPtr subgroup_as_group(const Subgroup& h, std::vector<Elem>* embedding) {
  const Group& g = h.parent();
  std::vector<Elem> elems = h.elements();
  const std::size_t k = elems.size();
  std::vector<Elem> local(g.order(), 0);
  for (std::size_t i = 0; i < k; ++i) local[elems[i]] = static_cast<Elem>(i);
  std::vector<Elem> table(k * k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) table[i * k + j] = local[g.mul(elems[i], elems[j])];
  std::vector<Elem> gens;
  for (Elem x : h.generators()) gens.push_back(local[x]);
  auto sub = std::make_shared<const Group>(
      "subgroup(" + g.label() + "," + std::to_string(k) + ")", k, std::move(table), std::move(gens));
  if (embedding) *embedding = std::move(elems);
  return sub;
}

}  // namespace maxpair
