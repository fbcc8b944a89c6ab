#pragma once

// Data-parallel kernels.  Each OpenMP kernel has a serial counterpart that
// computes the same result by the most direct route; tests compare the two
// and the benchmark target times them against each other.

#include <array>
#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "maxpair/group.hpp"
#include "maxpair/presentation.hpp"

namespace maxpair::kernels {

/// Row-major multiplication table of the presented group.  Right
/// multiplication by each generator is collected once per element, then
/// every product is assembled from those tables.
std::vector<Elem> build_table(const PcPresentation& pres);

/// Reference: every product collected directly from the concatenated
/// normal-form words.
std::vector<Elem> build_table_serial(const PcPresentation& pres);

using Triple = std::array<Elem, 3>;

/// First (a, b, c) in (a, b-index, c) order with (ab)c != a(bc), where b
/// ranges over `middles` and a, c over all elements.
std::optional<Triple> find_nonassociative(std::span<const Elem> table, std::size_t n,
                                          std::span<const Elem> middles);
std::optional<Triple> find_nonassociative_serial(std::span<const Elem> table, std::size_t n,
                                                 std::span<const Elem> middles);

}  // namespace maxpair::kernels
