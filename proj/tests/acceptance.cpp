// Acceptance run: one line per criterion, exit status 1 if any fails.
// Limits are pinned here, independent of the table inside the library, so a
// change there cannot loosen this gate.

#include <chrono>
#include <cstdio>
#include <string>

#include "maxpair/repro.hpp"

namespace {

struct Pinned {
  int id;
  double limit_seconds;
  bool per_record;
  std::size_t min_records;  // guards against a filter silently matching less
};

// All checked quantities are exact integers or subgroup equalities, so
// there is no numeric tolerance; only wall time is bounded.
constexpr Pinned kPinned[] = {
    {1, 1.0, false, 6},   {2, 1.0, true, 4},     {3, 5.0, true, 7},   {4, 1.0, false, 2},
    {5, 30.0, false, 16}, {6, 300.0, false, 4},  {7, 60.0, false, 8}, {8, 300.0, false, 10},
    {9, 60.0, false, 39}, {10, 10.0, false, 6},
};

}  // namespace

int main() {
  bool all = true;
  for (const Pinned& c : kPinned) {
    const auto start = std::chrono::steady_clock::now();
    const maxpair::ReproReport report = maxpair::reproduce({.filters = {std::to_string(c.id)}});
    const double wall =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

    std::size_t n = 0, passed = 0;
    double total = 0, slowest = 0;
    std::string failures;
    for (const auto& r : report.records) {
      if (r.criterion != c.id) continue;
      ++n;
      total += r.seconds;
      slowest = std::max(slowest, r.seconds);
      if (r.status == "pass")
        ++passed;
      else
        failures += " " + r.id;
    }
    const double timed = c.per_record ? slowest : total;
    const bool ok = n >= c.min_records && passed == n && timed <= c.limit_seconds;
    all = all && ok;
    std::printf("criterion %2d: %s  %zu/%zu checks  %.3fs %s (limit %.0fs)  wall %.3fs%s%s\n", c.id,
                ok ? "PASS" : "FAIL", passed, n, timed, c.per_record ? "max" : "total",
                c.limit_seconds, wall, failures.empty() ? "" : "  failed:", failures.c_str());
  }
  std::printf("acceptance: %s\n", all ? "PASS" : "FAIL");
  return all ? 0 : 1;
}
