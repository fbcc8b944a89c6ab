#pragma once

#include <string>
#include <vector>

#include "maxpair/group.hpp"
#include "maxpair/serialize.hpp"

namespace maxpair {

inline constexpr std::string_view kReproSchema = "maxpair-repro-v1";
inline constexpr std::string_view kSuiteVersion = "1.0";

struct ReproOptions {
  /// Keep records whose criterion number, tag or id prefix matches any
  /// filter; empty keeps everything.
  std::vector<std::string> filters;
  /// Records run concurrently on up to this many threads.
  int workers = 1;
};

/// One check inside a criterion, e.g. "3.heis-5".
struct CriterionRecord {
  std::string id;
  int criterion = 0;  // 0 for out-of-scope entries
  std::string description;
  std::string status;  // "pass", "fail" or "skip"
  Json measured;
  std::string detail;
  double seconds = 0;
};

struct CriterionSummary {
  int id = 0;
  std::string description;
  std::string anchor;
  std::vector<std::string> tags;
  std::string status;  // "pass" or "fail"
  std::size_t records = 0;
  double seconds = 0;
  double limit_seconds = 0;
  std::string limit_kind;  // "each" or "total"
};

struct ReproReport {
  std::string suite_version{kSuiteVersion};
  std::vector<CriterionSummary> criteria;
  std::vector<CriterionRecord> records;
  std::vector<CriterionRecord> skipped;
  bool overall_pass = false;
};

ReproReport reproduce(const ReproOptions& options = {});

/// Deterministic apart from the "timings" object.
Json repro_to_json(const ReproReport& report);

/// Runtime limit of a criterion and whether it applies to each record or
/// to their sum.
struct RuntimeLimit {
  double seconds = 0;
  bool per_record = false;
};
RuntimeLimit criterion_limit(int criterion);

/// Least k such that k elements generate g, by trying every k-subset of
/// cyclic subgroups in increasing k.
int min_generators_bruteforce(const Group& g);

}  // namespace maxpair
