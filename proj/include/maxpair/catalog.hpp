#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "maxpair/group.hpp"
#include "maxpair/group_map.hpp"
#include "maxpair/presentation.hpp"

namespace maxpair {

/// Family parameters; which ones apply depends on the entry.
struct CatalogParams {
  std::optional<std::uint64_t> p{};
  std::optional<std::uint64_t> q{};
  std::optional<std::uint64_t> m{};
  std::optional<std::uint64_t> k{};
  std::optional<int> t{};
};

struct ExpectedFingerprint {
  std::optional<std::size_t> order;
  std::optional<int> d;
  std::optional<int> nilpotency_class;  // -1 for non-nilpotent
  std::optional<std::uint64_t> exponent;
  std::optional<std::vector<std::size_t>> lower_central;
};

struct NamedAutomorphism {
  std::string name;
  GroupMap map;
  std::uint64_t order = 1;
};

struct CatalogGroup {
  std::string id;
  GroupPtr group;
  std::vector<NamedAutomorphism> automorphisms;
  ExpectedFingerprint expected;

  const NamedAutomorphism& automorphism(const std::string& name) const;
};

struct CatalogSummary {
  std::string id;
  std::string description;
  std::string parameters;  // empty for fixed entries
  bool extension_slot = false;
  /// Documented fingerprint of an extension slot; empty otherwise.
  ExpectedFingerprint slot_expected;
};

/// Every concrete entry, sorted by id.  Family ids ("heis", "ea", "c",
/// "p4", "p5-unique", "sd-ea", "sd-heis") are accepted by get_group with
/// explicit parameters but not listed.
std::vector<CatalogSummary> list_catalog();

/// Builds and fingerprint-checks an entry.  Concrete ids carry their
/// parameters ("heis-3", "ea-5-2", "c9"); family ids take them from
/// `params` ("heis" with p = 3).  Throws PreconditionError for unknown ids,
/// extension slots and out-of-range parameters, and Error on a fingerprint
/// mismatch.
CatalogGroup get_group(const std::string& id, const CatalogParams& params = {});

/// Presentation text of a presentation-backed entry.
std::optional<std::string> catalog_presentation(const std::string& id,
                                                const CatalogParams& params = {});

/// A group with an automorphism of prime order q, as used by the pair
/// acceptance checks.
struct CatalogPair {
  std::string group_id;
  std::string automorphism;
  std::uint64_t q = 2;
};

/// The rank-2 and rank-3 pairs named in the catalog.
std::vector<CatalogPair> catalog_pairs();

}  // namespace maxpair
