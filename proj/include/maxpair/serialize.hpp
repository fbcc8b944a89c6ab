#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include <json.hpp>

#include "maxpair/actions.hpp"
#include "maxpair/group.hpp"
#include "maxpair/group_map.hpp"
#include "maxpair/maximality.hpp"

namespace maxpair {

using Json = nlohmann::ordered_json;

inline constexpr std::string_view kGroupSchema = "maxpair-group-v1";
inline constexpr std::string_view kDmaxSchema = "maxpair-dmax-v1";
inline constexpr std::string_view kPairSchema = "maxpair-pair-v1";

/// {schema, label, n, gens, mul} with the multiplication table row-major.
Json group_to_json(const Group& g);
/// Inverse of group_to_json; re-verifies the table.  Throws ParseError.
GroupPtr group_from_json(const Json& doc);

/// Presentation text for presentation-born groups, group JSON otherwise.
std::string serialize_group(const Group& g);
/// Reads either format, deciding by the first non-blank character.
GroupPtr read_group_file(const std::filesystem::path& path);

Json subgroup_to_json(const Subgroup& h);
Json character_to_json(const CharacterValue& c);

/// Reports carry their timings in a separate top-level "timings" object.
Json dmax_to_json(const MaximalityReport& r);
Json pair_to_json(const std::string& label, const PairCheckReport& r,
                  const StructuralReport* structural = nullptr);

/// Parses "g1->g1^2 g4, g2->g2^2 g4" into generator/image pairs and extends
/// them to an endomorphism.  Tokens: g<k>[^n] names the k-th pc generator
/// (the k-th listed generator for construction-born groups), #<i> is element
/// index i, and 1 is the identity.
GroupMap parse_automorphism(const GroupPtr& g, std::string_view text);

}  // namespace maxpair
