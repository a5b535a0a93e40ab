#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "schur/constructions.hpp"
#include "schur/isomorphism.hpp"
#include "schur/sring.hpp"
#include "schur/wl.hpp"

namespace schur {

/// {"group": "<spec>", "classes": [[...], ...]} with classes in canonical order.
nlohmann::ordered_json to_json(const SRing& ring);

/// Parses and validates the interchange object. Malformed input throws
/// ParseError; invalid partitions throw the usual validation errors.
SRing sring_from_json(const nlohmann::json& j);
SRing parse_sring(const std::string& text);
SRing read_sring_file(const std::string& path);
void write_sring_file(const std::string& path, const SRing& ring);

nlohmann::ordered_json to_json(const Subgroup& s);
nlohmann::ordered_json to_json(const AlgebraicIso& phi);
nlohmann::ordered_json to_json(const CombinatorialIso& f);
nlohmann::ordered_json to_json(const SeparabilityReport& r, bool include_timing = false);
nlohmann::ordered_json to_json(const Classification& c);
nlohmann::ordered_json to_json(const WlExperimentReport& r, bool include_timing = false);
nlohmann::ordered_json to_json(const StableColoring& s);

/// Comma-separated element indices, e.g. "1,3"; empty string is the empty set.
ElementSet parse_element_list(const std::string& text, std::size_t universe);

/// Class list rendering used by text reports: {0} {1,3} {2}
std::string class_list_text(const SRing& ring);

}  // namespace schur
