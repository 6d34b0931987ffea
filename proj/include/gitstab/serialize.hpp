#pragma once

#include <string>
#include <utility>
#include <vector>

#include "gitstab/pipeline.hpp"

namespace gitstab {

// Canonical JSON: sorted keys, two-space indent, LF line endings, rationals
// as "p/q" strings, never floats. Byte-stable across runs and thread counts.

std::string report_to_json(const StabilityReport& report);
StabilityReport report_from_json(const std::string& text);
std::string report_to_text(const StabilityReport& report);
std::string report_to_csv(const StabilityReport& report);

std::string fundamental_to_json(const std::vector<OneParamSubgroup>& fund);
std::string fundamental_to_text(const SpaceSignature& sig,
                                const std::vector<OneParamSubgroup>& fund);
std::string fundamental_to_csv(const std::vector<OneParamSubgroup>& fund);

std::string families_to_json(const StabilityReport& report);
std::string families_to_text(const StabilityReport& report);
std::string families_to_csv(const StabilityReport& report);

std::string annihilators_to_json(const StabilityReport& report);
std::string annihilators_to_text(const StabilityReport& report);
std::string annihilators_to_csv(const StabilityReport& report);

std::string centroid_to_json(const SpaceSignature& sig);
std::string centroid_to_text(const SpaceSignature& sig);
std::string centroid_to_csv(const SpaceSignature& sig);

std::string check_to_json(const SupportCheck& check);
std::string check_to_text(const SupportCheck& check);
std::string check_to_csv(const SupportCheck& check);

/// Support files: {"dims":[...],"degrees":[...],"support":[[exponents]...]}.
std::pair<SpaceSignature, std::vector<ExponentVector>> parse_support_file(
    const std::string& text);
std::string support_file_text(const SpaceSignature& sig,
                              const std::vector<ExponentVector>& support);

std::string rat_pretty(const Rat& r);

}  // namespace gitstab
