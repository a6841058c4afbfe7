#ifndef LIEMULT_CONFIG_HPP
#define LIEMULT_CONFIG_HPP

#include <string>
#include <tuple>
#include <vector>

#include "liemult/multiplicator.hpp"

namespace liemult {

/// One family line: element of U(L/I) and its lift to U(L), both as text.
struct FamilyEntryText {
    std::string element;
    std::string lift;
    bool operator==(const FamilyEntryText&) const = default;
};

/// Parsed form of an instance file; raw expression texts are preserved so
/// the report echo round-trips through the parser unchanged.
struct InstanceConfig {
    std::string name;
    std::string field_text = "Q";
    std::vector<std::string> alphabet_names;
    std::string quotient_kind_text = "structure_constants";
    std::vector<std::string> basis_names;
    // bracket lines: (basis name, basis name, right-hand side text)
    std::vector<std::tuple<std::string, std::string, std::string>> brackets;
    // projection lines: (generator name, right-hand side text)
    std::vector<std::pair<std::string, std::string>> projections;
    std::string alpha_text;
    std::vector<std::string> slot_names;
    std::vector<FamilyEntryText> family;
    int max_degree = kDefaultMaxDegree;
    int max_family = 0; // 0 = no cap

    bool operator==(const InstanceConfig&) const = default;

    /// Canonical serialization; parse_config_text inverts it exactly.
    std::string to_text() const;
};

InstanceConfig parse_config_text(const std::string& text);
InstanceConfig load_config_file(const std::string& path);

/// A fully built and validated instance.
struct Instance {
    InstanceConfig config;
    AlphabetPtr alphabet;
    PresentationPtr presentation;
    WitnessSpec witness;
};

/// Resolves every cross-reference and validates the presentation and the
/// witness data; throws with the offending location on any error.
Instance build_instance(const InstanceConfig& config);

} // namespace liemult

#endif
