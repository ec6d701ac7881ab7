// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "ecaa/fields.hpp"
#include "ecaa/geometry.hpp"

namespace ecaa {

/// Filesystem failure (unreadable input, unwritable output); carries the path.
struct IoError : std::runtime_error {
    explicit IoError(const std::string& message) : std::runtime_error(message) {}
};

/// Malformed data-file content (bad header, missing column, empty file).
struct FormatError : std::runtime_error {
    explicit FormatError(const std::string& message) : std::runtime_error(message) {}
};

/// A complete run configuration: array geometry plus steering.
struct Scenario {
    EcaaConfig config;
    Steering steer;   // stored in radians; config files carry degrees
};

/// Parses the JSON config schema. Keys: m_rings, n_per_ring, a_major_wl,
/// exactly one of b_minor_wl | eccentricity, dv_wl, freq_hz, and optional
/// steer_theta_deg / steer_phi_deg (default 0). Unknown keys are rejected.
Scenario parse_scenario(const std::string& json_text);

/// parse_scenario over a file; throws IoError when unreadable.
Scenario load_scenario(const std::string& path);

/// Canonical serialization (b_minor_wl form); parse(serialize(s)) == s.
std::string scenario_to_json(const Scenario& scenario);

/// Applies "key=value" overrides on top of a config file's JSON before
/// interpretation. Setting b_minor_wl or eccentricity drops the sibling key.
Scenario parse_scenario_with_overrides(const std::string& json_text,
                                       const std::vector<std::string>& overrides);

}  // namespace ecaa
