// SPDX-License-Identifier: Apache-2.0
#include "ecaa/config_io.hpp"

#include <cmath>
#include <numbers>
#include <set>
#include <sstream>

#include <json.hpp>

#include "ecaa/table_io.hpp"

namespace ecaa {

namespace {

using nlohmann::json;

constexpr double kDeg = std::numbers::pi / 180.0;

const std::set<std::string> kKnownKeys = {
    "m_rings",   "n_per_ring",      "a_major_wl",    "b_minor_wl", "eccentricity",
    "dv_wl",     "freq_hz",         "steer_theta_deg", "steer_phi_deg"};

double number_at(const json& doc, const std::string& key) {
    const auto& v = doc.at(key);
    if (!v.is_number())
        throw std::invalid_argument("config key '" + key + "' must be a number");
    return v.get<double>();
}

int integer_at(const json& doc, const std::string& key) {
    const double v = number_at(doc, key);
    if (v != std::floor(v))
        throw std::invalid_argument("config key '" + key + "' must be an integer");
    return static_cast<int>(v);
}

Scenario scenario_from_json(const json& doc) {
    if (!doc.is_object())
        throw std::invalid_argument("config must be a JSON object");
    for (const auto& item : doc.items())
        if (!kKnownKeys.contains(item.key()))
            throw std::invalid_argument("unknown config key '" + item.key() + "'");
    for (const char* key : {"m_rings", "n_per_ring", "a_major_wl", "dv_wl", "freq_hz"})
        if (!doc.contains(key))
            throw std::invalid_argument(std::string("missing config key '") + key + "'");

    const bool has_b = doc.contains("b_minor_wl");
    const bool has_e = doc.contains("eccentricity");
    if (has_b && has_e)
        throw std::invalid_argument("config must not specify both b_minor_wl and eccentricity");
    if (!has_b && !has_e)
        throw std::invalid_argument("config must specify exactly one of b_minor_wl or eccentricity");

    Scenario s;
    s.config.m_rings = integer_at(doc, "m_rings");
    s.config.n_per_ring = integer_at(doc, "n_per_ring");
    s.config.a_major = number_at(doc, "a_major_wl");
    s.config.dv = number_at(doc, "dv_wl");
    s.config.freq_hz = number_at(doc, "freq_hz");
    if (has_b)
        s.config.b_minor = number_at(doc, "b_minor_wl");
    else
        s.config.b_minor = minor_from_eccentricity(s.config.a_major,
                                                   AxisRatio{number_at(doc, "eccentricity")});
    s.steer.theta0 = (doc.contains("steer_theta_deg") ? number_at(doc, "steer_theta_deg") : 0.0) * kDeg;
    double phi_deg = doc.contains("steer_phi_deg") ? number_at(doc, "steer_phi_deg") : 0.0;
    phi_deg = std::fmod(std::fmod(phi_deg, 360.0) + 360.0, 360.0);  // into [0, 360)
    s.steer.phi0 = phi_deg * kDeg;
    s.config.validate();
    if (s.steer.theta0 < -std::numbers::pi / 2 || s.steer.theta0 > std::numbers::pi / 2)
        throw std::invalid_argument("steer_theta_deg must lie in [-90, 90]");
    return s;
}

json parse_json_text(const std::string& text) {
    json doc = json::parse(text, nullptr, false);
    if (doc.is_discarded())
        throw std::invalid_argument("config is not valid JSON");
    return doc;
}

}  // namespace

Scenario parse_scenario(const std::string& json_text) {
    return scenario_from_json(parse_json_text(json_text));
}

Scenario load_scenario(const std::string& path) {
    return parse_scenario(read_file(path));
}

std::string scenario_to_json(const Scenario& scenario) {
    json doc;
    doc["m_rings"] = scenario.config.m_rings;
    doc["n_per_ring"] = scenario.config.n_per_ring;
    doc["a_major_wl"] = scenario.config.a_major;
    doc["b_minor_wl"] = scenario.config.b_minor;
    doc["dv_wl"] = scenario.config.dv;
    doc["freq_hz"] = scenario.config.freq_hz;
    doc["steer_theta_deg"] = scenario.steer.theta0 / kDeg;
    doc["steer_phi_deg"] = scenario.steer.phi0 / kDeg;
    return doc.dump(2) + "\n";
}

Scenario parse_scenario_with_overrides(const std::string& json_text,
                                       const std::vector<std::string>& overrides) {
    json doc = parse_json_text(json_text);
    for (const std::string& item : overrides) {
        const auto eq = item.find('=');
        if (eq == std::string::npos || eq == 0)
            throw std::invalid_argument("override '" + item + "' is not of the form key=value");
        const std::string key = item.substr(0, eq);
        const std::string value = item.substr(eq + 1);
        if (!kKnownKeys.contains(key))
            throw std::invalid_argument("override references unknown config key '" + key + "'");
        json parsed = json::parse(value, nullptr, false);
        if (parsed.is_discarded() || !parsed.is_number())
            throw std::invalid_argument("override value '" + value + "' for '" + key +
                                        "' is not a number");
        if (key == "b_minor_wl")
            doc.erase("eccentricity");
        else if (key == "eccentricity")
            doc.erase("b_minor_wl");
        doc[key] = parsed;
    }
    return scenario_from_json(doc);
}

}  // namespace ecaa
