// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

namespace ecaa {

/// Scalar summary of one pattern cut. sll_db is relative to the main-lobe
/// peak (non-positive); directivity_dbi is only filled for full-sphere
/// patterns, never by extract_metrics.
struct PatternMetrics {
    double peak_angle = 0.0;   // degrees
    double sll_db = 0.0;
    double fnbw_deg = 0.0;
    double hpbw_deg = 0.0;
    std::optional<double> directivity_dbi;
    bool grating_lobe = false;  // a side lobe within 0.5 dB of the peak
};

/// Field-magnitude normalization: 20*log10(s / max(s)). The peak maps to
/// exactly 0 dB; exact zeros map to a -200 dB floor. Throws if no sample is
/// strictly positive.
std::vector<double> normalize_db(std::span<const double> samples);

/// Extracts peak direction, SLL, FNBW, and HPBW from a sampled cut.
///
/// The first nulls are the strict local minima nearest the peak on each side
/// (plateaus count once, at the sample nearest the peak). SLL is the highest
/// sample outside the null-to-null interval, relative to the peak. The -3 dB
/// crossings are located by linear interpolation.
///
/// Throws std::domain_error "peak-at-edge" when the global maximum sits on a
/// boundary sample and "no-sidelobe-structure: <side>" when a side has no
/// local minimum.
PatternMetrics extract_metrics(std::span<const double> angles_deg,
                               std::span<const double> db_samples);

/// Directivity proxy 4*pi*max|F|^2 / integral(|F|^2 sin(theta)) over the full
/// sphere, by trapezoidal quadrature. theta_deg must cover [0, 180] and
/// phi_deg must cover a full turn, both at 1 degree resolution or finer.
/// magnitudes is row-major theta x phi. Returns dBi.
double directivity_estimate(std::span<const double> theta_deg,
                            std::span<const double> phi_deg,
                            std::span<const double> magnitudes);

/// Structured-text record, one "name: value" line per field.
std::string metrics_to_text(const PatternMetrics& metrics);

}  // namespace ecaa
