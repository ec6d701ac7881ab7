// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <span>
#include <string>

namespace ecaa {

/// Rectangular dB-versus-angle plot as a self-contained SVG document with one
/// polyline vertex per sample. Values below floor_db are clamped to the floor.
std::string render_rect_plot(std::span<const double> angles_deg,
                             std::span<const double> db_samples,
                             const std::string& title,
                             double floor_db = -60.0);

/// Polar magnitude plot; radius is the sample magnitude normalized to the
/// maximum, angle is the sample angle.
std::string render_polar_plot(std::span<const double> angles_deg,
                              std::span<const double> magnitudes,
                              const std::string& title);

}  // namespace ecaa
