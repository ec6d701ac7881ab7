// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <numbers>

namespace ecaa {

// All lengths are expressed in wavelengths, so the wave number is a fixed 2*pi
// per wavelength and every pattern is frequency-invariant. The frequency is
// carried only so the physical wavelength can be reported.
inline constexpr double kWaveNumber = 2.0 * std::numbers::pi;
inline constexpr double kSpeedOfLight = 299792458.0;  // m/s

/// Geometric and electrical description of an elliptical-cylindrical array:
/// m_rings elliptical rings of n_per_ring elements each, stacked along z at
/// spacing dv, with semi-axes a_major (x) and b_minor (y).
struct EcaaConfig {
    int m_rings = 3;
    int n_per_ring = 12;
    double a_major = 1.15;   // wavelengths
    double b_minor = 0.99;   // wavelengths
    double dv = 0.5;         // wavelengths
    double freq_hz = 305e6;

    /// Throws std::invalid_argument if any field is out of range.
    void validate() const;
};

/// Ellipse eccentricity, valid in [0, 1).
struct AxisRatio {
    double eccentricity = 0.0;
};

/// Angular position of the n-th ring element (1-based): 2*pi*(n-1)/N.
double ring_angle(int n, int n_per_ring);

/// Minor axis from major axis and eccentricity: b = a*sqrt(1 - e^2).
double minor_from_eccentricity(double a_major, AxisRatio e);

/// Inverse of minor_from_eccentricity; requires b_minor <= a_major.
AxisRatio eccentricity_from_axes(double a_major, double b_minor);

/// Physical wavelength in meters, c / f.
double wavelength_m(double freq_hz);

/// Distance from the z-axis to element n: sqrt((a cos phi_n)^2 + (b sin phi_n)^2).
double element_radius(const EcaaConfig& config, int n);

}  // namespace ecaa
