// SPDX-License-Identifier: Apache-2.0
#include "ecaa/geometry.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace ecaa {

void EcaaConfig::validate() const {
    if (m_rings < 1)
        throw std::invalid_argument("m_rings must be >= 1, got " + std::to_string(m_rings));
    if (n_per_ring < 1)
        throw std::invalid_argument("n_per_ring must be >= 1, got " + std::to_string(n_per_ring));
    if (!(a_major > 0.0))
        throw std::invalid_argument("a_major must be > 0");
    if (!(b_minor > 0.0))
        throw std::invalid_argument("b_minor must be > 0");
    if (!(dv > 0.0))
        throw std::invalid_argument("dv must be > 0");
    if (!(freq_hz > 0.0))
        throw std::invalid_argument("freq_hz must be > 0");
}

double ring_angle(int n, int n_per_ring) {
    if (n_per_ring < 1)
        throw std::invalid_argument("n_per_ring must be >= 1");
    if (n < 1 || n > n_per_ring)
        throw std::invalid_argument("element index " + std::to_string(n) + " out of range [1, " +
                                    std::to_string(n_per_ring) + "]");
    return 2.0 * std::numbers::pi * static_cast<double>(n - 1) / static_cast<double>(n_per_ring);
}

double minor_from_eccentricity(double a_major, AxisRatio e) {
    if (!(a_major > 0.0))
        throw std::invalid_argument("a_major must be > 0");
    if (!(e.eccentricity >= 0.0) || e.eccentricity >= 1.0)
        throw std::invalid_argument("eccentricity must lie in [0, 1)");
    return a_major * std::sqrt(1.0 - e.eccentricity * e.eccentricity);
}

AxisRatio eccentricity_from_axes(double a_major, double b_minor) {
    if (!(a_major > 0.0) || !(b_minor > 0.0))
        throw std::invalid_argument("axes must be > 0");
    if (b_minor > a_major)
        throw std::invalid_argument("eccentricity undefined for b_minor > a_major");
    const double ratio = b_minor / a_major;
    return AxisRatio{std::sqrt(std::max(0.0, 1.0 - ratio * ratio))};
}

double wavelength_m(double freq_hz) {
    if (!(freq_hz > 0.0))
        throw std::invalid_argument("frequency must be > 0");
    return kSpeedOfLight / freq_hz;
}

double element_radius(const EcaaConfig& config, int n) {
    const double phi_n = ring_angle(n, config.n_per_ring);
    const double x = config.a_major * std::cos(phi_n);
    const double y = config.b_minor * std::sin(phi_n);
    return std::hypot(x, y);
}

}  // namespace ecaa
