// SPDX-License-Identifier: Apache-2.0
#include "ecaa/fields.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace ecaa {

namespace {

using cplx = std::complex<double>;

// The double sum factorizes into a vertical (ring-index) factor times a ring
// (element-index) factor because the excitation is separable. The half beams
// partition the ring factor only.
struct SeparableField {
    cplx vertical;    // sum over rings of A_m * exp(j (m-1)(k dv cos(theta) + pm))
    cplx ring_left;   // elements 1 .. N/2 (all of the ring when N is odd)
    cplx ring_right;  // elements N/2+1 .. N (zero when N is odd)
};

SeparableField evaluate(const EcaaConfig& config, const Excitation& exc,
                        const Steering& steer, const Direction& dir) {
    const SteeringPhases ph = steering_phases(config, steer);

    const double sin_theta = std::sin(dir.theta);
    const double cos_theta = std::cos(dir.theta);
    const double cos_phi = std::cos(dir.phi);
    const double sin_phi = std::sin(dir.phi);

    cplx vertical{0.0, 0.0};
    const double ring_step = kWaveNumber * config.dv * cos_theta + ph.pm;
    for (int m = 0; m < config.m_rings; ++m)
        vertical += exc.amp_ring(m) * std::polar(1.0, static_cast<double>(m) * ring_step);

    const int n = config.n_per_ring;
    const int half = n / 2;
    cplx left{0.0, 0.0};
    cplx right{0.0, 0.0};
    for (int i = 0; i < n; ++i) {
        const double phi_n = ring_angle(i + 1, n);
        const double path = config.a_major * std::cos(phi_n) * cos_phi +
                            config.b_minor * std::sin(phi_n) * sin_phi;
        const double phase = kWaveNumber * sin_theta * path + ph.pn[i];
        const cplx term = exc.amp_element(i) * std::polar(1.0, phase);
        if (n % 2 == 0 && i >= half)
            right += term;
        else
            left += term;
    }
    return {vertical, left, right};
}

}  // namespace

void Excitation::validate(const EcaaConfig& config) const {
    if (!ring_amp.empty() && static_cast<int>(ring_amp.size()) != config.m_rings)
        throw std::invalid_argument("ring_amp length must equal m_rings");
    if (!element_amp.empty() && static_cast<int>(element_amp.size()) != config.n_per_ring)
        throw std::invalid_argument("element_amp length must equal n_per_ring");
    for (double a : ring_amp)
        if (!(a >= 0.0)) throw std::invalid_argument("ring amplitudes must be >= 0");
    for (double a : element_amp)
        if (!(a >= 0.0)) throw std::invalid_argument("element amplitudes must be >= 0");
}

SteeringPhases steering_phases(const EcaaConfig& config, const Steering& steer) {
    config.validate();
    SteeringPhases ph;
    ph.pm = -kWaveNumber * config.dv * std::cos(steer.theta0);
    const double sin_theta0 = std::sin(steer.theta0);
    ph.pn.resize(config.n_per_ring);
    for (int i = 0; i < config.n_per_ring; ++i) {
        const double phi_n = ring_angle(i + 1, config.n_per_ring);
        ph.pn[i] = -kWaveNumber * sin_theta0 *
                   (config.a_major * std::cos(phi_n) * std::cos(steer.phi0) +
                    config.b_minor * std::sin(phi_n) * std::sin(steer.phi0));
    }
    return ph;
}

std::complex<double> array_factor(const EcaaConfig& config, const Excitation& exc,
                                  const Steering& steer, const Direction& dir) {
    config.validate();
    exc.validate(config);
    const SeparableField f = evaluate(config, exc, steer, dir);
    // Summing the half-beam products keeps left + right == af an identity.
    return f.vertical * f.ring_left + f.vertical * f.ring_right;
}

HalfBeams half_beams(const EcaaConfig& config, const Excitation& exc,
                     const Steering& steer, const Direction& dir) {
    config.validate();
    exc.validate(config);
    if (config.n_per_ring % 2 != 0)
        throw std::invalid_argument("half-beam split requires even n_per_ring, got " +
                                    std::to_string(config.n_per_ring));
    const SeparableField f = evaluate(config, exc, steer, dir);
    return {f.vertical * f.ring_left, f.vertical * f.ring_right};
}

AngleGrid make_grid(double start_deg, double stop_deg, double step_deg) {
    if (!(step_deg > 0.0))
        throw std::invalid_argument("grid step must be > 0");
    if (!(stop_deg > start_deg))
        throw std::invalid_argument("grid stop must exceed start");
    const auto count = static_cast<int>(std::lround((stop_deg - start_deg) / step_deg)) + 1;
    if (count < 2)
        throw std::invalid_argument("grid must contain at least 2 points");
    AngleGrid grid(count);
    for (int i = 0; i < count; ++i)
        grid[i] = start_deg + static_cast<double>(i) * step_deg;
    return grid;
}

PatternCut sample_cut(const EcaaConfig& config, const Excitation& exc,
                      const Steering& steer, const CutPlane& plane, const AngleGrid& grid) {
    config.validate();
    exc.validate(config);
    if (grid.size() < 2)
        throw std::invalid_argument("angle grid must contain at least 2 points");
    for (std::size_t i = 1; i < grid.size(); ++i)
        if (!(grid[i] > grid[i - 1]))
            throw std::invalid_argument("angle grid must be strictly increasing");

    const double deg = std::numbers::pi / 180.0;
    PatternCut cut;
    cut.grid = grid;
    cut.plane = plane;
    cut.has_half_beams = config.n_per_ring % 2 == 0;
    cut.samples.reserve(grid.size());
    for (double angle : grid) {
        Direction dir;
        if (plane.sweep == CutPlane::Axis::theta) {
            dir.theta = angle * deg;
            dir.phi = plane.fixed_deg * deg;
        } else {
            dir.theta = plane.fixed_deg * deg;
            dir.phi = angle * deg;
        }
        const SeparableField f = evaluate(config, exc, steer, dir);
        FieldSample s;
        s.left = f.vertical * f.ring_left;
        s.right = f.vertical * f.ring_right;
        s.af = s.left + s.right;
        cut.samples.push_back(s);
    }
    return cut;
}

}  // namespace ecaa
