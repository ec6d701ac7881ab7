// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <complex>
#include <vector>

#include "ecaa/geometry.hpp"

namespace ecaa {

/// Main-beam direction. Angles in radians; theta0 in [-pi/2, pi/2] measured
/// from the stacking (z) axis, phi0 in [0, 2*pi).
struct Steering {
    double theta0 = 0.0;
    double phi0 = 0.0;
};

/// Observation direction, same conventions as Steering.
struct Direction {
    double theta = 0.0;
    double phi = 0.0;
};

/// Separable per-ring / per-element excitation amplitudes. Empty vectors mean
/// uniform (all ones); non-empty vectors must match m_rings / n_per_ring.
struct Excitation {
    std::vector<double> ring_amp;
    std::vector<double> element_amp;

    double amp_ring(int m) const { return ring_amp.empty() ? 1.0 : ring_amp[m]; }
    double amp_element(int n) const { return element_amp.empty() ? 1.0 : element_amp[n]; }
    void validate(const EcaaConfig& config) const;
};

/// Per-ring and per-element steering phase shifts. The signs are chosen so the
/// total phase of every element vanishes at the steer direction, which pins
/// the array-factor maximum there.
struct SteeringPhases {
    double pm = 0.0;              // -k * dv * cos(theta0)
    std::vector<double> pn;       // -k sin(theta0) (a cos(phi_n) cos(phi0) + b sin(phi_n) sin(phi0))
};

SteeringPhases steering_phases(const EcaaConfig& config, const Steering& steer);

/// Full complex array factor at one direction.
std::complex<double> array_factor(const EcaaConfig& config, const Excitation& exc,
                                  const Steering& steer, const Direction& dir);

struct HalfBeams {
    std::complex<double> left;    // elements 1 .. N/2
    std::complex<double> right;   // elements N/2+1 .. N
};

/// Left/right half-array beams; left + right equals array_factor exactly.
/// Requires an even element count.
HalfBeams half_beams(const EcaaConfig& config, const Excitation& exc,
                     const Steering& steer, const Direction& dir);

/// Which angle a cut sweeps; the other one is held fixed.
struct CutPlane {
    enum class Axis { theta, phi };
    Axis sweep = Axis::theta;
    double fixed_deg = 0.0;
};

/// Strictly increasing sample angles in degrees.
using AngleGrid = std::vector<double>;

/// Inclusive [start, stop] grid with the given step; throws on degenerate input.
AngleGrid make_grid(double start_deg, double stop_deg, double step_deg);

struct FieldSample {
    std::complex<double> af;
    std::complex<double> left;
    std::complex<double> right;
};

/// One sampled pattern cut: the swept angles plus the complex array factor and
/// half beams per sample. Half beams are present only for even element counts.
struct PatternCut {
    AngleGrid grid;
    CutPlane plane;
    bool has_half_beams = false;
    std::vector<FieldSample> samples;
};

PatternCut sample_cut(const EcaaConfig& config, const Excitation& exc,
                      const Steering& steer, const CutPlane& plane, const AngleGrid& grid);

}  // namespace ecaa
