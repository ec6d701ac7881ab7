// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <complex>
#include <vector>

#include "ecaa/fields.hpp"

namespace ecaa {

/// Co-sampled left/right half beams and the sum, difference, and hyper beams
/// derived from them for one exponent.
struct BeamSet {
    AngleGrid grid;
    CutPlane plane;
    std::vector<std::complex<double>> left;
    std::vector<std::complex<double>> right;
    std::vector<double> sum;         // |L| + |R|
    std::vector<double> difference;  // |L - R|, clamped to sum
    std::vector<double> hyper;       // (sum^r - diff^r)^(1/r)
    double exponent = 1.0;
    bool grating_advisory = false;   // set when exponent < 0.1
};

double sum_beam(std::complex<double> left, std::complex<double> right);
double difference_beam(std::complex<double> left, std::complex<double> right);

/// Hyper beam value (S^r - D^r)^(1/r) with S = |L|+|R|, D = |L-R|.
/// Always finite, non-negative, and <= S. Throws for exponent <= 0.
double hyper_beam(std::complex<double> left, std::complex<double> right, double exponent);

/// Element-wise beam composition over a sampled cut.
BeamSet compose_beamset(const PatternCut& cut, double exponent);

}  // namespace ecaa
