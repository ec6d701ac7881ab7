// SPDX-License-Identifier: Apache-2.0
#include "ecaa/hyperbeam.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace ecaa {

double sum_beam(std::complex<double> left, std::complex<double> right) {
    return std::abs(left) + std::abs(right);
}

double difference_beam(std::complex<double> left, std::complex<double> right) {
    return std::abs(left - right);
}

double hyper_beam(std::complex<double> left, std::complex<double> right, double exponent) {
    if (!(exponent > 0.0))
        throw std::invalid_argument("hyper exponent must be > 0");
    const double s = sum_beam(left, right);
    const double d = difference_beam(left, right);
    if (!(s > 0.0))
        return 0.0;
    if (d <= 0.0)
        return s;              // difference null: hyper equals the sum beam exactly
    if (d >= s)
        return 0.0;            // half beams fully out of phase: legitimate null
    if (exponent == 1.0)
        return s - d;
    if (exponent < 0.25) {
        // s^r - d^r cancels catastrophically near nulls for small r; work with
        // the ratio in the log domain instead.
        const double t = std::exp(exponent * std::log(d / s));
        if (t >= 1.0)
            return 0.0;
        return s * std::exp(std::log1p(-t) / exponent);
    }
    const double radicand = std::pow(s, exponent) - std::pow(d, exponent);
    if (radicand <= 0.0)
        return 0.0;
    return std::min(std::pow(radicand, 1.0 / exponent), s);
}

BeamSet compose_beamset(const PatternCut& cut, double exponent) {
    if (cut.samples.empty())
        throw std::invalid_argument("cannot compose beams over an empty cut");
    if (!cut.has_half_beams)
        throw std::invalid_argument("beam composition requires half beams (even n_per_ring)");
    if (!(exponent > 0.0))
        throw std::invalid_argument("hyper exponent must be > 0");

    BeamSet set;
    set.grid = cut.grid;
    set.plane = cut.plane;
    set.exponent = exponent;
    set.grating_advisory = exponent < 0.1;
    const std::size_t n = cut.samples.size();
    set.left.reserve(n);
    set.right.reserve(n);
    set.sum.reserve(n);
    set.difference.reserve(n);
    set.hyper.reserve(n);
    for (const FieldSample& s : cut.samples) {
        set.left.push_back(s.left);
        set.right.push_back(s.right);
        const double sum = sum_beam(s.left, s.right);
        set.sum.push_back(sum);
        set.difference.push_back(std::min(difference_beam(s.left, s.right), sum));
        set.hyper.push_back(hyper_beam(s.left, s.right, exponent));
    }
    return set;
}

}  // namespace ecaa
