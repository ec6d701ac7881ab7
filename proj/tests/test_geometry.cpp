// SPDX-License-Identifier: Apache-2.0
#include <cmath>
#include <numbers>
#include <stdexcept>

#include <doctest.h>

#include "ecaa/geometry.hpp"

using namespace ecaa;
using doctest::Approx;

namespace {
constexpr double pi = std::numbers::pi;
}

TEST_SUITE("geometry") {

TEST_CASE("ring_angle places elements uniformly") {
    CHECK(ring_angle(1, 12) == 0.0);
    CHECK(ring_angle(4, 12) == Approx(pi / 2).epsilon(1e-15));
    CHECK(ring_angle(7, 12) == Approx(pi).epsilon(1e-15));
    CHECK_THROWS_AS(ring_angle(0, 12), std::invalid_argument);
    CHECK_THROWS_AS(ring_angle(13, 12), std::invalid_argument);
}

TEST_CASE("ring_angle is strictly increasing and spans one turn") {
    for (int n_total : {2, 5, 12, 96}) {
        double prev = -1.0;
        for (int n = 1; n <= n_total; ++n) {
            const double a = ring_angle(n, n_total);
            CHECK(a > prev);
            CHECK(a >= 0.0);
            CHECK(a < 2 * pi);
            prev = a;
        }
        const double step = 2 * pi / n_total;
        CHECK(ring_angle(n_total, n_total) + step == Approx(2 * pi).epsilon(1e-14));
    }
}

TEST_CASE("minor axis from eccentricity") {
    CHECK(minor_from_eccentricity(1.15, AxisRatio{0.5}) == Approx(1.15 * std::sqrt(0.75)).epsilon(1e-15));
    CHECK(minor_from_eccentricity(1.15, AxisRatio{0.5}) == Approx(0.995929214).epsilon(1e-9));
    CHECK(minor_from_eccentricity(0.7, AxisRatio{0.0}) == 0.7);
    CHECK(minor_from_eccentricity(2.0, AxisRatio{0.8}) == Approx(1.2).epsilon(1e-15));
    CHECK_THROWS_AS(minor_from_eccentricity(1.0, AxisRatio{1.0}), std::invalid_argument);
    CHECK_THROWS_AS(minor_from_eccentricity(1.0, AxisRatio{1.5}), std::invalid_argument);
    CHECK_THROWS_AS(minor_from_eccentricity(-1.0, AxisRatio{0.5}), std::invalid_argument);
}

TEST_CASE("eccentricity round-trips to machine precision") {
    for (double e = 0.0; e <= 0.999; e += 0.037) {
        const double b = minor_from_eccentricity(1.3, AxisRatio{e});
        CHECK(eccentricity_from_axes(1.3, b).eccentricity == Approx(e).epsilon(1e-12));
    }
}

TEST_CASE("wavelength reporting") {
    CHECK(wavelength_m(305e6) == Approx(0.982926092).epsilon(1e-9));
    CHECK(wavelength_m(299792458.0) == 1.0);
    CHECK_THROWS_AS(wavelength_m(0.0), std::invalid_argument);
    CHECK_THROWS_AS(wavelength_m(-5.0), std::invalid_argument);
}

TEST_CASE("zero eccentricity makes a circular ring") {
    EcaaConfig config;
    config.a_major = 0.85;
    config.b_minor = minor_from_eccentricity(0.85, AxisRatio{0.0});
    for (int n = 1; n <= config.n_per_ring; ++n)
        CHECK(element_radius(config, n) == Approx(0.85).epsilon(1e-15));
}

TEST_CASE("config validation") {
    EcaaConfig config;  // defaults are the canonical setup
    CHECK_NOTHROW(config.validate());
    config.m_rings = 0;
    CHECK_THROWS_AS(config.validate(), std::invalid_argument);
    config = EcaaConfig{};
    config.dv = 0.0;
    CHECK_THROWS_AS(config.validate(), std::invalid_argument);
    config = EcaaConfig{};
    config.b_minor = -0.1;
    CHECK_THROWS_AS(config.validate(), std::invalid_argument);
}

}  // TEST_SUITE
