// SPDX-License-Identifier: Apache-2.0
#include "ecaa/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "ecaa/table_io.hpp"

namespace ecaa {

namespace {

constexpr double kDbFloor = -200.0;
constexpr double kHalfPowerDrop = 3.0;

// First strict local minimum outward from the peak. A plateau (run of equal
// samples lower than both flanks) counts once, at its sample nearest the peak.
int first_null_from_peak(std::span<const double> db, int peak, int step) {
    const int last = step > 0 ? static_cast<int>(db.size()) - 1 : 0;
    int i = peak + step;
    while (i != last) {
        if (db[i] < db[i - step]) {
            int j = i;
            while (j != last && db[j + step] == db[i])
                j += step;
            if (j == last)
                break;  // plateau runs into the boundary
            if (db[j + step] > db[i])
                return i;
            i = j + step;
        } else {
            i += step;
        }
    }
    throw std::domain_error(std::string("no-sidelobe-structure: ") +
                            (step > 0 ? "right" : "left"));
}

double half_power_crossing(std::span<const double> angles, std::span<const double> db,
                           int peak, int step, double level) {
    const int last = step > 0 ? static_cast<int>(db.size()) - 1 : 0;
    int i = peak;
    while (i != last && db[i + step] >= level)
        i += step;
    if (i == last)
        throw std::domain_error("no -3 dB crossing inside the cut");
    const double x0 = angles[i];
    const double x1 = angles[i + step];
    const double y0 = db[i];
    const double y1 = db[i + step];
    return x0 + (level - y0) * (x1 - x0) / (y1 - y0);
}

}  // namespace

std::vector<double> normalize_db(std::span<const double> samples) {
    if (samples.empty())
        throw std::invalid_argument("normalize_db: empty input");
    double peak = 0.0;
    for (double s : samples) {
        if (!(s >= 0.0))
            throw std::invalid_argument("normalize_db: samples must be finite and >= 0");
        peak = std::max(peak, s);
    }
    if (!(peak > 0.0))
        throw std::invalid_argument("normalize_db: all samples are zero");
    std::vector<double> out(samples.size());
    for (std::size_t i = 0; i < samples.size(); ++i)
        out[i] = samples[i] > 0.0 ? 20.0 * std::log10(samples[i] / peak) : kDbFloor;
    return out;
}

PatternMetrics extract_metrics(std::span<const double> angles_deg,
                               std::span<const double> db_samples) {
    if (angles_deg.size() != db_samples.size())
        throw std::invalid_argument("extract_metrics: angle/sample length mismatch");
    if (angles_deg.size() < 3)
        throw std::invalid_argument("extract_metrics: need at least 3 samples");

    const int count = static_cast<int>(db_samples.size());
    int peak = 0;
    for (int i = 1; i < count; ++i)
        if (db_samples[i] > db_samples[peak])
            peak = i;
    if (peak == 0 || peak == count - 1)
        throw std::domain_error("peak-at-edge");

    const int null_left = first_null_from_peak(db_samples, peak, -1);
    const int null_right = first_null_from_peak(db_samples, peak, +1);

    double exterior = kDbFloor;
    for (int i = 0; i <= null_left; ++i)
        exterior = std::max(exterior, db_samples[i]);
    for (int i = null_right; i < count; ++i)
        exterior = std::max(exterior, db_samples[i]);

    PatternMetrics metrics;
    metrics.peak_angle = angles_deg[peak];
    metrics.sll_db = exterior - db_samples[peak];
    metrics.fnbw_deg = angles_deg[null_right] - angles_deg[null_left];
    const double level = db_samples[peak] - kHalfPowerDrop;
    metrics.hpbw_deg = half_power_crossing(angles_deg, db_samples, peak, +1, level) -
                       half_power_crossing(angles_deg, db_samples, peak, -1, level);
    metrics.grating_lobe = metrics.sll_db >= -0.5;
    return metrics;
}

double directivity_estimate(std::span<const double> theta_deg,
                            std::span<const double> phi_deg,
                            std::span<const double> magnitudes) {
    const std::size_t nt = theta_deg.size();
    const std::size_t np = phi_deg.size();
    if (nt < 2 || np < 2)
        throw std::invalid_argument("directivity: grid too small");
    if (magnitudes.size() != nt * np)
        throw std::invalid_argument("directivity: magnitude size must be theta x phi");

    constexpr double tol = 1e-9;
    if (std::abs(theta_deg.front()) > tol || std::abs(theta_deg.back() - 180.0) > tol)
        throw std::invalid_argument("directivity: theta grid must cover [0, 180] degrees");
    for (std::size_t i = 1; i < nt; ++i)
        if (!(theta_deg[i] > theta_deg[i - 1]) || theta_deg[i] - theta_deg[i - 1] > 1.0 + tol)
            throw std::invalid_argument("directivity: theta steps must be increasing and <= 1 degree");
    for (std::size_t j = 1; j < np; ++j)
        if (!(phi_deg[j] > phi_deg[j - 1]) || phi_deg[j] - phi_deg[j - 1] > 1.0 + tol)
            throw std::invalid_argument("directivity: phi steps must be increasing and <= 1 degree");
    const double wrap_deg = phi_deg.front() + 360.0 - phi_deg.back();
    if (wrap_deg < -tol || wrap_deg > 1.0 + tol)
        throw std::invalid_argument("directivity: phi grid must cover a full turn");

    const double deg = std::numbers::pi / 180.0;
    double peak_power = 0.0;
    // phi integral per theta row; the row is periodic, so the segment from the
    // last phi back to the first (plus a turn) closes the contour.
    std::vector<double> row_integral(nt, 0.0);
    for (std::size_t i = 0; i < nt; ++i) {
        const double* row = magnitudes.data() + i * np;
        double acc = 0.0;
        for (std::size_t j = 0; j + 1 < np; ++j) {
            const double p0 = row[j] * row[j];
            const double p1 = row[j + 1] * row[j + 1];
            acc += 0.5 * (p0 + p1) * (phi_deg[j + 1] - phi_deg[j]) * deg;
        }
        if (wrap_deg > tol) {
            const double p0 = row[np - 1] * row[np - 1];
            const double p1 = row[0] * row[0];
            acc += 0.5 * (p0 + p1) * wrap_deg * deg;
        }
        row_integral[i] = acc * std::sin(theta_deg[i] * deg);
        for (std::size_t j = 0; j < np; ++j)
            peak_power = std::max(peak_power, row[j] * row[j]);
    }
    double integral = 0.0;
    for (std::size_t i = 0; i + 1 < nt; ++i)
        integral += 0.5 * (row_integral[i] + row_integral[i + 1]) *
                    (theta_deg[i + 1] - theta_deg[i]) * deg;

    if (!(peak_power > 0.0) || !(integral > 0.0))
        throw std::invalid_argument("directivity: pattern has no power");
    return 10.0 * std::log10(4.0 * std::numbers::pi * peak_power / integral);
}

std::string metrics_to_text(const PatternMetrics& metrics) {
    std::ostringstream out;
    out << "peak_angle: " << fmt_g9(metrics.peak_angle) << "\n";
    out << "sll_db: " << fmt_g9(metrics.sll_db) << "\n";
    out << "fnbw_deg: " << fmt_g9(metrics.fnbw_deg) << "\n";
    out << "hpbw_deg: " << fmt_g9(metrics.hpbw_deg) << "\n";
    if (metrics.directivity_dbi)
        out << "directivity_dbi: " << fmt_g9(*metrics.directivity_dbi) << "\n";
    out << "grating_lobe: " << (metrics.grating_lobe ? "true" : "false") << "\n";
    return out.str();
}

}  // namespace ecaa
