// SPDX-License-Identifier: Apache-2.0
#include "ecaa/svg_plot.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "ecaa/table_io.hpp"

namespace ecaa {

namespace {

std::string px(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.2f", v);
    return buf;
}

void svg_open(std::ostringstream& out, int width, int height) {
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\""
        << height << "\" viewBox=\"0 0 " << width << " " << height << "\">\n"
        << "<rect width=\"" << width << "\" height=\"" << height << "\" fill=\"white\"/>\n";
}

}  // namespace

std::string render_rect_plot(std::span<const double> angles_deg,
                             std::span<const double> db_samples,
                             const std::string& title, double floor_db) {
    if (angles_deg.size() != db_samples.size() || angles_deg.size() < 2)
        throw std::invalid_argument("rect plot needs matching angle/sample arrays of >= 2 points");

    const int width = 800;
    const int height = 500;
    const double left = 70, right = 20, top = 40, bottom = 50;
    const double plot_w = width - left - right;
    const double plot_h = height - top - bottom;

    const double x_min = angles_deg.front();
    const double x_max = angles_deg.back();
    double y_max = floor_db;
    for (double v : db_samples)
        y_max = std::max(y_max, v);
    y_max = std::max(0.0, std::ceil(y_max / 10.0) * 10.0);
    const double y_min = floor_db;

    const auto x_of = [&](double a) { return left + (a - x_min) / (x_max - x_min) * plot_w; };
    const auto y_of = [&](double db) {
        const double clamped = std::clamp(db, y_min, y_max);
        return top + (y_max - clamped) / (y_max - y_min) * plot_h;
    };

    std::ostringstream out;
    svg_open(out, width, height);
    out << "<text x=\"" << width / 2 << "\" y=\"24\" text-anchor=\"middle\" font-family=\"sans-serif\" "
           "font-size=\"15\">" << title << "</text>\n";
    out << "<rect x=\"" << px(left) << "\" y=\"" << px(top) << "\" width=\"" << px(plot_w)
        << "\" height=\"" << px(plot_h) << "\" fill=\"none\" stroke=\"black\"/>\n";

    for (int i = 0; i <= 6; ++i) {
        const double a = x_min + (x_max - x_min) * i / 6.0;
        const double x = x_of(a);
        out << "<line x1=\"" << px(x) << "\" y1=\"" << px(top + plot_h) << "\" x2=\"" << px(x)
            << "\" y2=\"" << px(top + plot_h + 5) << "\" stroke=\"black\"/>\n";
        out << "<text x=\"" << px(x) << "\" y=\"" << px(top + plot_h + 20)
            << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"11\">"
            << fmt_g9(std::round(a * 100.0) / 100.0) << "</text>\n";
    }
    for (double db = y_max; db >= y_min - 1e-9; db -= 10.0) {
        const double y = y_of(db);
        out << "<line x1=\"" << px(left - 5) << "\" y1=\"" << px(y) << "\" x2=\"" << px(left)
            << "\" y2=\"" << px(y) << "\" stroke=\"black\"/>\n";
        out << "<line x1=\"" << px(left) << "\" y1=\"" << px(y) << "\" x2=\"" << px(left + plot_w)
            << "\" y2=\"" << px(y) << "\" stroke=\"#dddddd\"/>\n";
        out << "<text x=\"" << px(left - 9) << "\" y=\"" << px(y + 4)
            << "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"11\">" << fmt_g9(db)
            << "</text>\n";
    }
    out << "<text x=\"" << px(left + plot_w / 2) << "\" y=\"" << px(height - 12)
        << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"12\">angle (deg)</text>\n";
    out << "<text x=\"16\" y=\"" << px(top + plot_h / 2)
        << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"12\" transform=\"rotate(-90 16 "
        << px(top + plot_h / 2) << ")\">normalized level (dB)</text>\n";

    out << "<polyline fill=\"none\" stroke=\"#1f77b4\" stroke-width=\"1.2\" points=\"";
    for (std::size_t i = 0; i < angles_deg.size(); ++i) {
        if (i)
            out << ' ';
        out << px(x_of(angles_deg[i])) << ',' << px(y_of(db_samples[i]));
    }
    out << "\"/>\n</svg>\n";
    return out.str();
}

std::string render_polar_plot(std::span<const double> angles_deg,
                              std::span<const double> magnitudes,
                              const std::string& title) {
    if (angles_deg.size() != magnitudes.size() || angles_deg.size() < 2)
        throw std::invalid_argument("polar plot needs matching angle/sample arrays of >= 2 points");
    double peak = 0.0;
    for (double v : magnitudes)
        peak = std::max(peak, v);
    if (!(peak > 0.0))
        throw std::invalid_argument("polar plot needs at least one positive magnitude");

    const int size = 520;
    const double cx = size / 2.0, cy = size / 2.0, radius = 220.0;
    const double deg = std::numbers::pi / 180.0;

    std::ostringstream out;
    svg_open(out, size, size);
    out << "<text x=\"" << size / 2 << "\" y=\"22\" text-anchor=\"middle\" font-family=\"sans-serif\" "
           "font-size=\"14\">" << title << "</text>\n";
    for (int q = 1; q <= 4; ++q)
        out << "<circle cx=\"" << px(cx) << "\" cy=\"" << px(cy) << "\" r=\"" << px(radius * q / 4.0)
            << "\" fill=\"none\" stroke=\"#cccccc\"/>\n";
    for (int s = 0; s < 360; s += 30) {
        const double x = cx + radius * std::cos(s * deg);
        const double y = cy - radius * std::sin(s * deg);
        out << "<line x1=\"" << px(cx) << "\" y1=\"" << px(cy) << "\" x2=\"" << px(x) << "\" y2=\""
            << px(y) << "\" stroke=\"#dddddd\"/>\n";
        out << "<text x=\"" << px(cx + (radius + 14) * std::cos(s * deg)) << "\" y=\""
            << px(cy - (radius + 14) * std::sin(s * deg) + 4)
            << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"10\">" << s
            << "</text>\n";
    }
    out << "<polyline fill=\"none\" stroke=\"#d62728\" stroke-width=\"1.2\" points=\"";
    for (std::size_t i = 0; i < angles_deg.size(); ++i) {
        const double r = radius * magnitudes[i] / peak;
        const double x = cx + r * std::cos(angles_deg[i] * deg);
        const double y = cy - r * std::sin(angles_deg[i] * deg);
        if (i)
            out << ' ';
        out << px(x) << ',' << px(y);
    }
    out << "\"/>\n</svg>\n";
    return out.str();
}

}  // namespace ecaa
