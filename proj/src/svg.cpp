// Copyright 2026 The icregion Authors
// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0

#include "icregion/svg.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>

namespace icregion {

namespace {

constexpr double kWidth = 640.0;
constexpr double kHeight = 480.0;
constexpr double kMargin = 56.0;

std::string num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.2f", v);
    return buf;
}

}  // namespace

std::string render_region_svg(const ChannelInstance& ch, int samples_per_interval) {
    ch.validate();
    if (ch.n != 2) fail(Errc::WrongDimension, "region SVG is 2-user only");
    const TwoUserParams p = normalize_two_user(ch);
    const auto trace2 = trace_frontier(p, samples_per_interval, FrontierId::Phi2);
    const auto corners = corner_points(p);
    const auto h = hull(ch, 0, Exec::Serial);
    const auto rep = classify(p);

    const double x_max = std::max(corners.c[0], 1e-9);
    const double y_max = std::max(corners.a[1], 1e-9);
    auto sx = [&](double r1) { return kMargin + (kWidth - 2 * kMargin) * r1 / x_max; };
    auto sy = [&](double r2) { return kHeight - kMargin - (kHeight - 2 * kMargin) * r2 / y_max; };

    std::ostringstream svg;
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth << "\" height=\""
        << kHeight << "\" viewBox=\"0 0 " << kWidth << " " << kHeight << "\">\n";
    svg << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    // axes
    svg << "<line x1=\"" << num(sx(0)) << "\" y1=\"" << num(sy(0)) << "\" x2=\""
        << num(sx(x_max) + 12) << "\" y2=\"" << num(sy(0))
        << "\" stroke=\"black\" stroke-width=\"1\"/>\n";
    svg << "<line x1=\"" << num(sx(0)) << "\" y1=\"" << num(sy(0)) << "\" x2=\"" << num(sx(0))
        << "\" y2=\"" << num(sy(y_max) - 12) << "\" stroke=\"black\" stroke-width=\"1\"/>\n";
    svg << "<text x=\"" << num(sx(x_max) - 40) << "\" y=\"" << num(sy(0) + 32)
        << "\" font-size=\"13\">r1 [bit/use]</text>\n";
    svg << "<text x=\"" << num(sx(0) - 44) << "\" y=\"" << num(sy(y_max) - 18)
        << "\" font-size=\"13\">r2 [bit/use]</text>\n";

    auto polyline = [&](const std::vector<FrontierSample>& samples, const char* color) {
        svg << "<polyline fill=\"none\" stroke=\"" << color
            << "\" stroke-width=\"1.6\" points=\"";
        for (const auto& s : samples) svg << num(sx(s.r1)) << ',' << num(sy(s.r2)) << ' ';
        svg << "\"/>\n";
    };
    polyline(trace2.samples, "#1f77b4");
    if (p.b > 0.0) {
        const auto trace1 = trace_frontier(p, samples_per_interval, FrontierId::Phi1);
        polyline(trace1.samples, "#2ca02c");
    }

    // crystallized boundary
    svg << "<polyline fill=\"none\" stroke=\"#d62728\" stroke-width=\"1.4\" "
           "stroke-dasharray=\"6 4\" points=\"";
    for (const auto& v : h.polyline) svg << num(sx(v[0])) << ',' << num(sy(v[1])) << ' ';
    svg << "\"/>\n";

    auto marker = [&](double r1, double r2, const char* label) {
        svg << "<circle cx=\"" << num(sx(r1)) << "\" cy=\"" << num(sy(r2))
            << "\" r=\"3.2\" fill=\"black\"/>\n";
        svg << "<text x=\"" << num(sx(r1) + 6) << "\" y=\"" << num(sy(r2) - 6)
            << "\" font-size=\"14\">" << label << "</text>\n";
    };
    marker(corners.a[0], corners.a[1], "A");
    marker(corners.b[0], corners.b[1], "B");
    marker(corners.c[0], corners.c[1], "C");
    if (rep.inflection_d) marker((*rep.inflection_d)[0], (*rep.inflection_d)[1], "D");

    svg << "</svg>\n";
    return svg.str();
}

}  // namespace icregion
