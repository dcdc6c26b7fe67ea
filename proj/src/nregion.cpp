// Copyright 2026 The icregion Authors
// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0

#include "icregion/nregion.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <string>

#include "icregion/crystallize.hpp"
#include "icregion/frontier2.hpp"
#include "icregion/power_grid.hpp"

namespace icregion {

namespace {
constexpr double kInvLn2 = 1.4426950408889634;
}

SurfaceSample sample_surface(const ChannelInstance& ch, int pinned, int grid_res, Exec exec) {
    ch.validate();
    if (pinned < 0 || pinned >= ch.n) fail(Errc::DimensionMismatch, "pinned index out of range");
    if (grid_res < 2) fail(Errc::BadInput, "grid_res must be >= 2");
    double cells_est = 1.0;
    for (int i = 0; i < ch.n - 1; ++i) cells_est *= grid_res;
    if (cells_est > 1e7) fail(Errc::CapExceeded, "surface grid exceeds 1e7 cells");

    SurfaceSample out;
    out.pinned = pinned;
    out.grid_res = grid_res;
    std::vector<double> powers_flat;
    const auto rates_flat = eval_pinned_grid(ch, pinned, grid_res, &powers_flat, exec);
    const std::int64_t cells = static_cast<std::int64_t>(rates_flat.size()) / ch.n;
    out.powers.resize(cells);
    out.rates.resize(cells);
    for (std::int64_t c = 0; c < cells; ++c) {
        out.powers[c].assign(powers_flat.begin() + c * ch.n, powers_flat.begin() + (c + 1) * ch.n);
        out.rates[c].assign(rates_flat.begin() + c * ch.n, rates_flat.begin() + (c + 1) * ch.n);
    }
    return out;
}

Membership membership_2user(const TwoUserParams& p, double r1, double r2, int samples) {
    if (!(r1 >= 0.0) || !(r2 >= 0.0)) return Membership::Outside;
    const double tol = 1e-9 * std::max(1.0, r1_max(p));
    if (r1 <= r1_max(p) + tol) {
        const double pc = frontier(p, std::min(r1, r1_max(p))).r2;
        if (r2 <= pc + tol) return Membership::InsidePowerControl;
    }
    const auto trace = trace_frontier(p, samples, FrontierId::Combined);
    std::vector<std::array<double, 2>> pts;
    pts.reserve(trace.samples.size());
    for (const auto& s : trace.samples) pts.push_back({s.r1, s.r2});
    const auto chain = upper_hull_2d(std::move(pts));
    if (r1 <= chain.back()[0] + tol && r2 <= polyline_value(chain, r1) + tol)
        return Membership::InsideConvexHullOnly;
    return Membership::Outside;
}

std::pair<double, double> ob_lengths(double a, double b, double p_max, int n) {
    if (!(a > 0.0) || !(p_max > 0.0)) fail(Errc::DegenerateChannel, "need a > 0 and p_max > 0");
    if (!(b >= 0.0)) fail(Errc::BadInput, "b must be >= 0");
    if (n < 2) fail(Errc::WrongDimension, "need n >= 2");
    const double root_n = std::sqrt(static_cast<double>(n));
    const double ob =
        root_n * std::log1p(a * p_max / (1.0 + (n - 1) * b * p_max)) * kInvLn2;
    const double obprime = std::log1p(a * p_max) * kInvLn2 / root_n;
    return {ob, obprime};
}

double tdm_threshold_n(double a, double p_max, int n) {
    if (!(a > 0.0) || !(p_max > 0.0)) fail(Errc::DegenerateChannel, "need a > 0 and p_max > 0");
    if (n < 2) fail(Errc::WrongDimension, "need n >= 2");
    const double ap = a * p_max;
    const double root = std::pow(1.0 + ap, 1.0 / n) - 1.0;
    return (ap / root - 1.0) / ((n - 1) * p_max);
}

double asymptotic_threshold(double a, double p_max) {
    if (!(a > 0.0) || !(p_max > 0.0)) fail(Errc::DegenerateChannel, "need a > 0 and p_max > 0");
    return a / std::log1p(a * p_max);
}

SymmetricGeometry symmetric_geometry(double a, double b, double p_max, int n) {
    SymmetricGeometry g;
    g.n = n;
    g.a = a;
    g.b = b;
    g.p_max = p_max;
    const auto [ob, obprime] = ob_lengths(a, b, p_max, n);
    g.ob = ob;
    g.obprime = obprime;
    g.b_star_n = tdm_threshold_n(a, p_max, n);
    g.b_star_inf = asymptotic_threshold(a, p_max);
    return g;
}

}  // namespace icregion
