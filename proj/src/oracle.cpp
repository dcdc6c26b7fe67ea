// Copyright 2026 The icregion Authors
// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0

#include "icregion/oracle.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <string>

#include "icregion/crystallize.hpp"
#include "icregion/power_grid.hpp"

namespace icregion {

std::vector<RatePoint> grid_pareto(const ChannelInstance& ch, int m, Exec exec) {
    ch.validate();
    if (m < 2) fail(Errc::BadInput, "grid needs m >= 2");
    double cells_est = 1.0;
    for (int i = 0; i < ch.n; ++i) cells_est *= m;
    if (cells_est > 1e7) fail(Errc::CapExceeded, "power grid exceeds 1e7 cells");

    const auto rates = eval_rate_grid(ch, m, exec);
    const auto keep = pareto_indices(rates, ch.n);
    std::vector<RatePoint> out;
    out.reserve(keep.size());
    for (std::int64_t idx : keep)
        out.emplace_back(rates.begin() + idx * ch.n, rates.begin() + (idx + 1) * ch.n);
    return out;
}

double area_power_control(const TwoUserParams& p, int samples) {
    if (samples < 16) fail(Errc::BadInput, "need samples >= 16");
    const double junction = r1_junction(p);
    const double hi = r1_max(p);
    auto trapezoid = [&](double lo, double up) {
        if (up <= lo) return 0.0;
        const double h = (up - lo) / samples;
        double acc = 0.5 * (frontier(p, lo).r2 + frontier(p, up).r2);
        for (int i = 1; i < samples; ++i) acc += frontier(p, lo + i * h).r2;
        return acc * h;
    };
    return trapezoid(0.0, junction) + trapezoid(junction, hi);
}

namespace {

std::vector<std::array<double, 2>> hull_polyline_2user(const TwoUserParams& p) {
    const auto h = hull(two_user_channel(p), /*support_dirs=*/0, Exec::Serial);
    std::vector<std::array<double, 2>> poly;
    poly.reserve(h.polyline.size());
    for (const auto& v : h.polyline) poly.push_back({v[0], v[1]});
    return poly;
}

}  // namespace

double area_crystallized(const ChannelInstance& ch) {
    ch.validate();
    if (ch.n != 2) fail(Errc::WrongDimension, "crystallized area is 2-user only");
    const auto h = hull(ch, 0, Exec::Serial);
    // closed polygon: origin, boundary vertices, back through the r1 axis
    double acc = 0.0;
    std::array<double, 2> prev = {0.0, 0.0};
    for (const auto& v : h.polyline) {
        acc += prev[0] * v[1] - v[0] * prev[1];
        prev = {v[0], v[1]};
    }
    acc += prev[0] * 0.0 - 0.0 * prev[1];
    return std::fabs(acc) * 0.5;
}

MaxGap max_gap(const TwoUserParams& p, int samples) {
    if (samples < 64) fail(Errc::BadInput, "need samples >= 64");
    const auto poly = hull_polyline_2user(p);
    const double junction = r1_junction(p);
    const double hi = r1_max(p);

    std::vector<double> grid;
    grid.reserve(samples + 1);
    for (int i = 0; i < samples; ++i)
        grid.push_back(i == samples - 1 ? hi : hi * i / (samples - 1));
    grid.push_back(junction);
    std::sort(grid.begin(), grid.end());

    MaxGap out;
    for (double r1 : grid) {
        const double pc = frontier(p, r1).r2;
        if (pc < 1e-6) continue;
        const double s_cr = (r1 <= 0.0) ? polyline_value(poly, 0.0) / pc
                                        : polyline_ray_scale(poly, r1, pc);
        const double loss = 1.0 - std::min(s_cr, 1.0);
        if (loss > out.loss_pct) {
            out.loss_pct = loss;
            out.at_r1 = r1;
        }
    }

    // gain direction: rays through the crystallized boundary against the
    // power-control region (star-shaped, so bisection on the scale works)
    auto inside_pc = [&](double x, double y) {
        if (x > hi) return false;
        return y <= frontier(p, x).r2 + 1e-12;
    };
    for (double r1 : grid) {
        const double cr = polyline_value(poly, r1);
        if (cr < 1e-6) continue;
        if (inside_pc(r1, cr)) continue;  // no gain along this ray
        double lo_s = 0.0, hi_s = 1.0;
        for (int it = 0; it < 80; ++it) {
            const double mid = 0.5 * (lo_s + hi_s);
            if (inside_pc(mid * r1, mid * cr))
                lo_s = mid;
            else
                hi_s = mid;
        }
        out.gain_pct = std::max(out.gain_pct, 1.0 - lo_s);
    }

    out.loss_pct *= 100.0;
    out.gain_pct *= 100.0;
    return out;
}

std::vector<GapRow> sweep_b_symmetric(double a, double p_max, double b_db_lo, double b_db_hi,
                                      double b_db_step, int samples, Exec exec) {
    if (!(b_db_step > 0.0) || !(b_db_lo < b_db_hi + 1e-12))
        fail(Errc::BadInput, "need lo < hi and step > 0");
    std::vector<double> b_db;
    for (double v = b_db_lo; v <= b_db_hi + 1e-9; v += b_db_step) b_db.push_back(v);

    std::vector<GapRow> rows(b_db.size());
    const std::int64_t count = static_cast<std::int64_t>(b_db.size());
    auto run = [&](std::int64_t i) {
        const double b = db_to_linear(b_db[static_cast<std::size_t>(i)]);
        const TwoUserParams p{a, b, a, b, p_max};
        GapRow row;
        row.b_db = b_db[static_cast<std::size_t>(i)];
        row.area_pc = area_power_control(p, samples);
        row.area_crystal = area_crystallized(two_user_channel(p));
        const MaxGap gap = max_gap(p, samples);
        row.max_gap_pct = gap.loss_pct;
        row.gap_argmax_r1 = gap.at_r1;
        rows[static_cast<std::size_t>(i)] = row;
    };
    if (exec == Exec::Parallel) {
#pragma omp parallel for schedule(dynamic)
        for (std::int64_t i = 0; i < count; ++i) run(i);
    } else {
        for (std::int64_t i = 0; i < count; ++i) run(i);
    }
    return rows;
}

VerifyReport verify_frontier(const TwoUserParams& p, int m, double tol, Exec exec) {
    VerifyReport rep;
    const auto pareto = grid_pareto(two_user_channel(p), m, exec);
    const double hi = r1_max(p);
    for (const auto& r : pareto) {
        const double r1 = std::min(r[0], hi);
        rep.max_frontier_violation =
            std::max(rep.max_frontier_violation, r[1] - frontier(p, r1).r2);
    }
    const auto trace = trace_frontier(p, 256, FrontierId::Combined);
    const ChannelInstance ch = two_user_channel(p);
    for (const auto& s : trace.samples) {
        try {
            const auto pw = rate_to_power(p, s.r1, s.r2);
            const double box_err =
                std::max({0.0 - std::min(pw[0], pw[1]),
                          std::max(pw[0], pw[1]) - p.p_max, 0.0});
            rep.max_power_box_violation = std::max(rep.max_power_box_violation, box_err);
            const auto rr = rate_vector(ch, {pw[0], pw[1]});
            rep.max_roundtrip_rate_err =
                std::max({rep.max_roundtrip_rate_err, std::fabs(rr[0] - s.r1),
                          std::fabs(rr[1] - s.r2)});
        } catch (const DomainError&) {
            rep.max_power_box_violation = std::numeric_limits<double>::infinity();
        }
    }
    rep.passed = rep.max_frontier_violation <= tol && rep.max_power_box_violation <= tol &&
                 rep.max_roundtrip_rate_err <= tol;
    return rep;
}

}  // namespace icregion
