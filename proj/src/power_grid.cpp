// Copyright 2026 The icregion Authors
// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0

#include "icregion/power_grid.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace icregion {

namespace {

constexpr double kInvLn2 = 1.4426950408889634;

std::int64_t ipow(std::int64_t base, int exp) {
    std::int64_t v = 1;
    for (int i = 0; i < exp; ++i) v *= base;
    return v;
}

// Rates at one grid cell, written into out[0..n).
inline void rates_at_cell(const ChannelInstance& ch, const double* p, double* out) {
    const int n = ch.n;
    for (int i = 0; i < n; ++i) {
        double den = ch.noise_var;
        for (int j = 0; j < n; ++j)
            if (j != i) den += ch.gains[static_cast<std::size_t>(i) * n + j] * p[j];
        out[i] = std::log1p(ch.gains[static_cast<std::size_t>(i) * n + i] * p[i] / den) * kInvLn2;
    }
}

// Decodes a full-grid cell index into powers (last dimension fastest).
inline void decode_cell(std::int64_t c, int n, int m, double p_max, double* p) {
    for (int dim = n - 1; dim >= 0; --dim) {
        p[dim] = grid_value(static_cast<int>(c % m), m, p_max);
        c /= m;
    }
}

// Same with dimension `pin` held at p_max.
inline void decode_pinned_cell(std::int64_t c, int n, int pin, int m, double p_max, double* p) {
    for (int dim = n - 1; dim >= 0; --dim) {
        if (dim == pin) {
            p[dim] = p_max;
            continue;
        }
        p[dim] = grid_value(static_cast<int>(c % m), m, p_max);
        c /= m;
    }
}

}  // namespace

double grid_value(int i, int m, double p_max) {
    if (i == 0) return 0.0;
    if (i == m - 1) return p_max;
    return p_max * i / (m - 1);
}

std::vector<double> eval_rate_grid_serial(const ChannelInstance& ch, int m) {
    const int n = ch.n;
    const std::int64_t cells = ipow(m, n);
    std::vector<double> out(static_cast<std::size_t>(cells) * n);
    std::vector<double> p(n);
    for (std::int64_t c = 0; c < cells; ++c) {
        decode_cell(c, n, m, ch.p_max, p.data());
        rates_at_cell(ch, p.data(), out.data() + c * n);
    }
    return out;
}

std::vector<double> eval_rate_grid_omp(const ChannelInstance& ch, int m) {
    const int n = ch.n;
    const std::int64_t cells = ipow(m, n);
    std::vector<double> out(static_cast<std::size_t>(cells) * n);
#pragma omp parallel
    {
        std::vector<double> p(n);
#pragma omp for schedule(static)
        for (std::int64_t c = 0; c < cells; ++c) {
            decode_cell(c, n, m, ch.p_max, p.data());
            rates_at_cell(ch, p.data(), out.data() + c * n);
        }
    }
    return out;
}

std::vector<double> eval_rate_grid(const ChannelInstance& ch, int m, Exec exec) {
    return exec == Exec::Parallel ? eval_rate_grid_omp(ch, m) : eval_rate_grid_serial(ch, m);
}

std::vector<double> eval_pinned_grid_serial(const ChannelInstance& ch, int pin, int m,
                                            std::vector<double>* powers_out) {
    const int n = ch.n;
    const std::int64_t cells = ipow(m, n - 1);
    std::vector<double> out(static_cast<std::size_t>(cells) * n);
    if (powers_out) powers_out->resize(static_cast<std::size_t>(cells) * n);
    std::vector<double> p(n);
    for (std::int64_t c = 0; c < cells; ++c) {
        decode_pinned_cell(c, n, pin, m, ch.p_max, p.data());
        if (powers_out) std::copy(p.begin(), p.end(), powers_out->data() + c * n);
        rates_at_cell(ch, p.data(), out.data() + c * n);
    }
    return out;
}

std::vector<double> eval_pinned_grid_omp(const ChannelInstance& ch, int pin, int m,
                                         std::vector<double>* powers_out) {
    const int n = ch.n;
    const std::int64_t cells = ipow(m, n - 1);
    std::vector<double> out(static_cast<std::size_t>(cells) * n);
    if (powers_out) powers_out->resize(static_cast<std::size_t>(cells) * n);
#pragma omp parallel
    {
        std::vector<double> p(n);
#pragma omp for schedule(static)
        for (std::int64_t c = 0; c < cells; ++c) {
            decode_pinned_cell(c, n, pin, m, ch.p_max, p.data());
            if (powers_out) std::copy(p.begin(), p.end(), powers_out->data() + c * n);
            rates_at_cell(ch, p.data(), out.data() + c * n);
        }
    }
    return out;
}

std::vector<double> eval_pinned_grid(const ChannelInstance& ch, int pin, int m,
                                     std::vector<double>* powers_out, Exec exec) {
    return exec == Exec::Parallel ? eval_pinned_grid_omp(ch, pin, m, powers_out)
                                  : eval_pinned_grid_serial(ch, pin, m, powers_out);
}

std::vector<std::int64_t> pareto_indices(const std::vector<double>& pts, int dim) {
    const std::int64_t count = static_cast<std::int64_t>(pts.size()) / dim;
    std::vector<std::int64_t> order(count);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](std::int64_t x, std::int64_t y) {
        for (int d = 0; d < dim; ++d) {
            const double vx = pts[x * dim + d];
            const double vy = pts[y * dim + d];
            if (vx != vy) return vx > vy;
        }
        return x < y;
    });
    // Sorted by first coordinate descending, a point can only be dominated
    // by an earlier skyline member.
    std::vector<std::int64_t> skyline;
    for (std::int64_t idx : order) {
        const double* x = pts.data() + idx * dim;
        bool dominated = false;
        for (std::int64_t s : skyline) {
            const double* y = pts.data() + s * dim;
            bool all_ge = true;
            bool one_gt = false;
            for (int d = 0; d < dim; ++d) {
                if (y[d] < x[d]) {
                    all_ge = false;
                    break;
                }
                if (y[d] > x[d]) one_gt = true;
            }
            if (all_ge && one_gt) {
                dominated = true;
                break;
            }
        }
        if (!dominated) skyline.push_back(idx);
    }
    return skyline;
}

}  // namespace icregion
