// Copyright 2026 The icregion Authors
// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <vector>

#include "icregion/channel.hpp"
#include "icregion/frontier2.hpp"
#include "icregion/parallel.hpp"

namespace icregion {

// ---------------------------------------------------------------------------
// Brute-force grid oracles for the closed-form frontiers, plus the region
// area / rate gap evaluation metrics.
// ---------------------------------------------------------------------------

/// Non-dominated rate points of the uniform m^n power grid.
/// Throws CapExceeded when m^n > 1e7.
std::vector<RatePoint> grid_pareto(const ChannelInstance& ch, int m,
                                   Exec exec = Exec::Parallel);

/// Trapezoidal area under the consolidated frontier with exact junction
/// insertion; `samples` panels per interval.
double area_power_control(const TwoUserParams& p, int samples = 512);

/// Shoelace area of the crystallized hull polygon (with axis closure), n = 2.
double area_crystallized(const ChannelInstance& ch);

struct MaxGap {
    double loss_pct = 0.0;  // power control beyond the crystallized hull
    double gain_pct = 0.0;  // crystallized hull beyond power control
    double at_r1 = 0.0;     // r1 of the worst-loss frontier point
};

/// Radial rate gap between the power-control frontier and the crystallized
/// hull. For each frontier point (with R2 >= 1e-6) the loss is 1 - s where
/// s*(r1, r2) is the furthest point of the hull along that ray; the gain
/// direction mirrors this against the power-control region.
MaxGap max_gap(const TwoUserParams& p, int samples = 1024);

struct GapRow {
    double b_db = 0.0;
    double area_pc = 0.0;
    double area_crystal = 0.0;
    double max_gap_pct = 0.0;
    double gap_argmax_r1 = 0.0;
};

/// Symmetric-channel sweep over cross-gain b (dB): per value, both areas and
/// the maximum radial loss.
std::vector<GapRow> sweep_b_symmetric(double a, double p_max, double b_db_lo, double b_db_hi,
                                      double b_db_step, int samples = 1024,
                                      Exec exec = Exec::Parallel);

struct VerifyReport {
    double max_frontier_violation = 0.0;  // grid Pareto point above the frontier
    double max_power_box_violation = 0.0; // frontier round trip leaving the box
    double max_roundtrip_rate_err = 0.0;  // rate_vector(rate_to_power(r)) vs r
    bool passed = false;
};

/// Asserts the grid oracle never beats the closed forms and that frontier
/// samples round-trip through rate_to_power, at tolerance `tol`.
VerifyReport verify_frontier(const TwoUserParams& p, int m, double tol = 1e-6,
                             Exec exec = Exec::Parallel);

}  // namespace icregion
