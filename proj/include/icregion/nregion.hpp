// Copyright 2026 The icregion Authors
// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <utility>
#include <vector>

#include "icregion/channel.hpp"
#include "icregion/parallel.hpp"

namespace icregion {

/// One sampled power-control hyper-surface: transmitter `pinned` (0-based)
/// held at P_max, every other power swept over a uniform grid.
struct SurfaceSample {
    int pinned = 0;
    int grid_res = 0;
    std::vector<PowerVector> powers;
    std::vector<RatePoint> rates;
};

/// Samples the surface with grid_res points per free power dimension.
/// Throws CapExceeded when grid_res^(n-1) > 1e7.
SurfaceSample sample_surface(const ChannelInstance& ch, int pinned, int grid_res,
                             Exec exec = Exec::Parallel);

enum class Membership { InsidePowerControl, InsideConvexHullOnly, Outside };

/// Locates a 2-user rate point relative to the power-control region and its
/// convex hull (sampled frontier plus axis endpoints).
Membership membership_2user(const TwoUserParams& p, double r1, double r2, int samples = 512);

/// Symmetric-channel geometry: distance to the all-on point B versus the
/// distance to the equal-time TDM hyperplane.
struct SymmetricGeometry {
    int n = 0;
    double a = 0.0;
    double b = 0.0;
    double p_max = 0.0;
    double ob = 0.0;        // ||OB||
    double obprime = 0.0;   // ||OB'||
    double b_star_n = 0.0;  // TDM threshold for this n
    double b_star_inf = 0.0;
};

/// ||OB|| = sqrt(n) log2(1 + aP/(1+(n-1)bP)), ||OB'|| = log2(1+aP)/sqrt(n).
std::pair<double, double> ob_lengths(double a, double b, double p_max, int n);

/// n-user symmetric TDM threshold (aP/((1+aP)^(1/n)-1) - 1)/((n-1)P).
double tdm_threshold_n(double a, double p_max, int n);

/// Large-n limit a / ln(1 + a p_max).
double asymptotic_threshold(double a, double p_max);

SymmetricGeometry symmetric_geometry(double a, double b, double p_max, int n);

}  // namespace icregion
