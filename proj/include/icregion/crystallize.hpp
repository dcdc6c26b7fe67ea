// Copyright 2026 The icregion Authors
// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "icregion/channel.hpp"
#include "icregion/parallel.hpp"

namespace icregion {

// ---------------------------------------------------------------------------
// Crystallized rate region: On/Off binary power control creates 2^n - 1
// corner points; time-sharing between them spans the crystallized hull.
// ---------------------------------------------------------------------------

/// Binary On/Off mask of one corner point; bit i of the corner index k
/// is the action of transmitter i (0-based).
using Mask = std::vector<std::uint8_t>;

/// All 2^n - 1 masks in binary-counting order, k = 1 .. 2^n - 1.
/// Throws CapExceeded above n = 16.
std::vector<Mask> corner_masks(int n);

/// Renders a mask as a digit string, transmitter 1 first (e.g. "101").
std::string mask_string(std::uint32_t k, int n);

struct CornerPoint {
    int k = 0;      // 1-based corner index; bit pattern is the mask
    Mask mask;      // mask[i] = on/off of transmitter i
    RatePoint rates;
};

/// Rates of every corner point (rate_vector at the masked power vector).
std::vector<CornerPoint> corner_rates(const ChannelInstance& ch);

using ThetaVector = std::vector<double>;

/// Time-shared rates sum_k theta_k * corner_rates[k]; linear in theta.
/// Throws SimplexViolation unless theta is a length-(2^n - 1) simplex vector.
RatePoint theta_rates(const ChannelInstance& ch, const ThetaVector& theta);

/// One probe of the hull support function.
struct SupportSample {
    std::vector<double> direction;  // unit vector, nonnegative orthant
    double value = 0.0;             // max over corners of <direction, rates>
    int theta_corner = 0;           // k of the first corner attaining it
};

/// Hull boundary representation: polyline for n <= 2, triangular facets of
/// corner-index triples for n = 3, support-function table for n >= 4.
struct CrystallizedHull {
    int n = 0;
    std::vector<CornerPoint> corners;
    std::vector<RatePoint> polyline;                 // n <= 2
    std::vector<std::array<int, 3>> facets;          // n == 3, 1-based corner ids
    std::vector<SupportSample> support;              // n >= 4
    std::vector<int> dominated;                      // corners off the hull
};

/// Builds the crystallized hull. Dominated corners are found exactly for
/// n <= 5 (subset enumeration) and from the support table above that.
CrystallizedHull hull(const ChannelInstance& ch, int support_dirs = 1024,
                      Exec exec = Exec::Parallel);

/// Largest s with s * direction inside the down-closed hull, plus a
/// witnessing theta. Exact for n <= 5 via enumeration of active sets.
/// Throws ZeroDirection; CapExceeded above n = 5.
std::pair<double, ThetaVector> max_scale(const ChannelInstance& ch,
                                         const RatePoint& direction);

/// Time-sharing decomposition of a target point: returns theta with
/// theta_rates(theta) >= target componentwise (equality for boundary
/// targets), using at most n nonzero coefficients. Searches corner subsets
/// of size 1..n in lexicographic order and returns the first feasible one.
/// Throws OutsideHull when no subset dominates the target; CapExceeded
/// above n = 5.
ThetaVector decompose(const ChannelInstance& ch, const RatePoint& target);

/// Deterministic low-discrepancy directions on the nonnegative unit sphere.
std::vector<std::vector<double>> support_directions(int n, int count);

/// Upper (concave) hull polyline of 2-D points, left to right; collinear
/// middle points are dropped.
std::vector<std::array<double, 2>> upper_hull_2d(std::vector<std::array<double, 2>> pts);

/// Piecewise-linear evaluation of an x-monotone polyline.
double polyline_value(const std::vector<std::array<double, 2>>& poly, double x);

/// Largest s with s*(dx, dy) under an x-monotone upper boundary polyline
/// (down-closed region); 0-extended outside the polyline span.
double polyline_ray_scale(const std::vector<std::array<double, 2>>& poly, double dx, double dy);

}  // namespace icregion
