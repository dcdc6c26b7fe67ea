// Copyright 2026 The icregion Authors
// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <array>
#include <optional>
#include <vector>

#include "icregion/channel.hpp"

namespace icregion {

// ---------------------------------------------------------------------------
// Two-user power-control frontiers.
//
// The rate region frontier splits at the full-power point B into two
// closed-form potential lines:
//   interval 1 (r1 in [0, R1(P,P)]):     p2 = P_max, curve phi2
//   interval 2 (r1 in [R1(P,P), R1(P,0)]): p1 = P_max, curve phi1
// ---------------------------------------------------------------------------

/// r1 at the junction point B, i.e. R1(P_max, P_max).
double r1_junction(const TwoUserParams& p);

/// The largest achievable r1, i.e. R1(P_max, 0).
double r1_max(const TwoUserParams& p);

/// Interval-1 frontier: max R2 with P2 pinned at P_max.
/// Throws OutOfDomain outside [0, r1_junction], DegenerateChannel if a or c vanish.
double phi2(const TwoUserParams& p, double r1);

/// Interval-2 frontier: max R2 with P1 pinned at P_max.
/// Throws NoInterference when b == 0 (the curve degenerates).
double phi1(const TwoUserParams& p, double r1);

struct FrontierPoint {
    double r2 = 0.0;
    double p1 = 0.0;
    double p2 = 0.0;
};

/// The consolidated frontier: picks the interval, returns max R2 and the
/// achieving powers. Continuous at the junction.
FrontierPoint frontier(const TwoUserParams& p, double r1);

/// Inverts a rate pair to its unique achieving power tuple. Throws
/// Infeasible when the pair is outside the power-control region.
std::array<double, 2> rate_to_power(const TwoUserParams& p, double r1, double r2);

/// Rate-region corner points: A = (0, P_max), B = (P_max, P_max),
/// C = (P_max, 0), each given as an (r1, r2) pair.
struct CornerSet2 {
    std::array<double, 2> a;
    std::array<double, 2> b;
    std::array<double, 2> c;
};

CornerSet2 corner_points(const TwoUserParams& p);

/// Closed-form second derivative of phi2 with respect to r1, expressed as a
/// function of p1. Positive where the curve is convex.
double second_derivative_phi2(const TwoUserParams& p, double p1);

/// Inflection thresholds (q1 for phi2, q2 for phi1), in power units.
/// A side without cross interference has no inflection and reports +inf.
/// Throws NoInterference when b == 0 and d == 0.
std::array<double, 2> inflection_thresholds(const TwoUserParams& p);

enum class Convexity { Concave, Inflection, Convex };

enum class Strategy {
    PowerControlOnly,
    ConcaveThenTimeShareFromD,
    TimeShareThroughBOrPhi1,
    PureTdmAToC,
};

struct ConvexityReport {
    double q1 = 0.0;
    double q2 = 0.0;
    Convexity class_phi2 = Convexity::Concave;
    Convexity class_phi1 = Convexity::Concave;
    std::optional<std::array<double, 2>> inflection_d;  // (r1, r2) of point D on phi2
    bool tdm_optimal = false;
    Strategy strategy = Strategy::PowerControlOnly;
};

/// Classifies both frontiers against their inflection thresholds and picks
/// the operating strategy. Comparisons against 0 and P_max use an absolute
/// tolerance of 1e-9 * max(1, P_max); inside the band the non-inflection
/// class wins.
ConvexityReport classify(const TwoUserParams& p);

/// TDM optimality test: the A-C time-sharing chord at r1 = R1(P,P) lies at
/// or above point B. Ties report true.
bool tdm_optimal(const TwoUserParams& p);

/// Symmetric-channel interference threshold sqrt(1 + a P_max) / P_max above
/// which TDM is optimal (a = c, b = d).
double symmetric_threshold_b2(double a, double p_max);

enum class FrontierId { Phi2, Phi1, Combined };

struct FrontierSample {
    double r1 = 0.0;
    double r2 = 0.0;
    double p1 = 0.0;
    double p2 = 0.0;
};

struct FrontierTrace {
    FrontierId id = FrontierId::Combined;
    std::vector<FrontierSample> samples;
};

/// Samples a frontier uniformly in r1 (per interval) with the junction and
/// endpoints inserted exactly. r1 is strictly increasing along the trace.
FrontierTrace trace_frontier(const TwoUserParams& p, int samples_per_interval = 512,
                             FrontierId id = FrontierId::Combined);

}  // namespace icregion
