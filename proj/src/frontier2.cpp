// Copyright 2026 The icregion Authors
// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0

#include "icregion/frontier2.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace icregion {

namespace {

constexpr double kLn2 = 0.6931471805599453;
constexpr double kInvLn2 = 1.4426950408889634;

double log2_1p(double x) { return std::log1p(x) * kInvLn2; }
double exp2_m1(double r) { return std::expm1(r * kLn2); }

void check_params(const TwoUserParams& p) {
    if (!(p.a > 0.0) || !(p.c > 0.0))
        fail(Errc::DegenerateChannel, "direct gains a and c must be > 0");
    if (!(p.b >= 0.0) || !(p.d >= 0.0)) fail(Errc::BadInput, "cross gains must be >= 0");
    if (!(p.p_max > 0.0)) fail(Errc::BadInput, "p_max must be > 0");
}

double domain_tol(const TwoUserParams& p) { return 1e-9 * std::max(1.0, r1_max(p)); }

}  // namespace

double r1_junction(const TwoUserParams& p) {
    return log2_1p(p.a * p.p_max / (1.0 + p.b * p.p_max));
}

double r1_max(const TwoUserParams& p) { return log2_1p(p.a * p.p_max); }

double phi2(const TwoUserParams& p, double r1) {
    check_params(p);
    const double hi = r1_junction(p);
    const double tol = domain_tol(p);
    if (r1 < -tol || r1 > hi + tol)
        fail(Errc::OutOfDomain, "r1=" + std::to_string(r1) + " outside interval 1 [0, " +
                                    std::to_string(hi) + "]");
    r1 = std::clamp(r1, 0.0, hi);
    const double t1 = exp2_m1(r1);
    const double den = 1.0 + (p.d / p.a) * (1.0 + p.b * p.p_max) * t1;
    return log2_1p(p.c * p.p_max / den);
}

double phi1(const TwoUserParams& p, double r1) {
    check_params(p);
    if (p.b == 0.0)
        fail(Errc::NoInterference, "phi1 undefined for b = 0 (rate region is a rectangle)");
    const double lo = r1_junction(p);
    const double hi = r1_max(p);
    const double tol = domain_tol(p);
    if (r1 < lo - tol || r1 > hi + tol)
        fail(Errc::OutOfDomain, "r1=" + std::to_string(r1) + " outside interval 2 [" +
                                    std::to_string(lo) + ", " + std::to_string(hi) + "]");
    r1 = std::clamp(r1, lo, hi);
    const double t1 = exp2_m1(r1);
    const double num = (p.c / p.b) * std::max(p.a * p.p_max - t1, 0.0);
    return log2_1p(num / (t1 * (1.0 + p.d * p.p_max)));
}

FrontierPoint frontier(const TwoUserParams& p, double r1) {
    check_params(p);
    const double junction = r1_junction(p);
    const double hi = r1_max(p);
    const double tol = domain_tol(p);
    if (r1 < -tol || r1 > hi + tol)
        fail(Errc::OutOfDomain, "r1=" + std::to_string(r1) + " outside [0, " +
                                    std::to_string(hi) + "]");
    r1 = std::clamp(r1, 0.0, hi);
    FrontierPoint out;
    if (r1 <= junction || p.b == 0.0) {
        const double t1 = exp2_m1(std::min(r1, junction));
        out.p2 = p.p_max;
        out.p1 = std::clamp((1.0 + p.b * p.p_max) * t1 / p.a, 0.0, p.p_max);
        out.r2 = phi2(p, std::min(r1, junction));
    } else {
        const double t1 = exp2_m1(r1);
        out.p1 = p.p_max;
        out.p2 = std::clamp((p.a * p.p_max / t1 - 1.0) / p.b, 0.0, p.p_max);
        out.r2 = phi1(p, r1);
    }
    return out;
}

std::array<double, 2> rate_to_power(const TwoUserParams& p, double r1, double r2) {
    check_params(p);
    if (r1 < 0.0 || r2 < 0.0) fail(Errc::Infeasible, "rates must be >= 0");
    const double t1 = exp2_m1(r1);
    const double t2 = exp2_m1(r2);
    const double det = 1.0 - t1 * t2 * p.b * p.d / (p.a * p.c);
    if (det <= 0.0) fail(Errc::Infeasible, "rate pair beyond the power-control region");
    double p1 = (t1 / p.a) * (1.0 + p.b * t2 / p.c) / det;
    double p2 = (t2 / p.c) * (1.0 + p.d * p1);
    const double slack = 1e-9 * std::max(1.0, p.p_max);
    if (p1 < -slack || p1 > p.p_max + slack || p2 < -slack || p2 > p.p_max + slack)
        fail(Errc::Infeasible, "solved powers leave the box [0, p_max]^2");
    return {std::clamp(p1, 0.0, p.p_max), std::clamp(p2, 0.0, p.p_max)};
}

CornerSet2 corner_points(const TwoUserParams& p) {
    check_params(p);
    const double P = p.p_max;
    CornerSet2 s;
    s.a = {0.0, log2_1p(p.c * P)};
    s.b = {log2_1p(p.a * P / (1.0 + p.b * P)), log2_1p(p.c * P / (1.0 + p.d * P))};
    s.c = {log2_1p(p.a * P), 0.0};
    return s;
}

double second_derivative_phi2(const TwoUserParams& p, double p1) {
    check_params(p);
    const double alpha = p.d * (1.0 + p.b * p.p_max);
    const double t = alpha + p.a * p.d * p1;
    return t * t - (p.a - alpha) * (p.a - alpha + p.a * p.c * p.p_max);
}

namespace {

// Re(sqrt(x)) convention: 0 for a negative radicand.
double re_sqrt(double x) { return x > 0.0 ? std::sqrt(x) : 0.0; }

}  // namespace

std::array<double, 2> inflection_thresholds(const TwoUserParams& p) {
    check_params(p);
    if (p.b == 0.0 && p.d == 0.0)
        fail(Errc::NoInterference, "no cross interference: both frontiers are flat");
    const double P = p.p_max;
    double q1, q2;
    if (p.d == 0.0) {
        q1 = std::numeric_limits<double>::infinity();
    } else {
        const double alpha = p.d * (1.0 + p.b * P);
        q1 = (re_sqrt((p.a - alpha) * (p.a - alpha + p.a * p.c * P)) - alpha) / (p.a * p.d);
    }
    if (p.b == 0.0) {
        q2 = std::numeric_limits<double>::infinity();
    } else {
        const double beta = p.b * (1.0 + p.d * P);
        q2 = (re_sqrt((p.c - beta) * (p.c - beta + p.a * p.c * P)) - beta) / (p.c * p.b);
    }
    return {q1, q2};
}

bool tdm_optimal(const TwoUserParams& p) {
    check_params(p);
    const double P = p.p_max;
    const double gamma = log2_1p(p.c * P) / log2_1p(p.a * P);
    const double lhs = (1.0 + p.c * P) * (1.0 + p.d * P) / (1.0 + p.c * P + p.d * P);
    const double rhs = std::pow((1.0 + p.a * P + p.b * P) / (1.0 + p.b * P), gamma);
    return lhs >= rhs;
}

double symmetric_threshold_b2(double a, double p_max) {
    return std::sqrt(1.0 + a * p_max) / p_max;
}

ConvexityReport classify(const TwoUserParams& p) {
    check_params(p);
    ConvexityReport rep;
    const double P = p.p_max;
    if (p.b == 0.0 && p.d == 0.0) {
        rep.q1 = std::numeric_limits<double>::infinity();
        rep.q2 = std::numeric_limits<double>::infinity();
    } else {
        const auto q = inflection_thresholds(p);
        rep.q1 = q[0];
        rep.q2 = q[1];
    }
    const double tol = 1e-9 * std::max(1.0, P);
    auto classify_q = [&](double q) {
        if (q >= P - tol) return Convexity::Concave;
        if (q <= tol) return Convexity::Convex;
        return Convexity::Inflection;
    };
    rep.class_phi2 = classify_q(rep.q1);
    rep.class_phi1 = classify_q(rep.q2);
    if (rep.class_phi2 == Convexity::Inflection) {
        const double r1_d = log2_1p(p.a * rep.q1 / (1.0 + p.b * P));
        rep.inflection_d = {{r1_d, phi2(p, r1_d)}};
    }
    rep.tdm_optimal = tdm_optimal(p);
    if (rep.tdm_optimal) {
        rep.strategy = Strategy::PureTdmAToC;
    } else if (rep.class_phi2 == Convexity::Convex || rep.class_phi1 == Convexity::Convex) {
        rep.strategy = Strategy::TimeShareThroughBOrPhi1;
    } else if (rep.class_phi2 == Convexity::Inflection ||
               rep.class_phi1 == Convexity::Inflection) {
        rep.strategy = Strategy::ConcaveThenTimeShareFromD;
    } else {
        rep.strategy = Strategy::PowerControlOnly;
    }
    return rep;
}

FrontierTrace trace_frontier(const TwoUserParams& p, int samples_per_interval, FrontierId id) {
    check_params(p);
    if (samples_per_interval < 2) fail(Errc::BadInput, "need at least 2 samples per interval");
    const double junction = r1_junction(p);
    const double hi = r1_max(p);
    FrontierTrace trace;
    trace.id = id;

    auto emit_range = [&](double lo, double up, bool include_last) {
        if (up <= lo) return;
        const int m = samples_per_interval;
        for (int i = 0; i < m; ++i) {
            if (i == m - 1 && !include_last) continue;
            const double r1 = (i == m - 1) ? up : lo + (up - lo) * i / (m - 1);
            const FrontierPoint f = frontier(p, r1);
            trace.samples.push_back({r1, f.r2, f.p1, f.p2});
        }
    };

    switch (id) {
        case FrontierId::Phi2: emit_range(0.0, junction, true); break;
        case FrontierId::Phi1: emit_range(junction, hi, true); break;
        case FrontierId::Combined:
            emit_range(0.0, junction, hi <= junction);
            emit_range(junction, hi, true);
            break;
    }
    if (trace.samples.empty()) {
        const FrontierPoint f = frontier(p, junction);
        trace.samples.push_back({junction, f.r2, f.p1, f.p2});
    }
    return trace;
}

}  // namespace icregion
