// Copyright 2026 The icregion Authors
// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0

#include <cmath>

#include "doctest.h"
#include "icregion/frontier2.hpp"
#include "support.hpp"

using namespace icregion;
using doctest::Approx;

namespace {
const TwoUserParams kCaseI{10, 1, 10, 1, 1};     // concave, concave
const TwoUserParams kCaseII{10, 1, 10, 4, 1};    // inflection, concave
const TwoUserParams kCaseIII{10, 1, 10, 6, 1};   // convex, concave
const TwoUserParams kCaseIV{10, 15, 10, 4, 1};   // convex, convex
}

TEST_CASE("phi2 closed form") {
    CHECK(phi2(kCaseI, 1.0) == Approx(3.222392421336448).epsilon(1e-12));
    CHECK(phi2(kCaseI, 0.0) == Approx(std::log2(11.0)).epsilon(1e-12));
    // meets point B by symmetry
    CHECK(phi2(kCaseI, std::log2(6.0)) == Approx(std::log2(6.0)).epsilon(1e-12));
    CHECK_THROWS_AS(phi2(kCaseI, 3.0), DomainError);  // interval 2 value
    CHECK_THROWS_AS(phi2({0, 1, 1, 1, 1}, 0.5), DomainError);
}

TEST_CASE("phi1 closed form") {
    CHECK(phi1(kCaseI, 3.0) == Approx(1.6520766965796931).epsilon(1e-12));
    CHECK(phi1(kCaseI, std::log2(11.0)) == Approx(0.0));
    CHECK(phi1(kCaseI, std::log2(6.0)) == Approx(std::log2(6.0)).epsilon(1e-12));
    try {
        phi1({1, 0, 1, 1, 1}, 0.9);
        FAIL("expected throw");
    } catch (const DomainError& e) {
        CHECK(e.code() == Errc::NoInterference);
    }
}

TEST_CASE("frontier consolidation and achieving powers") {
    auto f = frontier(kCaseI, 1.0);
    CHECK(f.r2 == Approx(3.222392421336448).epsilon(1e-12));
    CHECK(f.p2 == 1.0);
    CHECK(f.p1 == Approx(0.2).epsilon(1e-12));  // (1/a)(1+bP)(2^r1 - 1)

    f = frontier(kCaseI, 0.0);
    CHECK(f.r2 == Approx(std::log2(11.0)).epsilon(1e-12));
    CHECK(f.p1 == 0.0);
    CHECK(f.p2 == 1.0);

    f = frontier(kCaseI, std::log2(11.0));
    CHECK(f.r2 == Approx(0.0));
    CHECK(f.p1 == 1.0);
    CHECK(f.p2 == Approx(0.0));

    CHECK_THROWS_AS(frontier(kCaseI, 3.6), DomainError);
    CHECK_THROWS_AS(frontier(kCaseI, -0.5), DomainError);
}

TEST_CASE("frontier continuity at the junction") {
    testsupport::ChannelGen gen(13);
    for (int trial = 0; trial < 200; ++trial) {
        const auto p = gen.params();
        if (p.b == 0.0) continue;
        const double rb = r1_junction(p);
        CHECK(std::fabs(phi1(p, rb) - phi2(p, rb)) <= 1e-9);
    }
}

TEST_CASE("one-sided interference: b = 0 serves the whole range via phi2") {
    const TwoUserParams p{2, 0, 3, 0.5, 1};
    CHECK(r1_junction(p) == Approx(r1_max(p)));
    const auto f = frontier(p, r1_max(p));
    CHECK(f.p1 == Approx(1.0));
    CHECK(f.p2 == 1.0);
    CHECK(f.r2 == Approx(std::log2(1.0 + 3.0 / 1.5)).epsilon(1e-12));
}

TEST_CASE("rate_to_power closed form and round trip") {
    auto pw = rate_to_power(kCaseI, std::log2(6.0), std::log2(6.0));
    CHECK(pw[0] == Approx(1.0).epsilon(1e-12));
    CHECK(pw[1] == Approx(1.0).epsilon(1e-12));

    pw = rate_to_power(kCaseI, std::log2(11.0), 0.0);
    CHECK(pw[0] == Approx(1.0).epsilon(1e-12));
    CHECK(pw[1] == 0.0);

    pw = rate_to_power(kCaseI, 1.0, 3.222392421336448);
    CHECK(pw[0] == Approx(0.2).epsilon(1e-10));
    CHECK(pw[1] == Approx(1.0).epsilon(1e-10));

    CHECK_THROWS_AS(rate_to_power(kCaseI, 3.5, 3.5), DomainError);
}

TEST_CASE("round trip identity on the power box") {
    testsupport::ChannelGen gen(17);
    for (int trial = 0; trial < 500; ++trial) {
        const auto p = gen.params();
        const double p1 = gen.uniform(0.0, p.p_max);
        const double p2 = gen.uniform(0.0, p.p_max);
        const double r1 = testsupport::o_rate1(p, p1, p2);
        const double r2 = testsupport::o_rate2(p, p1, p2);
        const auto pw = rate_to_power(p, r1, r2);
        const double scale = std::max(1.0, p.p_max);
        CHECK(std::fabs(pw[0] - p1) <= 1e-9 * scale);
        CHECK(std::fabs(pw[1] - p2) <= 1e-9 * scale);
    }
}

TEST_CASE("corner points") {
    auto s = corner_points({1, 3, 1, 3, 1});
    CHECK(s.a[0] == 0.0);
    CHECK(s.a[1] == Approx(1.0).epsilon(1e-12));
    CHECK(s.b[0] == Approx(0.32192809488736235).epsilon(1e-12));
    CHECK(s.b[1] == Approx(0.32192809488736235).epsilon(1e-12));
    CHECK(s.c[0] == Approx(1.0).epsilon(1e-12));
    CHECK(s.c[1] == 0.0);

    s = corner_points(kCaseI);
    CHECK(s.b[0] == Approx(std::log2(6.0)).epsilon(1e-12));
    CHECK(s.b[1] == Approx(std::log2(6.0)).epsilon(1e-12));

    s = corner_points({2, 0, 3, 0, 1});
    CHECK(s.b[0] == Approx(std::log2(3.0)).epsilon(1e-12));
    CHECK(s.b[1] == Approx(std::log2(4.0)).epsilon(1e-12));
    CHECK(s.b[0] == Approx(s.c[0]));
    CHECK(s.b[1] == Approx(s.a[1]));
}

TEST_CASE("corner point B never exceeds the axis extremes") {
    testsupport::ChannelGen gen(97);
    for (int trial = 0; trial < 200; ++trial) {
        const auto s = corner_points(gen.params());
        CHECK(s.b[0] <= s.c[0]);
        CHECK(s.b[1] <= s.a[1]);
    }
}

TEST_CASE("second derivative closed form") {
    CHECK(second_derivative_phi2(kCaseII, 0.15707142142714253) == Approx(0.0).scale(1e4).epsilon(1e-10));
    CHECK(second_derivative_phi2(kCaseI, 0.0) == Approx(-860.0).epsilon(1e-12));
    CHECK(second_derivative_phi2(kCaseIV, 0.0) == Approx(6580.0).epsilon(1e-12));
}

TEST_CASE("inflection thresholds") {
    auto q = inflection_thresholds(kCaseI);
    CHECK(q[0] == Approx(2.7393876913398136).epsilon(1e-12));
    CHECK(q[1] == Approx(2.7393876913398136).epsilon(1e-12));

    q = inflection_thresholds(kCaseII);
    CHECK(q[0] == Approx(0.15707142142714253).epsilon(1e-12));
    CHECK(q[1] == Approx(1.79128784747792).epsilon(1e-12));

    q = inflection_thresholds(kCaseIV);
    CHECK(q[0] == Approx(-1.6).epsilon(1e-12));
    CHECK(q[1] == Approx(-0.5).epsilon(1e-12));

    try {
        inflection_thresholds({1, 0, 1, 0, 1});
        FAIL("expected throw");
    } catch (const DomainError& e) {
        CHECK(e.code() == Errc::NoInterference);
    }
}

TEST_CASE("classification of the four reference channels") {
    auto rep = classify(kCaseI);
    CHECK(rep.class_phi2 == Convexity::Concave);
    CHECK(rep.class_phi1 == Convexity::Concave);
    CHECK(!rep.inflection_d.has_value());
    CHECK(rep.strategy == Strategy::PowerControlOnly);

    rep = classify(kCaseII);
    CHECK(rep.class_phi2 == Convexity::Inflection);
    CHECK(rep.class_phi1 == Convexity::Concave);
    CHECK(rep.q1 == Approx(0.15707142142714253).epsilon(1e-9));
    REQUIRE(rep.inflection_d.has_value());
    CHECK((*rep.inflection_d)[1] == Approx(testsupport::o_phi2(kCaseII, (*rep.inflection_d)[0]))
                                        .epsilon(1e-12));
    CHECK(rep.strategy == Strategy::ConcaveThenTimeShareFromD);

    rep = classify(kCaseIII);
    CHECK(rep.class_phi2 == Convexity::Convex);
    CHECK(rep.class_phi1 == Convexity::Concave);
    CHECK(rep.strategy == Strategy::TimeShareThroughBOrPhi1);

    rep = classify(kCaseIV);
    CHECK(rep.class_phi2 == Convexity::Convex);
    CHECK(rep.class_phi1 == Convexity::Convex);
    CHECK(rep.tdm_optimal);
    CHECK(rep.strategy == Strategy::PureTdmAToC);
}

TEST_CASE("classification shortcut for zero cross gains") {
    const auto rep = classify({2, 0, 3, 0, 1});
    CHECK(rep.class_phi2 == Convexity::Concave);
    CHECK(rep.class_phi1 == Convexity::Concave);
    CHECK(!rep.tdm_optimal);
    CHECK(rep.strategy == Strategy::PowerControlOnly);
}

TEST_CASE("tdm_optimal reference values") {
    CHECK(tdm_optimal({1, 3, 1, 3, 1}));
    CHECK(!tdm_optimal({1, 0.2, 1, 0.2, 1}));
    CHECK(!tdm_optimal({2, 0, 3, 0, 1}));
}

TEST_CASE("tdm_optimal agrees with the geometric chord test") {
    testsupport::ChannelGen gen(19);
    int checked = 0;
    for (int trial = 0; trial < 1000; ++trial) {
        const auto p = gen.params();
        if (std::fabs(testsupport::o_chord_margin(p)) <= 1e-9) continue;  // tie band
        CHECK(tdm_optimal(p) == testsupport::o_chord_above_b(p));
        ++checked;
    }
    CHECK(checked > 900);
}

TEST_CASE("symmetric threshold") {
    CHECK(symmetric_threshold_b2(1, 1) == Approx(std::sqrt(2.0)).epsilon(1e-14));
    CHECK(symmetric_threshold_b2(3, 1) == Approx(2.0).epsilon(1e-14));
    const double t = symmetric_threshold_b2(1e6, 1.0);
    CHECK(t / std::sqrt(1e6) == Approx(1.0).epsilon(1e-3));
    // flips tdm_optimal exactly at the threshold for the symmetric channel
    const double b_star = symmetric_threshold_b2(1.0, 1.0);
    CHECK(tdm_optimal({1, b_star + 1e-6, 1, b_star + 1e-6, 1}));
    CHECK(!tdm_optimal({1, b_star - 1e-6, 1, b_star - 1e-6, 1}));
}

TEST_CASE("interval-1 objective is strictly increasing in P2") {
    testsupport::ChannelGen gen(23);
    for (int trial = 0; trial < 200; ++trial) {
        const auto p = gen.params();
        const double r1 = gen.uniform(0.0, 1.0) * r1_junction(p);
        const double t1 = std::pow(2.0, r1) - 1.0;
        double prev = -1.0;
        for (int i = 0; i <= 64; ++i) {
            const double p2 = p.p_max * i / 64.0;
            const double v =
                testsupport::o_log2(1.0 + p.c * p2 / (1.0 + (p.d / p.a) * (1.0 + p.b * p2) * t1));
            CHECK(v > prev);
            prev = v;
        }
    }
}

TEST_CASE("potential lines never intersect") {
    testsupport::ChannelGen gen(29);
    for (int trial = 0; trial < 200; ++trial) {
        const auto p = gen.params();
        const double p2_lo = gen.uniform(0.0, 0.5) * p.p_max;
        const double p2_hi = p2_lo + gen.uniform(0.05, 0.5) * p.p_max;
        if (p.c * (p2_hi - p2_lo) < 1e-12) continue;
        for (int i = 0; i <= 32; ++i) {
            // common r1 reached on both lines via the power relation
            const double r1 = testsupport::o_rate1(p, p.p_max * i / 32.0, p2_hi);
            const double t1 = std::pow(2.0, r1) - 1.0;
            const double p1_lo = (1.0 + p.b * p2_lo) * t1 / p.a;
            const double p1_hi = (1.0 + p.b * p2_hi) * t1 / p.a;
            const double r2_lo = testsupport::o_rate2(p, p1_lo, p2_lo);
            const double r2_hi = testsupport::o_rate2(p, p1_hi, p2_hi);
            CHECK(r2_hi > r2_lo);  // strict ordering, no crossings
        }
    }
}

TEST_CASE("sign agreement between closed-form and numeric second derivative") {
    for (const auto& p : {kCaseI, kCaseII, kCaseIII, kCaseIV}) {
        for (int i = 1; i < 40; ++i) {
            const double p1 = p.p_max * i / 40.0;
            const auto q = inflection_thresholds(p);
            if (std::fabs(p1 - q[0]) <= 1e-3) continue;
            const double closed = second_derivative_phi2(p, p1);
            const double numeric = testsupport::o_phi2_second_difference(p, p1);
            CHECK(closed * numeric > 0.0);
        }
    }
}

TEST_CASE("inflection always starts concave near the axis") {
    const auto q = inflection_thresholds(kCaseII);
    REQUIRE(q[0] > 0.0);
    REQUIRE(q[0] < kCaseII.p_max);
    CHECK(second_derivative_phi2(kCaseII, 0.5 * q[0]) < 0.0);
    CHECK(second_derivative_phi2(kCaseII, q[0] + 0.5 * (kCaseII.p_max - q[0])) > 0.0);
}

TEST_CASE("symmetric channels have equal thresholds") {
    testsupport::ChannelGen gen(31);
    for (int trial = 0; trial < 200; ++trial) {
        auto p = gen.symmetric_params();
        if (p.b == 0.0) continue;
        const auto q = inflection_thresholds(p);
        CHECK(q[0] == Approx(q[1]).epsilon(1e-12));
    }
}

TEST_CASE("above the symmetric threshold both frontiers are convex") {
    testsupport::ChannelGen gen(37);
    for (int trial = 0; trial < 200; ++trial) {
        auto p = gen.symmetric_params();
        const double b_star = symmetric_threshold_b2(p.a, p.p_max);
        p.b = p.d = b_star * (1.0 + gen.uniform(0.0, 3.0));
        const auto q = inflection_thresholds(p);
        CHECK(q[0] <= 1e-12);
        CHECK(q[1] <= 1e-12);
    }
}

TEST_CASE("classification tolerance prefers the non-inflection class") {
    // bisect d until q1 sits within the tolerance band around P_max
    TwoUserParams p{10, 1, 10, 1, 1};
    double lo = 0.1, hi = 4.0;  // q1 decreasing in d
    for (int it = 0; it < 200; ++it) {
        p.d = 0.5 * (lo + hi);
        const double q1 = inflection_thresholds(p)[0];
        if (q1 > p.p_max)
            lo = p.d;
        else
            hi = p.d;
    }
    p.d = 0.5 * (lo + hi);
    REQUIRE(std::fabs(inflection_thresholds(p)[0] - p.p_max) < 1e-10);
    CHECK(classify(p).class_phi2 != Convexity::Inflection);
}

TEST_CASE("trace is strictly increasing with exact endpoints") {
    testsupport::ChannelGen gen(41);
    for (int trial = 0; trial < 50; ++trial) {
        const auto p = gen.params();
        const auto trace = trace_frontier(p, 64);
        REQUIRE(!trace.samples.empty());
        CHECK(trace.samples.front().r1 == 0.0);
        CHECK(trace.samples.back().r1 == Approx(r1_max(p)).epsilon(1e-15));
        for (std::size_t i = 1; i < trace.samples.size(); ++i)
            CHECK(trace.samples[i].r1 > trace.samples[i - 1].r1);
        for (const auto& s : trace.samples) {
            CHECK(s.p1 >= 0.0);
            CHECK(s.p1 <= p.p_max);
            CHECK(s.p2 >= 0.0);
            CHECK(s.p2 <= p.p_max);
            // rate consistency of each sample
            CHECK(std::fabs(testsupport::o_rate1(p, s.p1, s.p2) - s.r1) <= 1e-9);
            CHECK(std::fabs(testsupport::o_rate2(p, s.p1, s.p2) - s.r2) <= 1e-9);
        }
    }
}
