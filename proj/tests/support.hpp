// Copyright 2026 The icregion Authors
// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0
//
// Shared test fixtures: the seeded random channel distribution (gains
// log-uniform over +/-20 dB, P_max in {0.1, 1, 10}) and independent
// re-implementations of the closed forms used as oracles. The oracle
// formulas here are written from scratch against the model definition and
// must stay independent of the library implementation.

#pragma once

#include <cmath>
#include <random>
#include <vector>

#include "icregion/channel.hpp"

namespace testsupport {

class ChannelGen {
  public:
    explicit ChannelGen(std::uint64_t seed) : gen_(seed) {}

    double gain() { return std::pow(10.0, db_(gen_) / 10.0); }

    double p_max() {
        static const double choices[] = {0.1, 1.0, 10.0};
        return choices[pick_(gen_)];
    }

    icregion::TwoUserParams params() {
        icregion::TwoUserParams p;
        p.a = gain();
        p.b = gain();
        p.c = gain();
        p.d = gain();
        p.p_max = p_max();
        return p;
    }

    icregion::TwoUserParams symmetric_params() {
        icregion::TwoUserParams p;
        p.a = p.c = gain();
        p.b = p.d = gain();
        p.p_max = p_max();
        return p;
    }

    icregion::ChannelInstance channel(int n) {
        icregion::ChannelInstance ch;
        ch.n = n;
        ch.noise_var = 1.0;
        ch.p_max = p_max();
        ch.gains.resize(static_cast<std::size_t>(n) * n);
        for (auto& g : ch.gains) g = gain();
        return ch;
    }

    double uniform(double lo, double hi) {
        return lo + (hi - lo) * uni_(gen_);
    }

  private:
    std::mt19937_64 gen_;
    std::uniform_real_distribution<double> db_{-20.0, 20.0};
    std::uniform_int_distribution<int> pick_{0, 2};
    std::uniform_real_distribution<double> uni_{0.0, 1.0};
};

// ----- independent closed-form oracles -------------------------------------

inline double o_log2(double x) { return std::log(x) / std::log(2.0); }

inline double o_rate1(const icregion::TwoUserParams& p, double p1, double p2) {
    return o_log2(1.0 + p.a * p1 / (1.0 + p.b * p2));
}

inline double o_rate2(const icregion::TwoUserParams& p, double p1, double p2) {
    return o_log2(1.0 + p.c * p2 / (1.0 + p.d * p1));
}

// phi2 without domain guards; valid wherever the SINR stays positive.
inline double o_phi2(const icregion::TwoUserParams& p, double r1) {
    const double t1 = std::pow(2.0, r1) - 1.0;
    return o_log2(1.0 + p.c * p.p_max / (1.0 + (p.d / p.a) * (1.0 + p.b * p.p_max) * t1));
}

inline double o_phi1(const icregion::TwoUserParams& p, double r1) {
    const double t1 = std::pow(2.0, r1) - 1.0;
    return o_log2(1.0 + (p.c / p.b) * (p.a * p.p_max - t1) / (t1 * (1.0 + p.d * p.p_max)));
}

inline double o_r1_of_p1(const icregion::TwoUserParams& p, double p1) {
    return o_log2(1.0 + p.a * p1 / (1.0 + p.b * p.p_max));
}

// centered second difference of phi2 in r1 coordinates at a given p1
inline double o_phi2_second_difference(const icregion::TwoUserParams& p, double p1,
                                       double h = 1e-4) {
    const double r1 = o_r1_of_p1(p, p1);
    return (o_phi2(p, r1 + h) - 2.0 * o_phi2(p, r1) + o_phi2(p, r1 - h)) / (h * h);
}

// TDM check straight from the geometry: the A-C chord at r1 = R1(P,P)
// sits at or above point B.
inline bool o_chord_above_b(const icregion::TwoUserParams& p) {
    const double ay = o_rate2(p, 0.0, p.p_max);
    const double cx = o_rate1(p, p.p_max, 0.0);
    const double bx = o_rate1(p, p.p_max, p.p_max);
    const double by = o_rate2(p, p.p_max, p.p_max);
    const double chord = ay * (1.0 - bx / cx);
    return chord >= by;
}

// relative margin of the chord test, for excluding ties
inline double o_chord_margin(const icregion::TwoUserParams& p) {
    const double ay = o_rate2(p, 0.0, p.p_max);
    const double cx = o_rate1(p, p.p_max, 0.0);
    const double bx = o_rate1(p, p.p_max, p.p_max);
    const double by = o_rate2(p, p.p_max, p.p_max);
    const double chord = ay * (1.0 - bx / cx);
    return (chord - by) / std::max({1.0, std::fabs(chord), std::fabs(by)});
}

}  // namespace testsupport
