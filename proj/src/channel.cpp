// Copyright 2026 The icregion Authors
// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0

#include "icregion/channel.hpp"

#include <cmath>
#include <string>

namespace icregion {

namespace {
constexpr double kInvLn2 = 1.4426950408889634;  // 1/ln(2)
}

void ChannelInstance::validate() const {
    if (n < 1) fail(Errc::BadInput, "channel needs n >= 1, got n=" + std::to_string(n));
    if (gains.size() != static_cast<std::size_t>(n) * n)
        fail(Errc::BadInput, "gain matrix must be n*n");
    for (double g : gains)
        if (!(g >= 0.0) || !std::isfinite(g)) fail(Errc::BadInput, "gains must be finite and >= 0");
    if (!(noise_var > 0.0)) fail(Errc::BadInput, "noise_var must be > 0");
    if (!(p_max > 0.0)) fail(Errc::BadInput, "p_max must be > 0");
}

ChannelInstance two_user_channel(const TwoUserParams& p) {
    ChannelInstance ch;
    ch.n = 2;
    ch.gains = {p.a, p.b, p.d, p.c};
    ch.noise_var = 1.0;
    ch.p_max = p.p_max;
    return ch;
}

ChannelInstance symmetric_channel(int n, double a, double b, double p_max) {
    ChannelInstance ch;
    ch.n = n;
    ch.gains.assign(static_cast<std::size_t>(n) * n, b);
    for (int i = 0; i < n; ++i) ch.gains[static_cast<std::size_t>(i) * n + i] = a;
    ch.noise_var = 1.0;
    ch.p_max = p_max;
    return ch;
}

static void check_powers(const ChannelInstance& ch, const PowerVector& p) {
    if (p.size() != static_cast<std::size_t>(ch.n))
        fail(Errc::DimensionMismatch, "power vector length " + std::to_string(p.size()) +
                                          " but channel has n=" + std::to_string(ch.n));
    for (double pi : p)
        if (!(pi >= 0.0) || pi > ch.p_max)
            fail(Errc::PowerOutOfRange, "power " + std::to_string(pi) + " outside [0, " +
                                            std::to_string(ch.p_max) + "]");
}

double sinr(const ChannelInstance& ch, const PowerVector& p, int i) {
    check_powers(ch, p);
    if (i < 0 || i >= ch.n) fail(Errc::DimensionMismatch, "pair index out of range");
    double den = ch.noise_var;
    for (int j = 0; j < ch.n; ++j)
        if (j != i) den += ch.gain(i, j) * p[j];
    return ch.gain(i, i) * p[i] / den;
}

RatePoint rate_vector(const ChannelInstance& ch, const PowerVector& p) {
    check_powers(ch, p);
    RatePoint r(ch.n);
    for (int i = 0; i < ch.n; ++i) {
        double den = ch.noise_var;
        for (int j = 0; j < ch.n; ++j)
            if (j != i) den += ch.gain(i, j) * p[j];
        r[i] = std::log1p(ch.gain(i, i) * p[i] / den) * kInvLn2;
    }
    return r;
}

TwoUserParams normalize_two_user(const ChannelInstance& ch) {
    ch.validate();
    if (ch.n != 2) fail(Errc::WrongDimension, "expected n=2, got n=" + std::to_string(ch.n));
    if (!(ch.gain(0, 0) > 0.0) || !(ch.gain(1, 1) > 0.0))
        fail(Errc::DegenerateChannel, "a direct gain is zero");
    TwoUserParams p;
    p.a = ch.gain(0, 0) / ch.noise_var;
    p.b = ch.gain(0, 1) / ch.noise_var;
    p.c = ch.gain(1, 1) / ch.noise_var;
    p.d = ch.gain(1, 0) / ch.noise_var;
    p.p_max = ch.p_max;
    return p;
}

}  // namespace icregion
