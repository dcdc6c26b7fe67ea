// Copyright 2026 The icregion Authors
// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cmath>
#include <vector>

#include "icregion/errors.hpp"

namespace icregion {

using PowerVector = std::vector<double>;
using RatePoint = std::vector<double>;

/// An n-user Gaussian interference channel with flat power gains.
///
/// `gains` is row-major with one row per receiver: entry (i, j) is the
/// linear power gain from transmitter j at receiver i. The diagonal
/// carries the desired links. All transmitters share the same peak power
/// `p_max` and all receivers see noise power `noise_var`.
struct ChannelInstance {
    int n = 0;
    std::vector<double> gains;  // n*n, row-major, receiver-major
    double noise_var = 1.0;
    double p_max = 1.0;

    double gain(int i, int j) const { return gains[static_cast<std::size_t>(i) * n + j]; }

    /// Checks shape and sign invariants; throws BadInput on violation.
    void validate() const;
};

/// Noise-normalized two-user coordinates: a = g11/sigma^2, b = g12/sigma^2,
/// c = g22/sigma^2, d = g21/sigma^2.
struct TwoUserParams {
    double a = 0.0;
    double b = 0.0;
    double c = 0.0;
    double d = 0.0;
    double p_max = 0.0;
};

/// Builds the 2x2 channel [[a, b], [d, c]] with unit noise.
ChannelInstance two_user_channel(const TwoUserParams& p);

/// Symmetric n-user channel: diagonal a, off-diagonal b, unit noise.
ChannelInstance symmetric_channel(int n, double a, double b, double p_max);

/// Shannon rate of every pair with interference treated as noise:
/// r_i = log2(1 + g_ii p_i / (noise + sum_{j != i} g_ij p_j)).
/// Throws DimensionMismatch / PowerOutOfRange.
RatePoint rate_vector(const ChannelInstance& ch, const PowerVector& p);

/// The SINR of pair i (0-based) at power vector p.
double sinr(const ChannelInstance& ch, const PowerVector& p, int i);

/// Noise-normalizes a 2-user instance. Throws WrongDimension when n != 2
/// and DegenerateChannel when a direct gain vanishes.
TwoUserParams normalize_two_user(const ChannelInstance& ch);

inline double db_to_linear(double db) { return std::pow(10.0, db / 10.0); }
inline double linear_to_db(double lin) { return 10.0 * std::log10(lin); }

}  // namespace icregion
