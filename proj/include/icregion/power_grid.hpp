// Copyright 2026 The icregion Authors
// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <vector>

#include "icregion/channel.hpp"
#include "icregion/parallel.hpp"

namespace icregion {

/// The i-th of m uniform grid values on [0, p_max], endpoints exact.
double grid_value(int i, int m, double p_max);

/// Rates over the full m^n power grid, flattened row-major: cell index
/// counts the last power dimension fastest; output cell c occupies
/// [c*n, (c+1)*n). Kernel pair: serial reference and OpenMP variant.
std::vector<double> eval_rate_grid_serial(const ChannelInstance& ch, int m);
std::vector<double> eval_rate_grid_omp(const ChannelInstance& ch, int m);
std::vector<double> eval_rate_grid(const ChannelInstance& ch, int m, Exec exec);

/// Rates over the (n-1)-dimensional grid with power `pin` held at p_max.
/// Also returns the power vectors when `powers_out` is non-null.
std::vector<double> eval_pinned_grid_serial(const ChannelInstance& ch, int pin, int m,
                                            std::vector<double>* powers_out);
std::vector<double> eval_pinned_grid_omp(const ChannelInstance& ch, int pin, int m,
                                         std::vector<double>* powers_out);
std::vector<double> eval_pinned_grid(const ChannelInstance& ch, int pin, int m,
                                     std::vector<double>* powers_out, Exec exec);

/// Indices of the coordinatewise non-dominated points among `pts`
/// (flattened, `dim` coordinates each), in (first coordinate descending)
/// skyline order. Exact; serial.
std::vector<std::int64_t> pareto_indices(const std::vector<double>& pts, int dim);

}  // namespace icregion
