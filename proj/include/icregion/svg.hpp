// Copyright 2026 The icregion Authors
// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string>

#include "icregion/channel.hpp"
#include "icregion/crystallize.hpp"
#include "icregion/frontier2.hpp"

namespace icregion {

/// Standalone SVG of the 2-user rate region: both power-control frontiers,
/// the crystallized boundary, corner markers A/B/C and the inflection point
/// D when present. Timestamp free, so repeated runs are byte identical.
/// Throws WrongDimension for n != 2.
std::string render_region_svg(const ChannelInstance& ch, int samples_per_interval = 256);

}  // namespace icregion
