// Copyright 2026 The icregion Authors
// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <filesystem>
#include <string>

#include "icregion/channel.hpp"
#include "icregion/crystallize.hpp"
#include "icregion/frontier2.hpp"
#include "icregion/nregion.hpp"
#include "icregion/oracle.hpp"

namespace icregion {

/// Full-precision (17 significant digit) decimal rendering of a double,
/// locale independent.
std::string fmt17(double v);

/// Channel file: {"n", "gains" (n x n), "units" ("linear"|"dB", applies to
/// gains), "noise_var", "p_max"}. Throws IoError with field context.
ChannelInstance read_channel_json(const std::filesystem::path& path);
ChannelInstance parse_channel_json(const std::string& text);

std::string channel_to_json(const ChannelInstance& ch);
void write_channel_json(const ChannelInstance& ch, const std::filesystem::path& path);

/// FrontierTrace CSV: header r1,r2,p1,p2.
std::string frontier_to_csv(const FrontierTrace& trace);

/// ConvexityReport JSON: q1,q2,class_phi2,class_phi1,inflection_d,
/// tdm_optimal,strategy. Non-finite thresholds serialize as null.
std::string convexity_to_json(const ConvexityReport& rep);

const char* convexity_name(Convexity c);
const char* strategy_name(Strategy s);

/// Hull JSON: corners:[{k,mask,rates}], boundary (polyline | facets |
/// support_samples), dominated:[k].
std::string hull_to_json(const CrystallizedHull& h);

/// Theta CSV: k,mask,theta (all 2^n-1 rows).
std::string theta_to_csv(const ThetaVector& theta, int n);

/// SurfaceSample CSV: p1..pn,r1..rn.
std::string surface_to_csv(const SurfaceSample& s, int n);

/// GapReport CSV: b_db,area_pc,area_crystal,max_gap_pct,gap_argmax_r1.
std::string gap_report_to_csv(const std::vector<GapRow>& rows);

/// Geometry JSON: {n,a,b,p_max,ob,obprime,b_star_n,b_star_inf}.
std::string geometry_to_json(const SymmetricGeometry& g);

void write_text(const std::string& text, const std::filesystem::path& path);

}  // namespace icregion
