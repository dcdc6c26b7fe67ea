// Copyright 2026 The icregion Authors
// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0

#include "icregion/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace icregion {

using nlohmann::json;

std::string fmt17(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

static std::string slurp(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open " + path.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

ChannelInstance parse_channel_json(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw IoError(std::string("channel file: ") + e.what());
    }
    auto need = [&](const char* field) -> const json& {
        if (!j.contains(field)) throw IoError(std::string("channel file: missing field '") +
                                              field + "'");
        return j.at(field);
    };
    ChannelInstance ch;
    try {
        ch.n = need("n").get<int>();
        ch.noise_var = need("noise_var").get<double>();
        ch.p_max = need("p_max").get<double>();
        const json& gains = need("gains");
        if (!gains.is_array() || gains.size() != static_cast<std::size_t>(ch.n))
            throw IoError("channel file: 'gains' must be an n x n array");
        std::string units = "linear";
        if (j.contains("units")) units = j.at("units").get<std::string>();
        if (units != "linear" && units != "dB")
            throw IoError("channel file: 'units' must be \"linear\" or \"dB\"");
        ch.gains.reserve(static_cast<std::size_t>(ch.n) * ch.n);
        for (const auto& row : gains) {
            if (!row.is_array() || row.size() != static_cast<std::size_t>(ch.n))
                throw IoError("channel file: 'gains' must be an n x n array");
            for (const auto& v : row) {
                const double g = v.get<double>();
                ch.gains.push_back(units == "dB" ? db_to_linear(g) : g);
            }
        }
    } catch (const json::exception& e) {
        throw IoError(std::string("channel file: ") + e.what());
    }
    try {
        ch.validate();
    } catch (const DomainError& e) {
        throw IoError(std::string("channel file: ") + e.what());
    }
    return ch;
}

ChannelInstance read_channel_json(const std::filesystem::path& path) {
    return parse_channel_json(slurp(path));
}

std::string channel_to_json(const ChannelInstance& ch) {
    std::ostringstream out;
    out << "{\n  \"n\": " << ch.n << ",\n  \"gains\": [";
    for (int i = 0; i < ch.n; ++i) {
        out << (i ? ",\n            [" : "[");
        for (int j = 0; j < ch.n; ++j) out << (j ? ", " : "") << fmt17(ch.gain(i, j));
        out << "]";
    }
    out << "],\n  \"units\": \"linear\",\n  \"noise_var\": " << fmt17(ch.noise_var)
        << ",\n  \"p_max\": " << fmt17(ch.p_max) << "\n}\n";
    return out.str();
}

void write_channel_json(const ChannelInstance& ch, const std::filesystem::path& path) {
    write_text(channel_to_json(ch), path);
}

std::string frontier_to_csv(const FrontierTrace& trace) {
    std::ostringstream out;
    out << "r1,r2,p1,p2\n";
    for (const auto& s : trace.samples)
        out << fmt17(s.r1) << ',' << fmt17(s.r2) << ',' << fmt17(s.p1) << ',' << fmt17(s.p2)
            << '\n';
    return out.str();
}

const char* convexity_name(Convexity c) {
    switch (c) {
        case Convexity::Concave: return "concave";
        case Convexity::Inflection: return "inflection";
        case Convexity::Convex: return "convex";
    }
    return "?";
}

const char* strategy_name(Strategy s) {
    switch (s) {
        case Strategy::PowerControlOnly: return "power_control_only";
        case Strategy::ConcaveThenTimeShareFromD: return "concave_then_time_share_from_d";
        case Strategy::TimeShareThroughBOrPhi1: return "time_share_through_b_or_phi1";
        case Strategy::PureTdmAToC: return "pure_tdm_a_to_c";
    }
    return "?";
}

static std::string json_number_or_null(double v) {
    return std::isfinite(v) ? fmt17(v) : std::string("null");
}

std::string convexity_to_json(const ConvexityReport& rep) {
    std::ostringstream out;
    out << "{\n  \"q1\": " << json_number_or_null(rep.q1)
        << ",\n  \"q2\": " << json_number_or_null(rep.q2)
        << ",\n  \"class_phi2\": \"" << convexity_name(rep.class_phi2) << "\""
        << ",\n  \"class_phi1\": \"" << convexity_name(rep.class_phi1) << "\"";
    if (rep.inflection_d)
        out << ",\n  \"inflection_d\": {\"r1\": " << fmt17((*rep.inflection_d)[0])
            << ", \"r2\": " << fmt17((*rep.inflection_d)[1]) << "}";
    else
        out << ",\n  \"inflection_d\": null";
    out << ",\n  \"tdm_optimal\": " << (rep.tdm_optimal ? "true" : "false")
        << ",\n  \"strategy\": \"" << strategy_name(rep.strategy) << "\"\n}\n";
    return out.str();
}

std::string hull_to_json(const CrystallizedHull& h) {
    std::ostringstream out;
    out << "{\n  \"n\": " << h.n << ",\n  \"corners\": [";
    bool first = true;
    for (const auto& c : h.corners) {
        out << (first ? "\n" : ",\n") << "    {\"k\": " << c.k << ", \"mask\": \""
            << mask_string(static_cast<std::uint32_t>(c.k), h.n) << "\", \"rates\": [";
        for (std::size_t i = 0; i < c.rates.size(); ++i)
            out << (i ? ", " : "") << fmt17(c.rates[i]);
        out << "]}";
        first = false;
    }
    out << "\n  ],\n  \"boundary\": {";
    if (h.n <= 2) {
        out << "\"type\": \"polyline\", \"points\": [";
        for (std::size_t i = 0; i < h.polyline.size(); ++i) {
            out << (i ? ", " : "") << "[";
            for (std::size_t d = 0; d < h.polyline[i].size(); ++d)
                out << (d ? ", " : "") << fmt17(h.polyline[i][d]);
            out << "]";
        }
        out << "]";
    } else if (h.n == 3) {
        out << "\"type\": \"facets\", \"triangles\": [";
        for (std::size_t i = 0; i < h.facets.size(); ++i)
            out << (i ? ", " : "") << "[" << h.facets[i][0] << ", " << h.facets[i][1] << ", "
                << h.facets[i][2] << "]";
        out << "]";
    } else {
        out << "\"type\": \"support_samples\", \"samples\": [";
        for (std::size_t i = 0; i < h.support.size(); ++i) {
            const auto& s = h.support[i];
            out << (i ? ",\n    " : "\n    ") << "{\"direction\": [";
            for (std::size_t d = 0; d < s.direction.size(); ++d)
                out << (d ? ", " : "") << fmt17(s.direction[d]);
            out << "], \"value\": " << fmt17(s.value) << ", \"theta_corner\": " << s.theta_corner
                << "}";
        }
        out << "\n  ]";
    }
    out << "},\n  \"dominated\": [";
    for (std::size_t i = 0; i < h.dominated.size(); ++i)
        out << (i ? ", " : "") << h.dominated[i];
    out << "]\n}\n";
    return out.str();
}

std::string theta_to_csv(const ThetaVector& theta, int n) {
    std::ostringstream out;
    out << "k,mask,theta\n";
    for (std::size_t idx = 0; idx < theta.size(); ++idx)
        out << (idx + 1) << ',' << mask_string(static_cast<std::uint32_t>(idx + 1), n) << ','
            << fmt17(theta[idx]) << '\n';
    return out.str();
}

std::string surface_to_csv(const SurfaceSample& s, int n) {
    std::ostringstream out;
    for (int i = 0; i < n; ++i) out << (i ? "," : "") << 'p' << (i + 1);
    for (int i = 0; i < n; ++i) out << ",r" << (i + 1);
    out << '\n';
    for (std::size_t c = 0; c < s.powers.size(); ++c) {
        for (int i = 0; i < n; ++i) out << (i ? "," : "") << fmt17(s.powers[c][i]);
        for (int i = 0; i < n; ++i) out << ',' << fmt17(s.rates[c][i]);
        out << '\n';
    }
    return out.str();
}

std::string gap_report_to_csv(const std::vector<GapRow>& rows) {
    std::ostringstream out;
    out << "b_db,area_pc,area_crystal,max_gap_pct,gap_argmax_r1\n";
    for (const auto& r : rows)
        out << fmt17(r.b_db) << ',' << fmt17(r.area_pc) << ',' << fmt17(r.area_crystal) << ','
            << fmt17(r.max_gap_pct) << ',' << fmt17(r.gap_argmax_r1) << '\n';
    return out.str();
}

std::string geometry_to_json(const SymmetricGeometry& g) {
    std::ostringstream out;
    out << "{\n  \"n\": " << g.n << ",\n  \"a\": " << fmt17(g.a) << ",\n  \"b\": " << fmt17(g.b)
        << ",\n  \"p_max\": " << fmt17(g.p_max) << ",\n  \"ob\": " << fmt17(g.ob)
        << ",\n  \"obprime\": " << fmt17(g.obprime) << ",\n  \"b_star_n\": " << fmt17(g.b_star_n)
        << ",\n  \"b_star_inf\": " << fmt17(g.b_star_inf) << "\n}\n";
    return out.str();
}

void write_text(const std::string& text, const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot write " + path.string());
    out << text;
    if (!out) throw IoError("failed writing " + path.string());
}

}  // namespace icregion
