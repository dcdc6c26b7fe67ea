// Copyright 2026 The icregion Authors
// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0
//
// Command line front end. Sub-commands map one-to-one onto the library:
//
//   rates       rate vector at a given power vector (stdout CSV)
//   frontier    sampled 2-user frontier -> frontier.csv [region.svg]
//   classify    convexity report -> convexity.json
//   crystallize corner points and hull -> hull.json [region.svg]
//   decompose   time-sharing weights for a target -> theta.csv
//   surface     pinned n-user surface sample -> surface.csv
//   sweep       symmetric-channel b sweep -> gap_report.csv
//   verify      grid oracle vs closed forms (stdout report)
//   tdm         symmetric TDM geometry -> geometry.json
//
// Exit codes: 0 success, 1 domain error, 2 I/O or parse error.

#include <filesystem>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "icregion/io.hpp"
#include "icregion/svg.hpp"

namespace fs = std::filesystem;
using namespace icregion;

namespace {

std::vector<double> parse_number_list(const std::string& text) {
    std::vector<double> out;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        try {
            out.push_back(std::stod(tok));
        } catch (const std::exception&) {
            throw IoError("cannot parse number '" + tok + "'");
        }
    }
    if (out.empty()) throw IoError("empty number list");
    return out;
}

struct SweepRange {
    double lo = 0.0, hi = 0.0, step = 0.0;
};

SweepRange parse_sweep_range(const std::string& text) {
    SweepRange r;
    std::stringstream ss(text);
    std::string tok;
    std::vector<double> vals;
    while (std::getline(ss, tok, ':')) {
        try {
            vals.push_back(std::stod(tok));
        } catch (const std::exception&) {
            throw IoError("cannot parse sweep bound '" + tok + "'");
        }
    }
    if (vals.size() != 3) throw IoError("sweep range must be lo:hi:step");
    r.lo = vals[0];
    r.hi = vals[1];
    r.step = vals[2];
    return r;
}

fs::path ensure_out_dir(const std::string& out) {
    fs::path dir(out);
    std::error_code ec;
    fs::create_directories(dir, ec);
    if (ec) throw IoError("cannot create output directory " + dir.string());
    return dir;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"achievable and crystallized rate regions of the n-user "
                 "interference channel with interference treated as noise"};
    app.require_subcommand(1);

    std::string input, out_dir = ".", format = "csv";
    std::string power_list, target_list, b_db_range;
    int samples = 512, support_dirs = 1024, grid = 201, pin = 1, nusers = 2;
    double a_gain = 1.0, b_gain = 1.0, pmax = 1.0, tol = 1e-6;

    auto add_io = [&](CLI::App* cmd, bool needs_input) {
        if (needs_input)
            cmd->add_option("--input", input, "channel JSON file")->required();
        cmd->add_option("--out", out_dir, "output directory (default .)");
    };

    auto* c_rates = app.add_subcommand("rates", "rate vector at a power vector");
    add_io(c_rates, true);
    c_rates->add_option("--power", power_list, "comma separated powers p1,..,pn")->required();

    auto* c_frontier = app.add_subcommand("frontier", "sampled power-control frontier");
    add_io(c_frontier, true);
    c_frontier->add_option("--samples", samples, "samples per interval (default 512)");
    c_frontier->add_option("--format", format, "csv | svg (svg adds region.svg)")
        ->check(CLI::IsMember({"csv", "svg"}));

    auto* c_classify = app.add_subcommand("classify", "convexity and strategy report");
    add_io(c_classify, true);

    auto* c_crystal = app.add_subcommand("crystallize", "corner points and crystallized hull");
    add_io(c_crystal, true);
    c_crystal->add_option("--samples", support_dirs, "support directions for n >= 4 (default 1024)");
    c_crystal->add_option("--format", format, "json | svg (svg adds region.svg)")
        ->check(CLI::IsMember({"json", "svg"}));

    auto* c_decomp = app.add_subcommand("decompose", "time-sharing weights for a rate target");
    add_io(c_decomp, true);
    c_decomp->add_option("--target", target_list, "target rates r1,..,rn")->required();

    auto* c_surface = app.add_subcommand("surface", "sample one power-control hyper-surface");
    add_io(c_surface, true);
    c_surface->add_option("--pin", pin, "transmitter held at P_max, 1-based (default 1)");
    c_surface->add_option("--grid", grid, "grid points per free power (default 201)");

    auto* c_sweep = app.add_subcommand("sweep", "symmetric-channel interference sweep");
    c_sweep->add_option("--a", a_gain, "direct gain a = c")->required();
    c_sweep->add_option("--pmax", pmax, "peak power")->required();
    c_sweep->add_option("--b-db", b_db_range, "cross gain sweep lo:hi:step in dB")->required();
    c_sweep->add_option("--samples", samples, "frontier samples per b (default 512)");
    c_sweep->add_option("--out", out_dir, "output directory (default .)");

    auto* c_verify = app.add_subcommand("verify", "brute-force grid check of the closed forms");
    add_io(c_verify, true);
    c_verify->add_option("--grid", grid, "grid points per power (default 201)");
    c_verify->add_option("--tol", tol, "tolerance (default 1e-6)");

    auto* c_tdm = app.add_subcommand("tdm", "symmetric TDM-optimality geometry");
    c_tdm->add_option("--a", a_gain, "direct gain")->required();
    c_tdm->add_option("--b", b_gain, "cross gain")->required();
    c_tdm->add_option("--pmax", pmax, "peak power")->required();
    c_tdm->add_option("--n", nusers, "number of users (default 2)");
    c_tdm->add_option("--out", out_dir, "output directory (default .)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);
        app.exit(e);
        return 2;
    }

    try {
        if (app.got_subcommand(c_rates)) {
            const auto ch = read_channel_json(input);
            const auto p = parse_number_list(power_list);
            const auto r = rate_vector(ch, p);
            std::ostringstream line;
            for (std::size_t i = 0; i < r.size(); ++i) line << (i ? "," : "") << fmt17(r[i]);
            std::cout << line.str() << "\n";
        } else if (app.got_subcommand(c_frontier)) {
            const auto ch = read_channel_json(input);
            const auto params = normalize_two_user(ch);
            const auto dir = ensure_out_dir(out_dir);
            write_text(frontier_to_csv(trace_frontier(params, samples)), dir / "frontier.csv");
            if (format == "svg") write_text(render_region_svg(ch), dir / "region.svg");
        } else if (app.got_subcommand(c_classify)) {
            const auto ch = read_channel_json(input);
            const auto dir = ensure_out_dir(out_dir);
            write_text(convexity_to_json(classify(normalize_two_user(ch))),
                       dir / "convexity.json");
        } else if (app.got_subcommand(c_crystal)) {
            const auto ch = read_channel_json(input);
            const auto dir = ensure_out_dir(out_dir);
            write_text(hull_to_json(hull(ch, support_dirs)), dir / "hull.json");
            if (format == "svg") write_text(render_region_svg(ch), dir / "region.svg");
        } else if (app.got_subcommand(c_decomp)) {
            const auto ch = read_channel_json(input);
            const auto target = parse_number_list(target_list);
            const auto dir = ensure_out_dir(out_dir);
            write_text(theta_to_csv(decompose(ch, target), ch.n), dir / "theta.csv");
        } else if (app.got_subcommand(c_surface)) {
            const auto ch = read_channel_json(input);
            if (pin < 1 || pin > ch.n)
                fail(Errc::DimensionMismatch, "--pin must be in 1..n");
            const auto dir = ensure_out_dir(out_dir);
            write_text(surface_to_csv(sample_surface(ch, pin - 1, grid), ch.n),
                       dir / "surface.csv");
        } else if (app.got_subcommand(c_sweep)) {
            const auto range = parse_sweep_range(b_db_range);
            const auto rows =
                sweep_b_symmetric(a_gain, pmax, range.lo, range.hi, range.step, samples);
            const auto dir = ensure_out_dir(out_dir);
            write_text(gap_report_to_csv(rows), dir / "gap_report.csv");
        } else if (app.got_subcommand(c_verify)) {
            const auto ch = read_channel_json(input);
            const auto rep = verify_frontier(normalize_two_user(ch), grid, tol);
            std::cout << "frontier_violation " << fmt17(rep.max_frontier_violation)
                      << "\npower_box_violation " << fmt17(rep.max_power_box_violation)
                      << "\nroundtrip_rate_err " << fmt17(rep.max_roundtrip_rate_err) << "\n"
                      << (rep.passed ? "PASS" : "FAIL") << "\n";
            if (!rep.passed) return 1;
        } else if (app.got_subcommand(c_tdm)) {
            const auto dir = ensure_out_dir(out_dir);
            write_text(geometry_to_json(symmetric_geometry(a_gain, b_gain, pmax, nusers)),
                       dir / "geometry.json");
        }
    } catch (const DomainError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const IoError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
