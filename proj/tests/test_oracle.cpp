// Copyright 2026 The icregion Authors
// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0

#include <algorithm>
#include <cmath>

#include "doctest.h"
#include "icregion/crystallize.hpp"
#include "icregion/oracle.hpp"
#include "icregion/power_grid.hpp"
#include "support.hpp"

using namespace icregion;
using doctest::Approx;

TEST_CASE("grid_pareto on the 2x2 corner grid") {
    const auto strong = two_user_channel({1, 3, 1, 3, 1});
    auto pts = grid_pareto(strong, 2, Exec::Serial);
    // corners A, B, C are mutually non-dominated here; origin never survives
    REQUIRE(pts.size() == 3);
    for (const auto& r : pts) CHECK((r[0] > 0.0 || r[1] > 0.0));

    const auto free2 = two_user_channel({1, 0, 1, 0, 1});
    pts = grid_pareto(free2, 2, Exec::Serial);
    REQUIRE(pts.size() == 1);
    CHECK(pts[0][0] == Approx(1.0).epsilon(1e-12));
    CHECK(pts[0][1] == Approx(1.0).epsilon(1e-12));

    CHECK_THROWS_AS(grid_pareto(symmetric_channel(5, 1, 1, 1), 50, Exec::Serial), DomainError);
}

TEST_CASE("grid_pareto stays below the analytic frontier") {
    const TwoUserParams p{10, 1, 10, 1, 1};
    const auto pts = grid_pareto(two_user_channel(p), 201, Exec::Serial);
    for (const auto& r : pts) {
        const double r1 = std::min(r[0], r1_max(p));
        CHECK(r[1] <= frontier(p, r1).r2 + 1e-6);
    }
}

TEST_CASE("area under the frontier") {
    // no interference: exact rectangle
    CHECK(area_power_control({2, 0, 3, 0, 1}, 512) ==
          Approx(std::log2(3.0) * std::log2(4.0)).epsilon(1e-12));
    // strong symmetric interference stays inside the TDM triangle
    CHECK(area_power_control({1, 3, 1, 3, 1}, 512) < 0.5);
    // symmetry under swapping the users, up to discretization error
    const double a1 = area_power_control({2, 0.7, 5, 1.3, 1}, 2048);
    const double a2 = area_power_control({5, 1.3, 2, 0.7, 1}, 2048);
    CHECK(a1 == Approx(a2).epsilon(1e-5));
}

TEST_CASE("area converges with refinement") {
    const TwoUserParams p{10, 1, 10, 4, 1};
    const double a1 = area_power_control(p, 256);
    const double a2 = area_power_control(p, 512);
    const double a4 = area_power_control(p, 1024);
    CHECK(std::fabs(a4 - a2) < std::fabs(a2 - a1));
    CHECK(std::fabs(a2 - a1) / a2 < 1e-6);
}

TEST_CASE("crystallized area") {
    CHECK(area_crystallized(two_user_channel({1, 3, 1, 3, 1})) == Approx(0.5).epsilon(1e-12));
    CHECK(area_crystallized(two_user_channel({2, 0, 3, 0, 1})) ==
          Approx(std::log2(3.0) * std::log2(4.0)).epsilon(1e-12));
    const double b = 0.8744691179161412;  // B for the weak symmetric channel
    CHECK(area_crystallized(two_user_channel({1, 0.2, 1, 0.2, 1})) ==
          Approx(b).epsilon(1e-12));
    CHECK_THROWS_AS(area_crystallized(symmetric_channel(3, 1, 1, 1)), DomainError);
}

TEST_CASE("max_gap directions") {
    // identical regions: both directions zero
    auto g = max_gap({2, 0, 3, 0, 1}, 256);
    CHECK(g.loss_pct == 0.0);
    CHECK(g.gain_pct == 0.0);
    // strong interference: the chord dominates power control everywhere
    g = max_gap({1, 3, 1, 3, 1}, 256);
    CHECK(g.loss_pct == 0.0);
    CHECK(g.gain_pct > 10.0);
    // weak interference: small loss, no gain
    g = max_gap({1, 0.2, 1, 0.2, 1}, 1024);
    CHECK(g.loss_pct > 0.0);
    CHECK(g.loss_pct < 1.0);
    CHECK(g.gain_pct == 0.0);
}

TEST_CASE("gap and area consistency when both vanish") {
    const auto g = max_gap({2, 0, 3, 0, 1}, 256);
    REQUIRE(g.loss_pct == 0.0);
    REQUIRE(g.gain_pct == 0.0);
    const double pc = area_power_control({2, 0, 3, 0, 1}, 512);
    const double cr = area_crystallized(two_user_channel({2, 0, 3, 0, 1}));
    CHECK(pc == Approx(cr).epsilon(1e-9));
}

TEST_CASE("symmetric sweep reference bands") {
    const auto rows = sweep_b_symmetric(1.0, 1.0, -20.0, 0.0, 5.0, 256, Exec::Serial);
    REQUIRE(rows.size() == 5);
    CHECK(rows.front().b_db == -20.0);
    // near-rectangle regime: areas agree within one percent
    CHECK(rows.front().area_crystal / rows.front().area_pc == Approx(1.0).epsilon(0.01));
    // b = 0 dB: B is on the hull and the areas stay close
    const auto& last = rows.back();
    CHECK(last.b_db == 0.0);
    CHECK(last.area_crystal >= last.area_pc * (1.0 - 0.015));
    for (const auto& r : rows) {
        CHECK(r.area_pc >= 0.0);
        CHECK(r.area_crystal >= 0.0);
        CHECK(r.max_gap_pct >= 0.0);
    }
}

TEST_CASE("verify_frontier on reference and random channels") {
    CHECK(verify_frontier({10, 1, 10, 1, 1}, 201, 1e-6, Exec::Serial).passed);
    CHECK(verify_frontier({10, 15, 10, 4, 1}, 201, 1e-6, Exec::Serial).passed);
    const auto rep = verify_frontier({2, 0, 3, 0, 1}, 101, 1e-6, Exec::Serial);
    CHECK(rep.passed);
    CHECK(rep.max_frontier_violation <= 0.0);

    testsupport::ChannelGen gen(83);
    for (int trial = 0; trial < 10; ++trial)
        CHECK(verify_frontier(gen.params(), 101, 1e-6, Exec::Serial).passed);
}

TEST_CASE("serial and parallel kernels produce identical bits") {
    const auto ch = two_user_channel({10, 1, 10, 4, 1});
    CHECK(eval_rate_grid_serial(ch, 101) == eval_rate_grid_omp(ch, 101));

    const auto ch3 = symmetric_channel(3, 1.0, 0.4, 1.0);
    std::vector<double> ps, pp;
    CHECK(eval_pinned_grid_serial(ch3, 1, 21, &ps) == eval_pinned_grid_omp(ch3, 1, 21, &pp));
    CHECK(ps == pp);

    const auto rows_s = sweep_b_symmetric(1.0, 1.0, -10.0, 0.0, 2.5, 128, Exec::Serial);
    const auto rows_p = sweep_b_symmetric(1.0, 1.0, -10.0, 0.0, 2.5, 128, Exec::Parallel);
    REQUIRE(rows_s.size() == rows_p.size());
    for (std::size_t i = 0; i < rows_s.size(); ++i) {
        CHECK(rows_s[i].area_pc == rows_p[i].area_pc);
        CHECK(rows_s[i].area_crystal == rows_p[i].area_crystal);
        CHECK(rows_s[i].max_gap_pct == rows_p[i].max_gap_pct);
        CHECK(rows_s[i].gap_argmax_r1 == rows_p[i].gap_argmax_r1);
    }

    const auto ch4 = symmetric_channel(4, 1.0, 0.7, 1.0);
    const auto hs = hull(ch4, 128, Exec::Serial);
    const auto hp = hull(ch4, 128, Exec::Parallel);
    REQUIRE(hs.support.size() == hp.support.size());
    for (std::size_t i = 0; i < hs.support.size(); ++i) {
        CHECK(hs.support[i].value == hp.support[i].value);
        CHECK(hs.support[i].theta_corner == hp.support[i].theta_corner);
    }
    CHECK(hs.dominated == hp.dominated);
}

TEST_CASE("pareto filter keeps exactly the non-dominated subset") {
    // hand-built point set with known answer
    const std::vector<double> pts = {1.0, 0.0, 0.0, 1.0, 0.6, 0.6, 0.5, 0.5, 1.0, 1.0};
    const auto keep = pareto_indices(pts, 2);
    REQUIRE(keep.size() == 1);
    CHECK(keep[0] == 4);  // (1,1) dominates everything

    // cross-check the skyline against a quadratic scan on random points
    testsupport::ChannelGen gen(89);
    for (int dim : {2, 3}) {
        std::vector<double> cloud(300 * dim);
        for (auto& v : cloud) v = gen.uniform(0.0, 1.0);
        const auto fast = pareto_indices(cloud, dim);
        std::vector<std::int64_t> slow;
        for (std::int64_t i = 0; i < 300; ++i) {
            bool dominated = false;
            for (std::int64_t j = 0; j < 300 && !dominated; ++j) {
                if (i == j) continue;
                bool all_ge = true, one_gt = false;
                for (int d = 0; d < dim; ++d) {
                    if (cloud[j * dim + d] < cloud[i * dim + d]) all_ge = false;
                    if (cloud[j * dim + d] > cloud[i * dim + d]) one_gt = true;
                }
                dominated = all_ge && one_gt;
            }
            if (!dominated) slow.push_back(i);
        }
        auto sorted_fast = fast;
        std::sort(sorted_fast.begin(), sorted_fast.end());
        CHECK(sorted_fast == slow);
    }
}
