// SPDX-License-Identifier: Apache-2.0
//
// irsbc: capacity and achievable-rate regions for IRS-aided MISO broadcast channels
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#include <doctest.h>

#include <atomic>
#include <cmath>
#include <sstream>

#include "irsbc/region.hpp"
#include "irsbc/zf.hpp"
#include "test_helpers.hpp"

using namespace irsbc;
using namespace irsbc::testing;

namespace {

// O(n^3) hull oracle: an ordered pair (i, j) forms a hull edge iff all other
// points lie strictly to its left; hull vertices are edge endpoints.
std::vector<std::array<double, 2>> brute_hull(std::vector<std::array<double, 2>> pts) {
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    std::vector<bool> keep(pts.size(), false);
    for (std::size_t i = 0; i < pts.size(); ++i)
        for (std::size_t j = 0; j < pts.size(); ++j) {
            if (i == j)
                continue;
            bool ok = true;
            for (std::size_t t = 0; t < pts.size() && ok; ++t) {
                if (t == i || t == j)
                    continue;
                const double c = (pts[j][0] - pts[i][0]) * (pts[t][1] - pts[i][1]) -
                                 (pts[j][1] - pts[i][1]) * (pts[t][0] - pts[i][0]);
                if (c <= 0.0)
                    ok = false;
            }
            if (ok)
                keep[i] = keep[j] = true;
        }
    std::vector<std::array<double, 2>> out;
    for (std::size_t i = 0; i < pts.size(); ++i)
        if (keep[i])
            out.push_back(pts[i]);
    return out;
}

Scenario no_irs_scenario(int m, int k) {
    Scenario scn = iid_scenario(m, k, /*n=*/1, /*b=*/1, /*pmax=*/1.0, /*sigma2=*/1.0);
    return scn;
}

} // namespace

TEST_CASE("bisection reaches the single-user capacity") {
    Rng rng(71, 0);
    const Scenario scn = no_irs_scenario(3, 1);
    BisectOptions opt;
    opt.eps2 = 1e-4;
    for (int trial = 0; trial < 10; ++trial) {
        const ChannelSet ch = direct_only_channels({random_cvec(rng, 3)});
        const BoundaryPoint bp = bisect_rate(scn, ch, RateProfile::make({1.0}), Scheme::dpc,
                                             Method::exhaustive, opt);
        const double exact = std::log2(1.0 + scn.Pmax * norm2(ch.h_d[0]) / scn.sigma2);
        CHECK(std::abs(bp.rates[0] - exact) <= opt.eps2);
    }
}

TEST_CASE("degenerate rate profile reduces to the single-user problem") {
    Rng rng(72, 0);
    const Scenario scn = no_irs_scenario(3, 2);
    const ChannelSet ch = direct_only_channels({random_cvec(rng, 3), random_cvec(rng, 3)});
    BisectOptions opt;
    opt.eps2 = 1e-4;
    for (Scheme scheme : {Scheme::dpc, Scheme::zf}) {
        const BoundaryPoint bp = bisect_rate(scn, ch, RateProfile::make({1.0, 0.0}), scheme,
                                             Method::exhaustive, opt);
        CHECK(bp.rates[1] == 0.0);
        const double exact = std::log2(1.0 + scn.Pmax * norm2(ch.h_d[0]) / scn.sigma2);
        CHECK(std::abs(bp.rates[0] - exact) <= opt.eps2);
    }
}

TEST_CASE("bisection lands on a feasible, nearly tight power") {
    Rng rng(73, 0);
    Scenario scn = iid_scenario(3, 2, 3, 2, /*pmax=*/2.0, /*sigma2=*/1.0);
    Rng chrng(73, 1);
    const ChannelSet ch = sample_channels(scn, chrng);
    BisectOptions opt;
    opt.eps2 = 1e-3;
    for (Scheme scheme : {Scheme::dpc, Scheme::zf}) {
        const BoundaryPoint bp = bisect_rate(scn, ch, RateProfile::make({0.4, 0.6}), scheme,
                                             Method::exhaustive, opt);
        double rate = 0.0;
        for (double r : bp.rates)
            rate += r;
        // re-evaluate the power at the returned phase configuration
        const SinrTargets t = SinrTargets::from_rate_target(bp.alpha, rate);
        const auto h = effective_channels(ch, bp.phase);
        const double p = scheme == Scheme::dpc ? dpc_min_power_value(h, t.gamma, scn.sigma2)
                                               : zf_min_power_value(h, t.gamma, scn.sigma2);
        CHECK(p <= scn.Pmax * (1.0 + 1e-12));
        CHECK(p >= scn.Pmax * (1.0 - 10.0 * opt.eps2));
    }
}

TEST_CASE("bisection accuracy tracks eps2") {
    Rng rng(74, 0);
    const Scenario scn = no_irs_scenario(2, 1);
    const ChannelSet ch = direct_only_channels({random_cvec(rng, 2)});
    const double exact = std::log2(1.0 + scn.Pmax * norm2(ch.h_d[0]) / scn.sigma2);
    for (double eps2 : {1e-2, 1e-3, 1e-5}) {
        BisectOptions opt;
        opt.eps2 = eps2;
        const BoundaryPoint bp = bisect_rate(scn, ch, RateProfile::make({1.0}), Scheme::dpc,
                                             Method::exhaustive, opt);
        CHECK(std::abs(bp.rates[0] - exact) <= eps2);
        CHECK(bp.rates[0] <= exact); // returned rate is the feasible endpoint
    }
}

TEST_CASE("zf infeasible when users exceed antennas") {
    Rng rng(75, 0);
    const Scenario scn = no_irs_scenario(2, 3);
    const ChannelSet ch = direct_only_channels(
        {random_cvec(rng, 2), random_cvec(rng, 2), random_cvec(rng, 2)});
    CHECK_THROWS_AS(bisect_rate(scn, ch, RateProfile::uniform(3), Scheme::zf,
                                Method::exhaustive, BisectOptions{}),
                    Infeasible);
}

TEST_CASE("sweep with S = 1 yields the two corner points") {
    Rng rng(76, 0);
    const Scenario scn = no_irs_scenario(3, 2);
    const ChannelSet ch = direct_only_channels({random_cvec(rng, 3), random_cvec(rng, 3)});
    const RegionBoundary b =
        sweep_boundary(scn, ch, Scheme::dpc, Method::exhaustive, 1, BisectOptions{});
    REQUIRE(b.points.size() == 2);
    CHECK(b.points[0].alpha.alpha[0] == 0.0); // alpha1 = 0 first
    CHECK(b.points[0].rates[0] == 0.0);
    CHECK(b.points[1].rates[1] == 0.0);
    // hull contains the origin and both corners
    bool has_origin = false;
    for (const auto &v : b.hull)
        if (v[0] == 0.0 && v[1] == 0.0)
            has_origin = true;
    CHECK(has_origin);
}

TEST_CASE("orthogonal channels: dpc and zf sweeps coincide") {
    const Scenario scn = no_irs_scenario(3, 2);
    const ChannelSet ch = direct_only_channels(orthogonal_channels(3, 2));
    BisectOptions opt;
    opt.eps2 = 1e-3;
    const RegionBoundary dpc =
        sweep_boundary(scn, ch, Scheme::dpc, Method::exhaustive, 8, opt);
    const RegionBoundary zf = sweep_boundary(scn, ch, Scheme::zf, Method::exhaustive, 8, opt);
    REQUIRE(dpc.points.size() == zf.points.size());
    for (std::size_t i = 0; i < dpc.points.size(); ++i)
        for (std::size_t u = 0; u < 2; ++u)
            CHECK(std::abs(dpc.points[i].rates[u] - zf.points[i].rates[u]) <= 1e-6);
}

TEST_CASE("dpc boundary dominates zf boundary pointwise") {
    Scenario scn = iid_scenario(3, 2, 2, 2, 1.5, 1.0);
    Rng rng(77, 0);
    const ChannelSet ch = sample_channels(scn, rng);
    BisectOptions opt;
    opt.eps2 = 1e-3;
    const RegionBoundary dpc =
        sweep_boundary(scn, ch, Scheme::dpc, Method::exhaustive, 6, opt);
    const RegionBoundary zf = sweep_boundary(scn, ch, Scheme::zf, Method::exhaustive, 6, opt);
    for (std::size_t i = 0; i < dpc.points.size(); ++i)
        for (std::size_t u = 0; u < 2; ++u)
            CHECK(dpc.points[i].rates[u] >= zf.points[i].rates[u] - (opt.eps2 + 1e-9));
}

TEST_CASE("min power rises with the rate target") {
    Scenario scn = iid_scenario(3, 2, 2, 2);
    Rng rng(78, 0);
    const ChannelSet ch = sample_channels(scn, rng);
    const RateProfile alpha = RateProfile::make({0.5, 0.5});
    double prev = 0.0;
    for (double rate : {0.5, 1.0, 2.0, 4.0}) {
        const SinrTargets t = SinrTargets::from_rate_target(alpha, rate);
        const PhaseCost cost = make_dpc_power_cost(ch, t.gamma, scn.sigma2, scn.q_levels());
        const double p = exhaustive_search(cost, scn.N, scn.q_levels()).best_cost;
        CHECK(p >= prev);
        prev = p;
    }
}

TEST_CASE("convex hull basics") {
    // single point: rectangle closure
    const Hull2D single = convex_hull_2d({{1.0, 1.0}});
    REQUIRE(single.vertices.size() == 4);
    CHECK(single.vertices[0] == std::array<double, 2>{0.0, 0.0});
    CHECK(single.vertices[1] == std::array<double, 2>{1.0, 0.0});
    CHECK(single.vertices[2] == std::array<double, 2>{1.0, 1.0});
    CHECK(single.vertices[3] == std::array<double, 2>{0.0, 1.0});
    CHECK(single.timeshare[0].gap == 0.0);

    // collinear interior points are not vertices
    const Hull2D line = convex_hull_2d({{2.0, 0.0}, {1.0, 1.0}, {0.0, 2.0}, {0.5, 1.5}});
    for (const auto &v : line.vertices) {
        CHECK(v != std::array<double, 2>{0.5, 1.5});
        CHECK(v != std::array<double, 2>{1.0, 1.0});
    }

    // every timeshare entry of a boundary-sampled point has near-zero gap
    for (const TimeShare &ts : line.timeshare)
        CHECK(ts.gap <= 1e-12);
}

TEST_CASE("convex hull timeshare weights") {
    // hull is the triangle (0,0), (2,0), (0,2); the sampled point (1, 0.9)
    // projects radially to the edge between them
    const Hull2D h = convex_hull_2d({{2.0, 0.0}, {0.0, 2.0}, {1.0, 0.9}});
    REQUIRE(h.vertices.size() == 3);
    const TimeShare &ts = h.timeshare[2];
    CHECK(h.vertices[ts.edge_a] == std::array<double, 2>{2.0, 0.0});
    CHECK(h.vertices[ts.edge_b] == std::array<double, 2>{0.0, 2.0});
    CHECK(ts.beta == doctest::Approx(0.9 / 1.9).epsilon(1e-12));
    CHECK(ts.gap == doctest::Approx(0.1 / std::sqrt(2.0)).epsilon(1e-12));
}

TEST_CASE("convex hull matches the brute-force oracle on random clouds") {
    Rng rng(79, 0);
    for (int trial = 0; trial < 20; ++trial) {
        std::vector<std::array<double, 2>> pts;
        const int n = 5 + static_cast<int>(rng.next_below(12));
        for (int i = 0; i < n; ++i)
            pts.push_back({4.0 * rng.next_double(), 4.0 * rng.next_double()});
        const Hull2D hull = convex_hull_2d(pts);

        std::vector<std::array<double, 2>> cand = pts;
        double r1 = 0.0, r2 = 0.0;
        for (const auto &p : pts) {
            r1 = std::max(r1, p[0]);
            r2 = std::max(r2, p[1]);
        }
        cand.push_back({0.0, 0.0});
        cand.push_back({r1, 0.0});
        cand.push_back({0.0, r2});
        const auto expect = brute_hull(cand);
        std::vector<std::array<double, 2>> got = hull.vertices;
        std::sort(got.begin(), got.end());
        CHECK(got == expect);

        // convexity: all turns one-signed
        const auto &v = hull.vertices;
        for (std::size_t i = 0; i + 2 < v.size(); ++i) {
            const double c = (v[i + 1][0] - v[i][0]) * (v[i + 2][1] - v[i][1]) -
                             (v[i + 1][1] - v[i][1]) * (v[i + 2][0] - v[i][0]);
            CHECK(c > 0.0);
        }

        // idempotence
        const Hull2D again = convex_hull_2d(hull.vertices);
        CHECK(again.vertices == hull.vertices);
    }
}

TEST_CASE("convexity gap separates convex from non-convex static regions") {
    // orthogonal channels: the static ZF region is already convex
    const auto ho = orthogonal_channels(3, 2, 2.0);
    const auto flat_pts = zf_two_user_boundary(ho[0], ho[1], 2.0, 1.0, 24);
    const RegionBoundary flat =
        assemble_static_boundary(flat_pts, PhaseConfig(1, 2), Scheme::zf, Method::exhaustive);
    CHECK(convexity_gap(flat) <= 1e-9);

    // correlated channels: the single-user corners strictly dominate the curve
    Rng rng(80, 0);
    ChannelSet ch = random_channelset(rng, 3, 2, 1);
    set_direct_correlation(ch, 0.5);
    const auto bent_pts = zf_two_user_boundary(ch.h_d[0], ch.h_d[1], 2.0, 1.0, 24);
    const RegionBoundary bent =
        assemble_static_boundary(bent_pts, PhaseConfig(1, 2), Scheme::zf, Method::exhaustive);
    CHECK(convexity_gap(bent) > 1e-6);
}

TEST_CASE("boundary serialization") {
    Rng rng(81, 0);
    const Scenario scn = no_irs_scenario(2, 2);
    const ChannelSet ch = direct_only_channels({random_cvec(rng, 2), random_cvec(rng, 2)});
    const RegionBoundary b =
        sweep_boundary(scn, ch, Scheme::zf, Method::exhaustive, 2, BisectOptions{});
    std::ostringstream os;
    write_boundary_csv(os, b);
    const std::string csv = os.str();
    CHECK(csv.rfind("alpha1,alpha2,r1,r2,scheme,method,phase_indices\n", 0) == 0);
    CHECK(csv.find("zf") != std::string::npos);

    const nlohmann::json j = boundary_to_json(b);
    CHECK(j.at("points").size() == 3);
    CHECK(j.at("hull").size() >= 3);
    CHECK(j.at("timeshare").size() == 3);
}
