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

#include <cmath>

#include "irsbc/chanpen.hpp"
#include "test_helpers.hpp"

using namespace irsbc;
using namespace irsbc::testing;

TEST_CASE("path loss law") {
    CHECK(pathloss_linear(1.0, 2.2, 30.0) == doctest::Approx(1e-3));
    CHECK(pathloss_linear(10.0, 2.0, 30.0) == doctest::Approx(1e-5));
    CHECK(pathloss_linear(50.0, 2.2, 30.0) ==
          doctest::Approx(1e-3 * std::pow(50.0, -2.2)).epsilon(1e-12));
    CHECK_THROWS_AS(pathloss_linear(0.5, 2.0, 30.0), InvalidDistance);
}

TEST_CASE("fixed seed reproduces the channel set bit-exactly") {
    const Scenario scn = default_scenario(2, 4);
    Rng a(5, 9), b(5, 9);
    const ChannelSet ca = sample_channels(scn, a);
    const ChannelSet cb = sample_channels(scn, b);
    CHECK(ca.G.entries() == cb.G.entries());
    for (std::size_t u = 0; u < 2; ++u) {
        CHECK(ca.h_d[u] == cb.h_d[u]);
        CHECK(ca.h_r[u] == cb.h_r[u]);
    }
    Rng c(5, 10);
    const ChannelSet cc = sample_channels(scn, c);
    CHECK(cc.G.entries() != ca.G.entries());
}

TEST_CASE("subsurface aggregation sums adjacent element channels") {
    // Same stream, same element draws: (N=4, Nbar=1) vs (N=2, Nbar=2).
    Scenario flat = default_scenario(1, 4);
    flat.Nbar = 1;
    Scenario grouped = default_scenario(1, 2);
    grouped.Nbar = 2;
    Rng a(17, 0), b(17, 0);
    const ChannelSet cf = sample_channels(flat, a);
    const ChannelSet cg = sample_channels(grouped, b);
    for (std::size_t grp = 0; grp < 2; ++grp) {
        for (std::size_t c = 0; c < 4; ++c) {
            const cxd expect = cf.G(2 * grp, c) + cf.G(2 * grp + 1, c);
            CHECK(std::abs(cg.G(grp, c) - expect) < 1e-15);
        }
        const cxd hr_expect = cf.h_r[0][2 * grp] + cf.h_r[0][2 * grp + 1];
        CHECK(std::abs(cg.h_r[0][grp] - hr_expect) < 1e-15);
    }
    // direct links drawn first: identical across the two layouts
    CHECK(cf.h_d[0] == cg.h_d[0]);
}

TEST_CASE("iid mode blocks direct links and matches requested variances") {
    Scenario scn = iid_scenario(4, 1, 125, 2);
    scn.iid->rho2_g = 2.5;
    scn.iid->rho2_r = {0.5};
    double acc_g = 0.0, acc_r = 0.0, mean_re = 0.0;
    const int trials = 200;
    for (int t = 0; t < trials; ++t) {
        Rng rng(33, static_cast<std::uint64_t>(t));
        const ChannelSet ch = sample_channels(scn, rng);
        for (const cxd &x : ch.h_d[0])
            CHECK(x == cxd(0.0));
        for (const cxd &x : ch.G.entries()) {
            acc_g += std::norm(x);
            mean_re += x.real();
        }
        for (const cxd &x : ch.h_r[0])
            acc_r += std::norm(x);
    }
    const double n_g = static_cast<double>(trials) * 125 * 4;
    const double n_r = static_cast<double>(trials) * 125;
    CHECK(acc_g / n_g == doctest::Approx(2.5).epsilon(0.02));
    CHECK(acc_r / n_r == doctest::Approx(0.5).epsilon(0.02));
    // mean in a 3-sigma band: per-entry real part has variance rho2_g/2
    CHECK(std::abs(mean_re / n_g) < 3.0 * std::sqrt(2.5 / 2.0 / n_g));
}

TEST_CASE("geometric mode matches the path-loss variance") {
    Scenario scn = default_scenario(1, 8);
    scn.Nbar = 1;
    const GeometrySpec &geo = *scn.geometry;
    const double var_g =
        pathloss_linear(distance(geo.bs_pos, geo.irs_pos), geo.alpha_bs_irs, geo.pl_ref_db);
    double acc = 0.0;
    const int trials = 400;
    for (int t = 0; t < trials; ++t) {
        Rng rng(34, static_cast<std::uint64_t>(t));
        const ChannelSet ch = sample_channels(scn, rng);
        for (const cxd &x : ch.G.entries())
            acc += std::norm(x);
    }
    const double n = static_cast<double>(trials) * 8 * 4;
    CHECK(acc / n == doctest::Approx(var_g).epsilon(0.03));
}

TEST_CASE("default scenario carries the reference setup") {
    const Scenario scn = default_scenario();
    CHECK(scn.M == 4);
    CHECK(scn.Nbar == 4);
    CHECK(scn.b == 2);
    CHECK(watts_to_dbm(scn.Pmax) == doctest::Approx(20.0));
    CHECK(watts_to_dbm(scn.sigma2) == doctest::Approx(-80.0));
    CHECK(distance(scn.geometry->bs_pos, scn.geometry->irs_pos) ==
          doctest::Approx(std::sqrt(50.0 * 50.0 + 9.0)));
    CHECK(scn.geometry->alpha_bs_irs == doctest::Approx(2.2));
    CHECK(scn.geometry->alpha_bs_user == doctest::Approx(3.4));
    for (const auto &u : scn.geometry->user_positions)
        CHECK(distance(scn.geometry->irs_pos, u) == doctest::Approx(5.0));
}

TEST_CASE("set_direct_correlation hits the target exactly") {
    Rng rng(35, 0);
    for (double rho2 : {0.0, 0.01, 0.5, 0.8}) {
        ChannelSet ch = random_channelset(rng, 4, 2, 2);
        const double nb_before = norm(ch.h_d[1]);
        set_direct_correlation(ch, rho2);
        const double got =
            std::norm(cdot(ch.h_d[0], ch.h_d[1])) / (norm2(ch.h_d[0]) * norm2(ch.h_d[1]));
        CHECK(got == doctest::Approx(rho2).epsilon(1e-10));
        CHECK(norm(ch.h_d[1]) == doctest::Approx(nb_before).epsilon(1e-12));
    }
    ChannelSet ch = random_channelset(rng, 4, 2, 2);
    CHECK_THROWS_AS(set_direct_correlation(ch, 1.5), DomainError);
}
