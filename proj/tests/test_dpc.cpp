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

#include "irsbc/dpc.hpp"
#include "test_helpers.hpp"

using namespace irsbc;
using namespace irsbc::testing;

namespace {

// Achieved SINRs under the encoding order (interference from later users).
std::vector<double> achieved_sinrs(const std::vector<CVec> &h, const DpcSolution &sol,
                                   double sigma2) {
    const std::size_t k = h.size();
    std::vector<double> s(k, 0.0);
    for (std::size_t u = 0; u < k; ++u) {
        double interf = 0.0;
        for (std::size_t i = u + 1; i < k; ++i)
            interf += sol.powers[i] * std::norm(cdot(h[u], sol.directions[i]));
        s[u] = sol.powers[u] * std::norm(cdot(h[u], sol.directions[u])) / (sigma2 + interf);
    }
    return s;
}

} // namespace

TEST_CASE("dpc rates: single-user MRT and zero covariances") {
    const CVec h = {cxd(1.0, 1.0), cxd(0.5, -0.25)};
    const double p = 2.0, s2 = 0.5;
    CMat S(2, 2);
    add_scaled_outer(S, p / norm2(h), h);
    const auto r = dpc_rates({h}, {S}, s2);
    CHECK(r[0] == doctest::Approx(std::log2(1.0 + p * norm2(h) / s2)).epsilon(1e-12));

    const auto z = dpc_rates({h, h}, {CMat(2, 2), CMat(2, 2)}, s2);
    CHECK(z[0] == 0.0);
    CHECK(z[1] == 0.0);
}

TEST_CASE("dpc rates: orthogonal MRT beams are interference-free") {
    const auto h = orthogonal_channels(3, 2);
    const double s2 = 1.0;
    std::vector<CMat> S;
    const double p[2] = {1.5, 0.75};
    for (std::size_t k = 0; k < 2; ++k) {
        CMat s(3, 3);
        add_scaled_outer(s, p[k] / norm2(h[k]), h[k]);
        S.push_back(std::move(s));
    }
    const auto r = dpc_rates(h, S, s2);
    for (std::size_t k = 0; k < 2; ++k)
        CHECK(r[k] ==
              doctest::Approx(std::log2(1.0 + p[k] * norm2(h[k]) / s2)).epsilon(1e-12));
}

TEST_CASE("dpc rates rejects indefinite covariances") {
    const CVec h = {cxd(1.0), cxd(0.0)};
    CMat bad(2, 2);
    bad(0, 0) = 1.0;
    bad(1, 1) = -0.5;
    CHECK_THROWS_AS(dpc_rates({h}, {bad}, 1.0), NonPsdCovariance);
}

TEST_CASE("dpc min power closed-form cases") {
    // K = 1: p* = gamma sigma2 / |h|^2
    const CVec h = {cxd(2.0, 0.0), cxd(0.0, 1.0)};
    SinrTargets t{{3.0}};
    const DpcSolution sol = dpc_min_power({h}, t, 0.25);
    CHECK(sol.p_star == doctest::Approx(3.0 * 0.25 / 5.0).epsilon(1e-12));
    CHECK(sol.powers[0] == doctest::Approx(sol.p_star).epsilon(1e-12));

    // mutually orthogonal channels: p* = sum gamma_k sigma2 / |h_k|^2
    const auto ho = orthogonal_channels(4, 3);
    SinrTargets to{{1.0, 2.0, 0.5}};
    const double s2 = 2.0;
    const DpcSolution so = dpc_min_power(ho, to, s2);
    double expect = 0.0;
    for (std::size_t k = 0; k < 3; ++k)
        expect += to.gamma[k] * s2 / norm2(ho[k]);
    CHECK(so.p_star == doctest::Approx(expect).epsilon(1e-10));
    const auto oracle = backward_power_oracle(ho, so.directions, to, s2);
    double oracle_total = 0.0;
    for (double p : oracle)
        oracle_total += p;
    CHECK(oracle_total == doctest::Approx(so.p_star).epsilon(1e-10));
}

TEST_CASE("dpc min power equals the backward oracle on random instances") {
    Rng rng(41, 0);
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t m = 2 + rng.next_below(3);
        const std::size_t k = 1 + rng.next_below(static_cast<std::uint32_t>(m));
        std::vector<CVec> h;
        for (std::size_t u = 0; u < k; ++u)
            h.push_back(random_cvec(rng, m));
        SinrTargets t;
        for (std::size_t u = 0; u < k; ++u)
            t.gamma.push_back(0.1 + 9.9 * rng.next_double());
        const double s2 = std::pow(10.0, -1.0 + 2.0 * rng.next_double());

        const DpcSolution sol = dpc_min_power(h, t, s2);
        double total = 0.0;
        for (double p : sol.powers)
            total += p;
        CHECK(std::abs(total - sol.p_star) <= 1e-8 * sol.p_star);

        // constraint tightness (KKT complementary slackness)
        const auto sinrs = achieved_sinrs(h, sol, s2);
        for (std::size_t u = 0; u < k; ++u)
            CHECK(std::abs(sinrs[u] - t.gamma[u]) <= 1e-8 * t.gamma[u]);

        // interference-free lower bound
        double lower = 0.0;
        for (std::size_t u = 0; u < k; ++u)
            lower += t.gamma[u] * s2 / norm2(h[u]);
        CHECK(sol.p_star >= lower * (1.0 - 1e-12));
    }
}

TEST_CASE("dpc min power is monotone in the targets") {
    Rng rng(42, 0);
    for (int trial = 0; trial < 50; ++trial) {
        const std::size_t m = 3, k = 3;
        std::vector<CVec> h;
        for (std::size_t u = 0; u < k; ++u)
            h.push_back(random_cvec(rng, m));
        std::vector<double> gamma = {1.0, 2.0, 0.5};
        const double base = dpc_min_power_value(h, gamma, 1.0);
        const std::size_t bump = rng.next_below(3);
        gamma[bump] *= 1.5;
        CHECK(dpc_min_power_value(h, gamma, 1.0) > base);
    }
}

TEST_CASE("reconstructed covariances reproduce the rate split") {
    Rng rng(43, 0);
    const RateProfile alpha = RateProfile::make({0.3, 0.7});
    const double rate_target = 3.5, s2 = 0.8;
    std::vector<CVec> h = {random_cvec(rng, 3), random_cvec(rng, 3)};
    const SinrTargets t = SinrTargets::from_rate_target(alpha, rate_target);
    const DpcSolution sol = dpc_min_power(h, t, s2);
    const auto rates = dpc_rates(h, rank_one_covariances(sol), s2);
    for (std::size_t u = 0; u < 2; ++u)
        CHECK(std::abs(rates[u] - alpha.alpha[u] * rate_target) <= 1e-7);
}

TEST_CASE("zero targets are skipped and zero channels rejected") {
    Rng rng(44, 0);
    std::vector<CVec> h = {random_cvec(rng, 2), random_cvec(rng, 2)};
    SinrTargets t{{0.0, 2.0}};
    const DpcSolution sol = dpc_min_power(h, t, 1.0);
    CHECK(sol.powers[0] == 0.0);
    CHECK(sol.p_star == doctest::Approx(2.0 / norm2(h[1])).epsilon(1e-10));
    CHECK(norm(sol.directions[0]) == doctest::Approx(1.0));

    std::vector<CVec> hz = {CVec(2, cxd(0.0))};
    CHECK_THROWS_AS(dpc_min_power(hz, SinrTargets{{1.0}}, 1.0), ZeroChannel);
    CHECK_NOTHROW(dpc_min_power(hz, SinrTargets{{0.0}}, 1.0));
}

TEST_CASE("backward power oracle basics") {
    const auto h = orthogonal_channels(3, 2);
    std::vector<CVec> u;
    for (const CVec &v : h) {
        CVec w = v;
        const double n = norm(v);
        for (cxd &x : w)
            x /= n;
        u.push_back(std::move(w));
    }
    // zero targets give zero powers
    const auto zero = backward_power_oracle(h, u, SinrTargets{{0.0, 0.0}}, 1.0);
    CHECK(zero[0] == 0.0);
    CHECK(zero[1] == 0.0);

    // orthogonal MRT: gamma sigma2 / |h|^2
    const auto p = backward_power_oracle(h, u, SinrTargets{{2.0, 3.0}}, 0.5);
    CHECK(p[0] == doctest::Approx(2.0 * 0.5 / norm2(h[0])).epsilon(1e-12));
    CHECK(p[1] == doctest::Approx(3.0 * 0.5 / norm2(h[1])).epsilon(1e-12));

    // direction orthogonal to its own channel: no gain
    std::vector<CVec> bad_u = {u[1], u[0]};
    CHECK_THROWS_AS(backward_power_oracle(h, bad_u, SinrTargets{{1.0, 1.0}}, 1.0), ZeroGain);
}
