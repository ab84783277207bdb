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

#include "irsbc/experiments.hpp"
#include "test_helpers.hpp"

using namespace irsbc;
using namespace irsbc::testing;

TEST_CASE("rate loss bound values") {
    CHECK(rate_loss_bound(0.0) == 0.0);
    CHECK(rate_loss_bound(0.5) == doctest::Approx(1.0));
    // the 1e-3 correlation case evaluates to about 1.443e-3 bps/Hz
    CHECK(rate_loss_bound(1e-3) == doctest::Approx(-std::log2(1.0 - 1e-3)));
    CHECK(rate_loss_bound(1e-3) == doctest::Approx(1.4427e-3).epsilon(1e-3));
    CHECK_THROWS_AS(rate_loss_bound(1.0), DomainError);
    CHECK_THROWS_AS(rate_loss_bound(1.5), DomainError);
    CHECK_THROWS_AS(rate_loss_bound(-0.1), DomainError);
}

TEST_CASE("rank-one cascades give Cauchy-Schwarz equality per trial") {
    // M = 1: num equals den_k * den_m exactly for every draw
    for (int t = 0; t < 50; ++t) {
        Rng rng(90, static_cast<std::uint64_t>(t));
        const Lemma2Sample s = lemma2_sample(1, 16, rng, 0);
        CHECK(s.num == doctest::Approx(s.den_k * s.den_m).epsilon(1e-12));
    }
}

TEST_CASE("correlation ratio matches the Wishart closed form") {
    // E{num} / (E{den_k} E{den_m}) = 1/M + 1/N for unit-variance entries
    for (const auto &[m, n] : {std::pair{4, 20}, std::pair{2, 10}}) {
        const McSummary s = lemma2_ratio(m, n, 4000, 91, 0);
        const double expect = 1.0 / m + 1.0 / n;
        CHECK(std::abs(s.mean - expect) <= 4.0 * s.stderr_of_mean);
        // the 1/M floor
        CHECK(s.mean >= 1.0 / m - 3.0 * s.stderr_of_mean);
    }
}

TEST_CASE("discrete and continuous phases agree for the ratio") {
    const McSummary cont = lemma2_ratio(4, 24, 4000, 92, 0);
    const McSummary disc = lemma2_ratio(4, 24, 4000, 93, 4); // b = 2
    const double band = 3.0 * std::hypot(cont.stderr_of_mean, disc.stderr_of_mean);
    CHECK(std::abs(cont.mean - disc.mean) <= band);
}

TEST_CASE("ratio estimator is reproducible and thread-count independent") {
    const McSummary a = lemma2_ratio(4, 12, 500, 94, 0, 1);
    const McSummary b = lemma2_ratio(4, 12, 500, 94, 0, 3);
    CHECK(a.mean == b.mean);
    CHECK(a.stderr_of_mean == b.stderr_of_mean);

    const McSummary pt = lemma2_ratio(2, 8, 100, 95, 0, 0, true);
    REQUIRE(pt.per_trial.has_value());
    CHECK(pt.per_trial->size() == 100);
}

TEST_CASE("theorem1 sandwich on a small instance") {
    const Theorem1Report rep = theorem1_sweep(4, 2, {8, 16}, 1.0, 1.0, {1.0, 1.0}, 1.0, 400, 96);
    REQUIRE(rep.N_values.size() == 2);
    for (std::size_t i = 0; i < 2; ++i) {
        CHECK(rep.mean_zf[i] >= rep.lower_zf[i] - 3.0 * rep.stderr_zf[i]);
        CHECK(rep.mean_dpc[i] <= rep.upper_dpc[i] + 3.0 * rep.stderr_dpc[i]);
        CHECK(rep.mean_dpc[i] >= rep.mean_zf[i]); // per-draw dominance survives the mean
        CHECK(rep.eta[i] > 0.0);
    }
    CHECK(rep.eta[1] < rep.eta[0]);

    CHECK_THROWS_AS(theorem1_sweep(2, 2, {8}, 1.0, 1.0, {1.0, 1.0}, 1.0, 100, 1),
                    InvalidDims);
}

TEST_CASE("sum-rate sweep trends at desk scale") {
    Scenario scn = default_scenario(2, 2);
    scn.Nbar = 1;
    BisectOptions opt;
    opt.eps2 = 1e-3;
    const auto rows = sumrate_sweep(scn, SweepVariable::n, {2.0, 8.0},
                                    {"dpc", "zf", "dpc-no-irs", "zf-no-irs"},
                                    Method::alternating, 5, 97, opt);
    REQUIRE(rows.size() == 8);
    const auto find = [&](double v, const std::string &s) -> const SumrateRow & {
        for (const auto &r : rows)
            if (r.value == v && r.scheme == s)
                return r;
        REQUIRE(false);
        return rows[0];
    };
    // IRS-aided rates grow with N
    CHECK(find(8.0, "dpc").mean_sumrate > find(2.0, "dpc").mean_sumrate);
    CHECK(find(8.0, "zf").mean_sumrate > find(2.0, "zf").mean_sumrate);
    // no-IRS baselines are exactly flat across N (paired direct draws)
    CHECK(find(8.0, "dpc-no-irs").mean_sumrate ==
          doctest::Approx(find(2.0, "dpc-no-irs").mean_sumrate).epsilon(1e-12));
    CHECK(find(8.0, "zf-no-irs").mean_sumrate ==
          doctest::Approx(find(2.0, "zf-no-irs").mean_sumrate).epsilon(1e-12));
    // zf never beats dpc
    for (double v : {2.0, 8.0}) {
        CHECK(find(v, "zf").mean_sumrate <= find(v, "dpc").mean_sumrate + 2e-3);
        CHECK(find(v, "zf-no-irs").mean_sumrate <=
              find(v, "dpc-no-irs").mean_sumrate + 2e-3);
    }

    CHECK_THROWS_AS(sumrate_sweep(scn, SweepVariable::n, {2.0}, {"mmse"},
                                  Method::alternating, 2, 1, opt),
                    ConfigError);
}
