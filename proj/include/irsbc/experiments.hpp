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

#ifndef IRSBC_EXPERIMENTS_HPP
#define IRSBC_EXPERIMENTS_HPP

#include <optional>
#include <string>
#include <vector>

#include "irsbc/region.hpp"
#include "irsbc/rng.hpp"

// Monte Carlo drivers. Every estimator maps trial t to RNG stream
// base + t, fills a per-trial buffer in parallel and reduces it with
// fixed-order pairwise sums, so results are bit-identical for any thread
// count.

namespace irsbc {

struct McSummary {
    std::uint64_t trials = 0;
    double mean = 0.0;
    double stderr_of_mean = 0.0;
    std::optional<std::vector<double>> per_trial;
};

// One draw of the correlation-ratio factors under random phases with the
// direct links blocked: num = |h_k^H Theta G G^H Theta^H h_m|^2 and the two
// denominator norms. q_levels = 0 draws continuous phases on [0, 2pi).
struct Lemma2Sample {
    double num = 0.0;
    double den_k = 0.0;
    double den_m = 0.0;
};
Lemma2Sample lemma2_sample(int M, int N, Rng &rng, int q_levels = 0);

// Ratio-of-means estimate of E{num} / (E{den_k} E{den_m}); its exact value
// for unit-variance entries is 1/M + 1/N, always >= the 1/M floor. The
// standard error comes from the delta method with the full 3x3 sample
// covariance. per_trial (optional) stores num_t / (den_k,t * den_m,t).
McSummary lemma2_ratio(int M, int N, std::uint64_t trials, std::uint64_t seed,
                       int q_levels = 0, int threads = 0, bool keep_per_trial = false);

// -log2(1 - rho2): the two-user ZF-vs-DPC rate-loss cap at high SNR.
// Throws DomainError for rho2 outside [0, 1).
double rate_loss_bound(double rho2);

struct Theorem1Report {
    std::vector<int> N_values;
    std::vector<double> mean_dpc, mean_zf;     // Monte Carlo sum-rate means
    std::vector<double> stderr_dpc, stderr_zf; // standard errors of the means
    std::vector<double> eta;                   // (mean_dpc - mean_zf) / mean_zf
    std::vector<double> upper_dpc, lower_zf;   // closed-form bounds
};

// Random-phase asymptotics, equal per-user power Pmax/K. Effective channels
// are drawn from the random-phase limit law CN(0, rho2_r,k rho2_g N I_M) (a
// diagonal unit-modulus phase matrix leaves that law untouched), which is the
// quantity the bound chain actually controls. The DPC mean uses the
// interference-free per-user bound; ZF uses the pseudo-inverse beams. Closed
// forms:
//   upper_dpc = K log2(1 + Pmax rhat2_r rho2_g N M / sigma2)
//   lower_zf  = K log2(1 + Pmax rcheck2_r rho2_g N (M - K) / (K sigma2))
// with rhat2/rcheck2 the max/min of rho2_r. Throws InvalidDims if M <= K.
Theorem1Report theorem1_sweep(int M, int K, const std::vector<int> &N_values, double Pmax,
                              double sigma2, const std::vector<double> &rho2_r, double rho2_g,
                              std::uint64_t trials, std::uint64_t seed, int threads = 0);

enum class SweepVariable { pmax_dbm, n };

struct SumrateRow {
    double value = 0.0; // swept value (dBm for pmax_dbm, subsurface count for n)
    std::string scheme;
    double mean_sumrate = 0.0;
    double stderr_of_mean = 0.0;
};

// Mean sum-rate (uniform rate profile) per swept value and scheme, solved by
// rate-profile bisection with the given phase method. Scheme tokens: dpc, zf,
// dpc-no-irs, zf-no-irs; the no-IRS variants zero h_r on the same channel
// draws. Trial t maps to RNG stream t for every swept value, so direct links
// pair exactly across the sweep (no-IRS baselines are flat by construction).
std::vector<SumrateRow> sumrate_sweep(const Scenario &tmpl, SweepVariable vary,
                                      const std::vector<double> &values,
                                      const std::vector<std::string> &schemes, Method method,
                                      std::uint64_t trials, std::uint64_t seed,
                                      const BisectOptions &opt = {});

} // namespace irsbc

#endif
