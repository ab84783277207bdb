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

#ifndef IRSBC_DPC_HPP
#define IRSBC_DPC_HPP

#include <vector>

#include "irsbc/model.hpp"
#include "irsbc/numerics.hpp"

// Dirty-paper-coding side. The encoding order is fixed to user-index order:
// user k is encoded before user i for i > k and therefore sees interference
// only from users i > k.

namespace irsbc {

struct SinrTargets {
    std::vector<double> gamma; // linear SINR targets, >= 0

    // gamma_k = 2^(alpha_k * rate_target) - 1
    static SinrTargets from_rate_target(const RateProfile &alpha, double rate_target);
};

struct DpcSolution {
    double p_star = 0.0;           // total transmit power (watts)
    std::vector<double> lambda;    // dual values of the forward recursion
    std::vector<CVec> directions;  // unit-norm beam directions, one per user
    std::vector<double> powers;    // per-user powers from backward substitution
};

// Per-slot DPC rates in bps/Hz for given effective channels and transmit
// covariances:
//   R_k = log2( (s2 + h_k^H (sum_{i>=k} S_i) h_k) / (s2 + h_k^H (sum_{i>k} S_i) h_k) )
// Throws NonPsdCovariance when a covariance has an eigenvalue below
// -1e-10 * trace, DimensionMismatch on shape errors.
std::vector<double> dpc_rates(const std::vector<CVec> &h, const std::vector<CMat> &S,
                              double sigma2);

// Minimum total power meeting the SINR targets, in closed form:
//   lambda_1 = s2 / |h_1|^2
//   lambda_k = s2 / ( h_k^H (I + sum_{i<k} lambda_i gamma_i h_i h_i^H / s2)^{-1} h_k )
//   p*       = sum_k lambda_k gamma_k
// Beam directions are the (normalized) solve vectors; per-user powers follow
// by backward substitution and meet every target with equality. Users with
// gamma_k = 0 contribute nothing and report their normalized channel as the
// direction.
DpcSolution dpc_min_power(const std::vector<CVec> &h, const SinrTargets &targets,
                          double sigma2);

// Power-only variant of dpc_min_power for hot search loops.
double dpc_min_power_value(const std::vector<CVec> &h, const std::vector<double> &gamma,
                           double sigma2);

// Independent check on dpc_min_power: given channels and unit directions,
// solves the SINR equalities backward (p_K first),
//   p_k = gamma_k (s2 + sum_{i>k} p_i |h_k^H u_i|^2) / |h_k^H u_k|^2.
// Throws ZeroGain when a targeted user has no gain on its own direction.
std::vector<double> backward_power_oracle(const std::vector<CVec> &h,
                                          const std::vector<CVec> &directions,
                                          const SinrTargets &targets, double sigma2);

// Rank-one covariance export S_k = p_k u_k u_k^H.
std::vector<CMat> rank_one_covariances(const DpcSolution &sol);

} // namespace irsbc

#endif
