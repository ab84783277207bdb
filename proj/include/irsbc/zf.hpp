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

#ifndef IRSBC_ZF_HPP
#define IRSBC_ZF_HPP

#include <array>
#include <vector>

#include "irsbc/dpc.hpp"
#include "irsbc/numerics.hpp"

// Zero-forcing side: each power-carrying beam lies in the null space of every
// other user's channel.

namespace irsbc {

struct ZfSolution {
    std::vector<double> powers;   // per-user powers (watts); empty when infeasible
    std::vector<CVec> directions; // unit-norm beams; users with gamma = 0 report
                                  // their normalized channel and carry no power
    bool feasible = false;

    double total() const;
};

// Minimum per-user powers meeting the SINR targets:
//   p_k = gamma_k * sigma2 * [(H^H H)^{-1}]_{kk}
// with w_k the k-th normalized column of H (H^H H)^{-1}. Users with
// gamma_k = 0 are dropped from H before the inversion. A rank-deficient H
// (smallest Gram pivot < 1e-12 * largest) yields feasible = false with empty
// powers rather than an error. Throws TooManyUsers when K > M.
ZfSolution zf_min_power(const std::vector<CVec> &h, const SinrTargets &targets,
                        double sigma2);

// Power-only variant for hot search loops; returns +inf when infeasible.
double zf_min_power_value(const std::vector<CVec> &h, const std::vector<double> &gamma,
                          double sigma2);

// R_k = log2(1 + p_k |h_k^H w_k|^2 / sigma2). Throws OrthogonalityViolated if
// a power-carrying beam leaks onto another user's channel by more than
// 1e-6 * |h_j| * |w_k|.
std::vector<double> zf_rates(const std::vector<CVec> &h, const std::vector<CVec> &directions,
                             const std::vector<double> &powers, double sigma2);

// Two-user closed-form boundary for one fixed phase configuration: sweeps
// p1 over a uniform grid on [0, Pmax] with p2 = Pmax - p1,
//   Rhat_k(p) = log2(1 + p |h_k|^2 (1 - rho^2) / sigma2),
// and appends the two single-user endpoints (R1max, 0), (0, R2max) with
// R_kmax = log2(1 + Pmax |h_k|^2 / sigma2).
std::vector<std::array<double, 2>> zf_two_user_boundary(const CVec &h1, const CVec &h2,
                                                        double Pmax, double sigma2,
                                                        int grid_size);

} // namespace irsbc

#endif
