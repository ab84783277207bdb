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

#ifndef IRSBC_PHASEOPT_HPP
#define IRSBC_PHASEOPT_HPP

#include <cstdint>
#include <functional>

#include "irsbc/model.hpp"
#include "irsbc/rng.hpp"

// Discrete phase-shift optimization over the Q^N codebook for an arbitrary
// scalar cost of the configuration. Costs must be pure and thread-safe: the
// exhaustive kernel fans out over configuration chunks and relies on every
// evaluation being identical no matter which thread runs it.

namespace irsbc {

using PhaseCost = std::function<double(const PhaseConfig &)>;

struct PhaseSearchReport {
    PhaseConfig best;
    double best_cost = 0.0;
    std::uint64_t evaluations = 0;
    int iterations = 0; // sweeps (alternating mode only)
    bool converged = false;
};

inline constexpr std::uint64_t kDefaultSearchBudget = std::uint64_t(1) << 20;

// Global minimizer over all Q^N configurations; ties break toward the
// smallest lexicographic index sequence (element 0 most significant), which
// also makes the parallel reduction order-independent. Throws BudgetExceeded
// when Q^N > budget (signal to fall back to alternating search).
PhaseSearchReport exhaustive_search(const PhaseCost &cost, int N, int Q,
                                    std::uint64_t budget = kDefaultSearchBudget,
                                    int threads = 0);

// Single-threaded reference scan, kept for testing the parallel kernel; both
// must return bit-identical reports.
PhaseSearchReport exhaustive_search_serial(const PhaseCost &cost, int N, int Q,
                                           std::uint64_t budget = kDefaultSearchBudget);

// Element-wise alternating descent: sweeps n = 1..N, setting each phase to
// the argmin over the codebook with the others fixed (ties toward the lowest
// index). Stops once the fractional cost decrease over a full sweep falls
// below eps1, or after max_sweeps. The cost trace is non-increasing.
PhaseSearchReport alternating_search(const PhaseCost &cost, int N, int Q,
                                     const PhaseConfig &init, double eps1 = 1e-4,
                                     int max_sweeps = 50);

// Minimizes max_{k != m} rho^2_{k,m}(Theta) by alternating search from the
// all-zeros configuration plus `restarts` random initial configurations
// (drawn from rng up front). Restart runs are independent and may execute in
// parallel; the winner is picked by (cost, run index).
PhaseSearchReport minmax_correlation(const ChannelSet &ch, int N, int Q, int restarts,
                                     Rng &rng, double eps1 = 1e-4, int max_sweeps = 50,
                                     int threads = 0);

// Cost builders. Each closure owns an immutable copy of its inputs plus the
// phase codebook table; evaluations allocate only small local buffers.
PhaseCost make_dpc_power_cost(const ChannelSet &ch, std::vector<double> gamma,
                              double sigma2, int q_levels);
PhaseCost make_zf_power_cost(const ChannelSet &ch, std::vector<double> gamma,
                             double sigma2, int q_levels);
PhaseCost make_max_corr_sq_cost(const ChannelSet &ch, int q_levels);
// Negated effective-channel power of one user (for single-user TDMA slots).
PhaseCost make_negative_gain_cost(const ChannelSet &ch, std::size_t user, int q_levels);

} // namespace irsbc

#endif
