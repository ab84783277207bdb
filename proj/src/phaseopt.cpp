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

#include "irsbc/phaseopt.hpp"

#include <atomic>
#include <cmath>
#include <limits>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "irsbc/dpc.hpp"
#include "irsbc/zf.hpp"

namespace irsbc {

namespace {

int resolve_threads(int threads) {
#ifdef _OPENMP
    return threads > 0 ? threads : omp_get_max_threads();
#else
    (void)threads;
    return 1;
#endif
}

std::uint64_t checked_config_count(int N, int Q, std::uint64_t budget) {
    if (N < 1 || Q < 1)
        throw DomainError("phase search: need N >= 1 and Q >= 1");
    std::uint64_t total = 1;
    for (int i = 0; i < N; ++i) {
        if (total > budget / static_cast<std::uint64_t>(Q) + 1)
            throw BudgetExceeded("exhaustive search: Q^N exceeds the evaluation budget");
        total *= static_cast<std::uint64_t>(Q);
    }
    if (total > budget)
        throw BudgetExceeded("exhaustive search: Q^N exceeds the evaluation budget");
    return total;
}

PhaseConfig decode_config(std::uint64_t idx, int N, int Q) {
    PhaseConfig cfg(static_cast<std::size_t>(N), Q);
    for (int n = N - 1; n >= 0; --n) {
        cfg.set_index(static_cast<std::size_t>(n),
                      static_cast<int>(idx % static_cast<std::uint64_t>(Q)));
        idx /= static_cast<std::uint64_t>(Q);
    }
    return cfg;
}

// Scans configurations [lo, hi) in index order with an odometer walk
// (element 0 is the most significant digit, so index order equals
// lexicographic order).
void scan_configs(const PhaseCost &cost, int N, int Q, std::uint64_t lo, std::uint64_t hi,
                  double &best_cost, std::uint64_t &best_idx) {
    if (lo >= hi)
        return;
    PhaseConfig cfg = decode_config(lo, N, Q);
    for (std::uint64_t i = lo; i < hi; ++i) {
        const double c = cost(cfg);
        if (c < best_cost || (c == best_cost && i < best_idx)) {
            best_cost = c;
            best_idx = i;
        }
        // odometer step
        for (int n = N - 1; n >= 0; --n) {
            const int q = cfg.index(static_cast<std::size_t>(n)) + 1;
            if (q < Q) {
                cfg.set_index(static_cast<std::size_t>(n), q);
                break;
            }
            cfg.set_index(static_cast<std::size_t>(n), 0);
        }
    }
}

PhaseSearchReport finish_exhaustive(double best_cost, std::uint64_t best_idx,
                                    std::uint64_t total, int N, int Q) {
    if (best_idx == std::numeric_limits<std::uint64_t>::max())
        throw DomainError("exhaustive search: cost returned NaN for every configuration");
    PhaseSearchReport rep;
    rep.best = decode_config(best_idx, N, Q);
    rep.best_cost = best_cost;
    rep.evaluations = total;
    rep.iterations = 0;
    rep.converged = true;
    return rep;
}

} // namespace

PhaseSearchReport exhaustive_search_serial(const PhaseCost &cost, int N, int Q,
                                           std::uint64_t budget) {
    const std::uint64_t total = checked_config_count(N, Q, budget);
    double best_cost = std::numeric_limits<double>::infinity();
    std::uint64_t best_idx = std::numeric_limits<std::uint64_t>::max();
    scan_configs(cost, N, Q, 0, total, best_cost, best_idx);
    return finish_exhaustive(best_cost, best_idx, total, N, Q);
}

PhaseSearchReport exhaustive_search(const PhaseCost &cost, int N, int Q,
                                    std::uint64_t budget, int threads) {
    const std::uint64_t total = checked_config_count(N, Q, budget);
    const int nt = static_cast<int>(
        std::min<std::uint64_t>(static_cast<std::uint64_t>(resolve_threads(threads)), total));
#ifdef _OPENMP
    if (nt > 1) {
        std::vector<double> best_cost(nt, std::numeric_limits<double>::infinity());
        std::vector<std::uint64_t> best_idx(nt, std::numeric_limits<std::uint64_t>::max());
#pragma omp parallel num_threads(nt)
        {
            // The delivered team can be smaller than nt (nested regions run
            // with a team of one); chunk by the actual size so the whole
            // index space is always covered. The (cost, index) reduction is
            // partition-invariant, so the result does not depend on the team.
            const std::uint64_t team = static_cast<std::uint64_t>(omp_get_num_threads());
            const std::uint64_t t = static_cast<std::uint64_t>(omp_get_thread_num());
            const std::uint64_t lo = total * t / team;
            const std::uint64_t hi = total * (t + 1) / team;
            scan_configs(cost, N, Q, lo, hi, best_cost[t], best_idx[t]);
        }
        double bc = std::numeric_limits<double>::infinity();
        std::uint64_t bi = std::numeric_limits<std::uint64_t>::max();
        for (int t = 0; t < nt; ++t)
            if (best_cost[t] < bc || (best_cost[t] == bc && best_idx[t] < bi)) {
                bc = best_cost[t];
                bi = best_idx[t];
            }
        return finish_exhaustive(bc, bi, total, N, Q);
    }
#endif
    (void)nt;
    return exhaustive_search_serial(cost, N, Q, budget);
}

PhaseSearchReport alternating_search(const PhaseCost &cost, int N, int Q,
                                     const PhaseConfig &init, double eps1, int max_sweeps) {
    if (N < 1 || Q < 1)
        throw DomainError("alternating search: need N >= 1 and Q >= 1");
    if (!(eps1 > 0.0))
        throw DomainError("alternating search: eps1 must be positive");
    if (static_cast<int>(init.size()) != N || init.q_levels() != Q)
        throw DimensionMismatch("alternating search: init does not match (N, Q)");

    PhaseSearchReport rep;
    rep.best = init;
    rep.best_cost = cost(rep.best);
    rep.evaluations = 1;
    for (int sweep = 0; sweep < max_sweeps; ++sweep) {
        const double sweep_start = rep.best_cost;
        for (int n = 0; n < N; ++n) {
            int best_q = rep.best.index(static_cast<std::size_t>(n));
            double best_c = rep.best_cost;
            for (int q = 0; q < Q; ++q) {
                rep.best.set_index(static_cast<std::size_t>(n), q);
                const double c = cost(rep.best);
                ++rep.evaluations;
                if (c < best_c || (c == best_c && q < best_q)) {
                    best_c = c;
                    best_q = q;
                }
            }
            rep.best.set_index(static_cast<std::size_t>(n), best_q);
            rep.best_cost = best_c;
        }
        ++rep.iterations;
        const double drop = sweep_start - rep.best_cost;
        const double frac = (drop == 0.0) ? 0.0
                                          : drop / std::max(std::abs(sweep_start),
                                                            std::numeric_limits<double>::min());
        if (frac < eps1) {
            rep.converged = true;
            break;
        }
    }
    return rep;
}

PhaseSearchReport minmax_correlation(const ChannelSet &ch, int N, int Q, int restarts,
                                     Rng &rng, double eps1, int max_sweeps, int threads) {
    if (ch.users() < 2)
        throw InvalidDims("minmax_correlation: needs at least two users");
    if (restarts < 0)
        throw DomainError("minmax_correlation: restarts must be >= 0");
    const PhaseCost cost = make_max_corr_sq_cost(ch, Q);

    std::vector<PhaseConfig> inits;
    inits.emplace_back(static_cast<std::size_t>(N), Q); // all-zeros
    for (int r = 0; r < restarts; ++r) {
        PhaseConfig cfg(static_cast<std::size_t>(N), Q);
        for (int n = 0; n < N; ++n)
            cfg.set_index(static_cast<std::size_t>(n),
                          static_cast<int>(rng.next_below(static_cast<std::uint32_t>(Q))));
        inits.push_back(std::move(cfg));
    }

    const int runs = static_cast<int>(inits.size());
    std::vector<PhaseSearchReport> reports(runs);
    std::exception_ptr first_error = nullptr;
    std::atomic<bool> failed{false};
#ifdef _OPENMP
#pragma omp parallel for schedule(static) num_threads(resolve_threads(threads))
#endif
    for (int r = 0; r < runs; ++r) {
        if (failed.load(std::memory_order_relaxed))
            continue;
        try {
            reports[r] = alternating_search(cost, N, Q, inits[r], eps1, max_sweeps);
        } catch (...) {
            bool expected = false;
            if (failed.compare_exchange_strong(expected, true))
                first_error = std::current_exception();
        }
    }
    if (first_error)
        std::rethrow_exception(first_error);

    int best_run = 0;
    std::uint64_t total_evals = 0;
    for (int r = 0; r < runs; ++r) {
        total_evals += reports[r].evaluations;
        if (reports[r].best_cost < reports[best_run].best_cost)
            best_run = r;
    }
    PhaseSearchReport rep = reports[best_run];
    rep.evaluations = total_evals;
    return rep;
}

namespace {

// Effective channels from a prebuilt codebook table, written into a caller
// buffer to keep per-evaluation allocations down.
void eval_channels(const ChannelSet &ch, const std::vector<cxd> &table,
                   const PhaseConfig &cfg, std::vector<CVec> &h) {
    const std::size_t n = ch.G.rows();
    const std::size_t m = ch.G.cols();
    h.resize(ch.users());
    for (std::size_t k = 0; k < ch.users(); ++k) {
        h[k] = ch.h_d[k];
        for (std::size_t t = 0; t < n; ++t) {
            const cxd c = ch.h_r[k][t] * std::conj(table[cfg.index(t)]);
            for (std::size_t j = 0; j < m; ++j)
                h[k][j] += c * std::conj(ch.G(t, j));
        }
    }
}

} // namespace

PhaseCost make_dpc_power_cost(const ChannelSet &ch, std::vector<double> gamma, double sigma2,
                              int q_levels) {
    return [ch, gamma = std::move(gamma), sigma2,
            table = phase_table(q_levels)](const PhaseConfig &cfg) {
        std::vector<CVec> h;
        eval_channels(ch, table, cfg, h);
        return dpc_min_power_value(h, gamma, sigma2);
    };
}

PhaseCost make_zf_power_cost(const ChannelSet &ch, std::vector<double> gamma, double sigma2,
                             int q_levels) {
    return [ch, gamma = std::move(gamma), sigma2,
            table = phase_table(q_levels)](const PhaseConfig &cfg) {
        std::vector<CVec> h;
        eval_channels(ch, table, cfg, h);
        return zf_min_power_value(h, gamma, sigma2);
    };
}

PhaseCost make_max_corr_sq_cost(const ChannelSet &ch, int q_levels) {
    return [ch, table = phase_table(q_levels)](const PhaseConfig &cfg) {
        std::vector<CVec> h;
        eval_channels(ch, table, cfg, h);
        return max_corr_sq(h);
    };
}

PhaseCost make_negative_gain_cost(const ChannelSet &ch, std::size_t user, int q_levels) {
    if (user >= ch.users())
        throw IndexOutOfRange("make_negative_gain_cost: no such user");
    return [ch, user, table = phase_table(q_levels)](const PhaseConfig &cfg) {
        std::vector<CVec> h;
        eval_channels(ch, table, cfg, h);
        return -norm2(h[user]);
    };
}

} // namespace irsbc
