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

// Benchmarks the OpenMP kernels against their serial reference paths and
// checks that both return identical results while timing them.

#include <chrono>
#include <cstdio>
#include <cstring>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "irsbc/chanpen.hpp"
#include "irsbc/experiments.hpp"
#include "irsbc/phaseopt.hpp"

using namespace irsbc;

namespace {

double now_ms() {
    using clock = std::chrono::steady_clock;
    return std::chrono::duration<double, std::milli>(clock::now().time_since_epoch()).count();
}

ChannelSet bench_channels(int M, int K, int N) {
    Scenario scn;
    scn.M = M;
    scn.K = K;
    scn.N = N;
    scn.Nbar = 1;
    scn.b = 2;
    scn.Pmax = 1.0;
    scn.sigma2 = 1.0;
    scn.mode = ChannelMode::iid;
    scn.iid = IidSpec{std::vector<double>(static_cast<std::size_t>(K), 1.0), 1.0};
    Rng rng(7, 0);
    return sample_channels(scn, rng);
}

} // namespace

int main(int argc, char **argv) {
    int n_sub = 8;
    int repeats = 3;
    for (int i = 1; i < argc; ++i) {
        if (std::strcmp(argv[i], "--quick") == 0) {
            n_sub = 5;
            repeats = 1;
        }
    }

#ifdef _OPENMP
    std::printf("openmp max threads: %d\n", omp_get_max_threads());
#else
    std::printf("built without openmp; parallel paths run serially\n");
#endif

    // Exhaustive DPC power search over Q^N configurations.
    {
        const int Q = 4, K = 2, M = 4;
        const ChannelSet ch = bench_channels(M, K, n_sub);
        const PhaseCost cost = make_dpc_power_cost(ch, {1.0, 3.0}, 1.0, Q);
        double t_serial = 0.0, t_parallel = 0.0;
        PhaseSearchReport a, b;
        for (int r = 0; r < repeats; ++r) {
            double t0 = now_ms();
            a = exhaustive_search_serial(cost, n_sub, Q);
            t_serial += now_ms() - t0;
            t0 = now_ms();
            b = exhaustive_search(cost, n_sub, Q);
            t_parallel += now_ms() - t0;
        }
        const bool same =
            a.best_cost == b.best_cost && a.best.indices() == b.best.indices();
        std::printf("exhaustive dpc power  N=%d Q=%d (%llu configs): serial %.1f ms, "
                    "parallel %.1f ms, speedup %.2fx, identical=%s\n",
                    n_sub, Q, static_cast<unsigned long long>(a.evaluations),
                    t_serial / repeats, t_parallel / repeats, t_serial / t_parallel,
                    same ? "yes" : "NO");
    }

    // Monte Carlo correlation-ratio estimator.
    {
        const std::uint64_t trials = 20000;
        double t1 = now_ms();
        const McSummary s1 = lemma2_ratio(4, 64, trials, 11, 0, 1);
        t1 = now_ms() - t1;
        double t2 = now_ms();
        const McSummary s2 = lemma2_ratio(4, 64, trials, 11, 0, 0);
        t2 = now_ms() - t2;
        std::printf("lemma2 ratio M=4 N=64 (%llu trials): 1 thread %.1f ms, auto threads "
                    "%.1f ms, speedup %.2fx, identical=%s\n",
                    static_cast<unsigned long long>(trials), t1, t2, t1 / t2,
                    s1.mean == s2.mean ? "yes" : "NO");
    }
    return 0;
}
