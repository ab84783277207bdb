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

#ifndef IRSBC_CLI_HPP
#define IRSBC_CLI_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "irsbc/region.hpp"
#include "irsbc/version.hpp"

// Command layer behind the irsbc executable. Kept in the library so the
// command implementations are directly testable; main() only parses argv.

namespace irsbc {

struct RunConfig {
    std::string command;
    std::string scenario_path; // empty: built-in default scenario
    std::uint64_t seed = kDefaultSeed;
    std::string out_prefix = "irsbc_out";
    std::string format = "csv"; // csv | json
    Method method = Method::alternating;
    int grid_S = 20;
    std::uint64_t trials = 0; // 0: per-command default
    double eps1 = 1e-4;
    double eps2 = 1e-3;
    int restarts = 4;
    int threads = 0; // 0: auto
    std::vector<std::string> schemes;
    std::string vary = "N"; // sweep: N | Pmax
    std::vector<double> values;
    std::vector<int> n_list;
    double rho2_d = -1.0; // region: synthetic direct-link correlation, < 0 = off
    // scenario overrides for runs without a config file
    int override_M = 0, override_K = 0, override_N = 0, override_Nbar = 0, override_b = 0;
};

// FNV-1a over the canonical effective-config JSON; embedded in every output.
std::uint64_t config_hash(const RunConfig &cfg);

// Dispatches cfg.command. Returns a process exit code (0 success, 2 usage
// errors) and writes output files <out_prefix>[_<scheme>].<format>.
int run_command(const RunConfig &cfg);

// Resolves the scenario for a config: file if given, otherwise the built-in
// default with any overrides applied.
Scenario resolve_scenario(const RunConfig &cfg);

} // namespace irsbc

#endif
