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

#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "irsbc/cli.hpp"

namespace {

void add_common_options(CLI::App *cmd, irsbc::RunConfig &cfg, std::string &method) {
    cmd->add_option("--config", cfg.scenario_path, "Scenario JSON file");
    cmd->add_option("--seed", cfg.seed, "RNG seed (default 42)");
    cmd->add_option("--out", cfg.out_prefix, "Output path prefix");
    cmd->add_option("--format", cfg.format, "Output format: csv | json")
        ->check(CLI::IsMember({"csv", "json"}));
    cmd->add_option("--method", method, "Phase search: exhaustive | alternating")
        ->check(CLI::IsMember({"exhaustive", "alternating"}));
    cmd->add_option("--grid", cfg.grid_S, "Rate-profile grid density S");
    cmd->add_option("--trials", cfg.trials, "Monte Carlo trials / realizations");
    cmd->add_option("--eps1", cfg.eps1, "Alternating-search fractional tolerance");
    cmd->add_option("--eps2", cfg.eps2, "Bisection rate tolerance (bps/Hz)");
    cmd->add_option("--restarts", cfg.restarts, "Random restarts for correlation search");
    cmd->add_option("--threads", cfg.threads, "Worker threads (0 = auto)");
    cmd->add_option("--M", cfg.override_M, "Override antenna count");
    cmd->add_option("--K", cfg.override_K, "Override user count");
    cmd->add_option("--N", cfg.override_N, "Override subsurface count");
    cmd->add_option("--Nbar", cfg.override_Nbar, "Override elements per subsurface");
    cmd->add_option("--b", cfg.override_b, "Override phase bits");
    cmd->add_option("--n-list", cfg.n_list, "List of N values for sweeps");
}

} // namespace

int main(int argc, char **argv) {
    CLI::App app{"capacity and achievable-rate regions of an IRS-aided MISO broadcast channel"};
    app.set_version_flag("--version", std::string("irsbc ") + irsbc::kVersion);
    app.require_subcommand(1);

    irsbc::RunConfig cfg;
    std::string method = "alternating";

    CLI::App *region = app.add_subcommand("region", "Two-user capacity/rate region boundaries");
    region->add_option("--scheme", cfg.schemes,
                       "dpc | zf | zf-static | tdma (+ -no-irs suffix); repeatable");
    region->add_option("--rho2-d", cfg.rho2_d, "Force this squared direct-link correlation");
    add_common_options(region, cfg, method);

    CLI::App *sweep = app.add_subcommand("sweep", "Mean sum rate vs N or Pmax");
    sweep->add_option("--vary", cfg.vary, "N | Pmax");
    sweep->add_option("--values", cfg.values, "Swept values (N counts or Pmax dBm)");
    sweep->add_option("--scheme", cfg.schemes, "dpc | zf | dpc-no-irs | zf-no-irs; repeatable");
    add_common_options(sweep, cfg, method);

    CLI::App *lemma2 = app.add_subcommand("lemma2", "Random-phase correlation ratio vs N");
    add_common_options(lemma2, cfg, method);

    CLI::App *theorem1 =
        app.add_subcommand("theorem1", "DPC/ZF sum-rate gap vs N under random phases");
    add_common_options(theorem1, cfg, method);

    CLI::App *correlation =
        app.add_subcommand("correlation", "Min-max correlation after phase optimization");
    add_common_options(correlation, cfg, method);

    CLI::App *validate = app.add_subcommand("validate", "Run the oracle checks");
    add_common_options(validate, cfg, method);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        if (e.get_exit_code() == 0)
            return app.exit(e); // --help / --version
        app.exit(e);
        return 2;
    }

    cfg.command = app.get_subcommands().front()->get_name();
    cfg.method = (method == "exhaustive") ? irsbc::Method::exhaustive
                                          : irsbc::Method::alternating;

    try {
        return irsbc::run_command(cfg);
    } catch (const irsbc::ConfigError &e) {
        nlohmann::json err = {{"error", {{"code", e.code()}, {"message", e.what()}}}};
        std::cerr << err.dump() << "\n";
        return 2;
    } catch (const irsbc::Error &e) {
        nlohmann::json err = {{"error", {{"code", e.code()}, {"message", e.what()}}}};
        std::cerr << err.dump() << "\n";
        return 1;
    } catch (const std::exception &e) {
        nlohmann::json err = {{"error", {{"code", "internal"}, {"message", e.what()}}}};
        std::cerr << err.dump() << "\n";
        return 1;
    }
}
