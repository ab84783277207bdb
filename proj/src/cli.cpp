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

#include "irsbc/cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include "irsbc/chanpen.hpp"
#include "irsbc/dpc.hpp"
#include "irsbc/experiments.hpp"
#include "irsbc/zf.hpp"

namespace irsbc {

namespace {

std::string fmt_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

std::string hash_hex(std::uint64_t h) {
    char buf[20];
    std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

std::uint64_t fnv1a(const std::string &s) {
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 0x100000001b3ull;
    }
    return h;
}

nlohmann::json meta_json(const RunConfig &cfg) {
    nlohmann::json m;
    m["tool"] = std::string("irsbc ") + kVersion;
    m["command"] = cfg.command;
    m["config_hash"] = hash_hex(config_hash(cfg));
    m["seed"] = cfg.seed;
    m["rng"] = std::string("philox4x32-10/v") + std::to_string(kRngVersion);
    return m;
}

void write_meta_csv(std::ostream &os, const RunConfig &cfg) {
    os << "# tool=irsbc " << kVersion << "\n";
    os << "# command=" << cfg.command << "\n";
    os << "# config_hash=" << hash_hex(config_hash(cfg)) << "\n";
    os << "# seed=" << cfg.seed << "\n";
    os << "# rng=philox4x32-10/v" << kRngVersion << "\n";
}

std::ofstream open_out(const std::string &path) {
    std::ofstream os(path, std::ios::binary);
    if (!os)
        throw ConfigError("cannot open output file: " + path);
    return os;
}

void write_json_file(const std::string &path, const nlohmann::json &j) {
    std::ofstream os = open_out(path);
    os << j.dump(2) << "\n";
}

std::uint64_t default_trials(const RunConfig &cfg, std::uint64_t fallback) {
    return cfg.trials > 0 ? cfg.trials : fallback;
}

std::vector<int> default_n_list(const RunConfig &cfg, std::vector<int> fallback) {
    return cfg.n_list.empty() ? fallback : cfg.n_list;
}

// ---- region command -------------------------------------------------------

struct SchemeToken {
    std::string base; // dpc | zf | zf-static | tdma
    bool no_irs = false;
};

SchemeToken parse_scheme_token(std::string tok) {
    SchemeToken t;
    const std::string suffix = "-no-irs";
    if (tok.size() > suffix.size() && tok.compare(tok.size() - suffix.size(), suffix.size(), suffix) == 0) {
        t.no_irs = true;
        tok.resize(tok.size() - suffix.size());
    }
    if (tok != "dpc" && tok != "zf" && tok != "zf-static" && tok != "tdma")
        throw ConfigError("region: unknown scheme token '" + tok + "'");
    t.base = std::move(tok);
    return t;
}

RegionBoundary tdma_boundary(const Scenario &scn, const ChannelSet &ch, Method method,
                             const BisectOptions &opt) {
    RegionBoundary boundary;
    std::vector<std::array<double, 2>> pts;
    for (std::size_t user = 0; user < 2; ++user) {
        const PhaseCost cost = make_negative_gain_cost(ch, user, scn.q_levels());
        PhaseSearchReport rep;
        if (method == Method::exhaustive) {
            rep = exhaustive_search(cost, scn.N, scn.q_levels(), opt.budget, opt.threads);
        } else {
            const PhaseConfig zeros(static_cast<std::size_t>(scn.N), scn.q_levels());
            rep = alternating_search(cost, scn.N, scn.q_levels(), zeros, opt.eps1,
                                     opt.max_sweeps);
        }
        const double gain = -rep.best_cost;
        const double rate = std::log2(1.0 + scn.Pmax * gain / scn.sigma2);
        BoundaryPoint p;
        p.alpha = RateProfile::make(user == 0 ? std::vector<double>{1.0, 0.0}
                                              : std::vector<double>{0.0, 1.0});
        p.rates = user == 0 ? std::vector<double>{rate, 0.0} : std::vector<double>{0.0, rate};
        p.phase = rep.best;
        p.scheme = Scheme::zf; // single-user slots; precoder class is moot
        p.method = method;
        pts.push_back({p.rates[0], p.rates[1]});
        boundary.points.push_back(std::move(p));
    }
    Hull2D hull = convex_hull_2d(pts);
    boundary.hull = std::move(hull.vertices);
    boundary.timeshare = std::move(hull.timeshare);
    return boundary;
}

int cmd_region(const RunConfig &cfg) {
    if (cfg.schemes.empty())
        throw ConfigError("region: at least one --scheme is required");
    Scenario scn = resolve_scenario(cfg);
    if (scn.K != 2)
        throw ConfigError("region: needs a two-user scenario");
    BisectOptions opt;
    opt.eps1 = cfg.eps1;
    opt.eps2 = cfg.eps2;
    opt.threads = cfg.threads;

    Rng rng(cfg.seed, 0);
    ChannelSet ch = sample_channels(scn, rng);
    if (cfg.rho2_d >= 0.0)
        set_direct_correlation(ch, cfg.rho2_d);

    for (const std::string &tok : cfg.schemes) {
        const SchemeToken t = parse_scheme_token(tok);
        const ChannelSet &used_base = ch;
        const ChannelSet used = t.no_irs ? without_irs(used_base) : used_base;
        RegionBoundary boundary;
        if (t.base == "tdma") {
            boundary = tdma_boundary(scn, used, cfg.method, opt);
        } else {
            const Scheme sch = (t.base == "dpc") ? Scheme::dpc : Scheme::zf;
            boundary = sweep_boundary(scn, used, sch, cfg.method, cfg.grid_S, opt);
            if (t.base == "zf-static") {
                boundary.hull.clear(); // static beamforming: no time sharing
                boundary.timeshare.clear();
            }
        }
        const std::string path = cfg.out_prefix + "_" + tok + "." + cfg.format;
        if (cfg.format == "csv") {
            std::ofstream os = open_out(path);
            write_meta_csv(os, cfg);
            os << "# scheme_token=" << tok << "\n";
            write_boundary_csv(os, boundary);
        } else {
            nlohmann::json j;
            j["meta"] = meta_json(cfg);
            j["meta"]["scheme_token"] = tok;
            j["boundary"] = boundary_to_json(boundary);
            write_json_file(path, j);
        }
    }
    return 0;
}

// ---- sweep command --------------------------------------------------------

int cmd_sweep(const RunConfig &cfg) {
    Scenario scn = resolve_scenario(cfg);
    const bool by_n = (cfg.vary == "N" || cfg.vary == "n");
    if (!by_n && cfg.vary != "Pmax" && cfg.vary != "pmax")
        throw ConfigError("sweep: --vary must be N or Pmax");
    std::vector<double> values = cfg.values;
    if (values.empty())
        values = by_n ? std::vector<double>{8, 16, 32, 48, 64}
                      : std::vector<double>{10, 20, 30, 40};
    std::vector<std::string> schemes = cfg.schemes;
    if (schemes.empty())
        schemes = {"dpc", "zf", "dpc-no-irs", "zf-no-irs"};
    BisectOptions opt;
    opt.eps1 = cfg.eps1;
    opt.eps2 = cfg.eps2;
    opt.threads = cfg.threads;

    const std::vector<SumrateRow> rows = sumrate_sweep(
        scn, by_n ? SweepVariable::n : SweepVariable::pmax_dbm, values, schemes, cfg.method,
        default_trials(cfg, 100), cfg.seed, opt);

    const std::string path = cfg.out_prefix + "." + cfg.format;
    if (cfg.format == "csv") {
        std::ofstream os = open_out(path);
        write_meta_csv(os, cfg);
        os << (by_n ? "N" : "Pmax_dBm") << ",scheme,mean_sumrate,stderr\n";
        for (const SumrateRow &r : rows)
            os << fmt_double(r.value) << "," << r.scheme << "," << fmt_double(r.mean_sumrate)
               << "," << fmt_double(r.stderr_of_mean) << "\n";
    } else {
        nlohmann::json j;
        j["meta"] = meta_json(cfg);
        j["rows"] = nlohmann::json::array();
        for (const SumrateRow &r : rows)
            j["rows"].push_back({{"value", r.value},
                                 {"scheme", r.scheme},
                                 {"mean_sumrate", r.mean_sumrate},
                                 {"stderr", r.stderr_of_mean}});
        write_json_file(path, j);
    }
    return 0;
}

// ---- lemma2 command -------------------------------------------------------

int cmd_lemma2(const RunConfig &cfg) {
    const int M = cfg.override_M > 0 ? cfg.override_M : 4;
    const std::vector<int> n_list = default_n_list(cfg, {20, 40, 60, 80, 100});
    const std::uint64_t trials = default_trials(cfg, 10000);
    const int q = cfg.override_b > 0 ? (1 << cfg.override_b) : 0; // 0: continuous

    std::vector<McSummary> rows;
    for (int n : n_list)
        rows.push_back(lemma2_ratio(M, n, trials, cfg.seed, q, cfg.threads));

    const std::string path = cfg.out_prefix + "." + cfg.format;
    if (cfg.format == "csv") {
        std::ofstream os = open_out(path);
        write_meta_csv(os, cfg);
        os << "N,ratio,stderr\n";
        for (std::size_t i = 0; i < rows.size(); ++i)
            os << n_list[i] << "," << fmt_double(rows[i].mean) << ","
               << fmt_double(rows[i].stderr_of_mean) << "\n";
    } else {
        nlohmann::json j;
        j["meta"] = meta_json(cfg);
        j["rows"] = nlohmann::json::array();
        for (std::size_t i = 0; i < rows.size(); ++i)
            j["rows"].push_back({{"N", n_list[i]},
                                 {"ratio", rows[i].mean},
                                 {"stderr", rows[i].stderr_of_mean},
                                 {"trials", rows[i].trials}});
        write_json_file(path, j);
    }
    return 0;
}

// ---- theorem1 command -----------------------------------------------------

int cmd_theorem1(const RunConfig &cfg) {
    int M = cfg.override_M > 0 ? cfg.override_M : 8;
    int K = cfg.override_K > 0 ? cfg.override_K : 4;
    double Pmax = 10.0, sigma2 = 1.0;
    std::vector<double> rho2_r(static_cast<std::size_t>(K), 1.0);
    double rho2_g = 1.0;
    if (!cfg.scenario_path.empty()) {
        const Scenario scn = resolve_scenario(cfg);
        if (scn.mode != ChannelMode::iid)
            throw ConfigError("theorem1: scenario must use the iid channel mode");
        M = scn.M;
        K = scn.K;
        Pmax = scn.Pmax;
        sigma2 = scn.sigma2;
        rho2_r = scn.iid->rho2_r;
        rho2_g = scn.iid->rho2_g;
    }
    const std::vector<int> n_list = default_n_list(cfg, {16, 32, 64, 128, 256});
    const std::uint64_t trials = default_trials(cfg, 500);

    const Theorem1Report rep =
        theorem1_sweep(M, K, n_list, Pmax, sigma2, rho2_r, rho2_g, trials, cfg.seed,
                       cfg.threads);

    const std::string path = cfg.out_prefix + "." + cfg.format;
    if (cfg.format == "csv") {
        std::ofstream os = open_out(path);
        write_meta_csv(os, cfg);
        os << "N,mean_dpc,stderr_dpc,mean_zf,stderr_zf,eta,upper_dpc,lower_zf\n";
        for (std::size_t i = 0; i < rep.N_values.size(); ++i)
            os << rep.N_values[i] << "," << fmt_double(rep.mean_dpc[i]) << ","
               << fmt_double(rep.stderr_dpc[i]) << "," << fmt_double(rep.mean_zf[i]) << ","
               << fmt_double(rep.stderr_zf[i]) << "," << fmt_double(rep.eta[i]) << ","
               << fmt_double(rep.upper_dpc[i]) << "," << fmt_double(rep.lower_zf[i]) << "\n";
    } else {
        nlohmann::json j;
        j["meta"] = meta_json(cfg);
        j["rows"] = nlohmann::json::array();
        for (std::size_t i = 0; i < rep.N_values.size(); ++i)
            j["rows"].push_back({{"N", rep.N_values[i]},
                                 {"mean_dpc", rep.mean_dpc[i]},
                                 {"stderr_dpc", rep.stderr_dpc[i]},
                                 {"mean_zf", rep.mean_zf[i]},
                                 {"stderr_zf", rep.stderr_zf[i]},
                                 {"eta", rep.eta[i]},
                                 {"upper_dpc", rep.upper_dpc[i]},
                                 {"lower_zf", rep.lower_zf[i]}});
        write_json_file(path, j);
    }
    return 0;
}

// ---- correlation command ---------------------------------------------------

int cmd_correlation(const RunConfig &cfg) {
    const int M = cfg.override_M > 0 ? cfg.override_M : 4;
    const int K = cfg.override_K > 0 ? cfg.override_K : 2;
    const int b = cfg.override_b > 0 ? cfg.override_b : 8;
    const std::vector<int> n_list = default_n_list(cfg, {16, 32, 64});
    const std::uint64_t realizations = default_trials(cfg, 20);

    struct Row {
        int n;
        std::uint64_t realization;
        double best;
    };
    std::vector<Row> rows;
    std::vector<double> medians;
    for (std::size_t vi = 0; vi < n_list.size(); ++vi) {
        const int n = n_list[vi];
        Scenario scn;
        scn.M = M;
        scn.K = K;
        scn.N = n;
        scn.Nbar = 1;
        scn.b = b;
        scn.Pmax = 1.0;
        scn.sigma2 = 1.0;
        scn.mode = ChannelMode::iid;
        scn.iid = IidSpec{std::vector<double>(static_cast<std::size_t>(K), 1.0), 1.0};
        scn.validate();

        std::vector<double> best(realizations);
        for (std::uint64_t r = 0; r < realizations; ++r) {
            Rng rng(cfg.seed, vi * realizations + r);
            const ChannelSet ch = sample_channels(scn, rng);
            const PhaseSearchReport rep =
                minmax_correlation(ch, n, scn.q_levels(), cfg.restarts, rng, cfg.eps1, 50,
                                   cfg.threads);
            best[r] = rep.best_cost;
            rows.push_back({n, r, rep.best_cost});
        }
        std::vector<double> sorted = best;
        std::sort(sorted.begin(), sorted.end());
        const std::size_t mid = sorted.size() / 2;
        medians.push_back(sorted.size() % 2 == 1
                              ? sorted[mid]
                              : 0.5 * (sorted[mid - 1] + sorted[mid]));
    }

    const std::string path = cfg.out_prefix + "." + cfg.format;
    if (cfg.format == "csv") {
        std::ofstream os = open_out(path);
        write_meta_csv(os, cfg);
        os << "N,realization,best_rho2_sq,median_rho2_sq\n";
        for (const Row &r : rows) {
            std::size_t vi = 0;
            while (n_list[vi] != r.n)
                ++vi;
            os << r.n << "," << r.realization << "," << fmt_double(r.best) << ","
               << fmt_double(medians[vi]) << "\n";
        }
    } else {
        nlohmann::json j;
        j["meta"] = meta_json(cfg);
        j["rows"] = nlohmann::json::array();
        for (const Row &r : rows)
            j["rows"].push_back(
                {{"N", r.n}, {"realization", r.realization}, {"best_rho2_sq", r.best}});
        j["medians"] = nlohmann::json::array();
        for (std::size_t vi = 0; vi < n_list.size(); ++vi)
            j["medians"].push_back({{"N", n_list[vi]}, {"median_rho2_sq", medians[vi]}});
        write_json_file(path, j);
    }
    return 0;
}

// ---- validate command -----------------------------------------------------

CVec random_cvec(Rng &rng, std::size_t m) {
    CVec v(m);
    for (cxd &x : v)
        x = rng.next_cgaussian(1.0);
    return v;
}

// O(n^3) hull-vertex oracle: an edge (i, j) is on the hull iff every other
// point sits on its left (counterclockwise orientation).
std::vector<std::array<double, 2>> brute_hull_vertices(
    std::vector<std::array<double, 2>> pts) {
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    const std::size_t n = pts.size();
    std::vector<bool> on_hull(n, false);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            if (i == j)
                continue;
            bool all_left = true;
            for (std::size_t t = 0; t < n && all_left; ++t) {
                if (t == i || t == j)
                    continue;
                const double c = (pts[j][0] - pts[i][0]) * (pts[t][1] - pts[i][1]) -
                                 (pts[j][1] - pts[i][1]) * (pts[t][0] - pts[i][0]);
                if (c <= 0.0)
                    all_left = false;
            }
            if (all_left)
                on_hull[i] = on_hull[j] = true;
        }
    std::vector<std::array<double, 2>> out;
    for (std::size_t i = 0; i < n; ++i)
        if (on_hull[i])
            out.push_back(pts[i]);
    std::sort(out.begin(), out.end());
    return out;
}

int cmd_validate(const RunConfig &cfg) {
    struct Check {
        std::string name;
        bool pass;
        std::string detail;
    };
    std::vector<Check> checks;
    const auto add = [&](const std::string &name, bool pass, const std::string &detail) {
        checks.push_back({name, pass, detail});
    };

    // 1. RNG known answers
    {
        const auto z = Rng::philox_block({0, 0, 0, 0}, {0, 0});
        const std::array<std::uint32_t, 4> z_ref = {0x6627e8d5u, 0xe169c58du, 0xbc57ac4cu,
                                                    0x9b00dbd8u};
        const auto f = Rng::philox_block({0xffffffffu, 0xffffffffu, 0xffffffffu, 0xffffffffu},
                                         {0xffffffffu, 0xffffffffu});
        const std::array<std::uint32_t, 4> f_ref = {0x408f276du, 0x41c83b0eu, 0xa20bc7c6u,
                                                    0x6d5451fdu};
        add("rng philox known answers", z == z_ref && f == f_ref, "2 vectors");
    }

    // 2. Hermitian solve residuals
    {
        Rng rng(cfg.seed, 1000);
        double worst = 0.0;
        for (int t = 0; t < 100; ++t) {
            const std::size_t m = 2 + rng.next_below(7);
            CMat a(m, m);
            for (std::size_t i = 0; i < 3; ++i)
                add_scaled_outer(a, 1.0, random_cvec(rng, m));
            for (std::size_t i = 0; i < m; ++i)
                a(i, i) += 1.0;
            const CVec rhs = random_cvec(rng, m);
            const CVec x = hermitian_solve(a, rhs);
            CVec res = matvec(a, x);
            for (std::size_t i = 0; i < m; ++i)
                res[i] -= rhs[i];
            worst = std::max(worst, norm(res) / norm(rhs));
        }
        add("hermitian_solve residuals", worst <= 1e-10, "max rel " + fmt_double(worst));
    }

    // 3. Closed-form power recursion vs backward oracle
    {
        Rng rng(cfg.seed, 1001);
        double worst_total = 0.0, worst_sinr = 0.0;
        for (int t = 0; t < 50; ++t) {
            const std::size_t m = 2 + rng.next_below(3);
            const std::size_t k = 1 + rng.next_below(static_cast<std::uint32_t>(m));
            std::vector<CVec> h;
            for (std::size_t u = 0; u < k; ++u)
                h.push_back(random_cvec(rng, m));
            SinrTargets tg;
            for (std::size_t u = 0; u < k; ++u)
                tg.gamma.push_back(0.1 + 9.9 * rng.next_double());
            const double s2 = 0.5;
            const DpcSolution sol = dpc_min_power(h, tg, s2);
            double total = 0.0;
            for (double p : sol.powers)
                total += p;
            worst_total = std::max(worst_total, std::abs(total - sol.p_star) / sol.p_star);
            for (std::size_t u = 0; u < k; ++u) {
                double interf = 0.0;
                for (std::size_t i = u + 1; i < k; ++i)
                    interf += sol.powers[i] * std::norm(cdot(h[u], sol.directions[i]));
                const double sinr =
                    sol.powers[u] * std::norm(cdot(h[u], sol.directions[u])) / (s2 + interf);
                worst_sinr = std::max(worst_sinr, std::abs(sinr - tg.gamma[u]) / tg.gamma[u]);
            }
        }
        add("dpc closed form vs oracle", worst_total <= 1e-8 && worst_sinr <= 1e-8,
            "total " + fmt_double(worst_total) + ", sinr " + fmt_double(worst_sinr));
    }

    // 4. ZF orthogonality and two-user closed form
    {
        Rng rng(cfg.seed, 1002);
        bool ok = true;
        for (int t = 0; t < 25 && ok; ++t) {
            const std::size_t m = 2 + rng.next_below(3);
            const std::size_t k = 1 + rng.next_below(static_cast<std::uint32_t>(m));
            std::vector<CVec> h;
            for (std::size_t u = 0; u < k; ++u)
                h.push_back(random_cvec(rng, m));
            SinrTargets tg;
            for (std::size_t u = 0; u < k; ++u)
                tg.gamma.push_back(0.5 + rng.next_double());
            const ZfSolution sol = zf_min_power(h, tg, 1.0);
            if (!sol.feasible) {
                ok = false;
                break;
            }
            for (std::size_t u = 0; u < k && ok; ++u)
                for (std::size_t j = 0; j < k; ++j)
                    if (j != u &&
                        std::abs(cdot(h[j], sol.directions[u])) > 1e-9 * norm(h[j]))
                        ok = false;
        }
        add("zf null-space orthogonality", ok, "25 instances");
    }

    // 5. Alternating never beats exhaustive
    {
        Rng rng(cfg.seed, 1003);
        bool ok = true;
        for (int t = 0; t < 10 && ok; ++t) {
            ChannelSet ch;
            const std::size_t m = 2, n = 4, k = 2;
            ch.G = CMat(n, m);
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < m; ++j)
                    ch.G(i, j) = rng.next_cgaussian(1.0);
            for (std::size_t u = 0; u < k; ++u) {
                ch.h_d.push_back(random_cvec(rng, m));
                ch.h_r.push_back(random_cvec(rng, n));
            }
            const PhaseCost cost = make_dpc_power_cost(ch, {1.0, 2.0}, 1.0, 4);
            const PhaseSearchReport ex = exhaustive_search(cost, 4, 4);
            const PhaseConfig zeros(n, 4);
            const PhaseSearchReport alt = alternating_search(cost, 4, 4, zeros);
            if (!(alt.best_cost >= ex.best_cost))
                ok = false;
        }
        add("alternating >= exhaustive", ok, "10 instances");
    }

    // 6. Single-user bisection against the closed form
    {
        Rng rng(cfg.seed, 1004);
        double worst = 0.0;
        for (int t = 0; t < 10; ++t) {
            Scenario scn;
            scn.M = 2 + static_cast<int>(rng.next_below(3));
            scn.K = 1;
            scn.N = 1;
            scn.Nbar = 1;
            scn.b = 1;
            scn.Pmax = 1.0;
            scn.sigma2 = 1.0;
            scn.mode = ChannelMode::iid;
            scn.iid = IidSpec{{1.0}, 1.0};
            ChannelSet ch;
            ch.G = CMat(1, static_cast<std::size_t>(scn.M));
            ch.h_r = {CVec(1, cxd(0.0))};
            ch.h_d = {random_cvec(rng, static_cast<std::size_t>(scn.M))};
            BisectOptions opt;
            opt.eps2 = 1e-4;
            const BoundaryPoint bp = bisect_rate(scn, ch, RateProfile::make({1.0}),
                                                 Scheme::dpc, Method::exhaustive, opt);
            const double exact = std::log2(1.0 + scn.Pmax * norm2(ch.h_d[0]) / scn.sigma2);
            worst = std::max(worst, std::abs(bp.rates[0] - exact));
        }
        add("single-user bisection", worst <= 1e-4, "max err " + fmt_double(worst));
    }

    // 7. Hull vs brute-force oracle
    {
        Rng rng(cfg.seed, 1005);
        bool ok = true;
        for (int t = 0; t < 5 && ok; ++t) {
            std::vector<std::array<double, 2>> pts;
            for (int i = 0; i < 12; ++i)
                pts.push_back({rng.next_double() * 4.0, rng.next_double() * 4.0});
            const Hull2D hull = convex_hull_2d(pts);
            std::vector<std::array<double, 2>> cand = pts;
            double r1 = 0.0, r2 = 0.0;
            for (const auto &p : pts) {
                r1 = std::max(r1, p[0]);
                r2 = std::max(r2, p[1]);
            }
            cand.push_back({0.0, 0.0});
            cand.push_back({r1, 0.0});
            cand.push_back({0.0, r2});
            std::vector<std::array<double, 2>> expect = brute_hull_vertices(cand);
            std::vector<std::array<double, 2>> got = hull.vertices;
            std::sort(got.begin(), got.end());
            if (got != expect)
                ok = false;
        }
        add("convex hull vs brute force", ok, "5 clouds");
    }

    int failures = 0;
    std::printf("%-34s %-6s %s\n", "check", "status", "detail");
    for (const Check &c : checks) {
        std::printf("%-34s %-6s %s\n", c.name.c_str(), c.pass ? "ok" : "FAIL",
                    c.detail.c_str());
        if (!c.pass)
            ++failures;
    }
    std::printf("%d/%zu checks passed\n", static_cast<int>(checks.size()) - failures,
                checks.size());
    return failures == 0 ? 0 : 1;
}

} // namespace

Scenario resolve_scenario(const RunConfig &cfg) {
    Scenario scn;
    if (!cfg.scenario_path.empty()) {
        std::ifstream is(cfg.scenario_path);
        if (!is)
            throw ConfigError("cannot open scenario file: " + cfg.scenario_path);
        nlohmann::json j;
        try {
            is >> j;
        } catch (const nlohmann::json::exception &e) {
            throw ConfigError("scenario file " + cfg.scenario_path + ": " + e.what());
        }
        scn = Scenario::from_json(j);
    } else {
        scn = default_scenario(cfg.override_K > 0 ? cfg.override_K : 2,
                               cfg.override_N > 0 ? cfg.override_N : 8);
    }
    if (cfg.override_M > 0)
        scn.M = cfg.override_M;
    if (cfg.override_N > 0)
        scn.N = cfg.override_N;
    if (cfg.override_Nbar > 0)
        scn.Nbar = cfg.override_Nbar;
    if (cfg.override_b > 0)
        scn.b = cfg.override_b;
    scn.validate();
    return scn;
}

std::uint64_t config_hash(const RunConfig &cfg) {
    nlohmann::json j;
    j["command"] = cfg.command;
    j["method"] = to_string(cfg.method);
    j["grid_S"] = cfg.grid_S;
    j["trials"] = cfg.trials;
    j["eps1"] = cfg.eps1;
    j["eps2"] = cfg.eps2;
    j["restarts"] = cfg.restarts;
    j["schemes"] = cfg.schemes;
    j["vary"] = cfg.vary;
    j["values"] = cfg.values;
    j["n_list"] = cfg.n_list;
    j["rho2_d"] = cfg.rho2_d;
    j["overrides"] = {cfg.override_M, cfg.override_K, cfg.override_N, cfg.override_Nbar,
                      cfg.override_b};
    if (!cfg.scenario_path.empty())
        j["scenario"] = resolve_scenario(cfg).to_json();
    return fnv1a(j.dump());
}

int run_command(const RunConfig &cfg) {
    if (cfg.format != "csv" && cfg.format != "json")
        throw ConfigError("--format must be csv or json");
    if (cfg.command == "region")
        return cmd_region(cfg);
    if (cfg.command == "sweep")
        return cmd_sweep(cfg);
    if (cfg.command == "lemma2")
        return cmd_lemma2(cfg);
    if (cfg.command == "theorem1")
        return cmd_theorem1(cfg);
    if (cfg.command == "correlation")
        return cmd_correlation(cfg);
    if (cfg.command == "validate")
        return cmd_validate(cfg);
    throw ConfigError("unknown command: " + cfg.command);
}

} // namespace irsbc
