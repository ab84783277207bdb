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

#include "irsbc/model.hpp"

#include <cmath>
#include <numbers>

namespace irsbc {

double dbm_to_watts(double dbm) { return std::pow(10.0, (dbm - 30.0) / 10.0); }
double watts_to_dbm(double watts) { return 10.0 * std::log10(watts) + 30.0; }

void Scenario::validate() const {
    if (M < 1 || K < 1 || N < 1 || Nbar < 1 || b < 1)
        throw ConfigError("scenario: M, K, N, Nbar, b must all be >= 1");
    if (b > 20)
        throw ConfigError("scenario: b > 20 is not supported");
    if (!(Pmax > 0.0) || !(sigma2 > 0.0))
        throw ConfigError("scenario: Pmax and sigma2 must be positive");
    if (mode == ChannelMode::geometric) {
        if (!geometry || iid)
            throw ConfigError("scenario: geometric mode requires geometry fields only");
        if (static_cast<int>(geometry->user_positions.size()) != K)
            throw ConfigError("scenario: need one user position per user");
        if (!(geometry->alpha_bs_irs > 0.0) || !(geometry->alpha_irs_user > 0.0) ||
            !(geometry->alpha_bs_user > 0.0))
            throw ConfigError("scenario: path-loss exponents must be positive");
    } else {
        if (!iid || geometry)
            throw ConfigError("scenario: iid mode requires iid fields only");
        if (static_cast<int>(iid->rho2_r.size()) != K)
            throw ConfigError("scenario: need one rho2_r per user");
        for (double v : iid->rho2_r)
            if (!(v >= 0.0))
                throw ConfigError("scenario: rho2_r entries must be >= 0");
        if (!(iid->rho2_g >= 0.0))
            throw ConfigError("scenario: rho2_g must be >= 0");
    }
}

namespace {

std::array<double, 3> json_to_pos(const nlohmann::json &j) {
    if (!j.is_array() || j.size() != 3)
        throw ConfigError("scenario: positions must be 3-element arrays");
    return {j[0].get<double>(), j[1].get<double>(), j[2].get<double>()};
}

} // namespace

Scenario Scenario::from_json(const nlohmann::json &j) {
    Scenario s;
    try {
        s.M = j.at("M").get<int>();
        s.K = j.at("K").get<int>();
        s.N = j.at("N").get<int>();
        s.Nbar = j.value("Nbar", 1);
        s.b = j.at("b").get<int>();
        s.Pmax = dbm_to_watts(j.at("Pmax_dBm").get<double>());
        s.sigma2 = dbm_to_watts(j.at("sigma2_dBm").get<double>());
        const std::string mode = j.at("channel_mode").get<std::string>();
        if (mode == "geometric") {
            s.mode = ChannelMode::geometric;
            const auto &g = j.at("geometry");
            GeometrySpec spec;
            spec.bs_pos = json_to_pos(g.at("bs_pos"));
            spec.irs_pos = json_to_pos(g.at("irs_pos"));
            for (const auto &u : g.at("user_positions"))
                spec.user_positions.push_back(json_to_pos(u));
            spec.alpha_bs_irs = g.at("alpha_bs_irs").get<double>();
            spec.alpha_irs_user = g.at("alpha_irs_user").get<double>();
            spec.alpha_bs_user = g.at("alpha_bs_user").get<double>();
            spec.pl_ref_db = g.at("pl_ref_db").get<double>();
            s.geometry = std::move(spec);
        } else if (mode == "iid") {
            s.mode = ChannelMode::iid;
            const auto &g = j.at("iid");
            IidSpec spec;
            spec.rho2_r = g.at("rho2_r").get<std::vector<double>>();
            spec.rho2_g = g.at("rho2_g").get<double>();
            s.iid = std::move(spec);
        } else {
            throw ConfigError("scenario: channel_mode must be 'geometric' or 'iid'");
        }
    } catch (const nlohmann::json::exception &e) {
        throw ConfigError(std::string("scenario: malformed JSON document: ") + e.what());
    }
    s.validate();
    return s;
}

nlohmann::json Scenario::to_json() const {
    nlohmann::json j;
    j["M"] = M;
    j["K"] = K;
    j["N"] = N;
    j["Nbar"] = Nbar;
    j["b"] = b;
    j["Pmax_dBm"] = watts_to_dbm(Pmax);
    j["sigma2_dBm"] = watts_to_dbm(sigma2);
    if (mode == ChannelMode::geometric) {
        j["channel_mode"] = "geometric";
        nlohmann::json g;
        g["bs_pos"] = geometry->bs_pos;
        g["irs_pos"] = geometry->irs_pos;
        g["user_positions"] = geometry->user_positions;
        g["alpha_bs_irs"] = geometry->alpha_bs_irs;
        g["alpha_irs_user"] = geometry->alpha_irs_user;
        g["alpha_bs_user"] = geometry->alpha_bs_user;
        g["pl_ref_db"] = geometry->pl_ref_db;
        j["geometry"] = std::move(g);
    } else {
        j["channel_mode"] = "iid";
        j["iid"] = {{"rho2_r", iid->rho2_r}, {"rho2_g", iid->rho2_g}};
    }
    return j;
}

void ChannelSet::validate_against(const Scenario &scn) const {
    const auto m = static_cast<std::size_t>(scn.M);
    const auto n = static_cast<std::size_t>(scn.N);
    const auto k = static_cast<std::size_t>(scn.K);
    if (G.rows() != n || G.cols() != m || h_d.size() != k || h_r.size() != k)
        throw DimensionMismatch("channel set does not match scenario dimensions");
    for (std::size_t u = 0; u < k; ++u)
        if (h_d[u].size() != m || h_r[u].size() != n)
            throw DimensionMismatch("channel vector length mismatch");
}

ChannelSet without_irs(const ChannelSet &ch) {
    ChannelSet out = ch;
    for (CVec &v : out.h_r)
        std::fill(v.begin(), v.end(), cxd(0.0));
    return out;
}

PhaseConfig::PhaseConfig(std::vector<int> indices, int q_levels)
    : idx_(std::move(indices)), q_(q_levels) {
    for (int q : idx_)
        if (q < 0 || q >= q_)
            throw IndexOutOfRange("phase config: index outside [0, Q)");
}

void PhaseConfig::set_index(std::size_t n, int q) {
    if (n >= idx_.size())
        throw IndexOutOfRange("phase config: element index out of range");
    if (q < 0 || q >= q_)
        throw IndexOutOfRange("phase config: phase index outside [0, Q)");
    idx_[n] = q;
}

cxd phase_value(const PhaseConfig &cfg, std::size_t n) {
    if (n >= cfg.size())
        throw IndexOutOfRange("phase_value: element index out of range");
    const double ang =
        2.0 * std::numbers::pi * static_cast<double>(cfg.index(n)) / cfg.q_levels();
    return std::polar(1.0, ang);
}

std::vector<cxd> phase_table(int q_levels) {
    std::vector<cxd> t(static_cast<std::size_t>(q_levels));
    for (int q = 0; q < q_levels; ++q)
        t[q] = std::polar(1.0, 2.0 * std::numbers::pi * q / q_levels);
    return t;
}

RateProfile RateProfile::make(std::vector<double> alpha) {
    if (alpha.empty())
        throw ConfigError("rate profile: needs at least one entry");
    double sum = 0.0;
    for (double a : alpha) {
        if (!(a >= 0.0) || a > 1.0 + 1e-12)
            throw ConfigError("rate profile: entries must lie in [0, 1]");
        sum += a;
    }
    if (std::abs(sum - 1.0) > 1e-9)
        throw ConfigError("rate profile: entries must sum to 1 (within 1e-9)");
    for (double &a : alpha)
        a /= sum;
    return RateProfile{std::move(alpha)};
}

RateProfile RateProfile::uniform(int k) {
    return RateProfile{std::vector<double>(static_cast<std::size_t>(k), 1.0 / k)};
}

std::vector<CVec> effective_channels(const ChannelSet &ch, const PhaseConfig &cfg) {
    const std::size_t n = ch.G.rows();
    const std::size_t m = ch.G.cols();
    if (cfg.size() != n)
        throw DimensionMismatch("effective_channels: phase config length != N");
    const std::vector<cxd> table = phase_table(cfg.q_levels());
    std::vector<CVec> h(ch.users());
    for (std::size_t k = 0; k < ch.users(); ++k) {
        if (ch.h_d[k].size() != m || ch.h_r[k].size() != n)
            throw DimensionMismatch("effective_channels: channel lengths inconsistent");
        CVec v = ch.h_d[k];
        for (std::size_t t = 0; t < n; ++t) {
            // column form of h_{r,k}^H Theta G: entries h_r[t] e^{-j theta_t} conj(G row t)
            const cxd c = ch.h_r[k][t] * std::conj(table[cfg.index(t)]);
            for (std::size_t j = 0; j < m; ++j)
                v[j] += c * std::conj(ch.G(t, j));
        }
        h[k] = std::move(v);
    }
    return h;
}

double correlation(const ChannelSet &ch, const PhaseConfig &cfg, std::size_t k, std::size_t m) {
    if (k == m || k >= ch.users() || m >= ch.users())
        throw DimensionMismatch("correlation: need two distinct valid user indices");
    const std::vector<CVec> h = effective_channels(ch, cfg);
    const double nk = norm(h[k]);
    const double nm = norm(h[m]);
    if (nk < 1e-30 || nm < 1e-30)
        throw ZeroChannel("correlation: effective channel norm below 1e-30");
    return std::abs(cdot(h[k], h[m])) / (nk * nm);
}

double max_corr_sq(const std::vector<CVec> &h) {
    double worst = 0.0;
    for (std::size_t k = 0; k < h.size(); ++k) {
        const double nk = norm2(h[k]);
        for (std::size_t m = k + 1; m < h.size(); ++m) {
            const double nm = norm2(h[m]);
            if (nk < 1e-60 || nm < 1e-60)
                throw ZeroChannel("max_corr_sq: effective channel norm below 1e-30");
            const double c2 = std::norm(cdot(h[k], h[m])) / (nk * nm);
            worst = std::max(worst, c2);
        }
    }
    return worst;
}

} // namespace irsbc
