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

#ifndef IRSBC_MODEL_HPP
#define IRSBC_MODEL_HPP

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "irsbc/numerics.hpp"

namespace irsbc {

enum class ChannelMode { geometric, iid };

// BS / IRS / user placement plus path-loss law parameters.
struct GeometrySpec {
    std::array<double, 3> bs_pos{};
    std::array<double, 3> irs_pos{};
    std::vector<std::array<double, 3>> user_positions;
    double alpha_bs_irs = 2.2;
    double alpha_irs_user = 2.2;
    double alpha_bs_user = 3.4;
    double pl_ref_db = 30.0;
};

// Per-entry variances for the i.i.d. channel mode (direct links blocked).
struct IidSpec {
    std::vector<double> rho2_r; // one per user
    double rho2_g = 1.0;
};

// All static problem parameters. Powers are kept in watts internally; the
// JSON form uses dBm (keys Pmax_dBm / sigma2_dBm).
struct Scenario {
    int M = 1;    // BS antennas
    int K = 1;    // users
    int N = 1;    // subsurfaces
    int Nbar = 1; // elements per subsurface
    int b = 1;    // phase-shift bits, Q = 2^b levels
    double Pmax = 0.1;
    double sigma2 = 1e-11;
    ChannelMode mode = ChannelMode::geometric;
    std::optional<GeometrySpec> geometry;
    std::optional<IidSpec> iid;

    int q_levels() const { return 1 << b; }
    void validate() const; // throws ConfigError / InvalidDims

    static Scenario from_json(const nlohmann::json &j);
    nlohmann::json to_json() const;
};

double dbm_to_watts(double dbm);
double watts_to_dbm(double watts);

// One channel realization. h_d[k] has length M, h_r[k] length N, G is N x M.
// Vectors store the column forms whose conjugate transposes appear in the
// received-signal model.
struct ChannelSet {
    CMat G;
    std::vector<CVec> h_d;
    std::vector<CVec> h_r;

    std::size_t users() const { return h_d.size(); }
    void validate_against(const Scenario &scn) const;
};

// Copy with the reflected links zeroed (direct links only).
ChannelSet without_irs(const ChannelSet &ch);

// N discrete phase indices into the codebook {exp(j 2 pi q / Q)}.
class PhaseConfig {
  public:
    PhaseConfig() = default;
    PhaseConfig(std::size_t n, int q_levels, int fill = 0)
        : idx_(n, fill), q_(q_levels) {}
    PhaseConfig(std::vector<int> indices, int q_levels);

    std::size_t size() const { return idx_.size(); }
    int q_levels() const { return q_; }
    int index(std::size_t n) const { return idx_[n]; }
    void set_index(std::size_t n, int q);
    const std::vector<int> &indices() const { return idx_; }

  private:
    std::vector<int> idx_;
    int q_ = 2;
};

// exp(j 2 pi q / Q) for the stored index at position n.
cxd phase_value(const PhaseConfig &cfg, std::size_t n);

// Codebook table: entry q is exp(j 2 pi q / Q). Shared by the search paths so
// phase arithmetic is identical everywhere.
std::vector<cxd> phase_table(int q_levels);

// Per-user sum-rate shares; entries in [0,1] summing to one. Inputs off by
// at most 1e-9 are renormalized, anything worse is rejected.
struct RateProfile {
    std::vector<double> alpha;

    static RateProfile make(std::vector<double> alpha);
    static RateProfile uniform(int k);
};

// Effective channels h_k = h_{d,k} + G^H Theta^H h_{r,k}, returned as column
// vectors of length M.
std::vector<CVec> effective_channels(const ChannelSet &ch, const PhaseConfig &cfg);

// |h_k^H h_m| / (|h_k| |h_m|) for the effective channels of users k and m.
// Throws ZeroChannel when either norm collapses below 1e-30.
double correlation(const ChannelSet &ch, const PhaseConfig &cfg, std::size_t k, std::size_t m);

// Largest squared pairwise correlation over all user pairs of precomputed
// effective channels.
double max_corr_sq(const std::vector<CVec> &h);

} // namespace irsbc

#endif
