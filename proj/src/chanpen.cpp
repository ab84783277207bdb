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

#include "irsbc/chanpen.hpp"

#include <cmath>
#include <numbers>

namespace irsbc {

double pathloss_linear(double d_meters, double exponent, double pl_ref_db) {
    if (!(d_meters >= 1.0))
        throw InvalidDistance("pathloss_linear: distance below the 1 m reference");
    return std::pow(10.0, -pl_ref_db / 10.0) * std::pow(d_meters, -exponent);
}

double distance(const std::array<double, 3> &a, const std::array<double, 3> &b) {
    const double dx = a[0] - b[0], dy = a[1] - b[1], dz = a[2] - b[2];
    return std::sqrt(dx * dx + dy * dy + dz * dz);
}

ChannelSet sample_channels(const Scenario &scn, Rng &rng) {
    scn.validate();
    const std::size_t m = static_cast<std::size_t>(scn.M);
    const std::size_t n = static_cast<std::size_t>(scn.N);
    const std::size_t nbar = static_cast<std::size_t>(scn.Nbar);
    const std::size_t nr = n * nbar; // element-level count
    const std::size_t k = static_cast<std::size_t>(scn.K);

    double var_g = 0.0;
    std::vector<double> var_r(k, 0.0), var_d(k, 0.0);
    if (scn.mode == ChannelMode::geometric) {
        const GeometrySpec &geo = *scn.geometry;
        var_g = pathloss_linear(distance(geo.bs_pos, geo.irs_pos), geo.alpha_bs_irs,
                                geo.pl_ref_db);
        for (std::size_t u = 0; u < k; ++u) {
            var_r[u] = pathloss_linear(distance(geo.irs_pos, geo.user_positions[u]),
                                       geo.alpha_irs_user, geo.pl_ref_db);
            var_d[u] = pathloss_linear(distance(geo.bs_pos, geo.user_positions[u]),
                                       geo.alpha_bs_user, geo.pl_ref_db);
        }
    } else {
        var_g = scn.iid->rho2_g;
        for (std::size_t u = 0; u < k; ++u)
            var_r[u] = scn.iid->rho2_r[u];
        // direct links blocked in iid mode; var_d stays 0 and draws are skipped
    }

    // Draw order: per-user direct entries first (geometric mode only; iid mode
    // blocks them and consumes nothing), then G elements row-major over
    // (N*Nbar) x M, then per user the N*Nbar reflected entries. Direct links
    // coming first keeps them independent of N, so no-IRS baselines pair
    // exactly across N sweeps on a fixed stream.
    ChannelSet ch;
    ch.h_d.assign(k, CVec(m, cxd(0.0)));
    if (scn.mode == ChannelMode::geometric)
        for (std::size_t u = 0; u < k; ++u)
            for (std::size_t c = 0; c < m; ++c)
                ch.h_d[u][c] = rng.next_cgaussian(var_d[u]);

    CMat g_elem(nr, m);
    for (std::size_t r = 0; r < nr; ++r)
        for (std::size_t c = 0; c < m; ++c)
            g_elem(r, c) = rng.next_cgaussian(var_g);

    std::vector<CVec> hr_elem(k, CVec(nr));
    for (std::size_t u = 0; u < k; ++u)
        for (std::size_t r = 0; r < nr; ++r)
            hr_elem[u][r] = rng.next_cgaussian(var_r[u]);

    // Subsurface aggregation: sum the Nbar adjacent element rows / entries.
    ch.G = CMat(n, m);
    for (std::size_t grp = 0; grp < n; ++grp)
        for (std::size_t c = 0; c < m; ++c) {
            cxd s = 0.0;
            for (std::size_t e = 0; e < nbar; ++e)
                s += g_elem(grp * nbar + e, c);
            ch.G(grp, c) = s;
        }
    ch.h_r.assign(k, CVec(n));
    for (std::size_t u = 0; u < k; ++u)
        for (std::size_t grp = 0; grp < n; ++grp) {
            cxd s = 0.0;
            for (std::size_t e = 0; e < nbar; ++e)
                s += hr_elem[u][grp * nbar + e];
            ch.h_r[u][grp] = s;
        }
    return ch;
}

Scenario default_scenario(int K, int N) {
    Scenario s;
    s.M = 4;
    s.K = K;
    s.N = N;
    s.Nbar = 4;
    s.b = 2;
    s.Pmax = dbm_to_watts(20.0);
    s.sigma2 = dbm_to_watts(-80.0);
    s.mode = ChannelMode::geometric;
    GeometrySpec geo;
    geo.bs_pos = {0.0, 0.0, 0.0};
    geo.irs_pos = {50.0, 3.0, 0.0};
    const double radius = 5.0;
    for (int u = 1; u <= K; ++u) {
        // equally spaced angles in (0, pi), open at both ends
        const double ang = std::numbers::pi * u / (K + 1);
        geo.user_positions.push_back({geo.irs_pos[0] + radius * std::cos(ang),
                                      geo.irs_pos[1] - radius * std::sin(ang),
                                      geo.irs_pos[2]});
    }
    geo.alpha_bs_irs = 2.2;
    geo.alpha_irs_user = 2.2;
    geo.alpha_bs_user = 3.4;
    geo.pl_ref_db = 30.0;
    s.geometry = std::move(geo);
    s.validate();
    return s;
}

void set_direct_correlation(ChannelSet &ch, double rho2) {
    if (ch.users() < 2)
        throw InvalidDims("set_direct_correlation: needs at least two users");
    if (!(rho2 >= 0.0) || rho2 > 1.0)
        throw DomainError("set_direct_correlation: rho2 must lie in [0, 1]");
    const CVec &a = ch.h_d[0];
    CVec &b = ch.h_d[1];
    if (a.size() < 2)
        throw InvalidDims("set_direct_correlation: needs M >= 2");
    const double na = norm(a);
    const double nb = norm(b);
    if (na < 1e-30 || nb < 1e-30)
        throw ZeroChannel("set_direct_correlation: zero direct channel");
    CVec u = a;
    for (cxd &x : u)
        x /= na;
    // component of b orthogonal to u
    const cxd proj = cdot(u, b);
    CVec e = b;
    for (std::size_t i = 0; i < e.size(); ++i)
        e[i] -= proj * u[i];
    const double ne = norm(e);
    if (ne < 1e-30)
        throw ZeroChannel("set_direct_correlation: direct channels are collinear");
    const double rho = std::sqrt(rho2);
    const double orth = std::sqrt(1.0 - rho2);
    for (std::size_t i = 0; i < b.size(); ++i)
        b[i] = nb * (rho * u[i] + orth * e[i] / ne);
}

} // namespace irsbc
