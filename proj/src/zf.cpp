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

#include "irsbc/zf.hpp"

#include <cmath>
#include <limits>

namespace irsbc {

double ZfSolution::total() const {
    double t = 0.0;
    for (double p : powers)
        t += p;
    return t;
}

namespace {

constexpr double kRankPivotRatio = 1e-12;

struct GramFactor {
    CMat gram;
    HermitianCholesky chol;
    bool rank_ok = false;
};

// Gram matrix over the active (gamma > 0) channels plus its factorization.
GramFactor active_gram(const std::vector<CVec> &h, const std::vector<std::size_t> &active) {
    GramFactor g;
    const std::size_t ka = active.size();
    g.gram = CMat(ka, ka);
    for (std::size_t i = 0; i < ka; ++i)
        for (std::size_t j = 0; j < ka; ++j)
            g.gram(i, j) = cdot(h[active[i]], h[active[j]]);
    g.chol = HermitianCholesky::factor(g.gram, 0.0);
    g.rank_ok = g.chol.ok && g.chol.min_pivot >= kRankPivotRatio * g.chol.max_pivot;
    return g;
}

void check_inputs(const std::vector<CVec> &h, const std::vector<double> &gamma) {
    if (h.empty())
        throw DimensionMismatch("zf: need at least one user channel");
    for (const CVec &v : h)
        if (v.size() != h[0].size() || v.empty())
            throw DimensionMismatch("zf: channel vectors must share one length");
    if (gamma.size() != h.size())
        throw DimensionMismatch("zf: one target per user required");
    if (h.size() > h[0].size())
        throw TooManyUsers("zf: more users than BS antennas");
}

} // namespace

double zf_min_power_value(const std::vector<CVec> &h, const std::vector<double> &gamma,
                          double sigma2) {
    check_inputs(h, gamma);
    std::vector<std::size_t> active;
    for (std::size_t k = 0; k < h.size(); ++k)
        if (gamma[k] > 0.0)
            active.push_back(k);
    if (active.empty())
        return 0.0;
    const GramFactor g = active_gram(h, active);
    if (!g.rank_ok)
        return std::numeric_limits<double>::infinity();
    double total = 0.0;
    CVec e(active.size());
    for (std::size_t i = 0; i < active.size(); ++i) {
        std::fill(e.begin(), e.end(), cxd(0.0));
        e[i] = 1.0;
        const CVec x = g.chol.solve(e);
        total += gamma[active[i]] * sigma2 * x[i].real();
    }
    return total;
}

ZfSolution zf_min_power(const std::vector<CVec> &h, const SinrTargets &targets,
                        double sigma2) {
    check_inputs(h, targets.gamma);
    const std::size_t k_users = h.size();
    const std::size_t m = h[0].size();
    const std::vector<double> &gamma = targets.gamma;

    ZfSolution sol;
    sol.directions.assign(k_users, CVec(m, cxd(0.0)));
    for (std::size_t k = 0; k < k_users; ++k) {
        const double hn = norm(h[k]);
        if (hn >= 1e-30)
            for (std::size_t j = 0; j < m; ++j)
                sol.directions[k][j] = h[k][j] / hn;
        else
            sol.directions[k][0] = 1.0;
    }

    std::vector<std::size_t> active;
    for (std::size_t k = 0; k < k_users; ++k) {
        if (!(gamma[k] > 0.0))
            continue;
        if (norm(h[k]) < 1e-30)
            throw ZeroChannel("zf_min_power: zero channel with positive target");
        active.push_back(k);
    }
    if (active.empty()) {
        sol.powers.assign(k_users, 0.0);
        sol.feasible = true;
        return sol;
    }

    const GramFactor g = active_gram(h, active);
    if (!g.rank_ok) {
        sol.feasible = false;
        return sol;
    }
    sol.powers.assign(k_users, 0.0);
    CVec e(active.size());
    for (std::size_t i = 0; i < active.size(); ++i) {
        std::fill(e.begin(), e.end(), cxd(0.0));
        e[i] = 1.0;
        const CVec x = g.chol.solve(e); // column i of (H^H H)^{-1}
        const std::size_t k = active[i];
        sol.powers[k] = gamma[k] * sigma2 * x[i].real();
        // pseudo-inverse beam: w~ = sum_j h_j x_j, then normalized
        CVec w(m, cxd(0.0));
        for (std::size_t j = 0; j < active.size(); ++j)
            for (std::size_t t = 0; t < m; ++t)
                w[t] += h[active[j]][t] * x[j];
        const double wn = norm(w);
        for (std::size_t t = 0; t < m; ++t)
            w[t] /= wn;
        sol.directions[k] = std::move(w);
    }
    sol.feasible = true;
    return sol;
}

std::vector<double> zf_rates(const std::vector<CVec> &h, const std::vector<CVec> &directions,
                             const std::vector<double> &powers, double sigma2) {
    if (h.empty() || directions.size() != h.size() || powers.size() != h.size())
        throw DimensionMismatch("zf_rates: per-user inputs required");
    const std::size_t k_users = h.size();
    for (std::size_t k = 0; k < k_users; ++k) {
        if (!(powers[k] > 0.0))
            continue;
        const double wn = norm(directions[k]);
        for (std::size_t j = 0; j < k_users; ++j) {
            if (j == k)
                continue;
            const double cross = std::abs(cdot(h[j], directions[k]));
            if (cross > 1e-6 * norm(h[j]) * wn)
                throw OrthogonalityViolated("zf_rates: beam leaks onto another user's channel");
        }
    }
    std::vector<double> rates(k_users, 0.0);
    for (std::size_t k = 0; k < k_users; ++k) {
        const double gain = std::norm(cdot(h[k], directions[k]));
        rates[k] = std::log2(1.0 + powers[k] * gain / sigma2);
    }
    return rates;
}

std::vector<std::array<double, 2>> zf_two_user_boundary(const CVec &h1, const CVec &h2,
                                                        double Pmax, double sigma2,
                                                        int grid_size) {
    if (h1.size() != h2.size() || h1.size() < 2)
        throw DimensionMismatch("zf_two_user_boundary: need two channels of equal length >= 2");
    if (grid_size < 1)
        throw DomainError("zf_two_user_boundary: grid_size must be >= 1");
    const double n1 = norm2(h1);
    const double n2 = norm2(h2);
    if (n1 < 1e-60 || n2 < 1e-60)
        throw ZeroChannel("zf_two_user_boundary: zero channel");
    const double rho2 = std::norm(cdot(h1, h2)) / (n1 * n2);
    const double g1 = n1 * (1.0 - rho2) / sigma2;
    const double g2 = n2 * (1.0 - rho2) / sigma2;

    std::vector<std::array<double, 2>> pts;
    pts.reserve(static_cast<std::size_t>(grid_size) + 3);
    for (int i = 0; i <= grid_size; ++i) {
        const double p1 = Pmax * static_cast<double>(i) / grid_size;
        const double p2 = Pmax - p1;
        pts.push_back({std::log2(1.0 + p1 * g1), std::log2(1.0 + p2 * g2)});
    }
    pts.push_back({std::log2(1.0 + Pmax * n1 / sigma2), 0.0});
    pts.push_back({0.0, std::log2(1.0 + Pmax * n2 / sigma2)});
    return pts;
}

} // namespace irsbc
