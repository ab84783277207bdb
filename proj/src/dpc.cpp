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

#include "irsbc/dpc.hpp"

#include <cmath>

namespace irsbc {

SinrTargets SinrTargets::from_rate_target(const RateProfile &alpha, double rate_target) {
    if (!(rate_target >= 0.0))
        throw DomainError("sinr targets: rate target must be >= 0");
    SinrTargets t;
    t.gamma.reserve(alpha.alpha.size());
    for (double a : alpha.alpha)
        t.gamma.push_back(std::exp2(a * rate_target) - 1.0);
    return t;
}

namespace {

void check_dims(const std::vector<CVec> &h) {
    if (h.empty())
        throw DimensionMismatch("dpc: need at least one user channel");
    for (const CVec &v : h)
        if (v.size() != h[0].size() || v.empty())
            throw DimensionMismatch("dpc: channel vectors must share one length");
}

// Throws NonPsdCovariance if S has an eigenvalue below -1e-10 * trace.
// Checked by attempting a Cholesky factorization of S + 1e-10 * trace * I.
void check_psd(const CMat &S) {
    double tr = 0.0;
    for (std::size_t i = 0; i < S.rows(); ++i)
        tr += S(i, i).real();
    if (tr < 0.0)
        throw NonPsdCovariance("dpc_rates: covariance has negative trace");
    if (tr == 0.0) {
        for (const cxd &x : S.entries())
            if (x != cxd(0.0))
                throw NonPsdCovariance("dpc_rates: traceless nonzero covariance");
        return;
    }
    CMat J = S;
    for (std::size_t i = 0; i < J.rows(); ++i)
        J(i, i) += 1e-10 * tr;
    if (!HermitianCholesky::factor(J, 0.0).ok)
        throw NonPsdCovariance("dpc_rates: covariance eigenvalue below -1e-10 * trace");
}

} // namespace

std::vector<double> dpc_rates(const std::vector<CVec> &h, const std::vector<CMat> &S,
                              double sigma2) {
    check_dims(h);
    const std::size_t k_users = h.size();
    const std::size_t m = h[0].size();
    if (S.size() != k_users)
        throw DimensionMismatch("dpc_rates: one covariance per user required");
    for (const CMat &s : S) {
        if (s.rows() != m || s.cols() != m)
            throw DimensionMismatch("dpc_rates: covariance shape mismatch");
        check_psd(s);
    }
    std::vector<double> rates(k_users);
    // remainder_k = sum_{i>=k} S_i, built from the back
    CMat rem(m, m);
    std::vector<double> num(k_users), den(k_users);
    for (std::size_t kk = k_users; kk-- > 0;) {
        den[kk] = sigma2 + quadratic_form(h[kk], rem);
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = 0; j < m; ++j)
                rem(i, j) += S[kk](i, j);
        num[kk] = sigma2 + quadratic_form(h[kk], rem);
    }
    for (std::size_t kk = 0; kk < k_users; ++kk)
        rates[kk] = std::log2(num[kk] / den[kk]);
    return rates;
}

double dpc_min_power_value(const std::vector<CVec> &h, const std::vector<double> &gamma,
                           double sigma2) {
    check_dims(h);
    if (gamma.size() != h.size())
        throw DimensionMismatch("dpc_min_power: one target per user required");
    const std::size_t m = h[0].size();
    CMat B = CMat::identity(m);
    double p = 0.0;
    for (std::size_t k = 0; k < h.size(); ++k) {
        if (!(gamma[k] > 0.0))
            continue;
        if (norm(h[k]) < 1e-30)
            throw ZeroChannel("dpc_min_power: zero channel with positive target");
        const CVec x = hermitian_solve(B, h[k]);
        const double denom = cdot(h[k], x).real();
        const double lambda = sigma2 / denom;
        p += lambda * gamma[k];
        add_scaled_outer(B, lambda * gamma[k] / sigma2, h[k]);
    }
    return p;
}

DpcSolution dpc_min_power(const std::vector<CVec> &h, const SinrTargets &targets,
                          double sigma2) {
    check_dims(h);
    const std::vector<double> &gamma = targets.gamma;
    if (gamma.size() != h.size())
        throw DimensionMismatch("dpc_min_power: one target per user required");
    const std::size_t k_users = h.size();
    const std::size_t m = h[0].size();

    DpcSolution sol;
    sol.lambda.assign(k_users, 0.0);
    sol.directions.assign(k_users, CVec(m, cxd(0.0)));

    CMat B = CMat::identity(m);
    for (std::size_t k = 0; k < k_users; ++k) {
        const double hn = norm(h[k]);
        if (!(gamma[k] > 0.0)) {
            // reported for completeness; carries no power
            if (hn >= 1e-30) {
                sol.lambda[k] = sigma2 / norm2(h[k]);
                for (std::size_t j = 0; j < m; ++j)
                    sol.directions[k][j] = h[k][j] / hn;
            } else {
                sol.directions[k][0] = 1.0;
            }
            continue;
        }
        if (hn < 1e-30)
            throw ZeroChannel("dpc_min_power: zero channel with positive target");
        CVec x = hermitian_solve(B, h[k]);
        const double denom = cdot(h[k], x).real();
        sol.lambda[k] = sigma2 / denom;
        const double xn = norm(x);
        for (std::size_t j = 0; j < m; ++j)
            x[j] /= xn;
        sol.directions[k] = std::move(x);
        sol.p_star += sol.lambda[k] * gamma[k];
        add_scaled_outer(B, sol.lambda[k] * gamma[k] / sigma2, h[k]);
    }
    sol.powers = backward_power_oracle(h, sol.directions, targets, sigma2);
    return sol;
}

std::vector<double> backward_power_oracle(const std::vector<CVec> &h,
                                          const std::vector<CVec> &directions,
                                          const SinrTargets &targets, double sigma2) {
    check_dims(h);
    const std::vector<double> &gamma = targets.gamma;
    if (gamma.size() != h.size() || directions.size() != h.size())
        throw DimensionMismatch("backward_power_oracle: per-user inputs required");
    const std::size_t k_users = h.size();
    std::vector<double> p(k_users, 0.0);
    for (std::size_t kk = k_users; kk-- > 0;) {
        if (!(gamma[kk] > 0.0))
            continue;
        const double own = std::norm(cdot(h[kk], directions[kk]));
        if (!(own > 0.0))
            throw ZeroGain("backward_power_oracle: no gain on own direction");
        double interf = 0.0;
        for (std::size_t i = kk + 1; i < k_users; ++i)
            if (p[i] > 0.0)
                interf += p[i] * std::norm(cdot(h[kk], directions[i]));
        p[kk] = gamma[kk] * (sigma2 + interf) / own;
    }
    return p;
}

std::vector<CMat> rank_one_covariances(const DpcSolution &sol) {
    std::vector<CMat> S;
    S.reserve(sol.directions.size());
    for (std::size_t k = 0; k < sol.directions.size(); ++k) {
        const std::size_t m = sol.directions[k].size();
        CMat s(m, m);
        add_scaled_outer(s, sol.powers[k], sol.directions[k]);
        S.push_back(std::move(s));
    }
    return S;
}

} // namespace irsbc
