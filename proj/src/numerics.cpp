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

#include "irsbc/numerics.hpp"

#include <cmath>
#include <limits>

namespace irsbc {

CMat CMat::identity(std::size_t n) {
    CMat I(n, n);
    for (std::size_t i = 0; i < n; ++i)
        I(i, i) = 1.0;
    return I;
}

cxd cdot(const CVec &a, const CVec &b) {
    if (a.size() != b.size())
        throw DimensionMismatch("cdot: vector lengths differ");
    cxd s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i)
        s += std::conj(a[i]) * b[i];
    return s;
}

double norm2(const CVec &a) {
    double s = 0.0;
    for (const cxd &x : a)
        s += std::norm(x);
    return s;
}

double norm(const CVec &a) { return std::sqrt(norm2(a)); }

CVec matvec(const CMat &A, const CVec &x) {
    if (A.cols() != x.size())
        throw DimensionMismatch("matvec: shape mismatch");
    CVec y(A.rows());
    for (std::size_t r = 0; r < A.rows(); ++r) {
        cxd s = 0.0;
        for (std::size_t c = 0; c < A.cols(); ++c)
            s += A(r, c) * x[c];
        y[r] = s;
    }
    return y;
}

void add_scaled_outer(CMat &A, double s, const CVec &h) {
    if (A.rows() != h.size() || A.cols() != h.size())
        throw DimensionMismatch("add_scaled_outer: shape mismatch");
    for (std::size_t i = 0; i < h.size(); ++i)
        for (std::size_t j = 0; j < h.size(); ++j)
            A(i, j) += s * h[i] * std::conj(h[j]);
}

HermitianCholesky HermitianCholesky::factor(const CMat &A, double pivot_floor) {
    HermitianCholesky f;
    const std::size_t n = A.rows();
    if (n == 0 || A.cols() != n)
        throw DimensionMismatch("cholesky: matrix must be square and nonempty");
    f.L = CMat(n, n);
    f.min_pivot = std::numeric_limits<double>::infinity();
    f.max_pivot = -std::numeric_limits<double>::infinity();
    for (std::size_t j = 0; j < n; ++j) {
        double d = A(j, j).real();
        for (std::size_t t = 0; t < j; ++t)
            d -= std::norm(f.L(j, t));
        f.min_pivot = std::min(f.min_pivot, d);
        f.max_pivot = std::max(f.max_pivot, d);
        if (!(d > pivot_floor)) {
            f.ok = false;
            return f;
        }
        const double ljj = std::sqrt(d);
        f.L(j, j) = ljj;
        for (std::size_t i = j + 1; i < n; ++i) {
            cxd s = A(i, j);
            for (std::size_t t = 0; t < j; ++t)
                s -= f.L(i, t) * std::conj(f.L(j, t));
            f.L(i, j) = s / ljj;
        }
    }
    f.ok = true;
    return f;
}

CVec HermitianCholesky::solve(const CVec &b) const {
    const std::size_t n = L.rows();
    if (b.size() != n)
        throw DimensionMismatch("cholesky solve: rhs length mismatch");
    CVec y(n);
    for (std::size_t i = 0; i < n; ++i) {
        cxd s = b[i];
        for (std::size_t t = 0; t < i; ++t)
            s -= L(i, t) * y[t];
        y[i] = s / L(i, i).real();
    }
    CVec x(n);
    for (std::size_t ii = n; ii-- > 0;) {
        cxd s = y[ii];
        for (std::size_t t = ii + 1; t < n; ++t)
            s -= std::conj(L(t, ii)) * x[t];
        x[ii] = s / L(ii, ii).real();
    }
    return x;
}

namespace {

double trace_scale(const CMat &A) {
    double tr = 0.0;
    for (std::size_t i = 0; i < A.rows(); ++i)
        tr += A(i, i).real();
    return tr / static_cast<double>(A.rows());
}

// Factor with the shared pivot rule: fail below 1e-14 * trace/M, one jitter
// retry adding 1e-12 * trace/M to the diagonal.
HermitianCholesky factor_pd(const CMat &A, const char *ctx, bool rank_error) {
    const double scale = trace_scale(A);
    if (!(scale > 0.0)) {
        if (rank_error)
            throw RankDeficient(std::string(ctx) + ": nonpositive trace");
        throw NotPositiveDefinite(std::string(ctx) + ": nonpositive trace");
    }
    const double floor = 1e-14 * scale;
    HermitianCholesky f = HermitianCholesky::factor(A, floor);
    if (f.ok)
        return f;
    CMat J = A;
    const double jitter = 1e-12 * scale;
    for (std::size_t i = 0; i < J.rows(); ++i)
        J(i, i) += jitter;
    f = HermitianCholesky::factor(J, floor);
    if (f.ok)
        return f;
    if (rank_error)
        throw RankDeficient(std::string(ctx) + ": pivot below threshold after jitter retry");
    throw NotPositiveDefinite(std::string(ctx) + ": pivot below threshold after jitter retry");
}

} // namespace

CVec hermitian_solve(const CMat &A, const CVec &b) {
    if (A.rows() != A.cols() || A.rows() == 0)
        throw DimensionMismatch("hermitian_solve: matrix must be square and nonempty");
    if (b.size() != A.rows())
        throw DimensionMismatch("hermitian_solve: rhs length mismatch");
    return factor_pd(A, "hermitian_solve", false).solve(b);
}

double quadratic_form(const CVec &h, const CMat &A) {
    if (A.rows() != h.size() || A.cols() != h.size())
        throw DimensionMismatch("quadratic_form: shape mismatch");
    return cdot(h, matvec(A, h)).real();
}

std::vector<double> gram_inverse_diag(const CMat &H) {
    const std::size_t k = H.cols();
    if (k == 0 || k > H.rows())
        throw DimensionMismatch("gram_inverse_diag: need 1 <= cols <= rows");
    CMat gram(k, k);
    for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = 0; j < k; ++j) {
            cxd s = 0.0;
            for (std::size_t r = 0; r < H.rows(); ++r)
                s += std::conj(H(r, i)) * H(r, j);
            gram(i, j) = s;
        }
    }
    // No jitter rescue here: a singular Gram has no inverse to report, so
    // rank deficiency is detected by the relative-pivot rule instead.
    const HermitianCholesky f = HermitianCholesky::factor(gram, 0.0);
    if (!f.ok || f.min_pivot < 1e-12 * f.max_pivot)
        throw RankDeficient("gram_inverse_diag: columns are (numerically) dependent");
    std::vector<double> diag(k);
    CVec e(k);
    for (std::size_t i = 0; i < k; ++i) {
        std::fill(e.begin(), e.end(), cxd(0.0));
        e[i] = 1.0;
        const CVec x = f.solve(e);
        diag[i] = x[i].real();
        if (!(diag[i] > 0.0))
            throw RankDeficient("gram_inverse_diag: nonpositive inverse diagonal");
    }
    return diag;
}

double pairwise_sum(std::span<const double> v) {
    if (v.size() <= 8) {
        double s = 0.0;
        for (double x : v)
            s += x;
        return s;
    }
    const std::size_t half = v.size() / 2;
    return pairwise_sum(v.subspan(0, half)) + pairwise_sum(v.subspan(half));
}

MeanStderr mc_stats(std::span<const double> v) {
    MeanStderr r;
    if (v.empty())
        return r;
    const double n = static_cast<double>(v.size());
    r.mean = pairwise_sum(v) / n;
    if (v.size() < 2)
        return r;
    std::vector<double> dev(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) {
        const double d = v[i] - r.mean;
        dev[i] = d * d;
    }
    const double var = pairwise_sum(dev) / (n - 1.0);
    r.stderr_of_mean = std::sqrt(var / n);
    return r;
}

} // namespace irsbc
