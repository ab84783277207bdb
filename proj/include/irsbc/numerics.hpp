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

#ifndef IRSBC_NUMERICS_HPP
#define IRSBC_NUMERICS_HPP

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

#include "irsbc/errors.hpp"

// Minimal dense complex kernel for the small (M <= 8 class) Hermitian systems
// every solver in this project touches. All loops run in a fixed order so
// results are bit-stable regardless of thread count; no BLAS behind this.

namespace irsbc {

using cxd = std::complex<double>;
using CVec = std::vector<cxd>;

// Row-major dense complex matrix.
class CMat {
  public:
    CMat() = default;
    CMat(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), e_(rows * cols) {}

    static CMat identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    cxd &operator()(std::size_t r, std::size_t c) { return e_[r * cols_ + c]; }
    const cxd &operator()(std::size_t r, std::size_t c) const { return e_[r * cols_ + c]; }

    const std::vector<cxd> &entries() const { return e_; }
    std::vector<cxd> &entries() { return e_; }

  private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<cxd> e_;
};

// a^H b, accumulated in index order.
cxd cdot(const CVec &a, const CVec &b);

double norm2(const CVec &a); // squared Euclidean norm
double norm(const CVec &a);

CVec matvec(const CMat &A, const CVec &x);

// A += s * h h^H (s real). A must be square with dim == h.size().
void add_scaled_outer(CMat &A, double s, const CVec &h);

// Hermitian LL^H factorization with explicit pivot tracking. A pivot is the
// diagonal remainder before its square root is taken.
struct HermitianCholesky {
    CMat L;
    double min_pivot = 0.0;
    double max_pivot = 0.0;
    bool ok = false;

    // Fails (ok = false) as soon as a pivot drops to pivot_floor or below.
    static HermitianCholesky factor(const CMat &A, double pivot_floor);

    CVec solve(const CVec &b) const; // requires ok
};

// Solves A x = b for Hermitian positive-definite A. One jitter retry
// (A + 1e-12 * trace/M * I) before giving up.
// Throws NotPositiveDefinite if a pivot falls below 1e-14 * trace(A)/M even
// after the retry, DimensionMismatch on shape errors.
CVec hermitian_solve(const CMat &A, const CVec &b);

// Re(h^H A h) for Hermitian A; the imaginary residue is discarded.
double quadratic_form(const CVec &h, const CMat &A);

// Diagonal of (H^H H)^{-1} for an rows x K matrix H with K <= rows.
// Throws RankDeficient if the Gram matrix fails the positive-definite solve.
std::vector<double> gram_inverse_diag(const CMat &H);

// Fixed-structure pairwise summation; the reduction tree depends only on the
// element count, never on the caller's thread count.
double pairwise_sum(std::span<const double> v);

struct MeanStderr {
    double mean = 0.0;
    double stderr_of_mean = 0.0;
};

// Sample mean and standard error via pairwise sums.
MeanStderr mc_stats(std::span<const double> v);

} // namespace irsbc

#endif
