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

#ifndef IRSBC_ERRORS_HPP
#define IRSBC_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace irsbc {

// Base class so the CLI can map any library failure to a machine-readable
// error record.
class Error : public std::runtime_error {
  public:
    Error(std::string code, const std::string &what)
        : std::runtime_error(what), code_(std::move(code)) {}
    const std::string &code() const noexcept { return code_; }

  private:
    std::string code_;
};

struct DimensionMismatch : Error {
    explicit DimensionMismatch(const std::string &w) : Error("dimension_mismatch", w) {}
};
struct NotPositiveDefinite : Error {
    explicit NotPositiveDefinite(const std::string &w) : Error("not_positive_definite", w) {}
};
struct RankDeficient : Error {
    explicit RankDeficient(const std::string &w) : Error("rank_deficient", w) {}
};
struct IndexOutOfRange : Error {
    explicit IndexOutOfRange(const std::string &w) : Error("index_out_of_range", w) {}
};
struct ZeroChannel : Error {
    explicit ZeroChannel(const std::string &w) : Error("zero_channel", w) {}
};
struct ZeroGain : Error {
    explicit ZeroGain(const std::string &w) : Error("zero_gain", w) {}
};
struct NonPsdCovariance : Error {
    explicit NonPsdCovariance(const std::string &w) : Error("non_psd_covariance", w) {}
};
struct OrthogonalityViolated : Error {
    explicit OrthogonalityViolated(const std::string &w) : Error("orthogonality_violated", w) {}
};
struct TooManyUsers : Error {
    explicit TooManyUsers(const std::string &w) : Error("too_many_users", w) {}
};
struct BudgetExceeded : Error {
    explicit BudgetExceeded(const std::string &w) : Error("budget_exceeded", w) {}
};
struct DomainError : Error {
    explicit DomainError(const std::string &w) : Error("domain_error", w) {}
};
struct InvalidDistance : Error {
    explicit InvalidDistance(const std::string &w) : Error("invalid_distance", w) {}
};
struct InvalidDims : Error {
    explicit InvalidDims(const std::string &w) : Error("invalid_dims", w) {}
};
struct Infeasible : Error {
    explicit Infeasible(const std::string &w) : Error("infeasible", w) {}
};
struct ConfigError : Error {
    explicit ConfigError(const std::string &w) : Error("config_error", w) {}
};

} // namespace irsbc

#endif
