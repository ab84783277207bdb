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

#ifndef IRSBC_RNG_HPP
#define IRSBC_RNG_HPP

#include <array>
#include <complex>
#include <cstdint>

namespace irsbc {

// Counter-based generator (Philox4x32, 10 rounds). The same (seed, stream)
// pair replays an identical value sequence; distinct streams are independent,
// so Monte Carlo trials map to stream = trial index and parallelize without
// any shared state.
//
// Output layout is versioned (kRngVersion): block counter in counter words
// 0..1, stream in words 2..3, seed as the key. Each block yields two 64-bit
// outputs (low word first). Gaussians come from one Box-Muller pair per
// complex sample; see the member notes.
inline constexpr int kRngVersion = 1;

class Rng {
  public:
    explicit Rng(std::uint64_t seed, std::uint64_t stream = 0)
        : seed_(seed), stream_(stream) {}

    std::uint64_t seed() const { return seed_; }
    std::uint64_t stream() const { return stream_; }

    std::uint64_t next_u64();

    // Uniform on [0, 1), 53-bit resolution.
    double next_double();

    // Uniform on (0, 1]; safe as a log() argument.
    double next_double_open();

    // Standard normal. Consumes Box-Muller pairs; the second value of a pair
    // is cached, so calls alternate between two uniforms and zero.
    double next_gaussian();

    // CN(0, variance): re and im each N(0, variance/2). Always burns exactly
    // one Box-Muller pair (two uniforms); never touches the gaussian cache.
    std::complex<double> next_cgaussian(double variance);

    // Uniform integer in [0, bound), bound >= 1. Multiply-shift map; bias is
    // below 2^-32 for the bounds used here.
    std::uint32_t next_below(std::uint32_t bound);

    // One raw keyed block, exposed for known-answer tests.
    static std::array<std::uint32_t, 4> philox_block(std::array<std::uint32_t, 4> counter,
                                                     std::array<std::uint32_t, 2> key);

  private:
    void refill();

    std::uint64_t seed_ = 0;
    std::uint64_t stream_ = 0;
    std::uint64_t block_ = 0;
    std::array<std::uint32_t, 4> buf_{};
    int buf_pos_ = 4;
    double cached_gauss_ = 0.0;
    bool has_cached_gauss_ = false;
};

} // namespace irsbc

#endif
