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

#ifndef IRSBC_CHANPEN_HPP
#define IRSBC_CHANPEN_HPP

#include "irsbc/model.hpp"
#include "irsbc/rng.hpp"

// Seeded Rayleigh channel generation: geometric mode with distance-based path
// loss, or i.i.d. mode with per-entry variances and blocked direct links.

namespace irsbc {

// 10^(-pl_ref_db/10) * d^(-exponent). Throws InvalidDistance for d < 1 m
// (inside the reference distance).
double pathloss_linear(double d_meters, double exponent, double pl_ref_db);

double distance(const std::array<double, 3> &a, const std::array<double, 3> &b);

// Draws one realization. All N*Nbar element-level channels are sampled, then
// each subsurface's group of Nbar adjacent elements is combined by summing
// the element rows of G and the element entries of h_r (one shared phase per
// group). Draw order is fixed and documented in the implementation so a given
// (seed, stream) always reproduces the same ChannelSet.
ChannelSet sample_channels(const Scenario &scn, Rng &rng);

// Reference setup: M = 4, Nbar = 4, b = 2, Pmax = 20 dBm, sigma2 = -80 dBm,
// BS at (0,0,0), IRS at (50,3,0), users on a half-circle of radius 5 m around
// the IRS at equally spaced angles, exponents 2.2 / 2.2 / 3.4, 30 dB path
// loss at 1 m. K and N are not pinned by that setup; defaults keep the
// exhaustive phase search tractable.
Scenario default_scenario(int K = 2, int N = 8);

// Rewrites user 1's direct channel as a Gram-Schmidt mix so that the direct
// correlation |h_d0^H h_d1| / (|h_d0| |h_d1|) equals sqrt(rho2) exactly while
// preserving |h_d1|. Requires K >= 2 and M >= 2.
void set_direct_correlation(ChannelSet &ch, double rho2);

} // namespace irsbc

#endif
