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

#ifndef IRSBC_REGION_HPP
#define IRSBC_REGION_HPP

#include <array>
#include <iosfwd>

#include <json.hpp>

#include "irsbc/model.hpp"
#include "irsbc/phaseopt.hpp"

// Region characterization: the bisection outer loop over the rate target with
// phase re-optimization inside every probe, rate-profile sweeps, Pareto
// boundary assembly, and the convex hull with time-sharing weights.

namespace irsbc {

enum class Scheme { dpc, zf };
enum class Method { exhaustive, alternating };

const char *to_string(Scheme s);
const char *to_string(Method m);

struct BoundaryPoint {
    RateProfile alpha;
    std::vector<double> rates; // R * alpha (bps/Hz)
    PhaseConfig phase;         // minimizing configuration at termination
    Scheme scheme = Scheme::dpc;
    Method method = Method::exhaustive;
};

// Time-sharing assignment of one sampled point to its dominating hull edge:
// scaling the point radially meets the hull at (1-beta)*hull[edge_a] +
// beta*hull[edge_b]; gap is the Euclidean distance from the point to that
// edge segment (0 for points already on the hull).
struct TimeShare {
    std::size_t point_index = 0;
    std::size_t edge_a = 0;
    std::size_t edge_b = 0;
    double beta = 0.0;
    double gap = 0.0;
};

struct Hull2D {
    std::vector<std::array<double, 2>> vertices; // counterclockwise from (0,0)
    std::vector<TimeShare> timeshare;            // one entry per input point
};

struct RegionBoundary {
    std::vector<BoundaryPoint> points;
    std::vector<std::array<double, 2>> hull; // K = 2 only, empty otherwise
    std::vector<TimeShare> timeshare;
};

struct BisectOptions {
    double eps2 = 1e-3;  // rate tolerance (bps/Hz)
    double eps1 = 1e-4;  // alternating-search fractional tolerance
    int max_sweeps = 50;
    std::uint64_t budget = kDefaultSearchBudget;
    int threads = 0;
};

// Finds the largest rate target R (within eps2) whose minimum transmit power
// over the phase codebook stays within Pmax, and returns the rate tuple
// R * alpha with the minimizing phase configuration. The alternating method
// warm-starts each probe from the previous probe's best configuration.
// Throws Infeasible for ZF with K > M; BudgetExceeded propagates from the
// exhaustive method.
BoundaryPoint bisect_rate(const Scenario &scn, const ChannelSet &ch, const RateProfile &alpha,
                          Scheme scheme, Method method, const BisectOptions &opt = {});

// Rate-profile sweep. K = 2: alpha_1 in {0, 1/S, ..., 1}, hull and
// time-sharing weights included. K != 2: a simplex lattice with denominator S
// (points only, hull empty). Grid points are independent; output order is by
// grid index.
RegionBoundary sweep_boundary(const Scenario &scn, const ChannelSet &ch, Scheme scheme,
                              Method method, int grid_S, const BisectOptions &opt = {});

// Upper-right convex hull of the points together with (0,0), (r1max, 0) and
// (0, r2max), where rkmax is the largest sampled k-th coordinate. Collinear
// points are excluded from the vertex list; every input point receives the
// time-share weight of its dominating edge.
Hull2D convex_hull_2d(const std::vector<std::array<double, 2>> &points);

// Largest distance from any sampled point to its dominating hull edge; zero
// means the static-configuration region is already convex and time sharing
// (dynamic beamforming) adds nothing.
double convexity_gap(const RegionBoundary &boundary);

// Wraps precomputed rate pairs of one static phase configuration as a
// RegionBoundary (diagnostics for the two-user closed-form sweeps).
RegionBoundary assemble_static_boundary(const std::vector<std::array<double, 2>> &rate_pairs,
                                        const PhaseConfig &phase, Scheme scheme, Method method);

// Serialization. CSV columns: alpha1..alphaK, r1..rK, scheme, method,
// phase_indices. JSON carries the full structure including hull and weights.
void write_boundary_csv(std::ostream &os, const RegionBoundary &boundary);
nlohmann::json boundary_to_json(const RegionBoundary &boundary);

} // namespace irsbc

#endif
