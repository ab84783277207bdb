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

#include "irsbc/region.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <functional>
#include <limits>
#include <ostream>

#include "irsbc/dpc.hpp"
#include "irsbc/zf.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace irsbc {

const char *to_string(Scheme s) { return s == Scheme::dpc ? "dpc" : "zf"; }
const char *to_string(Method m) { return m == Method::exhaustive ? "exhaustive" : "alternating"; }

namespace {

// Interference-free initialization bound: the triangle inequality over the
// phase codebook caps every effective channel norm, so the sum of single-user
// capacities at full power is >= R*(alpha).
double rate_upper_bound(const Scenario &scn, const ChannelSet &ch) {
    double total = 0.0;
    for (std::size_t k = 0; k < ch.users(); ++k) {
        double reach = norm(ch.h_d[k]);
        for (std::size_t n = 0; n < ch.G.rows(); ++n) {
            double row2 = 0.0;
            for (std::size_t m = 0; m < ch.G.cols(); ++m)
                row2 += std::norm(ch.G(n, m));
            reach += std::abs(ch.h_r[k][n]) * std::sqrt(row2);
        }
        total += std::log2(1.0 + scn.Pmax * reach * reach / scn.sigma2);
    }
    return total;
}

PhaseCost make_power_cost(Scheme scheme, const ChannelSet &ch, std::vector<double> gamma,
                          double sigma2, int q_levels) {
    if (scheme == Scheme::dpc)
        return make_dpc_power_cost(ch, std::move(gamma), sigma2, q_levels);
    return make_zf_power_cost(ch, std::move(gamma), sigma2, q_levels);
}

} // namespace

BoundaryPoint bisect_rate(const Scenario &scn, const ChannelSet &ch, const RateProfile &alpha,
                          Scheme scheme, Method method, const BisectOptions &opt) {
    scn.validate();
    ch.validate_against(scn);
    if (static_cast<int>(alpha.alpha.size()) != scn.K)
        throw DimensionMismatch("bisect_rate: rate profile length != K");
    if (!(opt.eps2 > 0.0))
        throw DomainError("bisect_rate: eps2 must be positive");
    if (scheme == Scheme::zf && scn.K > scn.M)
        throw Infeasible("bisect_rate: ZF with more users than antennas");

    BoundaryPoint out;
    out.alpha = alpha;
    out.scheme = scheme;
    out.method = method;
    out.phase = PhaseConfig(static_cast<std::size_t>(scn.N), scn.q_levels());
    out.rates.assign(alpha.alpha.size(), 0.0);

    double r_lo = 0.0;
    double r_hi = rate_upper_bound(scn, ch);
    if (!(r_hi > 0.0))
        return out; // all channels vanish; the only achievable point is 0

    PhaseConfig warm = out.phase;
    while (r_hi - r_lo > opt.eps2) {
        const double r_mid = 0.5 * (r_lo + r_hi);
        const SinrTargets targets = SinrTargets::from_rate_target(alpha, r_mid);
        const PhaseCost cost =
            make_power_cost(scheme, ch, targets.gamma, scn.sigma2, scn.q_levels());
        PhaseSearchReport rep;
        if (method == Method::exhaustive)
            rep = exhaustive_search(cost, scn.N, scn.q_levels(), opt.budget, opt.threads);
        else
            rep = alternating_search(cost, scn.N, scn.q_levels(), warm, opt.eps1,
                                     opt.max_sweeps);
        warm = rep.best;
        if (rep.best_cost > scn.Pmax) {
            r_hi = r_mid;
        } else {
            r_lo = r_mid;
            out.phase = rep.best;
        }
    }
    for (std::size_t k = 0; k < alpha.alpha.size(); ++k)
        out.rates[k] = r_lo * alpha.alpha[k];
    return out;
}

namespace {

// All K-part compositions of S (lexicographic), as rate profiles i/S.
std::vector<RateProfile> simplex_grid(int k, int grid_s) {
    std::vector<RateProfile> out;
    std::vector<int> parts(static_cast<std::size_t>(k), 0);
    const auto emit = [&]() {
        std::vector<double> a(parts.size());
        for (std::size_t i = 0; i < parts.size(); ++i)
            a[i] = static_cast<double>(parts[i]) / grid_s;
        out.push_back(RateProfile::make(std::move(a)));
    };
    const std::function<void(int, int)> rec = [&](int pos, int left) {
        if (pos == k - 1) {
            parts[static_cast<std::size_t>(pos)] = left;
            emit();
            return;
        }
        for (int v = left; v >= 0; --v) { // lexicographically decreasing first share
            parts[static_cast<std::size_t>(pos)] = v;
            rec(pos + 1, left - v);
        }
    };
    rec(0, grid_s);
    return out;
}

} // namespace

RegionBoundary sweep_boundary(const Scenario &scn, const ChannelSet &ch, Scheme scheme,
                              Method method, int grid_S, const BisectOptions &opt) {
    if (grid_S < 1)
        throw DomainError("sweep_boundary: grid size must be >= 1");
    std::vector<RateProfile> grid;
    if (scn.K == 2) {
        for (int i = 0; i <= grid_S; ++i) {
            const double a1 = static_cast<double>(i) / grid_S;
            grid.push_back(RateProfile::make({a1, 1.0 - a1}));
        }
    } else {
        grid = simplex_grid(scn.K, grid_S);
    }

    RegionBoundary boundary;
    boundary.points.resize(grid.size());
    const std::int64_t npts = static_cast<std::int64_t>(grid.size());
    std::exception_ptr first_error = nullptr;
    std::atomic<bool> failed{false};
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 1) \
    num_threads(opt.threads > 0 ? opt.threads : omp_get_max_threads())
#endif
    for (std::int64_t i = 0; i < npts; ++i) {
        if (failed.load(std::memory_order_relaxed))
            continue;
        try {
            boundary.points[static_cast<std::size_t>(i)] =
                bisect_rate(scn, ch, grid[static_cast<std::size_t>(i)], scheme, method, opt);
        } catch (...) {
            bool expected = false;
            if (failed.compare_exchange_strong(expected, true))
                first_error = std::current_exception();
        }
    }
    if (first_error)
        std::rethrow_exception(first_error);

    if (scn.K == 2) {
        std::vector<std::array<double, 2>> pts;
        pts.reserve(boundary.points.size());
        for (const BoundaryPoint &p : boundary.points)
            pts.push_back({p.rates[0], p.rates[1]});
        Hull2D hull = convex_hull_2d(pts);
        boundary.hull = std::move(hull.vertices);
        boundary.timeshare = std::move(hull.timeshare);
    }
    return boundary;
}

namespace {

inline double cross(const std::array<double, 2> &o, const std::array<double, 2> &a,
                    const std::array<double, 2> &b) {
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0]);
}

inline double cross2(const std::array<double, 2> &a, const std::array<double, 2> &b) {
    return a[0] * b[1] - a[1] * b[0];
}

double point_segment_distance(const std::array<double, 2> &p, const std::array<double, 2> &a,
                              const std::array<double, 2> &b) {
    const double dx = b[0] - a[0], dy = b[1] - a[1];
    const double len2 = dx * dx + dy * dy;
    if (len2 == 0.0)
        return std::hypot(p[0] - a[0], p[1] - a[1]);
    double t = ((p[0] - a[0]) * dx + (p[1] - a[1]) * dy) / len2;
    t = std::clamp(t, 0.0, 1.0);
    return std::hypot(p[0] - (a[0] + t * dx), p[1] - (a[1] + t * dy));
}

} // namespace

Hull2D convex_hull_2d(const std::vector<std::array<double, 2>> &points) {
    if (points.empty())
        throw DomainError("convex_hull_2d: need at least one point");
    double r1max = 0.0, r2max = 0.0;
    for (const auto &p : points) {
        if (!(p[0] >= 0.0) || !(p[1] >= 0.0))
            throw DomainError("convex_hull_2d: coordinates must be nonnegative");
        r1max = std::max(r1max, p[0]);
        r2max = std::max(r2max, p[1]);
    }

    std::vector<std::array<double, 2>> cand = points;
    cand.push_back({0.0, 0.0});
    cand.push_back({r1max, 0.0}); // axis closures
    cand.push_back({0.0, r2max});
    std::sort(cand.begin(), cand.end());
    cand.erase(std::unique(cand.begin(), cand.end()), cand.end());

    Hull2D out;
    if (cand.size() == 1) {
        out.vertices = cand;
    } else {
        // Andrew's monotone chain, strict turns only (collinear points dropped).
        std::vector<std::array<double, 2>> h(2 * cand.size());
        std::size_t m = 0;
        for (std::size_t i = 0; i < cand.size(); ++i) { // lower hull
            while (m >= 2 && cross(h[m - 2], h[m - 1], cand[i]) <= 0.0)
                --m;
            h[m++] = cand[i];
        }
        const std::size_t lower_end = m + 1;
        for (std::size_t ii = cand.size() - 1; ii-- > 0;) { // upper hull
            while (m >= lower_end && cross(h[m - 2], h[m - 1], cand[ii]) <= 0.0)
                --m;
            h[m++] = cand[ii];
        }
        h.resize(m - 1); // last point repeats the first
        out.vertices = std::move(h);
    }

    // The sorted chain starts at the lexicographic minimum, which is (0,0)
    // here since every coordinate is nonnegative and (0,0) was added.
    // Pareto arc: vertices from (r1max, 0) around to (0, r2max).
    out.timeshare.resize(points.size());
    const std::size_t nv = out.vertices.size();
    for (std::size_t pi = 0; pi < points.size(); ++pi) {
        TimeShare ts;
        ts.point_index = pi;
        const std::array<double, 2> &p = points[pi];
        if (p[0] == 0.0 && p[1] == 0.0) {
            out.timeshare[pi] = ts; // origin: nothing to dominate
            continue;
        }
        if (nv < 2) {
            out.timeshare[pi] = ts;
            continue;
        }
        // Walk arc edges in counterclockwise order, skipping the edge that
        // leaves the origin along the r1 axis.
        const std::size_t arc_begin = (out.vertices[0][0] == 0.0 && out.vertices[0][1] == 0.0)
                                          ? 1
                                          : 0;
        bool assigned = false;
        for (std::size_t v = arc_begin; v + 1 < nv && !assigned; ++v) {
            const auto &a = out.vertices[v];
            const auto &b = out.vertices[v + 1];
            const double ca = cross2(a, p); // >= 0 iff angle(p) >= angle(a)
            const double cb = cross2(p, b); // >= 0 iff angle(p) <= angle(b)
            if (ca >= 0.0 && cb >= 0.0) {
                const double cpa = cross2(p, a);
                const double cpb = cross2(p, b);
                const double den = cpa - cpb;
                ts.edge_a = v;
                ts.edge_b = v + 1;
                ts.beta = (den == 0.0) ? 0.0 : cpa / den;
                ts.gap = point_segment_distance(p, a, b);
                assigned = true;
            }
        }
        if (!assigned) {
            // Numerical corner: attach to the nearest arc edge.
            double best = std::numeric_limits<double>::infinity();
            for (std::size_t v = 0; v + 1 < nv; ++v) {
                const double d = point_segment_distance(p, out.vertices[v], out.vertices[v + 1]);
                if (d < best) {
                    best = d;
                    ts.edge_a = v;
                    ts.edge_b = v + 1;
                    ts.gap = d;
                    ts.beta = 0.0;
                }
            }
        }
        out.timeshare[pi] = ts;
    }
    return out;
}

double convexity_gap(const RegionBoundary &boundary) {
    double gap = 0.0;
    for (const TimeShare &ts : boundary.timeshare)
        gap = std::max(gap, ts.gap);
    return gap;
}

RegionBoundary assemble_static_boundary(const std::vector<std::array<double, 2>> &rate_pairs,
                                        const PhaseConfig &phase, Scheme scheme,
                                        Method method) {
    RegionBoundary boundary;
    boundary.points.reserve(rate_pairs.size());
    for (const auto &rp : rate_pairs) {
        BoundaryPoint p;
        const double sum = rp[0] + rp[1];
        p.alpha = (sum > 0.0) ? RateProfile::make({rp[0] / sum, rp[1] / sum})
                              : RateProfile::make({0.5, 0.5});
        p.rates = {rp[0], rp[1]};
        p.phase = phase;
        p.scheme = scheme;
        p.method = method;
        boundary.points.push_back(std::move(p));
    }
    std::vector<std::array<double, 2>> pts(rate_pairs.begin(), rate_pairs.end());
    Hull2D hull = convex_hull_2d(pts);
    boundary.hull = std::move(hull.vertices);
    boundary.timeshare = std::move(hull.timeshare);
    return boundary;
}

namespace {

std::string fmt_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

std::string phase_string(const PhaseConfig &cfg) {
    std::string s;
    for (std::size_t n = 0; n < cfg.size(); ++n) {
        if (n)
            s += ';';
        s += std::to_string(cfg.index(n));
    }
    return s;
}

} // namespace

void write_boundary_csv(std::ostream &os, const RegionBoundary &boundary) {
    const std::size_t k = boundary.points.empty() ? 0 : boundary.points[0].alpha.alpha.size();
    for (std::size_t i = 0; i < k; ++i)
        os << "alpha" << (i + 1) << ",";
    for (std::size_t i = 0; i < k; ++i)
        os << "r" << (i + 1) << ",";
    os << "scheme,method,phase_indices\n";
    for (const BoundaryPoint &p : boundary.points) {
        for (double a : p.alpha.alpha)
            os << fmt_double(a) << ",";
        for (double r : p.rates)
            os << fmt_double(r) << ",";
        os << to_string(p.scheme) << "," << to_string(p.method) << "," << phase_string(p.phase)
           << "\n";
    }
}

nlohmann::json boundary_to_json(const RegionBoundary &boundary) {
    nlohmann::json j;
    j["points"] = nlohmann::json::array();
    for (const BoundaryPoint &p : boundary.points) {
        nlohmann::json jp;
        jp["alpha"] = p.alpha.alpha;
        jp["rates"] = p.rates;
        jp["phase_indices"] = p.phase.indices();
        jp["scheme"] = to_string(p.scheme);
        jp["method"] = to_string(p.method);
        j["points"].push_back(std::move(jp));
    }
    j["hull"] = boundary.hull;
    j["timeshare"] = nlohmann::json::array();
    for (const TimeShare &ts : boundary.timeshare) {
        nlohmann::json jt;
        jt["point_index"] = ts.point_index;
        jt["edge_a"] = ts.edge_a;
        jt["edge_b"] = ts.edge_b;
        jt["beta"] = ts.beta;
        jt["gap"] = ts.gap;
        j["timeshare"].push_back(std::move(jt));
    }
    return j;
}

} // namespace irsbc
