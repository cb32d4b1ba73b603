// SPDX-License-Identifier: Apache-2.0
//
// tmirs - OFDM directional modulation with time-modulated reflecting surfaces
// Copyright (C) 2026 tmirs contributors
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

#ifndef TMIRS_DESIGN_HPP
#define TMIRS_DESIGN_HPP

#include <algorithm>
#include <cstdint>
#include <limits>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "tmirs/random.hpp"
#include "tmirs/schedule.hpp"
#include "tmirs/scrambling.hpp"

namespace tmirs {

// How the turn-on instants are spread over the surface.
//  LinearColumn: within each fixed row m the N instants step in 1/N; a
//    single switch line per row suffices; offsets cancel for every
//    subcarrier offset not divisible by N.
//  LinearRow: same per fixed column n, modulus M.
//  Planar: instants step in 1/(MN) over the whole surface; every in-band
//    offset cancels once MN exceeds N_s - 1.
//  EnhancedLinear: linear grids redrawn every hop_period OFDM symbols.
enum class DesignMode
{
    LinearColumn,
    LinearRow,
    Planar,
    EnhancedLinear
};

inline const char *to_string(DesignMode m)
{
    switch (m)
    {
    case DesignMode::LinearColumn: return "linear-column";
    case DesignMode::LinearRow: return "linear-row";
    case DesignMode::Planar: return "planar";
    case DesignMode::EnhancedLinear: return "enhanced-linear";
    }
    throw std::invalid_argument("to_string: unknown design mode");
}

inline DesignMode design_mode_from_string(std::string_view s)
{
    if (s == "linear-column") return DesignMode::LinearColumn;
    if (s == "linear-row") return DesignMode::LinearRow;
    if (s == "planar") return DesignMode::Planar;
    if (s == "enhanced-linear") return DesignMode::EnhancedLinear;
    throw std::invalid_argument("unknown design mode: " + std::string(s));
}

struct Interval
{
    double lo = 0.3;
    double hi = 0.9;
};

// Residual scrambling of a schedule at the direction it was designed for.
// surviving_offsets lists the subcarrier offsets whose coefficient does not
// vanish; for valid designs these are multiples of N, M or MN.
struct DesignReport
{
    double max_offdiag_residual = 0.0; // max |coeff(d)| / |coeff(0)| over d != 0
    std::vector<int> surviving_offsets;
};

inline constexpr double surviving_offset_threshold = 1e-10;

// Unit weights that make the array-factor product unity toward the
// legitimate direction: c_mn = conj(a_mn(theta_c, phi_c) a_mn(theta_T, phi_T)).
// Row-major M x N.
inline std::vector<cplx> design_weights(const SystemGeometry &g)
{
    validate(g);
    Direction legit = g.legit_direction();
    Direction tx = g.tx_direction();
    std::vector<cplx> w(static_cast<std::size_t>(g.irs_rows) * g.irs_cols);
    std::size_t idx = 0;
    for (int m = 0; m < g.irs_rows; ++m)
        for (int n = 0; n < g.irs_cols; ++n)
            w[idx++] = std::conj(array_factor(g, m, n, legit) * array_factor(g, m, n, tx));
    return w;
}

namespace detail {

inline constexpr double min_duration_separation = 1e-3;

// count durations from [lo, hi], pairwise at least min_duration_separation apart.
inline std::vector<double> draw_distinct_durations(int count, const Interval &range,
                                                   std::mt19937_64 &rng)
{
    if (!(range.lo > 0.0 && range.hi < 1.0 && range.lo <= range.hi))
        throw std::invalid_argument("duration_range must lie strictly inside (0, 1)");
    if (range.hi - range.lo < (count - 1) * min_duration_separation)
        throw std::invalid_argument(
            "duration_range too small to supply " + std::to_string(count) +
            " distinct durations with separation " + std::to_string(min_duration_separation));
    std::vector<double> out;
    out.reserve(static_cast<std::size_t>(count));
    int attempts = 0;
    while (static_cast<int>(out.size()) < count)
    {
        if (++attempts > 100000)
            throw std::invalid_argument("duration_range too small: rejection sampling exhausted");
        double d = uniform(rng, range.lo, range.hi);
        bool ok = true;
        for (double prev : out)
            if (std::abs(d - prev) < min_duration_separation)
            {
                ok = false;
                break;
            }
        if (ok)
            out.push_back(d);
    }
    return out;
}

// Shared body of the two linear variants. LinearColumn designs along each
// fixed row m (modulus N); LinearRow along each fixed column n (modulus M).
inline TmSchedule design_linear_impl(const SystemGeometry &g, DesignMode mode,
                                     const std::vector<double> &line_durations,
                                     std::mt19937_64 &rng)
{
    int rows = g.irs_rows, cols = g.irs_cols;
    std::vector<cplx> weights = design_weights(g);

    TmParamGrid grid(rows, cols);
    if (mode == DesignMode::LinearColumn)
    {
        for (int m = 0; m < rows; ++m)
        {
            double offset = uniform(rng, 0.0, 1.0 / cols);
            std::vector<int> perm = random_permutation(cols, rng);
            for (int n = 0; n < cols; ++n)
            {
                UnitTmParams &u = grid.at(m, n);
                u.turn_on = offset + static_cast<double>(perm[static_cast<std::size_t>(n)]) / cols;
                u.duration = line_durations[static_cast<std::size_t>(m)];
                u.weight = weights[static_cast<std::size_t>(m) * cols + n];
            }
        }
    }
    else
    {
        for (int n = 0; n < cols; ++n)
        {
            double offset = uniform(rng, 0.0, 1.0 / rows);
            std::vector<int> perm = random_permutation(rows, rng);
            for (int m = 0; m < rows; ++m)
            {
                UnitTmParams &u = grid.at(m, n);
                u.turn_on = offset + static_cast<double>(perm[static_cast<std::size_t>(m)]) / rows;
                u.duration = line_durations[static_cast<std::size_t>(n)];
                u.weight = weights[static_cast<std::size_t>(m) * cols + n];
            }
        }
    }
    TmSchedule s;
    s.grid = std::move(grid);
    return s;
}

inline void check_linear_pre(const SystemGeometry &g, DesignMode mode)
{
    validate(g);
    if (mode != DesignMode::LinearColumn && mode != DesignMode::LinearRow)
        throw std::invalid_argument("design_linear: mode must be linear-column or linear-row");
    if (mode == DesignMode::LinearColumn && g.irs_cols < 2)
        throw std::invalid_argument("design_linear: column variant needs at least 2 columns");
    if (mode == DesignMode::LinearRow && g.irs_rows < 2)
        throw std::invalid_argument("design_linear: row variant needs at least 2 rows");
}

} // namespace detail

// Static linear schedule with one common on-duration for every line.
inline TmSchedule design_linear(const SystemGeometry &g, DesignMode mode, std::uint64_t seed,
                                double common_duration = 0.7)
{
    detail::check_linear_pre(g, mode);
    if (!(common_duration > 0.0 && common_duration <= 1.0))
        throw std::invalid_argument("design_linear: duration must be in (0, 1]");
    int n_lines = (mode == DesignMode::LinearColumn) ? g.irs_rows : g.irs_cols;
    std::vector<double> durations(static_cast<std::size_t>(n_lines), common_duration);
    auto rng = make_rng(seed);
    return detail::design_linear_impl(g, mode, durations, rng);
}

// Static linear schedule with distinct per-line on-durations drawn from the
// given range.
inline TmSchedule design_linear(const SystemGeometry &g, DesignMode mode, std::uint64_t seed,
                                const Interval &duration_range)
{
    detail::check_linear_pre(g, mode);
    int n_lines = (mode == DesignMode::LinearColumn) ? g.irs_rows : g.irs_cols;
    auto rng = make_rng(seed);
    std::vector<double> durations = detail::draw_distinct_durations(n_lines, duration_range, rng);
    return detail::design_linear_impl(g, mode, durations, rng);
}

// Planar schedule: one global offset plus a random permutation of
// {q / (MN)} assigned across all units; a single common on-duration.
inline TmSchedule design_planar(const SystemGeometry &g, std::uint64_t seed,
                                double duration = 0.7)
{
    validate(g);
    int rows = g.irs_rows, cols = g.irs_cols;
    int total = rows * cols;
    if (total < 2)
        throw std::invalid_argument("design_planar: surface needs at least 2 units");
    if (!(duration > 0.0 && duration <= 1.0))
        throw std::invalid_argument("design_planar: duration must be in (0, 1]");

    auto rng = make_rng(seed);
    double offset = uniform(rng, 0.0, 1.0 / total);
    std::vector<int> perm = random_permutation(total, rng);
    std::vector<cplx> weights = design_weights(g);

    TmParamGrid grid(rows, cols);
    for (int m = 0; m < rows; ++m)
        for (int n = 0; n < cols; ++n)
        {
            std::size_t idx = static_cast<std::size_t>(m) * cols + n;
            UnitTmParams &u = grid.at(m, n);
            u.turn_on = offset + static_cast<double>(perm[idx]) / total;
            u.duration = duration;
            u.weight = weights[idx];
        }
    TmSchedule s;
    s.grid = std::move(grid);
    return s;
}

namespace detail {

inline std::vector<std::int64_t> canonical_form(const TmParamGrid &grid)
{
    constexpr double q = 1e-12;
    std::vector<std::int64_t> key;
    key.reserve(grid.units().size() * 4 + 2);
    key.push_back(grid.rows());
    key.push_back(grid.cols());
    for (const auto &u : grid.units())
    {
        key.push_back(std::llround(u.turn_on / q));
        key.push_back(std::llround(u.duration / q));
        key.push_back(std::llround(u.weight.real() / q));
        key.push_back(std::llround(u.weight.imag() / q));
    }
    return key;
}

} // namespace detail

// Assembles a hopping schedule, rejecting duplicate parameter sets. Grids
// are compared on a 1e-12 quantization of all per-unit parameters.
inline TmSchedule make_hopped_schedule(std::vector<TmParamGrid> hops, int hop_period)
{
    if (hops.empty())
        throw std::invalid_argument("make_hopped_schedule: need at least one grid");
    if (hop_period < 1)
        throw std::invalid_argument("make_hopped_schedule: hop period must be at least 1");
    std::set<std::vector<std::int64_t>> seen;
    for (const auto &grid : hops)
        if (!seen.insert(detail::canonical_form(grid)).second)
            throw std::invalid_argument("make_hopped_schedule: duplicate hop parameter set");
    TmSchedule s;
    s.grid = hops.front();
    if (hops.size() > 1)
    {
        s.hop_sequence = std::move(hops);
        s.hop_period = hop_period;
    }
    return s;
}

// Linear schedule whose grid is redrawn every hop_period OFDM symbols:
// fresh permutations, offsets and per-line durations each hop. No two hops
// may share an identical parameter set.
inline TmSchedule design_enhanced(const SystemGeometry &g, DesignMode base_mode, int hop_period,
                                  int n_hops, const Interval &duration_range, std::uint64_t seed)
{
    detail::check_linear_pre(g, base_mode);
    if (n_hops < 1)
        throw std::invalid_argument("design_enhanced: need at least one hop");
    if (hop_period < 1)
        throw std::invalid_argument("design_enhanced: hop period must be at least 1");
    std::vector<TmParamGrid> hops;
    hops.reserve(static_cast<std::size_t>(n_hops));
    for (int h = 0; h < n_hops; ++h)
    {
        std::uint64_t hop_seed = (h == 0) ? seed : mix_seed(seed, static_cast<std::uint64_t>(h));
        hops.push_back(design_linear(g, base_mode, hop_seed, duration_range).grid);
    }
    return make_hopped_schedule(std::move(hops), hop_period);
}

// Checks that the scrambling operator is diagonal at the legitimate
// direction, up to the offsets that survive structurally. A report, not a
// gate: hopping schedules are checked grid by grid and the worst residual
// is returned.
inline DesignReport validate_schedule(const SystemGeometry &g, const OfdmConfig &ofdm,
                                      const TmSchedule &schedule, const Direction &legit)
{
    validate(schedule, g);
    validate(ofdm);
    DesignReport report;
    std::set<int> offsets;
    for (std::size_t k = 0; k < schedule.hop_count(); ++k)
    {
        ScramblingOperator op = scrambling_operator(g, ofdm, schedule.hop_grid(k), legit);
        double g0 = std::abs(op.coeff(0));
        for (int d = -(ofdm.n_subcarriers - 1); d <= ofdm.n_subcarriers - 1; ++d)
        {
            if (d == 0)
                continue;
            double num = std::abs(op.coeff(d));
            double r = (g0 > 0.0) ? num / g0
                                  : (num > 0.0 ? std::numeric_limits<double>::infinity() : 0.0);
            report.max_offdiag_residual = std::max(report.max_offdiag_residual, r);
            if (r > surviving_offset_threshold)
                offsets.insert(d);
        }
    }
    report.surviving_offsets.assign(offsets.begin(), offsets.end());
    return report;
}

} // namespace tmirs

#endif
