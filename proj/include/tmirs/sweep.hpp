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

#ifndef TMIRS_SWEEP_HPP
#define TMIRS_SWEEP_HPP

#include <atomic>
#include <chrono>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <string>
#include <thread>
#include <vector>

#include "tmirs/design.hpp"
#include "tmirs/link.hpp"
#include "tmirs/serialize.hpp"

namespace tmirs {

// Inclusive angular range in degrees.
struct AngleRange
{
    double min_deg = 0.0;
    double max_deg = 90.0;
    double step_deg = 1.0;

    std::vector<double> values() const
    {
        if (!(step_deg > 0.0))
            throw std::invalid_argument("AngleRange: step must be positive");
        if (max_deg < min_deg)
            throw std::invalid_argument("AngleRange: empty range");
        auto count = static_cast<std::size_t>(
            std::floor((max_deg - min_deg) / step_deg + 1e-9)) + 1;
        std::vector<double> v(count);
        for (std::size_t k = 0; k < count; ++k)
            v[k] = min_deg + static_cast<double>(k) * step_deg;
        return v;
    }
};

// Everything one angular BER sweep needs. A single seed drives the run;
// the schedule design and the per-direction bit/noise streams use
// substreams derived from it.
struct SweepSpec
{
    SystemGeometry geometry;
    OfdmConfig ofdm;
    double symbol_snr_db = 0.0;
    Equalizer equalizer = Equalizer::GenieDiagonal;
    DesignMode mode = DesignMode::Planar;
    DesignMode enhanced_base = DesignMode::LinearColumn;
    double duration = 0.7;            // common on-duration, static modes
    Interval duration_range{0.3, 0.9}; // per-line durations, enhanced mode
    int hop_period = 256;
    int n_hops = 0; // 0 = cover all n_symbols
    std::uint64_t seed = 1;
    AngleRange elevation{0.0, 90.0, 1.0};
    AngleRange azimuth{-90.0, 90.0, 1.0};
    std::size_t max_grid_points = 1000000;
    int threads = 0; // 0 = hardware concurrency
    std::string out_csv;
    std::string out_pgm;
    std::string out_report;
    std::string out_schedule;

    std::uint64_t design_seed() const { return mix_seed(seed, 1); }
    std::uint64_t link_seed() const { return mix_seed(seed, 2); }
};

struct BerMap
{
    std::vector<double> elevations_deg;
    std::vector<double> azimuths_deg;
    std::vector<BerEstimate> cells; // row-major [elevation][azimuth]
    DesignMode mode = DesignMode::Planar;
    std::uint64_t seed = 0;
    std::int64_t n_symbols = 0;

    const BerEstimate &at(std::size_t r, std::size_t c) const
    {
        return cells.at(r * azimuths_deg.size() + c);
    }
};

// Schedule for the spec's design mode.
inline TmSchedule design_schedule(const SweepSpec &spec)
{
    const SystemGeometry &g = spec.geometry;
    std::uint64_t seed = spec.design_seed();
    switch (spec.mode)
    {
    case DesignMode::LinearColumn:
    case DesignMode::LinearRow:
        return design_linear(g, spec.mode, seed, spec.duration);
    case DesignMode::Planar:
        return design_planar(g, seed, spec.duration);
    case DesignMode::EnhancedLinear:
    {
        int hops = spec.n_hops;
        if (hops <= 0)
            hops = static_cast<int>((spec.ofdm.n_symbols + spec.hop_period - 1) / spec.hop_period);
        return design_enhanced(g, spec.enhanced_base, spec.hop_period, hops,
                               spec.duration_range, seed);
    }
    }
    throw std::invalid_argument("design_schedule: unknown mode");
}

namespace detail {

inline void write_csv(std::ostream &os, const BerMap &map)
{
    os << "theta_deg,phi_deg,ber\n";
    char line[96];
    std::size_t idx = 0;
    for (double th : map.elevations_deg)
        for (double ph : map.azimuths_deg)
        {
            std::snprintf(line, sizeof(line), "%.12g,%.12g,%.12g\n", th, ph,
                          map.cells[idx++].ber);
            os << line;
        }
}

// 8-bit binary PGM, linear in log10(ber + 1e-10) clipped to [-10, 0];
// darker pixels mean lower BER. Pixel (r, c) is grid point (r, c).
inline void write_pgm(std::ostream &os, const BerMap &map)
{
    std::size_t h = map.elevations_deg.size();
    std::size_t w = map.azimuths_deg.size();
    os << "P5\n" << w << " " << h << "\n255\n";
    std::vector<unsigned char> row(w);
    for (std::size_t r = 0; r < h; ++r)
    {
        for (std::size_t c = 0; c < w; ++c)
        {
            double v = std::log10(map.at(r, c).ber + 1e-10);
            v = std::min(0.0, std::max(-10.0, v));
            row[c] = static_cast<unsigned char>(std::lround(255.0 * (v + 10.0) / 10.0));
        }
        os.write(reinterpret_cast<const char *>(row.data()), static_cast<std::streamsize>(w));
    }
}

inline std::ofstream open_output(const std::string &path, bool binary)
{
    std::ofstream os(path, binary ? std::ios::binary : std::ios::out);
    if (!os)
        throw std::invalid_argument("cannot open output file: " + path);
    return os;
}

} // namespace detail

// Runs the angular BER sweep described by the spec and writes the requested
// outputs. Grid points are evaluated by a bounded worker pool; every point
// draws from its own substream, so the result does not depend on the
// evaluation order and reruns are byte-identical.
inline BerMap run_sweep(const SweepSpec &spec)
{
    validate(spec.geometry);
    validate(spec.ofdm);

    std::vector<double> elevations = spec.elevation.values();
    std::vector<double> azimuths = spec.azimuth.values();
    if (elevations.empty())
        throw std::invalid_argument("run_sweep: empty elevation range");
    if (azimuths.empty())
        throw std::invalid_argument("run_sweep: empty azimuth range");
    std::size_t n_points = elevations.size() * azimuths.size();
    if (n_points > spec.max_grid_points)
        throw std::invalid_argument("run_sweep: grid point count exceeds cap");

    // Open the outputs before computing so a bad path fails fast.
    std::ofstream csv, pgm, report, sched_out;
    if (!spec.out_csv.empty())
        csv = detail::open_output(spec.out_csv, false);
    if (!spec.out_pgm.empty())
        pgm = detail::open_output(spec.out_pgm, true);
    if (!spec.out_report.empty())
        report = detail::open_output(spec.out_report, false);
    if (!spec.out_schedule.empty())
        sched_out = detail::open_output(spec.out_schedule, false);

    auto t0 = std::chrono::steady_clock::now();
    TmSchedule schedule = design_schedule(spec);
    ScheduleHarmonics pre(spec.geometry, spec.ofdm, schedule);

    LinkConfig link;
    link.symbol_snr_db = spec.symbol_snr_db;
    link.equalizer = spec.equalizer;
    link.master_seed = spec.link_seed();

    std::vector<Direction> dirs(n_points);
    {
        std::size_t idx = 0;
        for (double th : elevations)
            for (double ph : azimuths)
                dirs[idx++] = {deg2rad(th), deg2rad(ph)};
    }

    BerMap map;
    map.elevations_deg = elevations;
    map.azimuths_deg = azimuths;
    map.cells.resize(n_points);
    map.mode = spec.mode;
    map.seed = spec.seed;
    map.n_symbols = spec.ofdm.n_symbols;

    int n_threads = spec.threads > 0
                        ? spec.threads
                        : static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
    n_threads = static_cast<int>(std::min<std::size_t>(static_cast<std::size_t>(n_threads), n_points));

    std::atomic<std::size_t> next{0};
    auto worker = [&]() {
        for (;;)
        {
            std::size_t k = next.fetch_add(1);
            if (k >= n_points)
                break;
            map.cells[k] = simulate_direction(spec.ofdm, pre, dirs[k], link, k);
        }
    };
    if (n_threads <= 1)
        worker();
    else
    {
        std::vector<std::thread> pool;
        pool.reserve(static_cast<std::size_t>(n_threads));
        for (int t = 0; t < n_threads; ++t)
            pool.emplace_back(worker);
        for (auto &t : pool)
            t.join();
    }

    double runtime = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();

    if (csv.is_open())
        detail::write_csv(csv, map);
    if (pgm.is_open())
        detail::write_pgm(pgm, map);
    if (sched_out.is_open())
        sched_out << schedule_to_json(spec.geometry, schedule, spec.mode, spec.design_seed()).dump(2)
                  << "\n";
    if (report.is_open())
    {
        nlohmann::json j = {
            {"mode", to_string(spec.mode)},
            {"seed", spec.seed},
            {"schedule_digest", schedule_digest(spec.geometry, schedule, spec.mode, spec.design_seed())},
            {"runtime_seconds", runtime},
            {"n_points", n_points},
            {"n_symbols", spec.ofdm.n_symbols},
            {"snr_db", spec.symbol_snr_db},
            {"equalizer", to_string(spec.equalizer)},
            {"grid",
             {{"elevation_deg",
               {{"min", spec.elevation.min_deg}, {"max", spec.elevation.max_deg},
                {"step", spec.elevation.step_deg}, {"count", elevations.size()}}},
              {"azimuth_deg",
               {{"min", spec.azimuth.min_deg}, {"max", spec.azimuth.max_deg},
                {"step", spec.azimuth.step_deg}, {"count", azimuths.size()}}}}},
        };
        report << j.dump(2) << "\n";
    }
    return map;
}

struct ValidationOutcome
{
    DesignReport report;
    int allowed_offset_modulus = 0; // offsets must be multiples of this
    bool pass = false;
};

// Designs the schedule and checks cancellation at the legitimate direction.
// Planar passes when no offset survives; the linear modes pass when every
// surviving offset is a multiple of the line length.
inline ValidationOutcome run_validate(const SweepSpec &spec)
{
    TmSchedule schedule = design_schedule(spec);
    DesignReport report = validate_schedule(spec.geometry, spec.ofdm, schedule,
                                            spec.geometry.legit_direction());

    DesignMode structural =
        spec.mode == DesignMode::EnhancedLinear ? spec.enhanced_base : spec.mode;
    int modulus = 0;
    switch (structural)
    {
    case DesignMode::LinearColumn: modulus = spec.geometry.irs_cols; break;
    case DesignMode::LinearRow: modulus = spec.geometry.irs_rows; break;
    case DesignMode::Planar: modulus = spec.geometry.irs_rows * spec.geometry.irs_cols; break;
    case DesignMode::EnhancedLinear: break;
    }

    ValidationOutcome out;
    out.report = report;
    out.allowed_offset_modulus = modulus;
    if (spec.mode == DesignMode::Planar)
        out.pass = report.max_offdiag_residual <= surviving_offset_threshold;
    else
    {
        out.pass = true;
        for (int d : report.surviving_offsets)
            if (modulus == 0 || d % modulus != 0)
                out.pass = false;
    }

    if (!spec.out_report.empty())
    {
        auto os = detail::open_output(spec.out_report, false);
        nlohmann::json j = {
            {"mode", to_string(spec.mode)},
            {"seed", spec.seed},
            {"max_offdiag_residual", report.max_offdiag_residual},
            {"surviving_offsets", report.surviving_offsets},
            {"allowed_offset_modulus", modulus},
            {"pass", out.pass},
        };
        os << j.dump(2) << "\n";
    }
    return out;
}

// Parses "min:max:step,min:max:step" (degrees) into elevation and azimuth
// ranges, the format the --grid flag uses.
inline std::pair<AngleRange, AngleRange> parse_grid_spec(const std::string &s)
{
    auto parse_range = [](const std::string &part) {
        AngleRange r;
        if (std::sscanf(part.c_str(), "%lf:%lf:%lf", &r.min_deg, &r.max_deg, &r.step_deg) != 3)
            throw std::invalid_argument("grid spec: expected min:max:step, got '" + part + "'");
        return r;
    };
    auto comma = s.find(',');
    if (comma == std::string::npos)
        throw std::invalid_argument("grid spec: expected two comma-separated ranges");
    return {parse_range(s.substr(0, comma)), parse_range(s.substr(comma + 1))};
}

} // namespace tmirs

#endif
