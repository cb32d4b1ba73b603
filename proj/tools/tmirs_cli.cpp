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

// Command-line front end: angular BER sweeps, schedule validation and the
// engine-versus-oracle cross check.
//
// Exit codes: 0 ok, 1 validation/verification failure, 2 bad input.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "tmirs/tmirs.hpp"

namespace {

using namespace tmirs;

SweepSpec spec_from_config(const nlohmann::json &j)
{
    SweepSpec spec;
    if (j.contains("geometry"))
        spec.geometry = geometry_from_json(j["geometry"]);
    if (j.contains("ofdm"))
        spec.ofdm = ofdm_from_json(j["ofdm"]);
    if (j.contains("link"))
    {
        const auto &l = j["link"];
        spec.symbol_snr_db = l.value("symbol_snr_db", spec.symbol_snr_db);
        if (l.contains("equalizer"))
            spec.equalizer = equalizer_from_string(l["equalizer"].get<std::string>());
    }
    if (j.contains("design"))
    {
        const auto &d = j["design"];
        if (d.contains("mode"))
            spec.mode = design_mode_from_string(d["mode"].get<std::string>());
        if (d.contains("enhanced_base"))
            spec.enhanced_base = design_mode_from_string(d["enhanced_base"].get<std::string>());
        spec.duration = d.value("duration", spec.duration);
        if (d.contains("duration_range"))
            spec.duration_range = {d["duration_range"].at(0).get<double>(),
                                   d["duration_range"].at(1).get<double>()};
        spec.hop_period = d.value("hop_period", spec.hop_period);
        spec.n_hops = d.value("n_hops", spec.n_hops);
    }
    spec.seed = j.value("seed", spec.seed);
    if (j.contains("sweep"))
    {
        const auto &s = j["sweep"];
        auto range = [](const nlohmann::json &r, AngleRange def) {
            return AngleRange{r.value("min", def.min_deg), r.value("max", def.max_deg),
                              r.value("step", def.step_deg)};
        };
        if (s.contains("elevation_deg"))
            spec.elevation = range(s["elevation_deg"], spec.elevation);
        if (s.contains("azimuth_deg"))
            spec.azimuth = range(s["azimuth_deg"], spec.azimuth);
        spec.max_grid_points = s.value("max_grid_points", spec.max_grid_points);
        spec.threads = s.value("threads", spec.threads);
    }
    if (j.contains("output"))
    {
        const auto &o = j["output"];
        spec.out_csv = o.value("csv", spec.out_csv);
        spec.out_pgm = o.value("pgm", spec.out_pgm);
        spec.out_report = o.value("report", spec.out_report);
        spec.out_schedule = o.value("schedule", spec.out_schedule);
    }
    return spec;
}

// Engine-versus-oracle cross check over random small instances.
int run_verify(int trials, std::uint64_t seed, double tolerance, int max_rows, int max_cols,
               int max_subcarriers)
{
    auto rng = make_rng(seed);
    double worst = 0.0;
    int failures = 0;
    for (int k = 0; k < trials; ++k)
    {
        SystemGeometry g;
        g.irs_rows = 1 + static_cast<int>(uniform_below(rng, static_cast<std::uint64_t>(max_rows)));
        g.irs_cols = 1 + static_cast<int>(uniform_below(rng, static_cast<std::uint64_t>(max_cols)));
        g.legit_elevation = uniform(rng, 0.0, 0.5 * pi);
        g.legit_azimuth = uniform(rng, -pi, pi);
        g.tx_elevation_from_irs = uniform(rng, 0.0, 0.5 * pi);
        g.tx_azimuth_from_irs = uniform(rng, -pi, pi);
        g.tx_elements = 1 + static_cast<int>(uniform_below(rng, 8));

        OfdmConfig ofdm;
        ofdm.n_subcarriers =
            2 * (1 + static_cast<int>(uniform_below(rng, static_cast<std::uint64_t>(max_subcarriers / 2))));
        ofdm.n_symbols = 1;

        std::uint64_t dseed = rng();
        TmParamGrid grid(1, 1);
        switch (k % 4)
        {
        case 0:
            g.irs_cols = std::max(g.irs_cols, 2);
            grid = design_linear(g, DesignMode::LinearColumn, dseed, uniform(rng, 0.05, 1.0)).grid;
            break;
        case 1:
            g.irs_rows = std::max(g.irs_rows, 2);
            grid = design_linear(g, DesignMode::LinearRow, dseed, Interval{0.3, 0.9}).grid;
            break;
        case 2:
            g.irs_cols = std::max(g.irs_cols, 2);
            grid = design_planar(g, dseed, uniform(rng, 0.05, 1.0)).grid;
            break;
        default:
        {
            g.irs_cols = std::max(g.irs_cols, 2);
            TmSchedule s = design_enhanced(g, DesignMode::LinearColumn, 4,
                                           2 + static_cast<int>(uniform_below(rng, 2)),
                                           Interval{0.3, 0.9}, dseed);
            grid = s.hop_grid(uniform_below(rng, s.hop_count()));
            break;
        }
        }

        Direction dir{uniform(rng, 0.0, 0.5 * pi), uniform(rng, -pi, pi)};
        std::vector<cplx> d(static_cast<std::size_t>(ofdm.n_subcarriers));
        for (auto &v : d)
            v = complex_gaussian(rng);

        std::vector<cplx> engine = scramble(scrambling_operator(g, ofdm, grid, dir), d);
        std::vector<cplx> oracle = demod_exact(g, ofdm, grid, dir, d);
        double num = 0.0, den = 0.0;
        for (std::size_t i = 0; i < d.size(); ++i)
        {
            num += std::norm(engine[i] - oracle[i]);
            den += std::norm(oracle[i]);
        }
        double rel = std::sqrt(num) / std::max(std::sqrt(den), 1e-30);
        worst = std::max(worst, rel);
        if (rel >= tolerance)
            ++failures;
    }
    std::printf("verify: %d instances, worst relative error %.3g (tolerance %.3g)\n", trials,
                worst, tolerance);
    return failures == 0 ? 0 : 1;
}

} // namespace

int main(int argc, char **argv)
{
    CLI::App app{"tmirs: directional-modulation BER maps for time-modulated reflecting surfaces"};
    app.set_help_all_flag("--help-all");

    std::string config_path, mode_str, equalizer_str, grid_str;
    std::string out_csv, out_pgm, out_report, out_schedule;
    std::optional<std::uint64_t> seed;
    std::optional<std::int64_t> symbols;
    std::optional<double> snr_db, duration;
    std::optional<int> hop_period, n_hops, threads;
    bool validate_only = false;

    app.add_option("--config", config_path, "JSON config file (flags override it)");
    app.add_option("--mode", mode_str,
                   "design mode: linear-column|linear-row|planar|enhanced-linear");
    app.add_option("--seed", seed, "master seed for design and noise substreams");
    app.add_option("--symbols", symbols, "OFDM symbols per direction");
    app.add_option("--snr-db", snr_db, "data-symbol power over noise power, dB");
    app.add_option("--hop-period", hop_period, "OFDM symbols per hop (enhanced mode)");
    app.add_option("--hops", n_hops, "number of hop grids (0 = cover the run)");
    app.add_option("--duration", duration, "common on-duration for static modes");
    app.add_option("--grid", grid_str, "sweep grid 'tmin:tmax:tstep,pmin:pmax:pstep' (degrees)");
    app.add_option("--out-csv", out_csv, "BER map CSV output");
    app.add_option("--out-pgm", out_pgm, "grayscale heatmap output (binary PGM)");
    app.add_option("--out-report", out_report, "JSON run report output");
    app.add_option("--out-schedule", out_schedule, "designed schedule JSON output");
    app.add_option("--equalizer", equalizer_str, "genie-diagonal|legit-gain");
    app.add_option("--threads", threads, "sweep worker threads (0 = hardware)");
    app.add_flag("--validate-only", validate_only,
                 "only validate cancellation at the legit direction");

    auto *verify = app.add_subcommand("verify", "cross-check the engine against the oracle");
    int v_trials = 200;
    std::uint64_t v_seed = 1;
    double v_tol = 1e-9;
    int v_rows = 8, v_cols = 8, v_subc = 16;
    verify->add_option("--trials", v_trials, "number of random instances");
    verify->add_option("--seed", v_seed, "instance generator seed");
    verify->add_option("--tolerance", v_tol, "relative error tolerance");
    verify->add_option("--max-rows", v_rows, "largest surface row count");
    verify->add_option("--max-cols", v_cols, "largest surface column count");
    verify->add_option("--max-subcarriers", v_subc, "largest subcarrier count");

    try
    {
        app.parse(argc, argv);
    }
    catch (const CLI::ParseError &e)
    {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try
    {
        if (*verify)
            return run_verify(v_trials, v_seed, v_tol, v_rows, v_cols, v_subc);

        SweepSpec spec;
        if (!config_path.empty())
        {
            std::ifstream is(config_path);
            if (!is)
                throw std::invalid_argument("cannot open config file: " + config_path);
            spec = spec_from_config(nlohmann::json::parse(is));
        }
        if (!mode_str.empty())
            spec.mode = design_mode_from_string(mode_str);
        if (!equalizer_str.empty())
            spec.equalizer = equalizer_from_string(equalizer_str);
        if (seed)
            spec.seed = *seed;
        if (symbols)
            spec.ofdm.n_symbols = *symbols;
        if (snr_db)
            spec.symbol_snr_db = *snr_db;
        if (hop_period)
            spec.hop_period = *hop_period;
        if (n_hops)
            spec.n_hops = *n_hops;
        if (duration)
            spec.duration = *duration;
        if (threads)
            spec.threads = *threads;
        if (!grid_str.empty())
        {
            auto [el, az] = parse_grid_spec(grid_str);
            spec.elevation = el;
            spec.azimuth = az;
        }
        if (!out_csv.empty())
            spec.out_csv = out_csv;
        if (!out_pgm.empty())
            spec.out_pgm = out_pgm;
        if (!out_report.empty())
            spec.out_report = out_report;
        if (!out_schedule.empty())
            spec.out_schedule = out_schedule;

        if (validate_only)
        {
            ValidationOutcome out = run_validate(spec);
            std::printf("validate: mode %s, max off-diagonal residual %.3g, %zu surviving "
                        "offset(s), %s\n",
                        to_string(spec.mode), out.report.max_offdiag_residual,
                        out.report.surviving_offsets.size(), out.pass ? "pass" : "FAIL");
            return out.pass ? 0 : 1;
        }

        BerMap map = run_sweep(spec);
        std::printf("sweep: %zu x %zu grid, %lld symbols per direction, mode %s\n",
                    map.elevations_deg.size(), map.azimuths_deg.size(),
                    static_cast<long long>(map.n_symbols), to_string(map.mode));
        return 0;
    }
    catch (const std::exception &e)
    {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    }
}
