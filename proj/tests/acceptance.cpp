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

// End-to-end acceptance suite. Each criterion prints one PASS/FAIL line;
// the exit code is the number of failures.
//
//   1. harmonic engine matches the exact time-domain oracle on 200 random
//      small instances (1e-9 relative, under one minute)
//   2. planar design: diagonal operator at the legit direction, closed-form
//      gain 1433.6, BER < 1e-4 at 0 dB over 1024 symbols
//   3. linear-column design: only 16-multiples survive, bounded by the sinc
//      envelope, legit BER < 1e-3
//   4. 2-degree BER maps: planar leaks strictly fewer off-cap low-BER cells
//      than static linear
//   5. hopping every 256 of 16384 symbols shrinks the leak count versus the
//      static linear map with the same master seed
//   6. no gating, no scrambling: diagonal at 100 random directions, BER 0
//   7. rerunning the map sweep reproduces the CSV byte for byte

#include <array>
#include <chrono>
#include <cstdarg>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <fstream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "tmirs/tmirs.hpp"

using namespace tmirs;

namespace {

int g_threads = 2;
std::string g_outdir = ".";

double now_seconds()
{
    using clock = std::chrono::steady_clock;
    static const clock::time_point start = clock::now();
    return std::chrono::duration<double>(clock::now() - start).count();
}

void report(int id, bool pass, const std::string &detail)
{
    std::printf("[%s] criterion %d: %s\n", pass ? "PASS" : "FAIL", id, detail.c_str());
    std::fflush(stdout);
}

std::string fmt(const char *f, ...)
{
    char buf[512];
    va_list ap;
    va_start(ap, f);
    std::vsnprintf(buf, sizeof(buf), f, ap);
    va_end(ap);
    return buf;
}

double rel_error(const std::vector<cplx> &a, const std::vector<cplx> &b)
{
    double num = 0.0, den = 0.0;
    for (std::size_t k = 0; k < a.size(); ++k)
    {
        num += std::norm(a[k] - b[k]);
        den += std::norm(b[k]);
    }
    return std::sqrt(num) / std::max(std::sqrt(den), 1e-30);
}

double angular_distance_deg(const Direction &a, const Direction &b)
{
    auto unit = [](const Direction &d) {
        return std::array<double, 3>{std::sin(d.elevation) * std::cos(d.azimuth),
                                     std::sin(d.elevation) * std::sin(d.azimuth),
                                     std::cos(d.elevation)};
    };
    auto ua = unit(a), ub = unit(b);
    double dot = ua[0] * ub[0] + ua[1] * ub[1] + ua[2] * ub[2];
    dot = std::min(1.0, std::max(-1.0, dot));
    return rad2deg(std::acos(dot));
}

struct CapCount
{
    std::size_t offcap = 0;
    std::size_t offcap_low = 0;
    double fraction() const
    {
        return offcap ? static_cast<double>(offcap_low) / static_cast<double>(offcap) : 0.0;
    }
};

CapCount count_offcap_low(const BerMap &map, const Direction &legit, double cap_deg,
                          double ber_threshold)
{
    CapCount c;
    std::size_t idx = 0;
    for (double th : map.elevations_deg)
        for (double ph : map.azimuths_deg)
        {
            const BerEstimate &est = map.cells[idx++];
            Direction dir{deg2rad(th), deg2rad(ph)};
            if (angular_distance_deg(dir, legit) <= cap_deg)
                continue;
            ++c.offcap;
            if (est.ber < ber_threshold)
                ++c.offcap_low;
        }
    return c;
}

std::string slurp(const std::string &path)
{
    std::ifstream is(path, std::ios::binary);
    std::ostringstream os;
    os << is.rdbuf();
    return os.str();
}

// Random small instance covering the four design modes in turn.
struct Instance
{
    SystemGeometry geometry;
    OfdmConfig ofdm;
    TmParamGrid grid;
    Direction dir;
};

Instance random_instance(int mode_pick, std::mt19937_64 &rng)
{
    Instance inst;
    SystemGeometry &g = inst.geometry;
    g.irs_rows = 1 + static_cast<int>(uniform_below(rng, 8));
    g.irs_cols = 1 + static_cast<int>(uniform_below(rng, 8));
    g.legit_elevation = uniform(rng, 0.0, 0.5 * pi);
    g.legit_azimuth = uniform(rng, -pi, pi);
    g.tx_elevation_from_irs = uniform(rng, 0.0, 0.5 * pi);
    g.tx_azimuth_from_irs = uniform(rng, -pi, pi);
    g.tx_elements = 1 + static_cast<int>(uniform_below(rng, 8));

    inst.ofdm.n_subcarriers = 4 * (1 + static_cast<int>(uniform_below(rng, 4))); // 4..16
    inst.ofdm.n_symbols = 1;

    std::uint64_t seed = rng();
    double duration = uniform(rng, 0.05, 1.0);
    Interval range{0.3, 0.9};
    bool common = uniform01(rng) < 0.5;
    switch (mode_pick % 4)
    {
    case 0:
        g.irs_cols = std::max(g.irs_cols, 2);
        inst.grid = common ? design_linear(g, DesignMode::LinearColumn, seed, duration).grid
                           : design_linear(g, DesignMode::LinearColumn, seed, range).grid;
        break;
    case 1:
        g.irs_rows = std::max(g.irs_rows, 2);
        inst.grid = common ? design_linear(g, DesignMode::LinearRow, seed, duration).grid
                           : design_linear(g, DesignMode::LinearRow, seed, range).grid;
        break;
    case 2:
        g.irs_cols = std::max(g.irs_cols, 2);
        inst.grid = design_planar(g, seed, duration).grid;
        break;
    default:
    {
        g.irs_cols = std::max(g.irs_cols, 2);
        int hops = 2 + static_cast<int>(uniform_below(rng, 2));
        TmSchedule s = design_enhanced(g, DesignMode::LinearColumn, 4, hops, range, seed);
        inst.grid = s.hop_grid(uniform_below(rng, s.hop_count()));
        break;
    }
    }
    inst.dir = {uniform(rng, 0.0, 0.5 * pi), uniform(rng, -pi, pi)};
    return inst;
}

SweepSpec map_spec(DesignMode mode, std::int64_t n_symbols, const std::string &csv_name)
{
    SweepSpec spec; // Table-style geometry and waveform defaults
    spec.mode = mode;
    spec.ofdm.n_symbols = n_symbols;
    spec.symbol_snr_db = 0.0;
    // Fixed legit-style processing at every direction: eavesdroppers do not
    // get their own channel phase, which is what the map criteria assume.
    spec.equalizer = Equalizer::LegitGain;
    spec.duration = 0.7;
    spec.duration_range = {0.3, 0.9};
    spec.hop_period = 256;
    spec.n_hops = 0; // cover the run
    spec.seed = 2026;
    spec.elevation = {0.0, 90.0, 2.0};
    spec.azimuth = {-90.0, 90.0, 2.0};
    spec.threads = g_threads;
    if (!csv_name.empty())
        spec.out_csv = g_outdir + "/" + csv_name;
    return spec;
}

bool criterion1()
{
    double t0 = now_seconds();
    auto rng = make_rng(20260809);
    double worst = 0.0;
    const int trials = 200;
    for (int k = 0; k < trials; ++k)
    {
        Instance inst = random_instance(k, rng);
        std::vector<cplx> d(static_cast<std::size_t>(inst.ofdm.n_subcarriers));
        for (auto &v : d)
            v = complex_gaussian(rng);
        ScramblingOperator op =
            scrambling_operator(inst.geometry, inst.ofdm, inst.grid, inst.dir);
        std::vector<cplx> engine = scramble(op, d);
        std::vector<cplx> oracle =
            demod_exact(inst.geometry, inst.ofdm, inst.grid, inst.dir, d);
        worst = std::max(worst, rel_error(engine, oracle));
    }
    double dt = now_seconds() - t0;
    bool pass = worst < 1e-9 && dt < 60.0;
    report(1, pass,
           fmt("oracle equivalence on %d instances: max rel err %.3g (limit 1e-9), %.1f s",
               trials, worst, dt));
    return pass;
}

bool criterion2()
{
    SystemGeometry g; // 16 x 16, K = 8, beta = 1, legit (40, 30) deg
    OfdmConfig ofdm;  // 64 subcarriers
    ofdm.n_symbols = 1024;
    TmSchedule s = design_planar(g, mix_seed(2026, 1), 0.7);
    ScramblingOperator op = scrambling_operator(g, ofdm, s.grid, g.legit_direction());

    cplx g0 = op.coeff(0);
    double gain_err = std::abs(g0 - cplx{1433.6, 0.0});
    double residual = 0.0;
    for (int d = -63; d <= 63; ++d)
        if (d != 0)
            residual = std::max(residual, std::abs(op.coeff(d)) / std::abs(g0));

    LinkConfig link;
    link.symbol_snr_db = 0.0;
    link.master_seed = mix_seed(2026, 2);
    BerEstimate ber = simulate_direction(g, ofdm, s, g.legit_direction(), link);

    bool pass = residual < 1e-10 && gain_err <= 1e-6 && ber.ber < 1e-4;
    report(2, pass,
           fmt("planar legit direction: off-diag residual %.3g (<1e-10), gain err %.3g (<=1e-6), "
               "BER %.3g (<1e-4, %llu bits)",
               residual, gain_err, ber.ber, static_cast<unsigned long long>(ber.bits_total)));
    return pass;
}

bool criterion3()
{
    SystemGeometry g;
    OfdmConfig ofdm;
    ofdm.n_symbols = 1024;
    TmSchedule s = design_linear(g, DesignMode::LinearColumn, mix_seed(2026, 3), 0.7);
    ScramblingOperator op = scrambling_operator(g, ofdm, s.grid, g.legit_direction());

    double g0 = std::abs(op.coeff(0));
    double stray = 0.0;   // offsets that must cancel
    double excess = 0.0;  // surviving offsets relative to their sinc bound
    for (int d = -63; d <= 63; ++d)
    {
        if (d == 0)
            continue;
        double r = std::abs(op.coeff(d)) / g0;
        if (d % 16 != 0)
            stray = std::max(stray, r);
        else
        {
            double x = d * pi * 0.7;
            double bound = std::abs(std::sin(x) / x);
            excess = std::max(excess, r - bound);
        }
    }

    LinkConfig link;
    link.symbol_snr_db = 0.0;
    link.master_seed = mix_seed(2026, 4);
    BerEstimate ber = simulate_direction(g, ofdm, s, g.legit_direction(), link);

    bool pass = stray < 1e-10 && excess <= 1e-12 && ber.ber < 1e-3;
    report(3, pass,
           fmt("linear column legit direction: stray residual %.3g (<1e-10), sinc-bound excess "
               "%.3g (<=1e-12), BER %.3g (<1e-3)",
               stray, excess, ber.ber));
    return pass;
}

struct MapPair
{
    BerMap planar;
    BerMap linear;
    bool ran = false;
};

MapPair g_c4_maps;

bool criterion4()
{
    SweepSpec planar = map_spec(DesignMode::Planar, 1024, "tmirs_acceptance_planar.csv");
    SweepSpec linear = map_spec(DesignMode::LinearColumn, 1024, "tmirs_acceptance_linear.csv");
    BerMap pm = run_sweep(planar);
    BerMap lm = run_sweep(linear);
    g_c4_maps = {pm, lm, true};

    Direction legit = planar.geometry.legit_direction();
    CapCount pc = count_offcap_low(pm, legit, 5.0, 0.1);
    CapCount lc = count_offcap_low(lm, legit, 5.0, 0.1);
    bool pass = pc.fraction() < lc.fraction();
    report(4, pass,
           fmt("off-cap leak fraction (BER<0.1 outside 5 deg): planar %zu/%zu = %.4f vs linear "
               "%zu/%zu = %.4f (planar must be smaller)",
               pc.offcap_low, pc.offcap, pc.fraction(), lc.offcap_low, lc.offcap, lc.fraction()));
    return pass;
}

bool criterion5()
{
    SweepSpec stat = map_spec(DesignMode::LinearColumn, 16384, "tmirs_acceptance_static.csv");
    SweepSpec hop = map_spec(DesignMode::EnhancedLinear, 16384, "tmirs_acceptance_enhanced.csv");
    BerMap sm = run_sweep(stat);
    BerMap hm = run_sweep(hop);

    Direction legit = stat.geometry.legit_direction();
    CapCount sc = count_offcap_low(sm, legit, 5.0, 0.1);
    CapCount hc = count_offcap_low(hm, legit, 5.0, 0.1);

    // The legit direction sits on the grid; read its cell from the map.
    double legit_ber = -1.0;
    {
        std::size_t idx = 0;
        for (double th : hm.elevations_deg)
            for (double ph : hm.azimuths_deg)
            {
                if (th == 40.0 && ph == 30.0)
                    legit_ber = hm.cells[idx].ber;
                ++idx;
            }
    }

    bool pass = hc.offcap_low < sc.offcap_low && legit_ber >= 0.0 && legit_ber < 1e-3;
    report(5, pass,
           fmt("hopping (256 of 16384 symbols): leaks %zu -> %zu (must decrease), legit BER %.3g "
               "(<1e-3)",
               sc.offcap_low, hc.offcap_low, legit_ber));
    return pass;
}

bool criterion6()
{
    SystemGeometry g;
    OfdmConfig ofdm;
    ofdm.n_symbols = 64;
    auto rng = make_rng(606060);

    // Always-on gates with designed weights and arbitrary turn-on instants.
    TmSchedule s;
    s.grid = TmParamGrid(g.irs_rows, g.irs_cols);
    std::vector<cplx> w = design_weights(g);
    std::size_t idx = 0;
    for (auto &u : s.grid.units())
    {
        u.turn_on = uniform01(rng);
        u.duration = 1.0;
        u.weight = w[idx++];
    }

    ScheduleHarmonics pre(g, ofdm, s);
    LinkConfig link;
    link.symbol_snr_db = std::numeric_limits<double>::infinity();
    link.master_seed = mix_seed(2026, 6);

    double worst_residual = 0.0;
    std::uint64_t total_errors = 0;
    for (int k = 0; k < 100; ++k)
    {
        Direction dir{uniform(rng, 0.0, 0.5 * pi), uniform(rng, -pi, pi)};
        ScramblingOperator op = pre.table(0).operator_at(dir);
        double g0 = std::abs(op.coeff(0));
        for (int d = -63; d <= 63; ++d)
            if (d != 0)
                worst_residual = std::max(worst_residual, std::abs(op.coeff(d)) / g0);
        total_errors += simulate_direction(ofdm, pre, dir, link,
                                           static_cast<std::uint64_t>(k)).bit_errors;
    }
    bool pass = worst_residual < 1e-12 && total_errors == 0;
    report(6, pass,
           fmt("always-on control at 100 random directions: worst residual %.3g (<1e-12), "
               "%llu bit errors (must be 0)",
               worst_residual, static_cast<unsigned long long>(total_errors)));
    return pass;
}

bool criterion7()
{
    SweepSpec first = map_spec(DesignMode::Planar, 1024, "tmirs_acceptance_planar.csv");
    if (!g_c4_maps.ran)
        run_sweep(first); // criterion 4 was skipped; produce the reference file
    SweepSpec again = map_spec(DesignMode::Planar, 1024, "tmirs_acceptance_planar_rerun.csv");
    again.threads = std::max(1, g_threads - 1); // thread count must not matter
    run_sweep(again);

    std::string a = slurp(first.out_csv);
    std::string b = slurp(again.out_csv);
    bool pass = !a.empty() && a == b;
    report(7, pass, fmt("determinism: rerun CSV %s (%zu bytes)",
                        pass ? "byte-identical" : "differs", a.size()));
    return pass;
}

} // namespace

int main(int argc, char **argv)
{
    std::set<int> only;
    for (int i = 1; i < argc; ++i)
    {
        if (std::strcmp(argv[i], "--threads") == 0 && i + 1 < argc)
            g_threads = std::atoi(argv[++i]);
        else if (std::strcmp(argv[i], "--outdir") == 0 && i + 1 < argc)
            g_outdir = argv[++i];
        else if (std::strcmp(argv[i], "--only") == 0 && i + 1 < argc)
        {
            std::istringstream is(argv[++i]);
            std::string tok;
            while (std::getline(is, tok, ','))
                only.insert(std::atoi(tok.c_str()));
        }
        else
        {
            std::fprintf(stderr, "usage: %s [--threads N] [--outdir DIR] [--only 1,2,...]\n",
                         argv[0]);
            return 2;
        }
    }

    using Criterion = bool (*)();
    Criterion criteria[] = {criterion1, criterion2, criterion3, criterion4,
                            criterion5, criterion6, criterion7};
    int failures = 0;
    for (int id = 1; id <= 7; ++id)
    {
        if (!only.empty() && !only.count(id))
            continue;
        if (!criteria[id - 1]())
            ++failures;
    }
    std::printf("%s: %d criterion(s) failed\n", failures == 0 ? "OK" : "FAILED", failures);
    return failures;
}
