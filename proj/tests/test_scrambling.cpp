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

#include <catch2/catch_amalgamated.hpp>

#include "tmirs/design.hpp"
#include "tmirs/random.hpp"
#include "tmirs/scrambling.hpp"

using namespace tmirs;

namespace {

Direction random_direction(std::mt19937_64 &rng)
{
    return {uniform(rng, 0.0, 0.5 * pi), uniform(rng, -pi, pi)};
}

TmParamGrid random_grid(const SystemGeometry &g, std::mt19937_64 &rng)
{
    TmParamGrid grid(g.irs_rows, g.irs_cols);
    for (auto &u : grid.units())
    {
        u.turn_on = uniform01(rng);
        u.duration = uniform(rng, 0.05, 1.0);
        u.weight = std::polar(1.0, uniform(rng, -pi, pi));
    }
    return grid;
}

SystemGeometry small_geometry(int rows, int cols)
{
    SystemGeometry g;
    g.irs_rows = rows;
    g.irs_cols = cols;
    return g;
}

} // namespace

TEST_CASE("harmonic coefficient with the designed weight reduces to the duty cycle",
          "[scrambling]")
{
    SystemGeometry g = small_geometry(4, 4);
    std::vector<cplx> w = design_weights(g);
    Direction legit = g.legit_direction();
    for (int m = 0; m < 4; ++m)
        for (int n = 0; n < 4; ++n)
        {
            UnitTmParams p;
            p.turn_on = 0.37;
            p.duration = 0.62;
            p.weight = w[static_cast<std::size_t>(m * 4 + n)];
            cplx b = harmonic_coeff(g, m, n, p, 0, legit);
            REQUIRE(std::abs(b - cplx{0.62, 0.0}) < 1e-12);
        }
}

TEST_CASE("harmonic coefficient vanishes for nonzero offsets of an ungated unit",
          "[scrambling]")
{
    SystemGeometry g = small_geometry(3, 3);
    auto rng = make_rng(31);
    UnitTmParams p;
    p.turn_on = 0.4;
    p.duration = 1.0;
    p.weight = {1.0, 0.0};
    for (int h : {1, -1, 7, -12})
        REQUIRE(std::abs(harmonic_coeff(g, 1, 2, p, h, random_direction(rng))) < 1e-14);
}

TEST_CASE("harmonic coefficient equals the product of its factors", "[scrambling]")
{
    SystemGeometry g = small_geometry(5, 6);
    g.unit_spacing_x = 0.4 * g.carrier_wavelength;
    auto rng = make_rng(32);
    for (int trial = 0; trial < 100; ++trial)
    {
        int m = static_cast<int>(uniform_below(rng, 5));
        int n = static_cast<int>(uniform_below(rng, 6));
        UnitTmParams p;
        p.turn_on = uniform01(rng);
        p.duration = uniform(rng, 0.05, 1.0);
        p.weight = std::polar(1.0, uniform(rng, -pi, pi));
        int h = static_cast<int>(uniform_below(rng, 31)) - 15;
        Direction dir = random_direction(rng);

        cplx expected = array_factor(g, m, n, dir) * array_factor(g, m, n, g.tx_direction()) *
                        p.weight * gate_fourier_coeff(h, p.turn_on, p.duration);
        cplx got = harmonic_coeff(g, m, n, p, h, dir);
        REQUIRE(std::abs(got - expected) < 1e-14);
        REQUIRE(std::abs(got) <= p.duration + 1e-14);
    }
}

TEST_CASE("planar design gives a pure diagonal with the closed-form gain", "[scrambling]")
{
    SystemGeometry g; // 16 x 16, K = 8, beta = 1
    OfdmConfig ofdm;  // 64 subcarriers
    TmSchedule s = design_planar(g, 77, 0.7);
    ScramblingOperator op = scrambling_operator(g, ofdm, s.grid, g.legit_direction());

    cplx g0 = op.coeff(0);
    REQUIRE(std::abs(g0 - cplx{1433.6, 0.0}) < 1e-6);
    for (int d = -(ofdm.n_subcarriers - 1); d <= ofdm.n_subcarriers - 1; ++d)
    {
        if (d == 0)
            continue;
        REQUIRE(std::abs(op.coeff(d)) < 1e-9 * std::abs(g0));
    }
}

TEST_CASE("no gating means no scrambling at any direction", "[scrambling]")
{
    SystemGeometry g = small_geometry(6, 5);
    OfdmConfig ofdm;
    ofdm.n_subcarriers = 16;
    auto rng = make_rng(33);
    TmParamGrid grid = random_grid(g, rng);
    for (auto &u : grid.units())
        u.duration = 1.0;
    for (int trial = 0; trial < 10; ++trial)
    {
        ScramblingOperator op = scrambling_operator(g, ofdm, grid, random_direction(rng));
        double g0 = std::abs(op.coeff(0));
        for (int d = 1; d < ofdm.n_subcarriers; ++d)
        {
            REQUIRE(std::abs(op.coeff(d)) <= 1e-12 * g0);
            REQUIRE(std::abs(op.coeff(-d)) <= 1e-12 * g0);
        }
    }
}

TEST_CASE("operator matches the entrywise matrix built from unit sums", "[scrambling]")
{
    SystemGeometry g = small_geometry(8, 8);
    OfdmConfig ofdm;
    ofdm.n_subcarriers = 16;
    auto rng = make_rng(34);
    for (int trial = 0; trial < 3; ++trial)
    {
        TmParamGrid grid = random_grid(g, rng);
        Direction dir = random_direction(rng);
        ScramblingOperator op = scrambling_operator(g, ofdm, grid, dir);

        double scale = 0.0;
        for (int d = -(ofdm.n_subcarriers - 1); d <= ofdm.n_subcarriers - 1; ++d)
            scale = std::max(scale, std::abs(op.coeff(d)));

        cplx bk = transmit_gain(g);
        for (int i = 0; i < ofdm.n_subcarriers; ++i)
            for (int s = 0; s < ofdm.n_subcarriers; ++s)
            {
                cplx entry{0.0, 0.0};
                for (int m = 0; m < 8; ++m)
                    for (int n = 0; n < 8; ++n)
                        entry += harmonic_coeff(g, m, n, grid.at(m, n), i - s, dir);
                entry *= bk;
                REQUIRE(std::abs(entry - op.coeff(i - s)) < 1e-12 * scale);
            }
    }
}

TEST_CASE("scramble applies the Toeplitz map", "[scrambling]")
{
    OfdmConfig ofdm;
    ofdm.n_subcarriers = 8;
    auto rng = make_rng(35);

    // Identity-like operator: only the zero-offset coefficient is set.
    std::vector<cplx> coeffs(15, cplx{0.0, 0.0});
    cplx gain{2.0, -1.5};
    coeffs[7] = gain;
    ScramblingOperator ident({0.3, 0.2}, 8, coeffs);
    std::vector<cplx> d(8);
    for (auto &v : d)
        v = {uniform(rng, -1.0, 1.0), uniform(rng, -1.0, 1.0)};
    std::vector<cplx> out = scramble(ident, d);
    for (int i = 0; i < 8; ++i)
        REQUIRE(std::abs(out[static_cast<std::size_t>(i)] - gain * d[static_cast<std::size_t>(i)]) <
                1e-14);

    // All-zero input stays zero.
    std::vector<cplx> zeros(8, cplx{0.0, 0.0});
    for (cplx v : scramble(ident, zeros))
        REQUIRE(v == cplx{0.0, 0.0});
}

TEST_CASE("scramble matches the direct double sum over source and units", "[scrambling]")
{
    SystemGeometry g = small_geometry(4, 4);
    OfdmConfig ofdm;
    ofdm.n_subcarriers = 8;
    auto rng = make_rng(36);
    TmParamGrid grid = random_grid(g, rng);
    Direction dir = random_direction(rng);
    ScramblingOperator op = scrambling_operator(g, ofdm, grid, dir);

    std::vector<cplx> d(8);
    for (auto &v : d)
        v = {uniform(rng, -1.0, 1.0), uniform(rng, -1.0, 1.0)};
    std::vector<cplx> fast = scramble(op, d);

    cplx bk = transmit_gain(g);
    double scale = 0.0;
    for (const cplx &v : fast)
        scale = std::max(scale, std::abs(v));
    for (int i = 0; i < 8; ++i)
    {
        cplx acc{0.0, 0.0};
        for (int s = 0; s < 8; ++s)
            for (int m = 0; m < 4; ++m)
                for (int n = 0; n < 4; ++n)
                    acc += d[static_cast<std::size_t>(s)] *
                           harmonic_coeff(g, m, n, grid.at(m, n), i - s, dir);
        acc *= bk;
        REQUIRE(std::abs(acc - fast[static_cast<std::size_t>(i)]) < 1e-12 * scale);
    }
}

TEST_CASE("scramble is linear in the symbol vector", "[scrambling]")
{
    SystemGeometry g = small_geometry(4, 3);
    OfdmConfig ofdm;
    ofdm.n_subcarriers = 12;
    auto rng = make_rng(37);
    TmParamGrid grid = random_grid(g, rng);
    ScramblingOperator op = scrambling_operator(g, ofdm, grid, random_direction(rng));

    std::vector<cplx> x(12), y(12), z(12);
    cplx a{uniform(rng, -2.0, 2.0), uniform(rng, -2.0, 2.0)};
    cplx b{uniform(rng, -2.0, 2.0), uniform(rng, -2.0, 2.0)};
    for (int i = 0; i < 12; ++i)
    {
        x[static_cast<std::size_t>(i)] = {uniform(rng, -1.0, 1.0), uniform(rng, -1.0, 1.0)};
        y[static_cast<std::size_t>(i)] = {uniform(rng, -1.0, 1.0), uniform(rng, -1.0, 1.0)};
        z[static_cast<std::size_t>(i)] = a * x[static_cast<std::size_t>(i)] +
                                         b * y[static_cast<std::size_t>(i)];
    }
    std::vector<cplx> sx = scramble(op, x);
    std::vector<cplx> sy = scramble(op, y);
    std::vector<cplx> sz = scramble(op, z);
    for (int i = 0; i < 12; ++i)
        REQUIRE(std::abs(sz[static_cast<std::size_t>(i)] -
                         (a * sx[static_cast<std::size_t>(i)] +
                          b * sy[static_cast<std::size_t>(i)])) < 1e-12);
}

TEST_CASE("operator rejects mismatched inputs", "[scrambling]")
{
    SystemGeometry g = small_geometry(4, 4);
    OfdmConfig ofdm;
    ofdm.n_subcarriers = 8;
    auto rng = make_rng(38);
    TmParamGrid grid = random_grid(g, rng);

    TmParamGrid wrong(3, 4);
    for (auto &u : wrong.units())
        u = UnitTmParams{0.1, 0.5, {1.0, 0.0}};
    REQUIRE_THROWS_AS(scrambling_operator(g, ofdm, wrong, Direction{0.1, 0.1}),
                      std::invalid_argument);

    ScramblingOperator op = scrambling_operator(g, ofdm, grid, Direction{0.1, 0.1});
    std::vector<cplx> short_d(7);
    REQUIRE_THROWS_AS(scramble(op, short_d), std::invalid_argument);
    REQUIRE_THROWS_AS(op.coeff(8), std::invalid_argument);
    REQUIRE_THROWS_AS(op.coeff(-8), std::invalid_argument);
}
