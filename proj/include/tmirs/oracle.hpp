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

#ifndef TMIRS_ORACLE_HPP
#define TMIRS_ORACLE_HPP

// Independent ground truth for the harmonic engine: per-subcarrier matched
// filtering of the reflected time-domain signal, once by exact piecewise
// integration of the gated exponentials and once by dense sampling. Neither
// path uses the gate Fourier-series shortcut.

#include <span>
#include <stdexcept>
#include <vector>

#include "tmirs/geometry.hpp"
#include "tmirs/schedule.hpp"

namespace tmirs {

// On-interval(s) of a gate over one normalized period: a window that runs
// past the period boundary wraps into two disjoint spans inside [0, 1].
struct GateInterval
{
    struct Span
    {
        double begin;
        double end;
    };

    Span spans[2];
    int n_spans = 0;

    static GateInterval of(double turn_on, double duration)
    {
        if (!(turn_on >= 0.0 && turn_on < 1.0) || !(duration > 0.0 && duration <= 1.0))
            throw std::invalid_argument("GateInterval: invalid gate parameters");
        GateInterval gi;
        double end = turn_on + duration;
        if (end <= 1.0)
        {
            gi.spans[0] = {turn_on, end};
            gi.n_spans = 1;
        }
        else
        {
            gi.spans[0] = {turn_on, 1.0};
            gi.spans[1] = {0.0, end - 1.0};
            gi.n_spans = 2;
        }
        return gi;
    }

    static GateInterval of(const UnitTmParams &p) { return of(p.turn_on, p.duration); }

    double total_length() const
    {
        double t = 0.0;
        for (int k = 0; k < n_spans; ++k)
            t += spans[k].end - spans[k].begin;
        return t;
    }

    // Integral of exp(j 2 pi k u) over the on-spans; the k = 0 case
    // integrates a constant and gets its own branch.
    cplx integral(int k) const
    {
        if (k == 0)
            return {total_length(), 0.0};
        cplx acc{0.0, 0.0};
        double w = 2.0 * pi * k;
        for (int s = 0; s < n_spans; ++s)
        {
            cplx hi = std::polar(1.0, w * spans[s].end);
            cplx lo = std::polar(1.0, w * spans[s].begin);
            acc += (hi - lo) / cplx{0.0, w};
        }
        return acc;
    }
};

namespace detail {

// Explicit K-term feed-array sum; analytically equal to K but evaluated
// term by term here to keep the oracle free of the folded shortcut.
inline cplx explicit_transmit_sum(const SystemGeometry &g)
{
    cplx acc{0.0, 0.0};
    double x = 2.0 * pi * g.tx_spacing * std::sin(g.irs_angle_from_tx) / g.carrier_wavelength;
    for (int k = 0; k < g.tx_elements; ++k)
        acc += std::polar(1.0, -k * x) * std::polar(1.0, k * x);
    return g.path_loss * acc;
}

} // namespace detail

// Matched-filter outputs over one OFDM symbol, direct from the time-domain
// model: output(i) = (1/T_p) integral of y(t) exp(-j 2 pi (f_c + i f_s) t).
// The carrier cancels analytically in the matched filter, so the
// integration runs at baseband. Per unit and source subcarrier s the gated
// exponential integrates in closed form over the unit's on-span(s).
inline std::vector<cplx> demod_exact(const SystemGeometry &g, const OfdmConfig &ofdm,
                                     const TmParamGrid &grid, const Direction &dir,
                                     std::span<const cplx> d)
{
    validate(g);
    validate(ofdm);
    validate(grid);
    validate(dir);
    if (grid.rows() != g.irs_rows || grid.cols() != g.irs_cols)
        throw std::invalid_argument("demod_exact: grid dimensions do not match geometry");
    int ns = ofdm.n_subcarriers;
    if (d.size() != static_cast<std::size_t>(ns))
        throw std::invalid_argument("demod_exact: symbol vector has wrong length");

    cplx tx = detail::explicit_transmit_sum(g);
    Direction tx_dir = g.tx_direction();
    std::vector<cplx> out(static_cast<std::size_t>(ns), cplx{0.0, 0.0});
    for (int m = 0; m < grid.rows(); ++m)
    {
        for (int n = 0; n < grid.cols(); ++n)
        {
            const UnitTmParams &p = grid.at(m, n);
            cplx f = array_factor(g, m, n, dir) * array_factor(g, m, n, tx_dir) * p.weight;
            GateInterval gi = GateInterval::of(p);
            for (int i = 0; i < ns; ++i)
            {
                cplx acc{0.0, 0.0};
                for (int s = 0; s < ns; ++s)
                    acc += d[static_cast<std::size_t>(s)] * gi.integral(s - i);
                out[static_cast<std::size_t>(i)] += f * acc;
            }
        }
    }
    for (auto &v : out)
        v *= tx;
    return out;
}

// Discrete approximation of demod_exact: L samples per symbol period, gate
// edges snapped to the sample grid, matched filter as an L-point discrete
// transform. With snapped edges the approximation converges to the exact
// result as L grows; the snap moves each edge by at most 1/(2L).
inline std::vector<cplx> demod_sampled(const SystemGeometry &g, const OfdmConfig &ofdm,
                                       const TmParamGrid &grid, const Direction &dir,
                                       std::span<const cplx> d, long oversampling)
{
    validate(g);
    validate(ofdm);
    validate(grid);
    validate(dir);
    if (grid.rows() != g.irs_rows || grid.cols() != g.irs_cols)
        throw std::invalid_argument("demod_sampled: grid dimensions do not match geometry");
    int ns = ofdm.n_subcarriers;
    if (d.size() != static_cast<std::size_t>(ns))
        throw std::invalid_argument("demod_sampled: symbol vector has wrong length");
    long L = oversampling;
    if (L < 4L * ns)
        throw std::invalid_argument("demod_sampled: oversampling must be at least 4 N_s");
    if (L % ns != 0)
        throw std::invalid_argument("demod_sampled: oversampling must be a multiple of N_s");

    // One shared table of the L-th roots of unity keeps all tones exact.
    std::vector<cplx> w(static_cast<std::size_t>(L));
    for (long r = 0; r < L; ++r)
        w[static_cast<std::size_t>(r)] = std::polar(1.0, 2.0 * pi * static_cast<double>(r) / L);

    std::vector<cplx> e(static_cast<std::size_t>(L), cplx{0.0, 0.0});
    for (int s = 0; s < ns; ++s)
    {
        cplx ds = d[static_cast<std::size_t>(s)];
        for (long l = 0; l < L; ++l)
            e[static_cast<std::size_t>(l)] += ds * w[static_cast<std::size_t>((s * l) % L)];
    }

    cplx tx = detail::explicit_transmit_sum(g);
    Direction tx_dir = g.tx_direction();
    std::vector<cplx> y(static_cast<std::size_t>(L), cplx{0.0, 0.0});
    for (int m = 0; m < grid.rows(); ++m)
    {
        for (int n = 0; n < grid.cols(); ++n)
        {
            const UnitTmParams &p = grid.at(m, n);
            cplx f = array_factor(g, m, n, dir) * array_factor(g, m, n, tx_dir) * p.weight;
            long a = std::lround(p.turn_on * static_cast<double>(L));
            long b = std::lround((p.turn_on + p.duration) * static_cast<double>(L));
            auto add_span = [&](long lo, long hi) {
                for (long l = lo; l < hi; ++l)
                    y[static_cast<std::size_t>(l)] += f * e[static_cast<std::size_t>(l)];
            };
            if (b <= L)
                add_span(a, b);
            else if (a >= L)
                add_span(a - L, b - L);
            else
            {
                add_span(a, L);
                add_span(0, b - L);
            }
        }
    }

    std::vector<cplx> out(static_cast<std::size_t>(ns));
    for (int i = 0; i < ns; ++i)
    {
        cplx acc{0.0, 0.0};
        for (long l = 0; l < L; ++l)
            acc += y[static_cast<std::size_t>(l)] * std::conj(w[static_cast<std::size_t>((i * l) % L)]);
        out[static_cast<std::size_t>(i)] = tx * acc / static_cast<double>(L);
    }
    return out;
}

} // namespace tmirs

#endif
