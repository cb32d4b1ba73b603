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

#ifndef TMIRS_SCRAMBLING_HPP
#define TMIRS_SCRAMBLING_HPP

#include <span>
#include <stdexcept>
#include <vector>

#include "tmirs/gate.hpp"
#include "tmirs/geometry.hpp"
#include "tmirs/schedule.hpp"

namespace tmirs {

// Coefficient of the h-th harmonic that the mn-th unit contributes at
// direction (theta, phi):
//   B(h) = a_mn(theta, phi) * a_mn(theta_T, phi_T) * c_mn * gate_coeff(h)
// |B| <= duration for every h.
inline cplx harmonic_coeff(const SystemGeometry &g, int m, int n,
                           const UnitTmParams &p, int h, const Direction &dir)
{
    validate(p);
    return array_factor(g, m, n, dir) * array_factor(g, m, n, g.tx_direction()) *
           p.weight * gate_fourier_coeff(h, p.turn_on, p.duration);
}

// Linear map from the transmitted symbol vector to the received symbol
// vector at one direction. Toeplitz by construction: entry (i, s) of the
// full N_s x N_s matrix depends only on the subcarrier offset i - s.
class ScramblingOperator
{
  public:
    ScramblingOperator(const Direction &dir, int n_subcarriers, std::vector<cplx> coeffs)
        : direction_(dir), n_subcarriers_(n_subcarriers), coeffs_(std::move(coeffs))
    {
        if (n_subcarriers_ < 2)
            throw std::invalid_argument("ScramblingOperator: need at least 2 subcarriers");
        if (coeffs_.size() != static_cast<std::size_t>(2 * n_subcarriers_ - 1))
            throw std::invalid_argument("ScramblingOperator: coefficient vector has wrong length");
    }

    const Direction &direction() const { return direction_; }
    int n_subcarriers() const { return n_subcarriers_; }

    // Coefficient at subcarrier offset delta = i - s, |delta| <= N_s - 1.
    cplx coeff(int delta) const
    {
        if (delta <= -n_subcarriers_ || delta >= n_subcarriers_)
            throw std::invalid_argument("ScramblingOperator: offset out of range");
        return coeffs_[static_cast<std::size_t>(delta + n_subcarriers_ - 1)];
    }

    // Raw coefficients indexed by delta + N_s - 1.
    const std::vector<cplx> &coeffs() const { return coeffs_; }

    // out[i] = sum_s coeff(i - s) d[s]; no allocation on the hot path.
    void apply(const cplx *d, cplx *out) const
    {
        thread_local std::vector<cplx> rev;
        int ns = n_subcarriers_;
        rev.resize(static_cast<std::size_t>(ns));
        for (int s = 0; s < ns; ++s)
            rev[static_cast<std::size_t>(ns - 1 - s)] = d[s];
        const cplx *h = coeffs_.data();
        const cplx *r = rev.data();
        for (int i = 0; i < ns; ++i)
        {
            const cplx *row = h + i;
            double acc_re = 0.0, acc_im = 0.0;
            for (int t = 0; t < ns; ++t)
            {
                double a = row[t].real(), b = row[t].imag();
                double c = r[t].real(), e = r[t].imag();
                acc_re += a * c - b * e;
                acc_im += a * e + b * c;
            }
            out[i] = {acc_re, acc_im};
        }
    }

    std::vector<cplx> apply(std::span<const cplx> d) const
    {
        if (d.size() != static_cast<std::size_t>(n_subcarriers_))
            throw std::invalid_argument("ScramblingOperator: symbol vector has wrong length");
        std::vector<cplx> out(d.size());
        apply(d.data(), out.data());
        return out;
    }

  private:
    Direction direction_;
    int n_subcarriers_;
    std::vector<cplx> coeffs_;
};

// Direction-independent part of the operator coefficients for one grid.
// Per unit the gate spectrum and the fixed transmit-side phase are folded
// together once; operator_at() then only needs the two separable
// direction-dependent phase ramps. Building an operator this way costs
// O(N_s M N) instead of O(N_s^2 M N).
class GridHarmonicTable
{
  public:
    GridHarmonicTable(const SystemGeometry &g, const OfdmConfig &ofdm, const TmParamGrid &grid)
        : rows_(grid.rows()), cols_(grid.cols()), n_subcarriers_(ofdm.n_subcarriers),
          wavelength_(g.carrier_wavelength), spacing_x_(g.unit_spacing_x),
          spacing_y_(g.unit_spacing_y), gain_(transmit_gain(g))
    {
        validate(ofdm);
        if (grid.rows() != g.irs_rows || grid.cols() != g.irs_cols)
            throw std::invalid_argument("GridHarmonicTable: grid dimensions do not match geometry");
        validate(grid);

        int n_offsets = 2 * n_subcarriers_ - 1;
        terms_.resize(static_cast<std::size_t>(rows_) * cols_ * n_offsets);
        Direction tx = g.tx_direction();
        std::size_t idx = 0;
        for (int m = 0; m < rows_; ++m)
        {
            for (int n = 0; n < cols_; ++n)
            {
                const UnitTmParams &p = grid.at(m, n);
                cplx fixed = array_factor(g, m, n, tx) * p.weight;
                for (int t = 0; t < n_offsets; ++t)
                {
                    int delta = t - (n_subcarriers_ - 1);
                    terms_[idx++] = fixed * gate_fourier_coeff(delta, p.turn_on, p.duration);
                }
            }
        }
    }

    int n_subcarriers() const { return n_subcarriers_; }

    ScramblingOperator operator_at(const Direction &dir) const
    {
        validate(dir);
        int n_offsets = 2 * n_subcarriers_ - 1;
        double st = std::sin(dir.elevation);
        double px = -2.0 * pi / wavelength_ * spacing_x_ * st * std::cos(dir.azimuth);
        double py = -2.0 * pi / wavelength_ * spacing_y_ * st * std::sin(dir.azimuth);
        std::vector<cplx> ax(static_cast<std::size_t>(rows_));
        std::vector<cplx> ay(static_cast<std::size_t>(cols_));
        for (int m = 0; m < rows_; ++m)
            ax[static_cast<std::size_t>(m)] = std::polar(1.0, m * px);
        for (int n = 0; n < cols_; ++n)
            ay[static_cast<std::size_t>(n)] = std::polar(1.0, n * py);

        std::vector<cplx> coeffs(static_cast<std::size_t>(n_offsets), cplx{0.0, 0.0});
        const cplx *term = terms_.data();
        for (int m = 0; m < rows_; ++m)
        {
            for (int n = 0; n < cols_; ++n)
            {
                cplx f = ax[static_cast<std::size_t>(m)] * ay[static_cast<std::size_t>(n)];
                double fr = f.real(), fi = f.imag();
                for (int t = 0; t < n_offsets; ++t)
                {
                    double tr = term[t].real(), ti = term[t].imag();
                    coeffs[static_cast<std::size_t>(t)] +=
                        cplx{fr * tr - fi * ti, fr * ti + fi * tr};
                }
                term += n_offsets;
            }
        }
        for (auto &c : coeffs)
            c *= gain_;
        return ScramblingOperator(dir, n_subcarriers_, std::move(coeffs));
    }

  private:
    int rows_;
    int cols_;
    int n_subcarriers_;
    double wavelength_;
    double spacing_x_;
    double spacing_y_;
    cplx gain_; // beta * K
    std::vector<cplx> terms_; // [unit][offset], row-major
};

// Operator at one direction: coeff(delta) = beta K sum_mn B(delta, Omega_mn).
inline ScramblingOperator scrambling_operator(const SystemGeometry &g, const OfdmConfig &ofdm,
                                              const TmParamGrid &grid, const Direction &dir)
{
    return GridHarmonicTable(g, ofdm, grid).operator_at(dir);
}

// d'(i) = sum_s coeff(i - s) d(s).
inline std::vector<cplx> scramble(const ScramblingOperator &op, std::span<const cplx> d)
{
    return op.apply(d);
}

} // namespace tmirs

#endif
