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

#ifndef TMIRS_LINK_HPP
#define TMIRS_LINK_HPP

#include <cmath>
#include <cstdint>
#include <limits>
#include <string>
#include <string_view>
#include <vector>

#include "tmirs/qpsk.hpp"
#include "tmirs/random.hpp"
#include "tmirs/schedule.hpp"
#include "tmirs/scrambling.hpp"

namespace tmirs {

// How a receiver removes the bulk complex gain before slicing.
//  LegitGain: divide by the schedule's closed-form gain toward the
//    legitimate direction (the processing the intended receiver applies).
//  GenieDiagonal: divide by the local operator's own zero-offset
//    coefficient (best-case eavesdropper, the conservative default).
enum class Equalizer
{
    LegitGain,
    GenieDiagonal
};

inline const char *to_string(Equalizer e)
{
    return e == Equalizer::LegitGain ? "legit-gain" : "genie-diagonal";
}

inline Equalizer equalizer_from_string(std::string_view s)
{
    if (s == "legit-gain" || s == "legit")
        return Equalizer::LegitGain;
    if (s == "genie-diagonal" || s == "genie")
        return Equalizer::GenieDiagonal;
    throw std::invalid_argument("unknown equalizer: " + std::string(s));
}

struct LinkConfig
{
    double symbol_snr_db = 0.0; // data-symbol power over noise power
    Equalizer equalizer = Equalizer::GenieDiagonal;
    std::uint64_t master_seed = 0;
};

inline void validate(const LinkConfig &c)
{
    // +infinity means noise off; NaN and -infinity make no sense.
    if (std::isnan(c.symbol_snr_db) ||
        c.symbol_snr_db == -std::numeric_limits<double>::infinity())
        throw std::invalid_argument("LinkConfig: snr must be finite or +infinity");
}

struct BerEstimate
{
    Direction direction;
    std::uint64_t bit_errors = 0;
    std::uint64_t bits_total = 0;
    double ber = 0.0;
};

// Zero-offset operator coefficient toward the legitimate direction in
// closed form: beta K sum_mn duration_mn. Equals coeff(0) of the operator
// at (theta_c, phi_c) for schedules built by the designer.
inline cplx theoretical_legit_gain(const SystemGeometry &g, const TmParamGrid &grid)
{
    validate(g);
    if (grid.rows() != g.irs_rows || grid.cols() != g.irs_cols)
        throw std::invalid_argument("theoretical_legit_gain: grid does not match geometry");
    double total = 0.0;
    for (const auto &u : grid.units())
        total += u.duration;
    return transmit_gain(g) * total;
}

inline cplx theoretical_legit_gain(const SystemGeometry &g, const TmSchedule &schedule,
                                   std::size_t hop_index = 0)
{
    return theoretical_legit_gain(g, schedule.hop_grid(hop_index));
}

// Precomputed per-hop harmonic tables plus equalizer gains for one
// schedule; shared read-only across any number of sweep workers.
class ScheduleHarmonics
{
  public:
    ScheduleHarmonics(const SystemGeometry &g, const OfdmConfig &ofdm, const TmSchedule &schedule)
        : hop_period_(schedule.hop_period)
    {
        validate(schedule, g);
        tables_.reserve(schedule.hop_count());
        gains_.reserve(schedule.hop_count());
        for (std::size_t k = 0; k < schedule.hop_count(); ++k)
        {
            tables_.emplace_back(g, ofdm, schedule.hop_grid(k));
            gains_.push_back(theoretical_legit_gain(g, schedule.hop_grid(k)));
        }
    }

    std::size_t grid_count() const { return tables_.size(); }
    int hop_period() const { return hop_period_; }
    const GridHarmonicTable &table(std::size_t k) const { return tables_.at(k); }
    cplx legit_gain(std::size_t k) const { return gains_.at(k); }

  private:
    int hop_period_;
    std::vector<GridHarmonicTable> tables_;
    std::vector<cplx> gains_;
};

// Monte Carlo BER at one direction. Per OFDM symbol: random bits are
// QPSK-modulated, passed through the active hop grid's scrambling
// operator, disturbed by circular complex Gaussian noise of variance
// 10^(-snr/10) per subcarrier (transmitted symbols have unit power),
// equalized and sliced. Slicing is scale-invariant, so equalization
// multiplies by the conjugate gain instead of dividing.
//
// The random stream is mix_seed(master_seed, stream), so grid points of a
// sweep are independent and reproducible in any evaluation order.
inline BerEstimate simulate_direction(const OfdmConfig &ofdm, const ScheduleHarmonics &pre,
                                      const Direction &dir, const LinkConfig &link,
                                      std::uint64_t stream = 0)
{
    validate(dir);
    validate(link);
    int ns = ofdm.n_subcarriers;
    std::int64_t np = ofdm.n_symbols;

    std::vector<ScramblingOperator> ops;
    std::vector<cplx> eq_conj; // conjugate of the equalizer gain per hop grid
    ops.reserve(pre.grid_count());
    for (std::size_t k = 0; k < pre.grid_count(); ++k)
    {
        ops.push_back(pre.table(k).operator_at(dir));
        cplx gain = (link.equalizer == Equalizer::GenieDiagonal) ? ops.back().coeff(0)
                                                                 : pre.legit_gain(k);
        eq_conj.push_back(std::conj(gain));
    }

    double sigma2 = std::pow(10.0, -link.symbol_snr_db / 10.0);
    double sigma = std::sqrt(sigma2);
    bool noisy = sigma2 > 0.0;

    auto rng = make_rng(mix_seed(link.master_seed, stream));
    std::vector<std::uint8_t> bits(static_cast<std::size_t>(2 * ns));
    std::vector<cplx> d(static_cast<std::size_t>(ns));
    std::vector<cplx> rx(static_cast<std::size_t>(ns));

    std::uint64_t errors = 0;
    for (std::int64_t mu = 0; mu < np; ++mu)
    {
        std::size_t k = (ops.size() == 1)
                            ? 0
                            : static_cast<std::size_t>(mu / pre.hop_period()) % ops.size();
        const ScramblingOperator &op = ops[k];
        cplx eq = eq_conj[k];

        std::uint64_t word = 0;
        int avail = 0;
        for (int i = 0; i < 2 * ns; ++i)
        {
            if (avail == 0)
            {
                word = rng();
                avail = 64;
            }
            bits[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(word & 1u);
            word >>= 1;
            --avail;
        }
        for (int i = 0; i < ns; ++i)
            d[static_cast<std::size_t>(i)] =
                qpsk_symbol(bits[static_cast<std::size_t>(2 * i)],
                            bits[static_cast<std::size_t>(2 * i + 1)]);

        op.apply(d.data(), rx.data());
        if (noisy)
            for (int i = 0; i < ns; ++i)
                rx[static_cast<std::size_t>(i)] += sigma * complex_gaussian(rng);

        for (int i = 0; i < ns; ++i)
        {
            cplx z = rx[static_cast<std::size_t>(i)] * eq;
            std::uint8_t b0, b1;
            qpsk_slice(z, b0, b1);
            errors += (b0 != bits[static_cast<std::size_t>(2 * i)]);
            errors += (b1 != bits[static_cast<std::size_t>(2 * i + 1)]);
        }
    }

    BerEstimate est;
    est.direction = dir;
    est.bit_errors = errors;
    est.bits_total = static_cast<std::uint64_t>(2 * ns) * static_cast<std::uint64_t>(np);
    est.ber = static_cast<double>(errors) / static_cast<double>(est.bits_total);
    return est;
}

inline BerEstimate simulate_direction(const SystemGeometry &g, const OfdmConfig &ofdm,
                                      const TmSchedule &schedule, const Direction &dir,
                                      const LinkConfig &link, std::uint64_t stream = 0)
{
    ScheduleHarmonics pre(g, ofdm, schedule);
    return simulate_direction(ofdm, pre, dir, link, stream);
}

} // namespace tmirs

#endif
