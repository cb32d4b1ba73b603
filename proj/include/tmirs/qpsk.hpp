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

#ifndef TMIRS_QPSK_HPP
#define TMIRS_QPSK_HPP

#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

#include "tmirs/geometry.hpp"

namespace tmirs {

inline constexpr double inv_sqrt2 = 0.70710678118654752440;

// Gray-mapped unit-power QPSK symbol for the bit pair (b0, b1):
// b0 selects the sign of the in-phase axis, b1 of the quadrature axis,
// so 00 -> (1+j)/sqrt(2) and neighbouring quadrants differ in one bit.
inline cplx qpsk_symbol(unsigned b0, unsigned b1)
{
    return {b0 ? -inv_sqrt2 : inv_sqrt2, b1 ? -inv_sqrt2 : inv_sqrt2};
}

// Slices one symbol back to its bit pair. Axis ties (including exact zero)
// resolve to bit 0, so 0+0j decodes as 00.
inline void qpsk_slice(const cplx &x, std::uint8_t &b0, std::uint8_t &b1)
{
    b0 = x.real() < 0.0 ? 1 : 0;
    b1 = x.imag() < 0.0 ? 1 : 0;
}

inline std::vector<cplx> qpsk_modulate(std::span<const std::uint8_t> bits)
{
    if (bits.size() % 2 != 0)
        throw std::invalid_argument("qpsk_modulate: bit count must be even");
    std::vector<cplx> sym(bits.size() / 2);
    for (std::size_t k = 0; k < sym.size(); ++k)
        sym[k] = qpsk_symbol(bits[2 * k], bits[2 * k + 1]);
    return sym;
}

inline std::vector<std::uint8_t> qpsk_demodulate(std::span<const cplx> symbols)
{
    std::vector<std::uint8_t> bits(2 * symbols.size());
    for (std::size_t k = 0; k < symbols.size(); ++k)
        qpsk_slice(symbols[k], bits[2 * k], bits[2 * k + 1]);
    return bits;
}

} // namespace tmirs

#endif
