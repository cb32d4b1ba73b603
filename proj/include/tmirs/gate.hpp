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

#ifndef TMIRS_GATE_HPP
#define TMIRS_GATE_HPP

#include <cmath>
#include <stdexcept>

#include "tmirs/geometry.hpp"

namespace tmirs {

// sin(x)/x with a series fallback near zero.
inline double sinc(double x)
{
    if (std::abs(x) < 1e-8)
        return 1.0 - x * x / 6.0;
    return std::sin(x) / x;
}

// Periodic on/off gate of one unit, normalized by the gate period.
// turn_on in [0, 1), duration in (0, 1]; the gate is periodic, so windows
// that run past the period boundary wrap around.
struct UnitTmParams
{
    double turn_on = 0.0;      // tau_o
    double duration = 1.0;     // delta_tau
    cplx weight = {1.0, 0.0};  // c, unit modulus
};

inline void validate(const UnitTmParams &p)
{
    if (!(p.turn_on >= 0.0 && p.turn_on < 1.0))
        throw std::invalid_argument("UnitTmParams: turn_on must be in [0, 1)");
    if (!(p.duration > 0.0 && p.duration <= 1.0))
        throw std::invalid_argument("UnitTmParams: duration must be in (0, 1]");
    if (std::abs(std::abs(p.weight) - 1.0) > 1e-12)
        throw std::invalid_argument("UnitTmParams: weight must be unit modulus");
}

// h-th Fourier coefficient of the unit-amplitude gate:
//   duration * sinc(h pi duration) * exp(-j h pi (2 turn_on + duration))
// The formula is wrap-invariant: Fourier coefficients of a periodic
// waveform do not depend on which period window is examined, so turn-on
// windows with turn_on + duration > 1 need no special casing.
inline cplx gate_fourier_coeff(int h, double turn_on, double duration)
{
    if (!(duration > 0.0 && duration <= 1.0))
        throw std::invalid_argument("gate_fourier_coeff: duration must be in (0, 1]");
    if (!(turn_on >= 0.0 && turn_on < 1.0))
        throw std::invalid_argument("gate_fourier_coeff: turn_on must be in [0, 1)");
    if (h == 0)
        return {duration, 0.0};
    double amp = duration * sinc(h * pi * duration);
    double phase = -h * pi * (2.0 * turn_on + duration);
    return amp * std::polar(1.0, phase);
}

} // namespace tmirs

#endif
