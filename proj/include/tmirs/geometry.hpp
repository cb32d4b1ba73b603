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

#ifndef TMIRS_GEOMETRY_HPP
#define TMIRS_GEOMETRY_HPP

#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <stdexcept>
#include <string>

namespace tmirs {

using cplx = std::complex<double>;

inline constexpr double pi = std::numbers::pi;
inline constexpr double speed_of_light = 299792458.0; // m/s

inline constexpr double deg2rad(double deg) { return deg * pi / 180.0; }
inline constexpr double rad2deg(double rad) { return rad * 180.0 / pi; }

// Far-field direction seen from the surface. Angles in radians;
// elevation in [0, pi/2], azimuth in [-pi, pi).
struct Direction
{
    double elevation = 0.0; // theta
    double azimuth = 0.0;   // phi
};

inline void validate(const Direction &d)
{
    if (!(d.elevation >= 0.0 && d.elevation <= 0.5 * pi))
        throw std::invalid_argument("Direction: elevation must be in [0, pi/2]");
    if (!(d.azimuth >= -pi && d.azimuth < pi))
        throw std::invalid_argument("Direction: azimuth must be in [-pi, pi)");
}

// Physical layout of the reflecting surface, the feeding transmit array and
// the fixed angles of the link. Defaults describe a 16x16 surface at 24 GHz
// with half-wavelength spacings, an 8-element half-wavelength feed array and
// a legitimate receiver at (40 deg, 30 deg).
struct SystemGeometry
{
    int irs_rows = 16; // M, along x
    int irs_cols = 16; // N, along y
    double carrier_wavelength = speed_of_light / 24.0e9; // lambda [m]
    double unit_spacing_x = carrier_wavelength / 2.0;    // d_m [m]
    double unit_spacing_y = carrier_wavelength / 2.0;    // d_n [m]
    int tx_elements = 8;                                 // K
    double tx_spacing = carrier_wavelength / 2.0;        // d_t [m]
    double irs_angle_from_tx = deg2rad(30.0);   // theta_I
    double tx_elevation_from_irs = deg2rad(15.0); // theta_T
    double tx_azimuth_from_irs = deg2rad(10.0);   // phi_T
    double legit_elevation = deg2rad(40.0);       // theta_c
    double legit_azimuth = deg2rad(30.0);         // phi_c
    cplx path_loss = {1.0, 0.0}; // beta

    Direction tx_direction() const { return {tx_elevation_from_irs, tx_azimuth_from_irs}; }
    Direction legit_direction() const { return {legit_elevation, legit_azimuth}; }
};

inline void validate(const SystemGeometry &g)
{
    if (g.irs_rows < 1 || g.irs_cols < 1)
        throw std::invalid_argument("SystemGeometry: surface must have at least one unit per axis");
    if (g.tx_elements < 1)
        throw std::invalid_argument("SystemGeometry: transmitter needs at least one element");
    if (!(g.carrier_wavelength > 0.0))
        throw std::invalid_argument("SystemGeometry: wavelength must be positive");
    if (!(g.unit_spacing_x > 0.0) || !(g.unit_spacing_y > 0.0) || !(g.tx_spacing > 0.0))
        throw std::invalid_argument("SystemGeometry: spacings must be positive");
    if (!(g.irs_angle_from_tx >= 0.0 && g.irs_angle_from_tx <= 0.5 * pi))
        throw std::invalid_argument("SystemGeometry: irs_angle_from_tx must be in [0, pi/2]");
    validate(g.tx_direction());
    validate(g.legit_direction());
    if (!std::isfinite(g.path_loss.real()) || !std::isfinite(g.path_loss.imag()))
        throw std::invalid_argument("SystemGeometry: path loss must be finite");
}

// OFDM waveform parameters. The gate repetition period equals the symbol
// duration by construction: symbol_duration() is defined as 1/f_s, which
// makes the switching harmonics land exactly on the subcarrier grid.
struct OfdmConfig
{
    int n_subcarriers = 64;              // N_s
    double subcarrier_spacing = 120.0e3; // f_s [Hz]
    double carrier_freq = 24.0e9;        // f_c [Hz]
    std::int64_t n_symbols = 1024;       // N_p

    double symbol_duration() const { return 1.0 / subcarrier_spacing; } // T_p
};

inline void validate(const OfdmConfig &c)
{
    if (c.n_subcarriers < 2)
        throw std::invalid_argument("OfdmConfig: need at least 2 subcarriers");
    if (!(c.subcarrier_spacing > 0.0))
        throw std::invalid_argument("OfdmConfig: subcarrier spacing must be positive");
    if (!(c.carrier_freq > 0.0))
        throw std::invalid_argument("OfdmConfig: carrier frequency must be positive");
    if (c.n_symbols < 1)
        throw std::invalid_argument("OfdmConfig: need at least one OFDM symbol");
}

// Far-field array factor of the mn-th unit:
//   a_mn(theta, phi) = exp(-j 2 pi / lambda (m d_m sin(theta) cos(phi)
//                                          + n d_n sin(theta) sin(phi)))
// Unit modulus for every argument.
inline cplx array_factor(const SystemGeometry &g, int m, int n, const Direction &dir)
{
    if (m < 0 || m >= g.irs_rows || n < 0 || n >= g.irs_cols)
        throw std::invalid_argument("array_factor: unit index out of range");
    validate(dir);
    double st = std::sin(dir.elevation);
    double phase = -2.0 * pi / g.carrier_wavelength *
                   (m * g.unit_spacing_x * st * std::cos(dir.azimuth) +
                    n * g.unit_spacing_y * st * std::sin(dir.azimuth));
    return std::polar(1.0, phase);
}

// Coherent gain of the feed array at the surface. With the steering weights
// w_k = exp(j 2 pi k d_t sin(theta_I) / lambda) the K-element sum collapses
// to beta * K; the explicit sum only appears in tests.
inline cplx transmit_gain(const SystemGeometry &g)
{
    validate(g);
    return g.path_loss * static_cast<double>(g.tx_elements);
}

} // namespace tmirs

#endif
