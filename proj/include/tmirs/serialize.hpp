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

#ifndef TMIRS_SERIALIZE_HPP
#define TMIRS_SERIALIZE_HPP

// JSON layouts for configs and schedules. All angles are degrees at this
// interface; the in-memory types hold radians.

#include <cstdint>
#include <string>

#include <json.hpp>

#include "tmirs/design.hpp"
#include "tmirs/geometry.hpp"
#include "tmirs/link.hpp"
#include "tmirs/schedule.hpp"

namespace tmirs {

inline nlohmann::json geometry_to_json(const SystemGeometry &g)
{
    return {
        {"irs_rows", g.irs_rows},
        {"irs_cols", g.irs_cols},
        {"carrier_wavelength_m", g.carrier_wavelength},
        {"unit_spacing_x_m", g.unit_spacing_x},
        {"unit_spacing_y_m", g.unit_spacing_y},
        {"tx_elements", g.tx_elements},
        {"tx_spacing_m", g.tx_spacing},
        {"irs_angle_from_tx_deg", rad2deg(g.irs_angle_from_tx)},
        {"tx_elevation_deg", rad2deg(g.tx_elevation_from_irs)},
        {"tx_azimuth_deg", rad2deg(g.tx_azimuth_from_irs)},
        {"legit_elevation_deg", rad2deg(g.legit_elevation)},
        {"legit_azimuth_deg", rad2deg(g.legit_azimuth)},
        {"path_loss", {g.path_loss.real(), g.path_loss.imag()}},
    };
}

// Missing keys keep their defaults; spacings default to half the (possibly
// overridden) wavelength.
inline SystemGeometry geometry_from_json(const nlohmann::json &j)
{
    SystemGeometry g;
    g.irs_rows = j.value("irs_rows", g.irs_rows);
    g.irs_cols = j.value("irs_cols", g.irs_cols);
    g.carrier_wavelength = j.value("carrier_wavelength_m", g.carrier_wavelength);
    g.unit_spacing_x = j.value("unit_spacing_x_m", g.carrier_wavelength / 2.0);
    g.unit_spacing_y = j.value("unit_spacing_y_m", g.carrier_wavelength / 2.0);
    g.tx_elements = j.value("tx_elements", g.tx_elements);
    g.tx_spacing = j.value("tx_spacing_m", g.carrier_wavelength / 2.0);
    g.irs_angle_from_tx = deg2rad(j.value("irs_angle_from_tx_deg", rad2deg(g.irs_angle_from_tx)));
    g.tx_elevation_from_irs = deg2rad(j.value("tx_elevation_deg", rad2deg(g.tx_elevation_from_irs)));
    g.tx_azimuth_from_irs = deg2rad(j.value("tx_azimuth_deg", rad2deg(g.tx_azimuth_from_irs)));
    g.legit_elevation = deg2rad(j.value("legit_elevation_deg", rad2deg(g.legit_elevation)));
    g.legit_azimuth = deg2rad(j.value("legit_azimuth_deg", rad2deg(g.legit_azimuth)));
    if (j.contains("path_loss"))
        g.path_loss = {j["path_loss"].at(0).get<double>(), j["path_loss"].at(1).get<double>()};
    validate(g);
    return g;
}

inline nlohmann::json ofdm_to_json(const OfdmConfig &c)
{
    return {
        {"n_subcarriers", c.n_subcarriers},
        {"subcarrier_spacing_hz", c.subcarrier_spacing},
        {"carrier_freq_hz", c.carrier_freq},
        {"n_symbols", c.n_symbols},
    };
}

inline OfdmConfig ofdm_from_json(const nlohmann::json &j)
{
    OfdmConfig c;
    c.n_subcarriers = j.value("n_subcarriers", c.n_subcarriers);
    c.subcarrier_spacing = j.value("subcarrier_spacing_hz", c.subcarrier_spacing);
    c.carrier_freq = j.value("carrier_freq_hz", c.carrier_freq);
    c.n_symbols = j.value("n_symbols", c.n_symbols);
    validate(c);
    return c;
}

namespace detail {

inline nlohmann::json grid_to_json(const TmParamGrid &grid)
{
    nlohmann::json units = nlohmann::json::array();
    for (const auto &u : grid.units())
        units.push_back({{"tau_on", u.turn_on},
                         {"delta_tau", u.duration},
                         {"weight_re", u.weight.real()},
                         {"weight_im", u.weight.imag()}});
    return {{"rows", grid.rows()}, {"cols", grid.cols()}, {"units", std::move(units)}};
}

inline TmParamGrid grid_from_json(const nlohmann::json &j)
{
    TmParamGrid grid(j.at("rows").get<int>(), j.at("cols").get<int>());
    const auto &units = j.at("units");
    if (units.size() != grid.units().size())
        throw std::invalid_argument("schedule JSON: unit count does not match grid dimensions");
    std::size_t idx = 0;
    for (const auto &ju : units)
    {
        UnitTmParams &u = grid.units()[idx++];
        u.turn_on = ju.at("tau_on").get<double>();
        u.duration = ju.at("delta_tau").get<double>();
        u.weight = {ju.at("weight_re").get<double>(), ju.at("weight_im").get<double>()};
    }
    validate(grid);
    return grid;
}

} // namespace detail

// Documented schedule layout: geometry echo, mode tag, seed, hop period and
// one grid per hop (a single grid for static schedules).
inline nlohmann::json schedule_to_json(const SystemGeometry &g, const TmSchedule &s,
                                       DesignMode mode, std::uint64_t seed)
{
    nlohmann::json grids = nlohmann::json::array();
    for (std::size_t k = 0; k < s.hop_count(); ++k)
        grids.push_back(detail::grid_to_json(s.hop_grid(k)));
    return {
        {"format", "tmirs-schedule-v1"},
        {"mode", to_string(mode)},
        {"seed", seed},
        {"geometry", geometry_to_json(g)},
        {"hop_period", s.hop_period},
        {"grids", std::move(grids)},
    };
}

inline TmSchedule schedule_from_json(const nlohmann::json &j, DesignMode *mode_out = nullptr,
                                     std::uint64_t *seed_out = nullptr)
{
    if (j.value("format", "") != std::string("tmirs-schedule-v1"))
        throw std::invalid_argument("schedule JSON: unknown format tag");
    if (mode_out)
        *mode_out = design_mode_from_string(j.at("mode").get<std::string>());
    if (seed_out)
        *seed_out = j.at("seed").get<std::uint64_t>();
    const auto &grids = j.at("grids");
    if (grids.empty())
        throw std::invalid_argument("schedule JSON: no grids");
    TmSchedule s;
    s.hop_period = j.value("hop_period", 1);
    s.grid = detail::grid_from_json(grids.at(0));
    if (grids.size() > 1)
    {
        s.hop_sequence.reserve(grids.size());
        for (const auto &jg : grids)
            s.hop_sequence.push_back(detail::grid_from_json(jg));
    }
    return s;
}

// FNV-1a 64 over the canonical JSON dump; used to fingerprint schedules in
// sweep reports.
inline std::string schedule_digest(const SystemGeometry &g, const TmSchedule &s, DesignMode mode,
                                   std::uint64_t seed)
{
    std::string dump = schedule_to_json(g, s, mode, seed).dump();
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : dump)
    {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    char buf[19];
    std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
    return std::string(buf);
}

} // namespace tmirs

#endif
