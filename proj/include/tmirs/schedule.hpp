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

#ifndef TMIRS_SCHEDULE_HPP
#define TMIRS_SCHEDULE_HPP

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "tmirs/gate.hpp"
#include "tmirs/geometry.hpp"

namespace tmirs {

// M x N grid of per-unit gate parameters, row-major.
class TmParamGrid
{
  public:
    TmParamGrid() = default;
    TmParamGrid(int rows, int cols)
        : rows_(rows), cols_(cols),
          units_(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols))
    {
        if (rows < 1 || cols < 1)
            throw std::invalid_argument("TmParamGrid: dimensions must be positive");
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    UnitTmParams &at(int m, int n) { return units_[index(m, n)]; }
    const UnitTmParams &at(int m, int n) const { return units_[index(m, n)]; }

    const std::vector<UnitTmParams> &units() const { return units_; }
    std::vector<UnitTmParams> &units() { return units_; }

  private:
    std::size_t index(int m, int n) const
    {
        if (m < 0 || m >= rows_ || n < 0 || n >= cols_)
            throw std::invalid_argument("TmParamGrid: unit index out of range");
        return static_cast<std::size_t>(m) * static_cast<std::size_t>(cols_) +
               static_cast<std::size_t>(n);
    }

    int rows_ = 0;
    int cols_ = 0;
    std::vector<UnitTmParams> units_;
};

inline void validate(const TmParamGrid &grid)
{
    if (grid.rows() < 1 || grid.cols() < 1)
        throw std::invalid_argument("TmParamGrid: empty grid");
    for (const auto &u : grid.units())
        validate(u);
}

// A gating plan for the whole surface: one static grid, or an ordered hop
// sequence of grids applied for hop_period OFDM symbols each.
struct TmSchedule
{
    TmParamGrid grid;                     // static pattern (first hop when hopping)
    std::vector<TmParamGrid> hop_sequence; // empty = static schedule
    int hop_period = 1;                   // P, OFDM symbols per hop

    bool hopping() const { return !hop_sequence.empty(); }
    std::size_t hop_count() const { return hopping() ? hop_sequence.size() : 1; }

    const TmParamGrid &hop_grid(std::size_t k) const
    {
        if (!hopping())
        {
            if (k != 0)
                throw std::invalid_argument("TmSchedule: static schedule has a single grid");
            return grid;
        }
        if (k >= hop_sequence.size())
            throw std::invalid_argument("TmSchedule: hop index out of range");
        return hop_sequence[k];
    }

    // Grid active during the given OFDM symbol; the sequence repeats when
    // the run is longer than hop_count * hop_period.
    const TmParamGrid &grid_for_symbol(std::int64_t symbol_index) const
    {
        if (!hopping())
            return grid;
        auto k = static_cast<std::size_t>(symbol_index / hop_period) % hop_sequence.size();
        return hop_sequence[k];
    }
};

inline void validate(const TmSchedule &s, const SystemGeometry &g)
{
    validate(g);
    if (s.hop_period < 1)
        throw std::invalid_argument("TmSchedule: hop period must be at least 1");
    auto check_dims = [&](const TmParamGrid &grid) {
        if (grid.rows() != g.irs_rows || grid.cols() != g.irs_cols)
            throw std::invalid_argument("TmSchedule: grid dimensions do not match geometry");
        validate(grid);
    };
    check_dims(s.grid);
    for (const auto &hop : s.hop_sequence)
        check_dims(hop);
}

} // namespace tmirs

#endif
