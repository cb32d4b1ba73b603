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

// Designs one schedule per mode on the default 16x16 surface and prints the
// residual scrambling each leaves toward the legitimate direction.

#include <cstdio>

#include "tmirs/tmirs.hpp"

using namespace tmirs;

int main()
{
    SystemGeometry g;
    OfdmConfig ofdm;
    Direction legit = g.legit_direction();

    struct Row
    {
        const char *name;
        TmSchedule schedule;
    };
    Row rows[] = {
        {"linear-column", design_linear(g, DesignMode::LinearColumn, 1, 0.7)},
        {"linear-row", design_linear(g, DesignMode::LinearRow, 1, 0.7)},
        {"planar", design_planar(g, 1, 0.7)},
        {"enhanced-linear", design_enhanced(g, DesignMode::LinearColumn, 256, 8, {0.3, 0.9}, 1)},
    };

    std::printf("%-16s %-12s %-22s %s\n", "mode", "gain", "max offdiag residual",
                "surviving offsets");
    for (const Row &row : rows)
    {
        DesignReport report = validate_schedule(g, ofdm, row.schedule, legit);
        cplx gain = theoretical_legit_gain(g, row.schedule);
        std::string offsets;
        for (int d : report.surviving_offsets)
            offsets += std::to_string(d) + " ";
        if (offsets.empty())
            offsets = "none";
        std::printf("%-16s %-12.4g %-22.3g %s\n", row.name, std::abs(gain),
                    report.max_offdiag_residual, offsets.c_str());
    }
    return 0;
}
