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

// BER at the legitimate receiver versus a handful of eavesdropper
// directions, planar schedule, 0 dB symbol SNR.

#include <cstdio>

#include "tmirs/tmirs.hpp"

using namespace tmirs;

int main()
{
    SystemGeometry g;
    OfdmConfig ofdm;
    ofdm.n_symbols = 1024;
    TmSchedule schedule = design_planar(g, 42, 0.7);
    ScheduleHarmonics pre(g, ofdm, schedule);

    LinkConfig link;
    link.symbol_snr_db = 0.0;
    link.master_seed = 42;

    struct Probe
    {
        const char *label;
        double elevation_deg;
        double azimuth_deg;
    };
    Probe probes[] = {
        {"legitimate user", 40.0, 30.0},
        {"5 deg off in azimuth", 40.0, 35.0},
        {"same elevation, far azimuth", 40.0, -60.0},
        {"broadside", 0.0, 0.0},
        {"deep sidelobe region", 70.0, -120.0},
    };

    std::printf("%-28s %10s %12s\n", "direction", "BER", "bit errors");
    std::uint64_t stream = 0;
    for (const Probe &p : probes)
    {
        Direction dir{deg2rad(p.elevation_deg), deg2rad(p.azimuth_deg)};
        BerEstimate est = simulate_direction(ofdm, pre, dir, link, stream++);
        std::printf("%-28s %10.4g %12llu\n", p.label, est.ber,
                    static_cast<unsigned long long>(est.bit_errors));
    }
    return 0;
}
