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

#ifndef TMIRS_TMIRS_HPP
#define TMIRS_TMIRS_HPP

#include "tmirs/design.hpp"
#include "tmirs/gate.hpp"
#include "tmirs/geometry.hpp"
#include "tmirs/link.hpp"
#include "tmirs/oracle.hpp"
#include "tmirs/qpsk.hpp"
#include "tmirs/random.hpp"
#include "tmirs/schedule.hpp"
#include "tmirs/scrambling.hpp"
#include "tmirs/serialize.hpp"
#include "tmirs/sweep.hpp"

#endif
