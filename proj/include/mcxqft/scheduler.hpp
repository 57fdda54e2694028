// Copyright 2026 The mcxqft Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "mcxqft/circuit.hpp"
#include "mcxqft/routing.hpp"

namespace mcxqft {

enum class ScheduleMode { Abstract, Ngs };

struct Schedule {
  // slices[t] holds the gates that start at time t.
  std::vector<std::vector<std::size_t>> slices;
  long long depth = 0;
  std::map<std::string, int> effective_durations;
  std::vector<int> durations;  // per gate
};

// Ngs mode: CPhase 4, H 2 when the neighbouring gate on its wire is a CPhase
// and 3 otherwise, SWAP 3, or 2 when a CX on the same pair sits next to it (that
// CX then takes 0), everything else 1. Abstract mode: 1.
int gate_duration(const Circuit& c, std::size_t index, ScheduleMode mode);

// Each gate starts as soon as its wires are free; fences in c.barriers hold
// later gates back until everything before them has finished. Throws
// std::invalid_argument if c is illegal under arch.
Schedule schedule_asap(const Circuit& c,
                       const Architecture& arch = Architecture::fully_connected(),
                       ScheduleMode mode = ScheduleMode::Abstract);

std::size_t max_parallelism(const Schedule& s);

std::string schedule_to_json(const Schedule& s);

}  // namespace mcxqft
