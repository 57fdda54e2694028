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

#include "mcxqft/scheduler.hpp"

#include <algorithm>
#include <stdexcept>

#include "json.hpp"

namespace mcxqft {

namespace {

bool wire_neighbour_is_cphase(const Circuit& c, std::size_t i) {
  const int q = c.gates[i].q[0];
  for (std::size_t j = i; j-- > 0;) {
    if (c.gates[j].acts_on(q)) {
      if (c.gates[j].kind == GateKind::CPhase) return true;
      break;
    }
  }
  for (std::size_t j = i + 1; j < c.gates.size(); ++j) {
    if (c.gates[j].acts_on(q)) return c.gates[j].kind == GateKind::CPhase;
  }
  return false;
}

long wire_step(const Circuit& c, std::size_t i, int q, int dir) {
  for (long j = static_cast<long>(i) + dir; j >= 0 && j < static_cast<long>(c.gates.size());
       j += dir) {
    if (c.gates[j].acts_on(q)) return j;
  }
  return -1;
}

// CX next to a SWAP on the same pair, on both wires: the first such
// neighbour, looking forward and then back.
long swap_partner(const Circuit& c, std::size_t i) {
  const Gate& s = c.gates[i];
  for (int dir : {1, -1}) {
    const long a = wire_step(c, i, s.q[0], dir);
    if (a >= 0 && a == wire_step(c, i, s.q[1], dir) && c.gates[a].kind == GateKind::CX) {
      return a;
    }
  }
  return -1;
}

}  // namespace

int gate_duration(const Circuit& c, std::size_t index, ScheduleMode mode) {
  if (mode == ScheduleMode::Abstract) return 1;
  switch (c.gates.at(index).kind) {
    case GateKind::CPhase:
      return 4;
    case GateKind::Swap:
      return swap_partner(c, index) >= 0 ? 2 : 3;
    case GateKind::H:
      return wire_neighbour_is_cphase(c, index) ? 2 : 3;
    case GateKind::CX:
      for (int dir : {1, -1}) {
        const long j = wire_step(c, index, c.gates[index].q[0], dir);
        if (j >= 0 && c.gates[j].kind == GateKind::Swap &&
            swap_partner(c, j) == static_cast<long>(index)) {
          return 0;
        }
      }
      return 1;
    default:
      return 1;
  }
}

Schedule schedule_asap(const Circuit& c, const Architecture& arch,
                       ScheduleMode mode) {
  c.validate();
  const auto bad = check_legal(c, arch);
  if (!bad.empty()) {
    throw std::invalid_argument("schedule_asap: gate " +
                                std::to_string(bad.front().gate_index) +
                                " is not legal under " + arch.name());
  }
  Schedule s;
  if (mode == ScheduleMode::Ngs) {
    s.effective_durations = {{"cphase", 4}, {"h", 2}, {"h_isolated", 3},
                             {"swap", 3},   {"swap_cx", 2}, {"cx_into_swap", 0}, {"rz", 1}, {"phase", 1},
                             {"sx", 1},     {"x", 1},  {"cx", 1}};
  } else {
    for (int k = 0; k < 8; ++k) {
      s.effective_durations[std::string(kind_name(static_cast<GateKind>(k)))] = 1;
    }
  }
  std::vector<long long> free_at(c.n_qubits, 0);
  long long fence = 0, finish = 0;
  std::size_t next_barrier = 0;
  s.durations.resize(c.gates.size());
  for (std::size_t i = 0; i < c.gates.size(); ++i) {
    while (next_barrier < c.barriers.size() && c.barriers[next_barrier] <= i) {
      fence = finish;
      ++next_barrier;
    }
    const Gate& g = c.gates[i];
    const int d = gate_duration(c, i, mode);
    s.durations[i] = d;
    long long start = fence;
    for (int k = 0; k < g.arity(); ++k) start = std::max(start, free_at[g.q[k]]);
    for (int k = 0; k < g.arity(); ++k) free_at[g.q[k]] = start + d;
    finish = std::max(finish, start + d);
    if (s.slices.size() <= static_cast<std::size_t>(start)) s.slices.resize(start + 1);
    s.slices[start].push_back(i);
  }
  s.depth = finish;
  return s;
}

std::size_t max_parallelism(const Schedule& s) {
  std::size_t best = 0;
  for (const auto& slice : s.slices) best = std::max(best, slice.size());
  return best;
}

std::string schedule_to_json(const Schedule& s) {
  return nlohmann::json(s.slices).dump();
}

}  // namespace mcxqft
