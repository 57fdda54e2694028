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

#include <random>

#include "gtest/gtest.h"

#include "json.hpp"
#include "mcxqft/builder.hpp"
#include "mcxqft/routing.hpp"
#include "mcxqft/scheduler.hpp"
#include "oracle.hpp"

using namespace mcxqft;

namespace {

// Fewest time slices over every schedule that keeps the order of gates
// sharing a qubit. Breadth-first over done-sets; a step runs any nonempty
// set of ready gates with disjoint supports.
int brute_force_depth(const Circuit& c) {
  const int g = static_cast<int>(c.size());
  std::vector<uint32_t> pred(g, 0);
  for (int i = 0; i < g; ++i) {
    for (int j = 0; j < i; ++j) {
      for (int k = 0; k < c.gates[i].arity(); ++k) {
        if (c.gates[j].acts_on(c.gates[i].q[k])) pred[i] |= 1u << j;
      }
    }
  }
  const uint32_t all = (1u << g) - 1;
  std::vector<int> dist(all + 1, -1);
  std::vector<uint32_t> frontier = {0};
  dist[0] = 0;
  while (!frontier.empty()) {
    std::vector<uint32_t> next;
    for (uint32_t done : frontier) {
      if (done == all) return dist[done];
      uint32_t ready = 0;
      for (int i = 0; i < g; ++i) {
        if (!(done >> i & 1) && (pred[i] & done) == pred[i]) ready |= 1u << i;
      }
      for (uint32_t sub = ready; sub; sub = (sub - 1) & ready) {
        uint64_t used = 0;
        bool ok = true;
        for (int i = 0; i < g && ok; ++i) {
          if (!(sub >> i & 1)) continue;
          for (int k = 0; k < c.gates[i].arity(); ++k) {
            const uint64_t b = uint64_t{1} << c.gates[i].q[k];
            ok = ok && !(used & b);
            used |= b;
          }
        }
        if (ok && dist[done | sub] < 0) {
          dist[done | sub] = dist[done] + 1;
          next.push_back(done | sub);
        }
      }
    }
    frontier = std::move(next);
  }
  return dist[all];
}

}  // namespace

TEST(schedule_asap, empty) {
  const Schedule s = schedule_asap(Circuit(3));
  EXPECT_EQ(s.depth, 0);
  EXPECT_TRUE(s.slices.empty());
  EXPECT_EQ(max_parallelism(s), 0u);
}

TEST(schedule_asap, matches_exhaustive_minimum) {
  std::mt19937_64 rng(21);
  for (int t = 0; t < 300; ++t) {
    const int n = 2 + t % 5;
    const int len = 1 + t % 12;
    const Circuit c = oracle::random_circuit(rng, n, len);
    ASSERT_EQ(schedule_asap(c).depth, brute_force_depth(c)) << "trial " << t;
  }
}

TEST(schedule_asap, slices_are_disjoint_and_ordered) {
  std::mt19937_64 rng(22);
  const Circuit c = oracle::random_circuit(rng, 6, 80);
  const Schedule s = schedule_asap(c);
  std::vector<long long> start(c.size(), -1);
  std::size_t seen = 0;
  for (std::size_t t = 0; t < s.slices.size(); ++t) {
    std::vector<int> busy(6, 0);
    for (std::size_t i : s.slices[t]) {
      start[i] = static_cast<long long>(t);
      ++seen;
      for (int k = 0; k < c.gates[i].arity(); ++k) EXPECT_EQ(busy[c.gates[i].q[k]]++, 0);
    }
  }
  EXPECT_EQ(seen, c.size());
  for (std::size_t i = 0; i < c.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      for (int k = 0; k < c.gates[i].arity(); ++k) {
        if (c.gates[j].acts_on(c.gates[i].q[k])) EXPECT_LT(start[j], start[i]);
      }
    }
  }
}

TEST(schedule_asap, barrier_fences) {
  Circuit c(2);
  c.add(Gate::h(0));
  c.add(Gate::h(0));
  c.add_barrier();
  c.add(Gate::h(1));
  EXPECT_EQ(schedule_asap(c).depth, 3);
  c.barriers.clear();
  EXPECT_EQ(schedule_asap(c).depth, 2);
}

TEST(schedule_asap, rejects_illegal) {
  Circuit c(3);
  c.add(Gate::cx(0, 2));
  EXPECT_THROW(schedule_asap(c, Architecture::linear_chain()), std::invalid_argument);
  EXPECT_EQ(schedule_asap(c).depth, 1);
}

TEST(schedule_asap, qft_depth_and_parallelism) {
  for (int n = 1; n <= 12; ++n) {
    const Schedule s = schedule_asap(build_qft(n));
    EXPECT_EQ(s.depth, 2 * n - 1);
    EXPECT_EQ(max_parallelism(s), static_cast<std::size_t>((n + 1) / 2));
  }
}

TEST(schedule_asap, mcx_fenced_depth) {
  for (int n = 2; n <= 12; ++n) EXPECT_EQ(schedule_asap(build_mcx(n)).depth, 8 * n - 6);
}

TEST(gate_duration, ngs_table) {
  Circuit c(3);
  c.add(Gate::h(0));                             // 0: next on wire 0 is a cphase
  c.add(Gate::cphase(0, 1, phase_pi()));         // 1
  c.add(Gate::h(2));                             // 2: isolated
  c.add(Gate::rz(2, PhaseExponent::rotation(3)));  // 3
  c.add(Gate::cx(1, 2));                         // 4: feeds the swap on the same pair
  c.add(Gate::swap(1, 2));                       // 5
  c.add(Gate::swap(0, 1));                       // 6: no partner
  c.add(Gate::sx(0));                            // 7
  const int want[] = {2, 4, 3, 1, 0, 2, 3, 1};
  for (std::size_t i = 0; i < c.size(); ++i) {
    EXPECT_EQ(gate_duration(c, i, ScheduleMode::Ngs), want[i]) << i;
    EXPECT_EQ(gate_duration(c, i, ScheduleMode::Abstract), 1);
  }
  const Schedule s = schedule_asap(c, Architecture::fully_connected(), ScheduleMode::Ngs);
  EXPECT_EQ(s.durations, std::vector<int>(std::begin(want), std::end(want)));
  EXPECT_EQ(s.effective_durations.at("cphase"), 4);
  // h 0-2, cp 2-6, cx 6-6, swap(1,2) 6-8, swap(0,1) 8-11, sx 11-12.
  EXPECT_EQ(s.depth, 12);
}

TEST(gate_duration, cx_blocked_by_other_wire) {
  Circuit c(3);
  c.add(Gate::cx(1, 2));
  c.add(Gate::x(2));
  c.add(Gate::swap(1, 2));
  EXPECT_EQ(gate_duration(c, 0, ScheduleMode::Ngs), 1);
  EXPECT_EQ(gate_duration(c, 2, ScheduleMode::Ngs), 3);
}

TEST(schedule_to_json, lists_slices) {
  Circuit c(2);
  c.add(Gate::h(0));
  c.add(Gate::h(1));
  c.add(Gate::cx(0, 1));
  const auto j = nlohmann::json::parse(schedule_to_json(schedule_asap(c)));
  EXPECT_EQ(j, nlohmann::json::parse("[[0, 1], [2]]"));
}
