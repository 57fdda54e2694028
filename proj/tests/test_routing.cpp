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

#include "gtest/gtest.h"

#include "mcxqft/builder.hpp"
#include "mcxqft/routing.hpp"
#include "mcxqft/scheduler.hpp"
#include "mcxqft/simulator.hpp"
#include "oracle.hpp"

using namespace mcxqft;

TEST(architecture, adjacency) {
  const Architecture fc = Architecture::fully_connected();
  const Architecture line = Architecture::linear_chain();
  EXPECT_TRUE(fc.adjacent(0, 7));
  EXPECT_TRUE(line.adjacent(3, 4));
  EXPECT_TRUE(line.adjacent(4, 3));
  EXPECT_FALSE(line.adjacent(2, 4));
  EXPECT_EQ(fc.name(), "fc");
  EXPECT_EQ(line.name(), "lnn");
  EXPECT_EQ(Architecture::from_hint(ArchHint::LNN).kind(), ArchKind::LinearChain);
}

TEST(architecture, custom_from_json) {
  const Architecture a =
      Architecture::from_json_string(R"({"n": 4, "edges": [[0, 2], [2, 3]]})");
  EXPECT_EQ(a.kind(), ArchKind::Custom);
  EXPECT_EQ(a.name(), "custom");
  EXPECT_TRUE(a.adjacent(2, 0));
  EXPECT_TRUE(a.adjacent(3, 2));
  EXPECT_FALSE(a.adjacent(0, 1));
  EXPECT_FALSE(a.adjacent(0, 9));
  EXPECT_ANY_THROW(Architecture::from_json_string(R"({"n": 2, "edges": [[0]]})"));
  EXPECT_ANY_THROW(Architecture::from_json_string(R"({"n": 2, "edges": [[0, 5]]})"));
}

TEST(check_legal, reports_each_offending_gate) {
  Circuit c(4);
  c.add(Gate::cx(0, 1));
  c.add(Gate::cphase(0, 2, phase_pi()));
  c.add(Gate::h(3));
  c.add(Gate::swap(1, 3));
  const auto v = check_legal(c, Architecture::linear_chain());
  ASSERT_EQ(v.size(), 2u);
  EXPECT_EQ(v[0].gate_index, 1u);
  EXPECT_EQ(v[0].a, 0);
  EXPECT_EQ(v[0].b, 2);
  EXPECT_EQ(v[1].gate_index, 3u);
  EXPECT_TRUE(check_legal(c, Architecture::fully_connected()).empty());
}

TEST(build_qft_lnn, legal_and_equivalent_modulo_permutation) {
  for (int n = 2; n <= 7; ++n) {
    const Circuit c = build_qft_lnn(n);
    EXPECT_TRUE(check_legal(c, Architecture::linear_chain()).empty());
    EXPECT_EQ(c.output_permutation, swap_permutation(c));
    const oracle::Matrix want =
        oracle::relabel_rows(oracle::unitary(build_qft(n)), c.output_permutation);
    EXPECT_LT(oracle::phase_error(oracle::unitary(c), want), 1e-9) << "n=" << n;
  }
}

TEST(build_qft_lnn, reversal_network_shape) {
  for (int n = 2; n <= 12; ++n) {
    const Circuit c = build_qft_lnn(n);
    std::vector<int> reversed(n);
    for (int q = 0; q < n; ++q) reversed[q] = n - 1 - q;
    EXPECT_EQ(c.output_permutation, reversed);
    EXPECT_EQ(count_kind(c, GateKind::Swap), static_cast<std::size_t>(n * (n - 1) / 2));
    EXPECT_EQ(count_kind(c, GateKind::CPhase), static_cast<std::size_t>(n * (n - 1) / 2));
    EXPECT_EQ(schedule_asap(c, Architecture::linear_chain()).depth, 4 * n - 4);
  }
}

TEST(build_qft_lnn, cutoff_keeps_swaps) {
  const Circuit c = build_qft_lnn(7, {.cutoff = 3});
  EXPECT_EQ(count_kind(c, GateKind::Swap), 21u);
  EXPECT_EQ(count_kind(c, GateKind::CPhase), 6u + 5u);
  const oracle::Matrix want =
      oracle::relabel_rows(oracle::unitary(build_qft(7, {.cutoff = 3})), c.output_permutation);
  EXPECT_LT(oracle::phase_error(oracle::unitary(c), want), 1e-9);
}

TEST(build_aqft_lnn_star, matches_cutoff_three) {
  for (int n = 6; n <= 8; ++n) {
    const Circuit c = build_aqft_lnn_star(n);
    EXPECT_TRUE(check_legal(c, Architecture::linear_chain()).empty());
    EXPECT_EQ(count_kind(c, GateKind::Swap), static_cast<std::size_t>(2 * (n - 2)));
    EXPECT_LT(oracle::phase_error(oracle::unitary(c),
                                  oracle::unitary(build_qft(n, {.cutoff = 3}))),
              1e-9);
  }
  EXPECT_THROW(build_aqft_lnn_star(5), std::invalid_argument);
  EXPECT_THROW(build_aqft_lnn_star(12), std::invalid_argument);
}

TEST(route_mcx_lnn, legal_and_exact) {
  for (int n = 2; n <= 7; ++n) {
    const Circuit c = route_mcx_lnn(n);
    EXPECT_EQ(c.label, "mcx-lnn");
    EXPECT_TRUE(check_legal(c, Architecture::linear_chain()).empty());
    EXPECT_LT(oracle::phase_error(oracle::unitary(c), oracle::permutation(n, oracle::mcx_map)),
              1e-9)
        << "n=" << n;
  }
  EXPECT_EQ(build_mcx(5, {.arch = ArchHint::LNN}).gates, route_mcx_lnn(5).gates);
}

TEST(route_mcx_lnn, depth) {
  for (int n = 3; n <= 10; ++n) {
    EXPECT_EQ(schedule_asap(route_mcx_lnn(n), Architecture::linear_chain()).depth, 16 * n - 22);
  }
}
