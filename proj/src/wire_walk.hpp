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

#include <array>
#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "mcxqft/circuit.hpp"

namespace mcxqft::detail {

// Non-SWAP gates rewritten onto logical qubits; SWAP slots hold nullopt and
// belong to no wire, so walking a wire passes straight through them.
struct LogicalView {
  std::vector<std::optional<Gate>> gates;
  std::vector<bool> is_swap;
  // (i, j) pairs combined by a rewrite; fences strictly after i and at or
  // before j are dropped when materializing.
  std::vector<std::pair<std::size_t, std::size_t>> spans;
  PhaseExponent extra_phase;
};

LogicalView virtualize(const Circuit& c);

// SWAPs of `src` stay where they were; surviving gates go back to the wires
// that hold their logical qubits at that point.
Circuit materialize(const Circuit& src, const LogicalView& v);

// Per-wire doubly linked lists over a gate vector. Slots holding nullopt are
// never linked. Replacing a gate in place is fine as long as its qubit set is
// unchanged.
class WireLinks {
 public:
  WireLinks(const std::vector<std::optional<Gate>>& gates, int n_qubits);

  // Index of the next / previous gate on qubit q, or -1.
  long next(std::size_t i, int q) const;
  long prev(std::size_t i, int q) const;
  void remove(std::size_t i);

 private:
  int slot(std::size_t i, int q) const;

  std::vector<std::array<int, 2>> qubits_;
  std::vector<std::array<long, 2>> next_;
  std::vector<std::array<long, 2>> prev_;
};

// Remaps fences after gate i was replaced by expand[i] gates.
std::vector<std::size_t> remap_barriers(const std::vector<std::size_t>& barriers,
                                        const std::vector<std::size_t>& expand);

// True iff the angles of a and b sum to 2pi or more.
bool phase_sum_wraps(const PhaseExponent& a, const PhaseExponent& b);

}  // namespace mcxqft::detail
