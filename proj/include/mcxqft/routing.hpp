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
#include <string>
#include <vector>

#include "mcxqft/builder.hpp"
#include "mcxqft/circuit.hpp"

namespace mcxqft {

enum class ArchKind { FullyConnected, LinearChain, Custom };

class Architecture {
 public:
  static Architecture fully_connected();
  static Architecture linear_chain();
  // Throws std::invalid_argument on self-loops or out-of-range edges.
  static Architecture custom(int n, const std::vector<std::pair<int, int>>& edges);
  // {"n": int, "edges": [[i, j], ...]}
  static Architecture from_json_string(const std::string& text);
  static Architecture from_hint(ArchHint hint);

  ArchKind kind() const { return kind_; }
  bool adjacent(int a, int b) const;
  std::string name() const;

 private:
  ArchKind kind_ = ArchKind::FullyConnected;
  int n_ = 0;
  std::vector<std::vector<bool>> adj_;
};

struct Violation {
  std::size_t gate_index = 0;
  int a = 0;
  int b = 0;
};

std::vector<Violation> check_legal(const Circuit& c, const Architecture& arch);

// Nearest-neighbour QFT: every rotation is followed by a SWAP of its pair, so
// the output order is reversed (recorded in output_permutation). A cutoff
// drops rotations but keeps every SWAP.
Circuit build_qft_lnn(int n, const BuildOptions& opts = {});

// Cutoff-3 QFT for 6 <= n < 12 with a swap / C-R3 / swap-back around each
// next-nearest rotation. Output order is not reversed.
Circuit build_aqft_lnn_star(int n);

// MCX from nearest-neighbour QFT blocks; the phase block and the inverse
// transform consume the reversed order, so the final order is the identity.
Circuit route_mcx_lnn(int n, const BuildOptions& opts = {});

}  // namespace mcxqft
