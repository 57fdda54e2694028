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

#include <optional>
#include <vector>

#include "mcxqft/circuit.hpp"

namespace mcxqft {

enum class ArchHint { FC, LNN };
enum class Level { Abstract, Ngs };

struct BuildOptions {
  // Largest rotation index m kept; nullopt keeps every rotation.
  std::optional<int> cutoff;
  ArchHint arch = ArchHint::FC;
};

// round(log2 n), at least 2.
int default_cutoff(int n);

// H on wire t followed by the rotations it receives from lower wires,
// for t = n-1 down to 0. Output order is not bit-reversed.
Circuit build_qft(int n, const BuildOptions& opts = {});

// Phase(sign * 2pi / 2^(q+1)) on wire q.
Circuit build_phase_block(int n, int sign, const BuildOptions& opts = {});

// QFT, phase block, inverse QFT: |a> -> |a + sign mod 2^n>.
Circuit build_increment(int n, int sign, const BuildOptions& opts = {});

// +1 block on all n wires, a fence, then the -1 block on wires 0..n-2.
// Target is wire n-1.
Circuit build_mcx(int n, const BuildOptions& opts = {});

enum class PlanObjective { Depth, Gates };

struct ClusterPlan {
  int n_c = 0;
  int r = 0;
  std::vector<int> cluster_sizes;
  int n_r = 0;

  int max_cluster() const;
  // Throws std::invalid_argument when the invariants do not hold.
  void validate() const;
};

ClusterPlan plan_ancilla(int n_c, int r, PlanObjective objective,
                         ArchHint arch = ArchHint::LNN,
                         Level level = Level::Ngs);

int optimal_ancillas(int n_c);

// Wires: each cluster's controls followed by its ancilla, then the remainder
// controls, then the target (highest wire).
struct AncillaLayout {
  std::vector<std::vector<int>> cluster_controls;
  std::vector<int> ancillas;
  std::vector<int> remainder;
  int target = 0;
};
AncillaLayout ancilla_layout(const ClusterPlan& plan);

// ANC+1, fence, central MCX over ancillas, remainder and target, fence, ANC-1.
Circuit build_mcx_ancilla(int n_c, const ClusterPlan& plan,
                          const BuildOptions& opts = {});

}  // namespace mcxqft
