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
#include <optional>
#include <string>
#include <vector>

#include "mcxqft/circuit.hpp"
#include "mcxqft/routing.hpp"

namespace mcxqft {

struct PassReport {
  std::string name;
  std::size_t gates_removed = 0;
  std::size_t gates_added = 0;
  long long depth_before = 0;
  long long depth_after = 0;
};

struct Decomposition {
  std::vector<Gate> gates;
  PhaseExponent global_phase;
};

// Native gates {CX, Rz, SX, X}. A CPhase whose angle is at most pi uses
// [Rz(h) c, CX, Rz(-h) t, CX, Rz(h) t] with h half the signed angle; larger
// angles use the mirror image with the control Rz last.
Decomposition decompose_gate_ngs(const Gate& g);

// H.Phase(pi).H -> X, CPhase/Phase/CPhase sandwiches around a control X,
// H.CZ.H -> CX, and X.X -> nothing. SWAPs are treated as relabelings, and
// fences that a rewrite reaches across are dropped.
Circuit pass_merge_boundary_phases(const Circuit& c);

// Linear chains only. A qubit with no two-qubit gate over a stretch of the
// circuit is moved to an end of the chain for that stretch instead of being
// swapped around; applied greedily while it saves SWAPs.
Circuit pass_park_idle_qubits(const Circuit& c);

// Drops CPhase gates whose rotation index exceeds `cutoff`.
Circuit pass_truncate(const Circuit& c, int cutoff);

// Decomposes every gate except SWAP (unless decompose_swaps is set).
Circuit pass_decompose_ngs(const Circuit& c, bool decompose_swaps = true);

// Merges consecutive Rz (or Phase) gates on a wire; zero results vanish.
Circuit pass_cancel_rz(const Circuit& c);

// SWAP -> 3 CX, oriented so an outer CX meets a neighbouring CX on the pair.
Circuit pass_decompose_swaps(const Circuit& c);

// Removes adjacent identical CX pairs.
Circuit pass_cancel_cx(const Circuit& c);

struct TranspileOptions {
  std::optional<int> cutoff;
  bool park = true;
};

struct TranspileResult {
  Circuit ngs;
  // Merged (parked, truncated) circuit before decomposition.
  Circuit abstract;
  std::vector<PassReport> reports;
  // Duration-table depth of `abstract`.
  long long effective_depth = 0;
  // Unit-duration depth of `ngs`.
  long long raw_depth = 0;
};

// Throws std::invalid_argument if c is illegal under arch.
TranspileResult transpile(const Circuit& c, const Architecture& arch,
                          const TranspileOptions& opts = {});

bool is_ngs(const Circuit& c);

std::string reports_to_json(const std::vector<PassReport>& reports);

}  // namespace mcxqft
