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

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "mcxqft/builder.hpp"
#include "mcxqft/circuit.hpp"
#include "mcxqft/routing.hpp"

namespace mcxqft {

// Closed-form costs of the blocks an ancilla MCX is composed of. The MCX
// formulas split as MCX(n) = inc(n) + dec(n - 1) with equal per-size cost.
struct BlockModel {
  ArchHint arch = ArchHint::FC;
  Level level = Level::Abstract;

  long long inc_depth(int s) const;
  // ANC+1 and ANC-1 of one cluster of s wires (controls plus ancilla).
  long long pair_gates(int s) const;
  long long mcx_depth(int n) const;
  long long mcx_gates(int n) const;
};

struct AncillaCost {
  long long depth = 0;
  long long gates = 0;
};

// depth = 2 inc_depth(largest cluster + 1) + mcx_depth(r + n_r + 1).
AncillaCost ancilla_cost(const ClusterPlan& plan, const BlockModel& model);

struct Prediction {
  std::optional<long long> depth;
  std::optional<long long> gates;
  std::optional<long long> merged_depth;
  std::map<std::string, long long> kinds;
  std::string note;
};

Prediction predict(int n, ArchHint arch, bool approx, Level level);

struct Measurement {
  long long depth = 0;
  long long gates = 0;
  std::map<std::string, long long> kinds;
  std::optional<long long> merged_depth;
  std::optional<long long> raw_depth;
};

// Abstract: counts and unit ASAP depth of c. Ngs: transpiles c first and
// reports the duration-table depth of the merged circuit.
Measurement measure(const Circuit& c, const Architecture& arch, Level level,
                    std::optional<int> cutoff = std::nullopt);

struct ComplexityReport {
  int n = 0;
  std::string architecture;
  std::optional<int> cutoff;
  Level level = Level::Abstract;
  Prediction predicted;
  Measurement measured;
  std::optional<long long> depth_delta;
  std::optional<long long> gates_delta;
  std::map<std::string, long long> kind_deltas;
};

// Builds the ancilla-free MCX on n wires (approximate: cutoff round(log2 n))
// and compares it with the closed forms.
ComplexityReport analyze_mcx(int n, ArchHint arch, bool approx, Level level);
std::string report_to_json(const ComplexityReport& r);

struct SweepRow {
  long long x = 0;
  std::string variant;
  std::optional<long long> depth_predicted;
  std::optional<long long> depth_measured;
  std::optional<long long> gates_predicted;
  std::optional<long long> gates_measured;
};

// Equal clusters of size x = 1..n_c/r, remainder to the central MCX.
std::vector<SweepRow> sweep_cluster(int n_c, int r, ArchHint arch = ArchHint::LNN,
                                    Level level = Level::Ngs);
// One row per r, cluster sizes from plan_ancilla(n_c, r, gates).
std::vector<SweepRow> sweep_ancilla(int n_c, int r_min, int r_max,
                                    ArchHint arch = ArchHint::LNN,
                                    Level level = Level::Ngs);
// Transpiled MCX for every n: fc/lnn x exact/approx.
std::vector<SweepRow> sweep_figure4(int n_min, int n_max);

std::string sweep_to_csv(const std::vector<SweepRow>& rows, const std::string& x_name);

}  // namespace mcxqft
