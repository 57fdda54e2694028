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
#include <string>
#include <string_view>
#include <vector>

#include "mcxqft/phase.hpp"

namespace mcxqft {

enum class GateKind { H, X, SX, Rz, Phase, CPhase, CX, Swap };

// Lower-case name used in JSON and reports ("h", "cphase", ...).
std::string_view kind_name(GateKind kind);
GateKind kind_from_name(std::string_view name);
int kind_arity(GateKind kind);
bool kind_has_phase(GateKind kind);
// Diagonal in the computational basis.
bool kind_is_diagonal(GateKind kind);

// Qubit 0 is least significant. For CX, q[0] is the control.
struct Gate {
  GateKind kind = GateKind::H;
  std::array<int, 2> q = {0, -1};
  PhaseExponent phase;

  int arity() const { return kind_arity(kind); }
  bool acts_on(int qubit) const {
    return q[0] == qubit || (arity() == 2 && q[1] == qubit);
  }
  // The operand other than `qubit` of a two-qubit gate.
  int other(int qubit) const { return q[0] == qubit ? q[1] : q[0]; }
  bool operator==(const Gate& o) const;

  static Gate h(int t) { return {GateKind::H, {t, -1}, {}}; }
  static Gate x(int t) { return {GateKind::X, {t, -1}, {}}; }
  static Gate sx(int t) { return {GateKind::SX, {t, -1}, {}}; }
  static Gate rz(int t, PhaseExponent p) { return {GateKind::Rz, {t, -1}, p}; }
  static Gate phase_gate(int t, PhaseExponent p) {
    return {GateKind::Phase, {t, -1}, p};
  }
  static Gate cphase(int c, int t, PhaseExponent p) {
    return {GateKind::CPhase, {c, t}, p};
  }
  static Gate cx(int c, int t) { return {GateKind::CX, {c, t}, {}}; }
  static Gate swap(int a, int b) { return {GateKind::Swap, {a, b}, {}}; }
};

std::string to_string(const Gate& g);

// Inverse gate. Rz(phi) maps to Rz(2*pi - phi), which is the adjoint up to a
// sign because Rz has period 4*pi; gate_inverse_phase reports that sign.
// SX throws std::domain_error (its inverse is X*SX).
Gate gate_inverse(const Gate& g);
PhaseExponent gate_inverse_phase(const Gate& g);

struct Circuit {
  int n_qubits = 1;
  std::vector<Gate> gates;
  PhaseExponent global_phase;
  std::vector<int> ancillas;
  std::string label;
  // Scheduling fences: gate positions p such that no gate at index >= p may
  // start before every gate at index < p has finished. Sorted, unique.
  std::vector<std::size_t> barriers;
  // Wire holding logical qubit i at the output. Empty means identity.
  std::vector<int> output_permutation;

  Circuit() = default;
  explicit Circuit(int n, std::string lbl = {}) : n_qubits(n), label(std::move(lbl)) {}

  std::size_t size() const { return gates.size(); }
  void add(const Gate& g);
  void add_barrier();
  // Throws std::invalid_argument on malformed content.
  void validate() const;
  std::vector<int> permutation_or_identity() const;
};

Circuit circuit_inverse(const Circuit& c);
Circuit circuit_concat(const Circuit& a, const Circuit& b);

// Copy of `c` with qubit i renamed to map[i] in a circuit of `n_total` qubits.
Circuit embed(const Circuit& c, int n_total, const std::vector<int>& map);

// Net wire permutation produced by the SWAP gates of `c`: entry i is the wire
// that carries the input of wire i at the end.
std::vector<int> swap_permutation(const Circuit& c);

// Gate counts indexed by GateKind.
std::array<std::size_t, 8> count_kinds(const Circuit& c);
std::size_t count_kind(const Circuit& c, GateKind kind);

}  // namespace mcxqft
