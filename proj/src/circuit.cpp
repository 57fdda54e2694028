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

#include "mcxqft/circuit.hpp"

#include <algorithm>
#include <stdexcept>

namespace mcxqft {

namespace {

constexpr std::array<std::string_view, 8> kNames = {
    "h", "x", "sx", "rz", "phase", "cphase", "cx", "swap"};

}  // namespace

std::string_view kind_name(GateKind kind) {
  return kNames[static_cast<int>(kind)];
}

GateKind kind_from_name(std::string_view name) {
  for (std::size_t i = 0; i < kNames.size(); ++i) {
    if (kNames[i] == name) return static_cast<GateKind>(i);
  }
  throw std::invalid_argument("unknown gate kind: " + std::string(name));
}

int kind_arity(GateKind kind) {
  switch (kind) {
    case GateKind::CPhase:
    case GateKind::CX:
    case GateKind::Swap:
      return 2;
    default:
      return 1;
  }
}

bool kind_has_phase(GateKind kind) {
  return kind == GateKind::Rz || kind == GateKind::Phase ||
         kind == GateKind::CPhase;
}

bool kind_is_diagonal(GateKind kind) { return kind_has_phase(kind); }

bool Gate::operator==(const Gate& o) const {
  if (kind != o.kind || q[0] != o.q[0]) return false;
  if (arity() == 2 && q[1] != o.q[1]) return false;
  return !kind_has_phase(kind) || phase == o.phase;
}

std::string to_string(const Gate& g) {
  std::string s(kind_name(g.kind));
  if (kind_has_phase(g.kind)) s += "(" + g.phase.pi_string() + ")";
  s += " " + std::to_string(g.q[0]);
  if (g.arity() == 2) s += "," + std::to_string(g.q[1]);
  return s;
}

Gate gate_inverse(const Gate& g) {
  if (g.kind == GateKind::SX) {
    // SX^dagger = X * SX has no single-gate form in this IR.
    throw std::domain_error("gate_inverse: SX has no single-gate inverse");
  }
  Gate r = g;
  if (kind_has_phase(g.kind)) r.phase = -g.phase;
  return r;
}

PhaseExponent gate_inverse_phase(const Gate& g) {
  if (g.kind == GateKind::Rz && !g.phase.is_zero()) return phase_pi();
  return {};
}

void Circuit::add(const Gate& g) {
  for (int k = 0; k < g.arity(); ++k) {
    if (g.q[k] < 0 || g.q[k] >= n_qubits) {
      throw std::invalid_argument("add: operand out of range in " + to_string(g));
    }
  }
  if (g.arity() == 2 && g.q[0] == g.q[1]) {
    throw std::invalid_argument("add: repeated operand in " + to_string(g));
  }
  gates.push_back(g);
}

void Circuit::add_barrier() {
  if (gates.empty()) return;
  if (barriers.empty() || barriers.back() != gates.size()) {
    barriers.push_back(gates.size());
  }
}

void Circuit::validate() const {
  if (n_qubits < 1) throw std::invalid_argument("circuit needs >= 1 qubit");
  for (std::size_t i = 0; i < gates.size(); ++i) {
    const Gate& g = gates[i];
    for (int k = 0; k < g.arity(); ++k) {
      if (g.q[k] < 0 || g.q[k] >= n_qubits) {
        throw std::invalid_argument("gate " + std::to_string(i) +
                                    " operand out of range");
      }
    }
    if (g.arity() == 2 && g.q[0] == g.q[1]) {
      throw std::invalid_argument("gate " + std::to_string(i) +
                                  " has repeated operand");
    }
  }
  for (int a : ancillas) {
    if (a < 0 || a >= n_qubits) throw std::invalid_argument("bad ancilla index");
  }
  for (std::size_t i = 0; i < barriers.size(); ++i) {
    if (barriers[i] > gates.size() || (i > 0 && barriers[i] <= barriers[i - 1])) {
      throw std::invalid_argument("barriers must be sorted positions");
    }
  }
  if (!output_permutation.empty()) {
    if (static_cast<int>(output_permutation.size()) != n_qubits) {
      throw std::invalid_argument("output permutation has wrong length");
    }
    std::vector<int> seen(n_qubits, 0);
    for (int w : output_permutation) {
      if (w < 0 || w >= n_qubits || seen[w]++) {
        throw std::invalid_argument("output permutation is not a permutation");
      }
    }
  }
}

std::vector<int> Circuit::permutation_or_identity() const {
  if (!output_permutation.empty()) return output_permutation;
  std::vector<int> p(n_qubits);
  for (int i = 0; i < n_qubits; ++i) p[i] = i;
  return p;
}

Circuit circuit_inverse(const Circuit& c) {
  Circuit r(c.n_qubits, c.label);
  r.ancillas = c.ancillas;
  r.global_phase = -c.global_phase;
  r.gates.reserve(c.gates.size());
  for (auto it = c.gates.rbegin(); it != c.gates.rend(); ++it) {
    r.gates.push_back(gate_inverse(*it));
    r.global_phase += gate_inverse_phase(*it);
  }
  for (auto it = c.barriers.rbegin(); it != c.barriers.rend(); ++it) {
    r.barriers.push_back(c.gates.size() - *it);
  }
  if (!c.output_permutation.empty()) {
    r.output_permutation.assign(c.n_qubits, 0);
    for (int i = 0; i < c.n_qubits; ++i) {
      r.output_permutation[c.output_permutation[i]] = i;
    }
  }
  return r;
}

Circuit circuit_concat(const Circuit& a, const Circuit& b) {
  if (a.n_qubits != b.n_qubits) {
    throw std::invalid_argument("circuit_concat: qubit-count mismatch");
  }
  Circuit r = a;
  const std::size_t off = a.gates.size();
  r.gates.insert(r.gates.end(), b.gates.begin(), b.gates.end());
  r.global_phase += b.global_phase;
  for (std::size_t p : b.barriers) {
    if (r.barriers.empty() || r.barriers.back() != p + off) {
      r.barriers.push_back(p + off);
    }
  }
  for (int q : b.ancillas) {
    if (std::find(r.ancillas.begin(), r.ancillas.end(), q) == r.ancillas.end()) {
      r.ancillas.push_back(q);
    }
  }
  std::sort(r.ancillas.begin(), r.ancillas.end());
  if (!a.output_permutation.empty() || !b.output_permutation.empty()) {
    const std::vector<int> pa = a.permutation_or_identity();
    const std::vector<int> pb = b.permutation_or_identity();
    r.output_permutation.assign(a.n_qubits, 0);
    for (int i = 0; i < a.n_qubits; ++i) r.output_permutation[i] = pb[pa[i]];
  }
  return r;
}

Circuit embed(const Circuit& c, int n_total, const std::vector<int>& map) {
  if (static_cast<int>(map.size()) != c.n_qubits) {
    throw std::invalid_argument("embed: map size mismatch");
  }
  Circuit r(n_total, c.label);
  r.global_phase = c.global_phase;
  r.barriers = c.barriers;
  r.gates.reserve(c.gates.size());
  for (Gate g : c.gates) {
    g.q[0] = map[g.q[0]];
    if (g.arity() == 2) g.q[1] = map[g.q[1]];
    r.gates.push_back(g);
  }
  for (int a : c.ancillas) r.ancillas.push_back(map[a]);
  std::sort(r.ancillas.begin(), r.ancillas.end());
  if (!c.output_permutation.empty()) {
    r.output_permutation.resize(n_total);
    for (int i = 0; i < n_total; ++i) r.output_permutation[i] = i;
    for (int i = 0; i < c.n_qubits; ++i) {
      r.output_permutation[map[i]] = map[c.output_permutation[i]];
    }
  }
  r.validate();
  return r;
}

std::vector<int> swap_permutation(const Circuit& c) {
  // at[w] = input wire whose state currently sits on wire w.
  std::vector<int> at(c.n_qubits);
  for (int i = 0; i < c.n_qubits; ++i) at[i] = i;
  for (const Gate& g : c.gates) {
    if (g.kind == GateKind::Swap) std::swap(at[g.q[0]], at[g.q[1]]);
  }
  std::vector<int> where(c.n_qubits);
  for (int w = 0; w < c.n_qubits; ++w) where[at[w]] = w;
  return where;
}

std::array<std::size_t, 8> count_kinds(const Circuit& c) {
  std::array<std::size_t, 8> n{};
  for (const Gate& g : c.gates) ++n[static_cast<int>(g.kind)];
  return n;
}

std::size_t count_kind(const Circuit& c, GateKind kind) {
  return count_kinds(c)[static_cast<int>(kind)];
}

}  // namespace mcxqft
