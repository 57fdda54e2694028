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

#include "mcxqft/qasm.hpp"

#include <sstream>

namespace mcxqft {

namespace {

std::string qubit(int q) { return "q[" + std::to_string(q) + "]"; }

std::string statement(const Gate& g) {
  std::string name;
  switch (g.kind) {
    case GateKind::H: name = "h"; break;
    case GateKind::X: name = "x"; break;
    case GateKind::SX: name = "sx"; break;
    case GateKind::Rz: name = "rz"; break;
    case GateKind::Phase: name = "p"; break;
    case GateKind::CPhase: name = "cp"; break;
    case GateKind::CX: name = "cx"; break;
    case GateKind::Swap: name = "swap"; break;
  }
  if (kind_has_phase(g.kind)) name += "(" + g.phase.pi_string() + ")";
  std::string s = name + " " + qubit(g.q[0]);
  if (g.arity() == 2) s += ", " + qubit(g.q[1]);
  return s + ";";
}

}  // namespace

std::string export_qasm(const Circuit& c) {
  std::ostringstream out;
  out << "OPENQASM 2.0;\n";
  out << "include \"qelib1.inc\";\n";
  out << "// global phase: " << c.global_phase.pi_string() << "\n";
  out << "qreg q[" << c.n_qubits << "];\n";
  std::size_t next_barrier = 0;
  for (std::size_t i = 0; i < c.gates.size(); ++i) {
    while (next_barrier < c.barriers.size() && c.barriers[next_barrier] == i) {
      out << "barrier q;\n";
      ++next_barrier;
    }
    out << statement(c.gates[i]) << "\n";
  }
  return out.str();
}

}  // namespace mcxqft
