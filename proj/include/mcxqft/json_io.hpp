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

#include <string>

#include "json.hpp"
#include "mcxqft/circuit.hpp"

namespace mcxqft {

nlohmann::json phase_to_json(const PhaseExponent& p);
PhaseExponent phase_from_json(const nlohmann::json& j);

// Schema: n_qubits, global_phase {k, m}, ancillas, gates [{kind, qubits,
// phase?}], plus optional label, barriers, output_permutation.
nlohmann::json circuit_to_json(const Circuit& c);
Circuit circuit_from_json(const nlohmann::json& j);

std::string circuit_to_string(const Circuit& c);
Circuit circuit_from_string(const std::string& text);

Circuit load_circuit(const std::string& path);
void save_circuit(const std::string& path, const Circuit& c);

}  // namespace mcxqft
