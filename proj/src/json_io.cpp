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

#include "mcxqft/json_io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace mcxqft {

using nlohmann::json;

json phase_to_json(const PhaseExponent& p) {
  return json{{"k", p.k()}, {"m", p.m()}};
}

PhaseExponent phase_from_json(const json& j) {
  return PhaseExponent::normalize(j.at("k").get<int64_t>(), j.at("m").get<int>());
}

json circuit_to_json(const Circuit& c) {
  json gates = json::array();
  for (const Gate& g : c.gates) {
    json jg;
    jg["kind"] = std::string(kind_name(g.kind));
    jg["qubits"] = g.arity() == 2 ? json::array({g.q[0], g.q[1]})
                                  : json::array({g.q[0]});
    if (kind_has_phase(g.kind)) jg["phase"] = phase_to_json(g.phase);
    gates.push_back(std::move(jg));
  }
  json j;
  j["n_qubits"] = c.n_qubits;
  j["global_phase"] = phase_to_json(c.global_phase);
  j["ancillas"] = c.ancillas;
  j["gates"] = std::move(gates);
  if (!c.label.empty()) j["label"] = c.label;
  if (!c.barriers.empty()) j["barriers"] = c.barriers;
  if (!c.output_permutation.empty()) {
    j["output_permutation"] = c.output_permutation;
  }
  return j;
}

Circuit circuit_from_json(const json& j) {
  Circuit c(j.at("n_qubits").get<int>());
  if (j.contains("global_phase")) c.global_phase = phase_from_json(j["global_phase"]);
  if (j.contains("ancillas")) c.ancillas = j["ancillas"].get<std::vector<int>>();
  if (j.contains("label")) c.label = j["label"].get<std::string>();
  if (j.contains("barriers")) {
    c.barriers = j["barriers"].get<std::vector<std::size_t>>();
  }
  if (j.contains("output_permutation")) {
    c.output_permutation = j["output_permutation"].get<std::vector<int>>();
  }
  for (const json& jg : j.at("gates")) {
    Gate g;
    g.kind = kind_from_name(jg.at("kind").get<std::string>());
    const auto qs = jg.at("qubits").get<std::vector<int>>();
    if (static_cast<int>(qs.size()) != g.arity()) {
      throw std::invalid_argument("gate has wrong operand count");
    }
    g.q[0] = qs[0];
    g.q[1] = g.arity() == 2 ? qs[1] : -1;
    if (kind_has_phase(g.kind)) g.phase = phase_from_json(jg.at("phase"));
    c.gates.push_back(g);
  }
  c.validate();
  return c;
}

std::string circuit_to_string(const Circuit& c) {
  return circuit_to_json(c).dump(2) + "\n";
}

Circuit circuit_from_string(const std::string& text) {
  return circuit_from_json(json::parse(text));
}

Circuit load_circuit(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return circuit_from_string(ss.str());
}

void save_circuit(const std::string& path, const Circuit& c) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << circuit_to_string(c);
}

}  // namespace mcxqft
