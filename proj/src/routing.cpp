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

#include "mcxqft/routing.hpp"

#include <stdexcept>
#include <utility>

#include "json.hpp"

namespace mcxqft {

Architecture Architecture::fully_connected() { return Architecture(); }

Architecture Architecture::linear_chain() {
  Architecture a;
  a.kind_ = ArchKind::LinearChain;
  return a;
}

Architecture Architecture::custom(int n,
                                  const std::vector<std::pair<int, int>>& edges) {
  if (n < 1) throw std::invalid_argument("custom architecture needs n >= 1");
  Architecture a;
  a.kind_ = ArchKind::Custom;
  a.n_ = n;
  a.adj_.assign(n, std::vector<bool>(n, false));
  for (auto [i, j] : edges) {
    if (i < 0 || j < 0 || i >= n || j >= n) {
      throw std::invalid_argument("edge endpoint out of range");
    }
    if (i == j) throw std::invalid_argument("self-loop in adjacency");
    a.adj_[i][j] = a.adj_[j][i] = true;
  }
  return a;
}

Architecture Architecture::from_json_string(const std::string& text) {
  const nlohmann::json j = nlohmann::json::parse(text);
  std::vector<std::pair<int, int>> edges;
  for (const auto& e : j.at("edges")) {
    if (!e.is_array() || e.size() != 2) {
      throw std::invalid_argument("edge must be a pair");
    }
    edges.emplace_back(e[0].get<int>(), e[1].get<int>());
  }
  return custom(j.at("n").get<int>(), edges);
}

Architecture Architecture::from_hint(ArchHint hint) {
  return hint == ArchHint::LNN ? linear_chain() : fully_connected();
}

bool Architecture::adjacent(int a, int b) const {
  if (a == b) return false;
  switch (kind_) {
    case ArchKind::FullyConnected:
      return true;
    case ArchKind::LinearChain:
      return a - b == 1 || b - a == 1;
    case ArchKind::Custom:
      return a >= 0 && b >= 0 && a < n_ && b < n_ && adj_[a][b];
  }
  return false;
}

std::string Architecture::name() const {
  switch (kind_) {
    case ArchKind::FullyConnected:
      return "fc";
    case ArchKind::LinearChain:
      return "lnn";
    case ArchKind::Custom:
      return "custom";
  }
  return "?";
}

std::vector<Violation> check_legal(const Circuit& c, const Architecture& arch) {
  std::vector<Violation> out;
  for (std::size_t i = 0; i < c.gates.size(); ++i) {
    const Gate& g = c.gates[i];
    if (g.arity() == 2 && !arch.adjacent(g.q[0], g.q[1])) {
      out.push_back({i, g.q[0], g.q[1]});
    }
  }
  return out;
}

Circuit build_qft_lnn(int n, const BuildOptions& opts) {
  if (n < 2) throw std::invalid_argument("build_qft_lnn: n must be at least 2");
  if (opts.cutoff && *opts.cutoff < 2) {
    throw std::invalid_argument("cutoff must be at least 2");
  }
  Circuit c(n, "qft-lnn");
  std::vector<int> pos(n);
  for (int q = 0; q < n; ++q) pos[q] = q;
  std::vector<std::pair<int, int>> prev;
  // Slot s holds the pairs (j, t) with j + t = 2n - 1 - s; j == t is an H.
  for (int s = 1; s <= 2 * n - 1; ++s) {
    for (auto [j, t] : prev) {
      c.add(Gate::swap(std::min(pos[j], pos[t]), std::max(pos[j], pos[t])));
      std::swap(pos[j], pos[t]);
    }
    prev.clear();
    const int sum = 2 * n - 1 - s;
    for (int j = 0; j < n; ++j) {
      const int t = sum - j;
      if (t < j || t >= n) continue;
      if (j == t) {
        c.add(Gate::h(pos[t]));
        continue;
      }
      const int m = t - j + 1;
      if (!opts.cutoff || m <= *opts.cutoff) {
        c.add(Gate::cphase(pos[j], pos[t], PhaseExponent::rotation(m)));
      }
      prev.emplace_back(j, t);
    }
  }
  c.output_permutation = pos;
  return c;
}

Circuit build_aqft_lnn_star(int n) {
  if (n < 6 || n >= 12) {
    throw std::invalid_argument("build_aqft_lnn_star: requires 6 <= n < 12");
  }
  Circuit c(n, "aqft-lnn-star");
  for (int t = n - 1; t >= 0; --t) {
    c.add(Gate::h(t));
    if (t >= 1) c.add(Gate::cphase(t - 1, t, PhaseExponent::rotation(2)));
    if (t >= 2) {
      c.add(Gate::swap(t - 2, t - 1));
      c.add(Gate::cphase(t - 1, t, PhaseExponent::rotation(3)));
      c.add(Gate::swap(t - 2, t - 1));
    }
  }
  return c;
}

Circuit route_mcx_lnn(int n, const BuildOptions& opts) {
  if (n < 2) throw std::invalid_argument("route_mcx_lnn: n must be at least 2");
  BuildOptions lnn = opts;
  lnn.arch = ArchHint::LNN;
  Circuit c = build_increment(n, +1, lnn);
  c.add_barrier();
  std::vector<int> lower(n - 1);
  for (int q = 0; q < n - 1; ++q) lower[q] = q;
  c = circuit_concat(c, embed(build_increment(n - 1, -1, lnn), n, lower));
  c.output_permutation.clear();
  c.label = "mcx-lnn";
  return c;
}

}  // namespace mcxqft
