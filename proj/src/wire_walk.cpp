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

#include "wire_walk.hpp"

#include <algorithm>

namespace mcxqft::detail {

LogicalView virtualize(const Circuit& c) {
  LogicalView v;
  std::vector<int> at(c.n_qubits);  // at[wire] = logical qubit
  for (int w = 0; w < c.n_qubits; ++w) at[w] = w;
  v.gates.reserve(c.gates.size());
  v.is_swap.reserve(c.gates.size());
  for (const Gate& g : c.gates) {
    if (g.kind == GateKind::Swap) {
      std::swap(at[g.q[0]], at[g.q[1]]);
      v.gates.emplace_back(std::nullopt);
      v.is_swap.push_back(true);
      continue;
    }
    Gate l = g;
    l.q[0] = at[g.q[0]];
    if (g.arity() == 2) l.q[1] = at[g.q[1]];
    v.gates.emplace_back(l);
    v.is_swap.push_back(false);
  }
  return v;
}

Circuit materialize(const Circuit& src, const LogicalView& v) {
  Circuit out(src.n_qubits, src.label);
  out.ancillas = src.ancillas;
  out.output_permutation = src.output_permutation;
  out.global_phase = src.global_phase + v.extra_phase;
  std::vector<int> pos(src.n_qubits);  // pos[logical] = wire
  for (int q = 0; q < src.n_qubits; ++q) pos[q] = q;
  std::vector<std::size_t> kept_before(src.gates.size() + 1, 0);
  for (std::size_t i = 0; i < src.gates.size(); ++i) {
    kept_before[i] = out.gates.size();
    if (v.is_swap[i]) {
      const Gate& s = src.gates[i];
      out.gates.push_back(s);
      // The wires swap contents, so the logical qubits on them trade places.
      for (int q = 0; q < src.n_qubits; ++q) {
        if (pos[q] == s.q[0]) {
          pos[q] = s.q[1];
        } else if (pos[q] == s.q[1]) {
          pos[q] = s.q[0];
        }
      }
      continue;
    }
    if (!v.gates[i]) continue;
    Gate g = *v.gates[i];
    g.q[0] = pos[g.q[0]];
    if (g.arity() == 2) g.q[1] = pos[g.q[1]];
    out.gates.push_back(g);
  }
  kept_before[src.gates.size()] = out.gates.size();
  for (std::size_t p : src.barriers) {
    const bool spanned = std::any_of(v.spans.begin(), v.spans.end(), [&](auto s) {
      return s.first < p && p <= s.second;
    });
    if (spanned || p > src.gates.size()) continue;
    const std::size_t np = kept_before[p];
    if (np == 0 || np >= out.gates.size()) continue;
    if (out.barriers.empty() || out.barriers.back() != np) out.barriers.push_back(np);
  }
  return out;
}

WireLinks::WireLinks(const std::vector<std::optional<Gate>>& gates, int n_qubits)
    : qubits_(gates.size(), {-1, -1}),
      next_(gates.size(), {-1, -1}),
      prev_(gates.size(), {-1, -1}) {
  std::vector<long> last(n_qubits, -1);
  for (std::size_t i = 0; i < gates.size(); ++i) {
    if (!gates[i]) continue;
    const Gate& g = *gates[i];
    for (int k = 0; k < g.arity(); ++k) {
      const int q = g.q[k];
      qubits_[i][k] = q;
      if (last[q] >= 0) {
        next_[last[q]][slot(last[q], q)] = static_cast<long>(i);
        prev_[i][k] = last[q];
      }
      last[q] = static_cast<long>(i);
    }
  }
}

int WireLinks::slot(std::size_t i, int q) const {
  return qubits_[i][0] == q ? 0 : 1;
}

long WireLinks::next(std::size_t i, int q) const { return next_[i][slot(i, q)]; }

long WireLinks::prev(std::size_t i, int q) const { return prev_[i][slot(i, q)]; }

void WireLinks::remove(std::size_t i) {
  for (int k = 0; k < 2; ++k) {
    const int q = qubits_[i][k];
    if (q < 0) continue;
    const long p = prev_[i][k], n = next_[i][k];
    if (p >= 0) next_[p][slot(p, q)] = n;
    if (n >= 0) prev_[n][slot(n, q)] = p;
    prev_[i][k] = next_[i][k] = -1;
    qubits_[i][k] = -1;
  }
}

std::vector<std::size_t> remap_barriers(const std::vector<std::size_t>& barriers,
                                        const std::vector<std::size_t>& expand) {
  std::vector<std::size_t> offset(expand.size() + 1, 0);
  for (std::size_t i = 0; i < expand.size(); ++i) offset[i + 1] = offset[i] + expand[i];
  std::vector<std::size_t> out;
  for (std::size_t p : barriers) {
    if (p > expand.size()) continue;
    const std::size_t np = offset[p];
    if (np == 0 || np >= offset.back()) continue;
    if (out.empty() || out.back() != np) out.push_back(np);
  }
  return out;
}

bool phase_sum_wraps(const PhaseExponent& a, const PhaseExponent& b) {
  const int m = std::max(a.m(), b.m());
  const int64_t ka = a.k() << (m - a.m());
  const int64_t kb = b.k() << (m - b.m());
  return ka + kb >= (int64_t{1} << m);
}

}  // namespace mcxqft::detail
