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

#include "mcxqft/transpiler.hpp"

#include <cstdlib>
#include <stdexcept>
#include <utility>

#include "json.hpp"
#include "mcxqft/scheduler.hpp"
#include "wire_walk.hpp"

namespace mcxqft {

namespace {

using detail::LogicalView;
using detail::WireLinks;

PhaseExponent half(const PhaseExponent& p) {
  return PhaseExponent::normalize(p.k(), p.m() + 1);
}

long long unit_depth(const Circuit& c) { return schedule_asap(c).depth; }

PassReport make_report(const std::string& name, const Circuit& before,
                       const Circuit& after, std::size_t removed, std::size_t added) {
  return {name, removed, added, unit_depth(before), unit_depth(after)};
}

// Rewrites for the merge pass, all in logical coordinates.
void merge_hzh(LogicalView& v, WireLinks& links) {
  for (std::size_t i = 0; i < v.gates.size(); ++i) {
    if (!v.gates[i] || v.gates[i]->kind != GateKind::Phase ||
        v.gates[i]->phase != phase_pi()) {
      continue;
    }
    const int q = v.gates[i]->q[0];
    const long l = links.prev(i, q), r = links.next(i, q);
    if (l < 0 || r < 0 || v.gates[l]->kind != GateKind::H ||
        v.gates[r]->kind != GateKind::H) {
      continue;
    }
    links.remove(l);
    links.remove(r);
    v.gates[l].reset();
    v.gates[r].reset();
    v.gates[i] = Gate::x(q);
    v.spans.emplace_back(l, r);
  }
}

bool merge_sandwich_once(LogicalView& v, WireLinks& links) {
  bool changed = false;
  for (std::size_t i = 0; i < v.gates.size(); ++i) {
    if (!v.gates[i] || v.gates[i]->kind != GateKind::Phase) continue;
    const int t = v.gates[i]->q[0];
    const long l = links.prev(i, t), r = links.next(i, t);
    if (l < 0 || r < 0) continue;
    const Gate a = *v.gates[l], b = *v.gates[r];
    if (a.kind != GateKind::CPhase || b.kind != GateKind::CPhase) continue;
    const int c = a.other(t);
    if (!b.acts_on(c)) continue;
    int xs = 0;
    bool ok = true;
    for (long j = links.next(l, c); j != r; j = links.next(j, c)) {
      if (j < 0) {
        ok = false;
        break;
      }
      if (v.gates[j]->kind == GateKind::X) {
        ++xs;
      } else if (!kind_is_diagonal(v.gates[j]->kind)) {
        ok = false;
        break;
      }
    }
    if (!ok || xs != 1) continue;
    const PhaseExponent psi = v.gates[i]->phase;
    long keep, drop;
    PhaseExponent angle;
    if ((psi + b.phase).is_zero()) {
      keep = l, drop = r, angle = a.phase - b.phase;
    } else if ((psi + a.phase).is_zero()) {
      keep = r, drop = l, angle = b.phase - a.phase;
    } else {
      continue;
    }
    v.gates[keep]->phase = angle;
    links.remove(i);
    links.remove(drop);
    v.gates[i].reset();
    v.gates[drop].reset();
    v.spans.emplace_back(l, r);
    changed = true;
  }
  return changed;
}

void merge_hczh(LogicalView& v, WireLinks& links) {
  for (std::size_t i = 0; i < v.gates.size(); ++i) {
    if (!v.gates[i] || v.gates[i]->kind != GateKind::CPhase ||
        v.gates[i]->phase != phase_pi()) {
      continue;
    }
    for (int k = 0; k < 2; ++k) {
      const int t = v.gates[i]->q[k];
      const long l = links.prev(i, t), r = links.next(i, t);
      if (l < 0 || r < 0 || v.gates[l]->kind != GateKind::H ||
          v.gates[r]->kind != GateKind::H) {
        continue;
      }
      links.remove(l);
      links.remove(r);
      v.gates[l].reset();
      v.gates[r].reset();
      v.gates[i] = Gate::cx(v.gates[i]->other(t), t);
      v.spans.emplace_back(l, r);
      break;
    }
  }
}

void remove_zero_rotations(LogicalView& v, WireLinks& links) {
  for (std::size_t i = 0; i < v.gates.size(); ++i) {
    if (!v.gates[i]) continue;
    const GateKind k = v.gates[i]->kind;
    if ((k == GateKind::CPhase || k == GateKind::Phase) && v.gates[i]->phase.is_zero()) {
      links.remove(i);
      v.gates[i].reset();
    }
  }
}

void cancel_x_pairs(LogicalView& v, WireLinks& links) {
  for (std::size_t i = 0; i < v.gates.size(); ++i) {
    if (!v.gates[i] || v.gates[i]->kind != GateKind::X) continue;
    const long r = links.next(i, v.gates[i]->q[0]);
    if (r < 0 || v.gates[r]->kind != GateKind::X) continue;
    links.remove(i);
    links.remove(r);
    v.gates[i].reset();
    v.gates[r].reset();
    v.spans.emplace_back(i, r);
  }
}

// Logical positions: pos[i][q] is the wire of logical qubit q before gate i.
std::vector<std::vector<int>> layouts(const Circuit& c) {
  std::vector<std::vector<int>> pos(c.gates.size() + 1);
  std::vector<int> cur(c.n_qubits);
  for (int q = 0; q < c.n_qubits; ++q) cur[q] = q;
  std::vector<int> at = cur;  // at[wire] = logical
  for (std::size_t i = 0; i < c.gates.size(); ++i) {
    pos[i] = cur;
    const Gate& g = c.gates[i];
    if (g.kind == GateKind::Swap) {
      const int la = at[g.q[0]], lb = at[g.q[1]];
      std::swap(at[g.q[0]], at[g.q[1]]);
      cur[la] = g.q[1];
      cur[lb] = g.q[0];
    }
  }
  pos[c.gates.size()] = cur;
  return pos;
}

void move_along_chain(std::vector<Gate>& out, std::vector<int>& at,
                      std::vector<int>& where, int from, int to) {
  while (from != to) {
    const int step = to > from ? 1 : -1;
    const int a = from, b = from + step;
    out.push_back(Gate::swap(std::min(a, b), std::max(a, b)));
    std::swap(at[a], at[b]);
    where[at[a]] = a;
    where[at[b]] = b;
    from = b;
  }
}

// Parks logical qubit q at wire e for gates [i0, i1).
Circuit park_window(const Circuit& c, const std::vector<std::vector<int>>& pos,
                    int q, std::size_t i0, std::size_t i1, int e) {
  const int n = c.n_qubits;
  std::vector<Gate> out(c.gates.begin(), c.gates.begin() + i0);
  std::vector<int> orig(n), at(n), where(n);
  for (int l = 0; l < n; ++l) orig[pos[i0][l]] = l;
  at = orig;
  for (int w = 0; w < n; ++w) where[at[w]] = w;
  move_along_chain(out, at, where, where[q], e);
  for (std::size_t i = i0; i < i1; ++i) {
    const Gate& g = c.gates[i];
    if (g.kind == GateKind::Swap) {
      const int la = orig[g.q[0]], lb = orig[g.q[1]];
      std::swap(orig[g.q[0]], orig[g.q[1]]);
      if (la == q || lb == q) continue;
      const int pa = where[la], pb = where[lb];
      out.push_back(Gate::swap(std::min(pa, pb), std::max(pa, pb)));
      std::swap(at[pa], at[pb]);
      where[at[pa]] = pa;
      where[at[pb]] = pb;
      continue;
    }
    Gate h = g;
    for (int k = 0; k < g.arity(); ++k) h.q[k] = where[orig[g.q[k]]];
    out.push_back(h);
  }
  int home = 0;
  while (orig[home] != q) ++home;
  move_along_chain(out, at, where, where[q], home);
  const std::size_t window_len = out.size() - i0;
  out.insert(out.end(), c.gates.begin() + i1, c.gates.end());

  Circuit r(n, c.label);
  r.gates = std::move(out);
  r.global_phase = c.global_phase;
  r.ancillas = c.ancillas;
  const long long delta = static_cast<long long>(window_len) -
                          static_cast<long long>(i1 - i0);
  for (std::size_t p : c.barriers) {
    std::size_t np;
    if (p <= i0) {
      np = p;
    } else if (p >= i1) {
      np = static_cast<std::size_t>(static_cast<long long>(p) + delta);
    } else {
      continue;
    }
    if (np == 0 || np >= r.gates.size()) continue;
    if (r.barriers.empty() || r.barriers.back() != np) r.barriers.push_back(np);
  }
  return r;
}

bool is_two_qubit_non_swap(const Gate& g) {
  return g.arity() == 2 && g.kind != GateKind::Swap;
}

}  // namespace

Decomposition decompose_gate_ngs(const Gate& g) {
  Decomposition d;
  switch (g.kind) {
    case GateKind::H: {
      const PhaseExponent quarter = PhaseExponent::rotation(2);
      d.gates = {Gate::rz(g.q[0], quarter), Gate::sx(g.q[0]), Gate::rz(g.q[0], quarter)};
      d.global_phase = PhaseExponent::rotation(3);
      break;
    }
    case GateKind::Phase:
      if (!g.phase.is_zero()) {
        d.gates = {Gate::rz(g.q[0], g.phase)};
        d.global_phase = half(g.phase);
      }
      break;
    case GateKind::CPhase: {
      if (g.phase.is_zero()) break;
      const int c = g.q[0], t = g.q[1];
      const int64_t s = g.phase.signed_k();
      const int m = g.phase.m();
      const PhaseExponent h = PhaseExponent::normalize(s, m + 1);
      const PhaseExponent quarter = PhaseExponent::normalize(s, m + 2);
      if (s > 0) {
        d.gates = {Gate::rz(c, h), Gate::cx(c, t), Gate::rz(t, -h), Gate::cx(c, t),
                   Gate::rz(t, h)};
        // Rz(-h) was stored as Rz(2pi - h) = -Rz(-h).
        d.global_phase = quarter + phase_pi();
      } else {
        d.gates = {Gate::rz(t, h), Gate::cx(c, t), Gate::rz(t, -h), Gate::cx(c, t),
                   Gate::rz(c, h)};
        d.global_phase = quarter;
      }
      break;
    }
    case GateKind::Swap:
      d.gates = {Gate::cx(g.q[0], g.q[1]), Gate::cx(g.q[1], g.q[0]),
                 Gate::cx(g.q[0], g.q[1])};
      break;
    default:
      d.gates = {g};
      break;
  }
  return d;
}

Circuit pass_merge_boundary_phases(const Circuit& c) {
  c.validate();
  LogicalView v = detail::virtualize(c);
  WireLinks links(v.gates, c.n_qubits);
  merge_hzh(v, links);
  while (merge_sandwich_once(v, links)) {
  }
  merge_hczh(v, links);
  remove_zero_rotations(v, links);
  cancel_x_pairs(v, links);
  return detail::materialize(c, v);
}

Circuit pass_park_idle_qubits(const Circuit& c) {
  c.validate();
  const int n = c.n_qubits;
  Circuit cur = c;
  for (;;) {
    const auto pos = layouts(cur);
    const std::size_t len = cur.gates.size();
    // swaps[i][q]: SWAPs moving logical q among gates before i.
    std::vector<std::vector<int>> swaps(len + 1, std::vector<int>(n, 0));
    std::vector<std::vector<std::size_t>> uses(n);
    for (std::size_t i = 0; i < len; ++i) {
      swaps[i + 1] = swaps[i];
      const Gate& g = cur.gates[i];
      std::vector<int> logical;
      for (int q = 0; q < n; ++q) {
        if (g.acts_on(pos[i][q])) logical.push_back(q);
      }
      if (g.kind == GateKind::Swap) {
        for (int q : logical) ++swaps[i + 1][q];
      } else if (is_two_qubit_non_swap(g)) {
        for (int q : logical) uses[q].push_back(i);
      }
    }
    long best = 0;
    int bq = -1, be = 0;
    std::size_t b0 = 0, b1 = 0;
    for (int q = 0; q < n; ++q) {
      std::vector<std::size_t> starts{0}, ends;
      for (std::size_t u : uses[q]) {
        ends.push_back(u);
        starts.push_back(u + 1);
      }
      ends.push_back(len);
      for (std::size_t w = 0; w < starts.size(); ++w) {
        const std::size_t i0 = starts[w], i1 = ends[w];
        if (i1 <= i0) continue;
        const long saved = swaps[i1][q] - swaps[i0][q];
        for (int e : {n - 1, 0}) {
          const long cost = std::abs(pos[i0][q] - e) + std::abs(e - pos[i1][q]);
          if (saved - cost > best) {
            best = saved - cost;
            bq = q, be = e, b0 = i0, b1 = i1;
          }
        }
      }
    }
    if (bq < 0) break;
    cur = park_window(cur, pos, bq, b0, b1, be);
  }
  // Keep the recorded output order consistent with the new final layout.
  const std::vector<int> before = swap_permutation(c), after = swap_permutation(cur);
  std::vector<int> inv_before(n);
  for (int w = 0; w < n; ++w) inv_before[before[w]] = w;
  const std::vector<int> old_perm = c.permutation_or_identity();
  std::vector<int> perm(n);
  bool identity = true;
  for (int l = 0; l < n; ++l) {
    perm[l] = after[inv_before[old_perm[l]]];
    identity = identity && perm[l] == l;
  }
  if (identity && c.output_permutation.empty()) {
    cur.output_permutation.clear();
  } else {
    cur.output_permutation = perm;
  }
  return cur;
}

Circuit pass_truncate(const Circuit& c, int cutoff) {
  if (cutoff < 2) throw std::invalid_argument("cutoff must be at least 2");
  Circuit r = c;
  r.gates.clear();
  std::vector<std::size_t> expand;
  for (const Gate& g : c.gates) {
    const bool drop = g.kind == GateKind::CPhase && g.phase.m() > cutoff;
    expand.push_back(drop ? 0 : 1);
    if (!drop) r.gates.push_back(g);
  }
  r.barriers = detail::remap_barriers(c.barriers, expand);
  return r;
}

Circuit pass_decompose_ngs(const Circuit& c, bool decompose_swaps) {
  Circuit r = c;
  r.gates.clear();
  std::vector<std::size_t> expand;
  for (const Gate& g : c.gates) {
    if (g.kind == GateKind::Swap && !decompose_swaps) {
      r.gates.push_back(g);
      expand.push_back(1);
      continue;
    }
    const Decomposition d = decompose_gate_ngs(g);
    r.gates.insert(r.gates.end(), d.gates.begin(), d.gates.end());
    r.global_phase += d.global_phase;
    expand.push_back(d.gates.size());
  }
  r.barriers = detail::remap_barriers(c.barriers, expand);
  return r;
}

Circuit pass_cancel_rz(const Circuit& c) {
  c.validate();
  LogicalView v = detail::virtualize(c);
  WireLinks links(v.gates, c.n_qubits);
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < v.gates.size(); ++i) {
      if (!v.gates[i]) continue;
      const GateKind k = v.gates[i]->kind;
      if (k != GateKind::Rz && k != GateKind::Phase) continue;
      const long r = links.next(i, v.gates[i]->q[0]);
      if (r < 0 || v.gates[r]->kind != k) continue;
      const PhaseExponent a = v.gates[i]->phase, b = v.gates[r]->phase;
      // Rz has period 4pi: wrapping the sum past 2pi flips the sign.
      if (k == GateKind::Rz && detail::phase_sum_wraps(a, b)) {
        v.extra_phase += phase_pi();
      }
      links.remove(i);
      v.gates[i].reset();
      if ((a + b).is_zero()) {
        links.remove(r);
        v.gates[r].reset();
      } else {
        v.gates[r]->phase = a + b;
      }
      v.spans.emplace_back(i, r);
      changed = true;
    }
  }
  return detail::materialize(c, v);
}

Circuit pass_decompose_swaps(const Circuit& c) {
  Circuit r = c;
  r.gates.clear();
  std::vector<std::optional<Gate>> opt(c.gates.begin(), c.gates.end());
  WireLinks links(opt, c.n_qubits);
  std::vector<std::size_t> expand;
  for (std::size_t i = 0; i < c.gates.size(); ++i) {
    const Gate& g = c.gates[i];
    if (g.kind != GateKind::Swap) {
      r.gates.push_back(g);
      expand.push_back(1);
      continue;
    }
    int a = g.q[0], b = g.q[1];
    for (int dir : {1, -1}) {
      const long ja = dir > 0 ? links.next(i, a) : links.prev(i, a);
      const long jb = dir > 0 ? links.next(i, b) : links.prev(i, b);
      if (ja >= 0 && ja == jb && c.gates[ja].kind == GateKind::CX) {
        a = c.gates[ja].q[0];
        b = c.gates[ja].q[1];
        break;
      }
    }
    r.gates.insert(r.gates.end(), {Gate::cx(a, b), Gate::cx(b, a), Gate::cx(a, b)});
    expand.push_back(3);
  }
  r.barriers = detail::remap_barriers(c.barriers, expand);
  return r;
}

Circuit pass_cancel_cx(const Circuit& c) {
  c.validate();
  std::vector<std::optional<Gate>> gs(c.gates.begin(), c.gates.end());
  WireLinks links(gs, c.n_qubits);
  std::vector<std::pair<std::size_t, std::size_t>> spans;
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < gs.size(); ++i) {
      if (!gs[i] || gs[i]->kind != GateKind::CX) continue;
      const long r = links.next(i, gs[i]->q[0]);
      if (r < 0 || r != links.next(i, gs[i]->q[1]) || !(*gs[r] == *gs[i])) continue;
      links.remove(i);
      links.remove(r);
      gs[i].reset();
      gs[r].reset();
      spans.emplace_back(i, r);
      changed = true;
    }
  }
  LogicalView v;
  v.gates = std::move(gs);
  v.is_swap.assign(v.gates.size(), false);
  v.spans = std::move(spans);
  // No SWAP is marked, so materializing keeps every wire where it is.
  return detail::materialize(c, v);
}

TranspileResult transpile(const Circuit& c, const Architecture& arch,
                          const TranspileOptions& opts) {
  c.validate();
  const auto bad = check_legal(c, arch);
  if (!bad.empty()) {
    throw std::invalid_argument("transpile: gate " + std::to_string(bad.front().gate_index) +
                                " is not legal under " + arch.name());
  }
  TranspileResult res;
  auto step = [&](const std::string& name, const Circuit& before, Circuit after) {
    const std::size_t nb = before.gates.size(), na = after.gates.size();
    // Rewrites replace gates in place, so the net change is what is reported.
    res.reports.push_back(make_report(name, before, after, nb > na ? nb - na : 0,
                                      na > nb ? na - nb : 0));
    return after;
  };
  Circuit cur = step("merge_boundary_phases", c, pass_merge_boundary_phases(c));
  if (opts.park && arch.kind() == ArchKind::LinearChain) {
    cur = step("park_idle_qubits", cur, pass_park_idle_qubits(cur));
  }
  if (opts.cutoff) cur = step("truncate", cur, pass_truncate(cur, *opts.cutoff));
  res.abstract = cur;
  res.effective_depth = schedule_asap(cur, arch, ScheduleMode::Ngs).depth;
  cur = step("decompose_ngs", cur, pass_decompose_ngs(cur, false));
  cur = step("cancel_rz", cur, pass_cancel_rz(cur));
  cur = step("decompose_swaps", cur, pass_decompose_swaps(cur));
  cur = step("cancel_cx", cur, pass_cancel_cx(cur));
  res.raw_depth = schedule_asap(cur, arch).depth;
  res.ngs = std::move(cur);
  return res;
}

bool is_ngs(const Circuit& c) {
  for (const Gate& g : c.gates) {
    switch (g.kind) {
      case GateKind::CX:
      case GateKind::Rz:
      case GateKind::SX:
      case GateKind::X:
        break;
      default:
        return false;
    }
  }
  return true;
}

std::string reports_to_json(const std::vector<PassReport>& reports) {
  nlohmann::json j = nlohmann::json::array();
  for (const PassReport& r : reports) {
    j.push_back({{"pass", r.name},
                 {"gates_removed", r.gates_removed},
                 {"gates_added", r.gates_added},
                 {"depth_before", r.depth_before},
                 {"depth_after", r.depth_after}});
  }
  return j.dump(2);
}

}  // namespace mcxqft
