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

#include "mcxqft/analyzer.hpp"

#include <algorithm>
#include <future>
#include <sstream>
#include <stdexcept>

#include "json.hpp"
#include "mcxqft/scheduler.hpp"
#include "mcxqft/transpiler.hpp"

namespace mcxqft {

namespace {

long long sq(long long x) { return x * x; }

std::string level_name(Level l) { return l == Level::Ngs ? "ngs" : "abstract"; }

std::string arch_name(ArchHint a) { return a == ArchHint::LNN ? "lnn" : "fc"; }

// Rotations kept by a cutoff-L transform on n wires.
long long aqft_rotations(long long n, long long l) {
  return l >= n ? n * (n - 1) / 2 : (2 * n - l) * (l - 1) / 2;
}

void put(nlohmann::json& j, const char* key, const std::optional<long long>& v) {
  j[key] = v ? nlohmann::json(*v) : nlohmann::json(nullptr);
}

std::string cell(const std::optional<long long>& v) {
  return v ? std::to_string(*v) : std::string();
}

}  // namespace

long long BlockModel::inc_depth(int s) const {
  if (level == Level::Abstract) return arch == ArchHint::FC ? 4LL * s - 1 : 8LL * s - 7;
  return arch == ArchHint::FC ? 16LL * s - 32 : 28LL * s - 59;
}

long long BlockModel::pair_gates(int s) const {
  if (level == Level::Abstract) {
    return arch == ArchHint::FC ? 2 * (sq(s) + 2LL * s) : 2 * (2 * sq(s) - 3LL * s + 1);
  }
  return arch == ArchHint::FC ? 2 * (5 * sq(s) - 6LL * s - 8) : 16 * sq(s) - 24LL * s - 11;
}

long long BlockModel::mcx_depth(int n) const {
  if (level == Level::Abstract) return arch == ArchHint::FC ? 8LL * n - 6 : 16LL * n - 22;
  return arch == ArchHint::FC ? 32LL * n - 80 : 56LL * n - 146;
}

long long BlockModel::mcx_gates(int n) const {
  if (level == Level::Abstract) {
    return arch == ArchHint::FC ? 2 * sq(n) + 2LL * n - 1 : 4 * sq(n) - 10LL * n + 7;
  }
  return arch == ArchHint::FC ? 10 * sq(n) - 22LL * n - 5 : 16 * sq(n) - 40LL * n + 9;
}

AncillaCost ancilla_cost(const ClusterPlan& plan, const BlockModel& model) {
  AncillaCost c;
  const int m = plan.r + plan.n_r + 1;
  c.depth = 2 * model.inc_depth(plan.max_cluster() + 1) + model.mcx_depth(m);
  for (int s : plan.cluster_sizes) c.gates += model.pair_gates(s + 1);
  c.gates += model.mcx_gates(m);
  return c;
}

Prediction predict(int n, ArchHint arch, bool approx, Level level) {
  if (n < 2) throw std::invalid_argument("predict: n < 2");
  Prediction p;
  const long long N = n;
  const long long L = default_cutoff(n);
  if (level == Level::Abstract) {
    if (approx) {
      p.kinds["cphase"] = 2 * aqft_rotations(N, L) + 2 * aqft_rotations(N - 1, L);
      p.note = "no closed form for approximate depth or total gates";
      return p;
    }
    p.depth = BlockModel{arch, level}.mcx_depth(n);
    p.gates = BlockModel{arch, level}.mcx_gates(n);
    if (arch == ArchHint::FC) {
      p.kinds = {{"h", 4 * N - 2}, {"cphase", 2 * sq(N - 1)}, {"phase", 2 * N - 1}};
    } else {
      p.kinds = {{"swap", (N - 1) * (N - 2) + (N - 2) * (N - 3)}};
    }
    return p;
  }
  if (n <= 3) {
    p.note = "no closed form for n <= 3";
    return p;
  }
  const long long core = 10 * (L - 1) * (2 * (N - 1) - L);
  if (arch == ArchHint::FC) {
    p.merged_depth = 8 * N - 17;
    if (approx) {
      p.gates = core + 10 * N - 23;
      p.kinds["cphase"] = 2 * (L - 1) * (2 * (N - 1) - L);
      p.note = "no closed form for approximate depth";
    } else {
      p.depth = 32 * N - 80;
      p.gates = 10 * sq(N) - 22 * N - 5;
    }
  } else {
    p.merged_depth = 16 * N - 37;
    if (approx) {
      p.gates = core + 6 * sq(N) - 8 * N - 9;
      p.note = "no closed form for approximate depth";
    } else {
      p.depth = 56 * N - 146;
      p.gates = 16 * sq(N) - 40 * N + 9;
      p.kinds = {{"swap", 2 * sq(N) - 6 * N + 6}, {"swap_cx", 6 * sq(N) - 18 * N + 14}};
    }
  }
  return p;
}

Measurement measure(const Circuit& c, const Architecture& arch, Level level,
                    std::optional<int> cutoff) {
  Measurement m;
  const Circuit* counted = &c;
  TranspileResult t;
  if (level == Level::Abstract) {
    m.depth = schedule_asap(c, arch).depth;
  } else {
    t = transpile(c, arch, {cutoff, true});
    m.depth = t.effective_depth;
    m.merged_depth = schedule_asap(t.abstract, arch).depth;
    m.raw_depth = t.raw_depth;
    counted = &t.ngs;
    // CX introduced by SWAPs: total CX minus two per CPhase and the merged CX.
    const auto abs = count_kinds(t.abstract);
    const long long cx = static_cast<long long>(count_kind(t.ngs, GateKind::CX));
    m.kinds["swap"] = static_cast<long long>(abs[static_cast<int>(GateKind::Swap)]);
    m.kinds["swap_cx"] = cx - 2 * static_cast<long long>(abs[static_cast<int>(GateKind::CPhase)]) -
                         static_cast<long long>(abs[static_cast<int>(GateKind::CX)]);
    m.kinds["cphase"] = static_cast<long long>(abs[static_cast<int>(GateKind::CPhase)]);
  }
  const auto k = count_kinds(*counted);
  for (int i = 0; i < 8; ++i) {
    if (k[i] == 0) continue;
    const std::string name(kind_name(static_cast<GateKind>(i)));
    if (level == Level::Ngs && (name == "swap" || name == "cphase")) continue;
    m.kinds[name] = static_cast<long long>(k[i]);
  }
  m.gates = static_cast<long long>(counted->gates.size());
  return m;
}

ComplexityReport analyze_mcx(int n, ArchHint arch, bool approx, Level level) {
  ComplexityReport r;
  r.n = n;
  r.architecture = arch_name(arch);
  r.level = level;
  if (approx) r.cutoff = default_cutoff(n);
  r.predicted = predict(n, arch, approx, level);
  BuildOptions opts;
  opts.arch = arch;
  if (approx && level == Level::Abstract) opts.cutoff = r.cutoff;
  const Circuit c = build_mcx(n, opts);
  r.measured = measure(c, Architecture::from_hint(arch), level,
                       level == Level::Ngs ? r.cutoff : std::nullopt);
  if (r.predicted.depth) r.depth_delta = r.measured.depth - *r.predicted.depth;
  if (r.predicted.gates) r.gates_delta = r.measured.gates - *r.predicted.gates;
  for (const auto& [name, v] : r.predicted.kinds) {
    const auto it = r.measured.kinds.find(name);
    r.kind_deltas[name] = (it == r.measured.kinds.end() ? 0 : it->second) - v;
  }
  return r;
}

std::string report_to_json(const ComplexityReport& r) {
  nlohmann::json j;
  j["n"] = r.n;
  j["architecture"] = r.architecture;
  j["level"] = level_name(r.level);
  j["cutoff"] = r.cutoff ? nlohmann::json(*r.cutoff) : nlohmann::json(nullptr);
  nlohmann::json p, m, d;
  put(p, "depth", r.predicted.depth);
  put(p, "gates", r.predicted.gates);
  put(p, "merged_depth", r.predicted.merged_depth);
  p["kinds"] = r.predicted.kinds;
  if (!r.predicted.note.empty()) p["note"] = r.predicted.note;
  m["depth"] = r.measured.depth;
  m["gates"] = r.measured.gates;
  put(m, "merged_depth", r.measured.merged_depth);
  put(m, "raw_depth", r.measured.raw_depth);
  m["kinds"] = r.measured.kinds;
  put(d, "depth", r.depth_delta);
  put(d, "gates", r.gates_delta);
  d["kinds"] = r.kind_deltas;
  j["predicted"] = p;
  j["measured"] = m;
  j["deltas"] = d;
  return j.dump(2);
}

std::vector<SweepRow> sweep_cluster(int n_c, int r, ArchHint arch, Level level) {
  if (r < 1 || r >= n_c) throw std::invalid_argument("sweep_cluster: need 1 <= r < n_c");
  const BlockModel model{arch, level};
  std::vector<SweepRow> rows;
  for (int d = 1; d <= n_c / r; ++d) {
    const ClusterPlan p{n_c, r, std::vector<int>(r, d), n_c - r * d};
    const AncillaCost cost = ancilla_cost(p, model);
    SweepRow row;
    row.x = d;
    row.variant = arch_name(arch) + "-" + level_name(level);
    row.depth_predicted = cost.depth;
    row.gates_predicted = cost.gates;
    rows.push_back(row);
  }
  return rows;
}

std::vector<SweepRow> sweep_ancilla(int n_c, int r_min, int r_max, ArchHint arch,
                                    Level level) {
  if (r_min < 1 || r_min > r_max || r_max >= n_c) {
    throw std::invalid_argument("sweep_ancilla: need 1 <= r_min <= r_max < n_c");
  }
  const BlockModel model{arch, level};
  std::vector<SweepRow> rows;
  for (int r = r_min; r <= r_max; ++r) {
    const ClusterPlan p = plan_ancilla(n_c, r, PlanObjective::Gates, arch, level);
    const AncillaCost cost = ancilla_cost(p, model);
    SweepRow row;
    row.x = r;
    row.variant = arch_name(arch) + "-" + level_name(level);
    row.depth_predicted = cost.depth;
    row.gates_predicted = cost.gates;
    rows.push_back(row);
  }
  return rows;
}

std::vector<SweepRow> sweep_figure4(int n_min, int n_max) {
  if (n_min < 2 || n_min > n_max) throw std::invalid_argument("sweep_figure4: bad range");
  struct Variant {
    ArchHint arch;
    bool approx;
    const char* name;
  };
  const Variant variants[] = {{ArchHint::FC, false, "fc-exact"},
                              {ArchHint::FC, true, "fc-approx"},
                              {ArchHint::LNN, false, "lnn-exact"},
                              {ArchHint::LNN, true, "lnn-approx"}};
  std::vector<std::future<SweepRow>> jobs;
  for (int n = n_min; n <= n_max; ++n) {
    for (const Variant& v : variants) {
      jobs.push_back(std::async(std::launch::async, [n, v] {
        const ComplexityReport r = analyze_mcx(n, v.arch, v.approx, Level::Ngs);
        SweepRow row;
        row.x = n;
        row.variant = v.name;
        row.depth_predicted = r.predicted.depth;
        row.depth_measured = r.measured.depth;
        row.gates_predicted = r.predicted.gates;
        row.gates_measured = r.measured.gates;
        return row;
      }));
    }
  }
  std::vector<SweepRow> rows;
  for (auto& j : jobs) rows.push_back(j.get());
  return rows;
}

std::string sweep_to_csv(const std::vector<SweepRow>& rows, const std::string& x_name) {
  std::ostringstream out;
  out << x_name << ",variant,depth_predicted,depth_measured,gates_predicted,gates_measured\n";
  for (const SweepRow& r : rows) {
    out << r.x << "," << r.variant << "," << cell(r.depth_predicted) << ","
        << cell(r.depth_measured) << "," << cell(r.gates_predicted) << ","
        << cell(r.gates_measured) << "\n";
  }
  return out.str();
}

}  // namespace mcxqft
