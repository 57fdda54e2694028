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

#include "mcxqft/cli.hpp"

#include <cmath>
#include <fstream>
#include <numbers>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "mcxqft/analyzer.hpp"
#include "mcxqft/builder.hpp"
#include "mcxqft/json_io.hpp"
#include "mcxqft/qasm.hpp"
#include "mcxqft/routing.hpp"
#include "mcxqft/scheduler.hpp"
#include "mcxqft/simulator.hpp"
#include "mcxqft/transpiler.hpp"

namespace mcxqft {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Source {
  std::string kind;
  int n = 0;
  std::string in;
  std::string arch = "fc";
  std::string cutoff = "none";
  int sign = 1;
  int ancillas = 0;
  std::string objective = "depth";
};

void add_source_options(CLI::App* cmd, Source& s, bool positional) {
  if (positional) {
    cmd->add_option("kind", s.kind,
                    "qft | aqft | increment | decrement | mcx | mcx-ancilla | "
                    "qft-lnn | aqft-lnn-star | mcx-lnn");
    cmd->add_option("n", s.n, "qubits (controls for mcx-ancilla)");
  }
  cmd->add_option("--in", s.in, "circuit JSON file");
  cmd->add_option("--arch", s.arch, "fc | lnn")->check(CLI::IsMember({"fc", "lnn"}));
  cmd->add_option("--cutoff", s.cutoff, "largest rotation index kept, or none");
  cmd->add_option("--sign", s.sign, "+1 or -1 for increment")
      ->check(CLI::IsMember({1, -1}));
  cmd->add_option("--ancillas", s.ancillas, "ancilla count for mcx-ancilla");
  cmd->add_option("--objective", s.objective, "depth | gates")
      ->check(CLI::IsMember({"depth", "gates"}));
}

std::optional<int> parse_cutoff(const std::string& s) {
  if (s == "none") return std::nullopt;
  try {
    std::size_t used = 0;
    const int v = std::stoi(s, &used);
    if (used != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw UsageError("--cutoff expects an integer or none");
  }
}

ArchHint parse_arch(const std::string& s) { return s == "lnn" ? ArchHint::LNN : ArchHint::FC; }

std::pair<int, int> parse_range(const std::string& s) {
  const auto dots = s.find("..");
  try {
    if (dots == std::string::npos) {
      const int v = std::stoi(s);
      return {v, v};
    }
    return {std::stoi(s.substr(0, dots)), std::stoi(s.substr(dots + 2))};
  } catch (const std::exception&) {
    throw UsageError("range must look like a..b");
  }
}

ClusterPlan plan_for(const Source& s) {
  const int r = s.ancillas > 0 ? s.ancillas : optimal_ancillas(s.n);
  return plan_ancilla(s.n, r,
                      s.objective == "gates" ? PlanObjective::Gates : PlanObjective::Depth);
}

Circuit make_circuit(const Source& s) {
  if (!s.in.empty()) return load_circuit(s.in);
  if (s.kind.empty()) throw UsageError("give a circuit kind and size, or --in");
  if (s.n < 1) throw UsageError("size must be positive");
  BuildOptions opts;
  opts.cutoff = parse_cutoff(s.cutoff);
  opts.arch = parse_arch(s.arch);
  const std::string& k = s.kind;
  if (k == "qft") return build_qft(s.n, opts);
  if (k == "aqft") {
    if (!opts.cutoff) opts.cutoff = default_cutoff(s.n);
    Circuit c = build_qft(s.n, opts);
    c.label = "aqft";
    return c;
  }
  if (k == "increment") return build_increment(s.n, s.sign, opts);
  if (k == "decrement") return build_increment(s.n, -1, opts);
  if (k == "mcx") return build_mcx(s.n, opts);
  if (k == "mcx-ancilla") {
    opts.arch = ArchHint::FC;
    return build_mcx_ancilla(s.n, plan_for(s), opts);
  }
  if (k == "qft-lnn") return build_qft_lnn(s.n, opts);
  if (k == "aqft-lnn-star") return build_aqft_lnn_star(s.n);
  if (k == "mcx-lnn") return route_mcx_lnn(s.n, opts);
  throw UsageError("unknown circuit kind: " + k);
}

void write_text(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << text;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw UsageError("cannot write " + path);
  f << text;
}

std::string summary(const Circuit& c) {
  std::ostringstream s;
  const auto k = count_kinds(c);
  s << c.label << ": " << c.n_qubits << " qubits, " << c.gates.size() << " gates, depth "
    << schedule_asap(c).depth;
  for (int i = 0; i < 8; ++i) {
    if (k[i]) s << ", " << kind_name(static_cast<GateKind>(i)) << " " << k[i];
  }
  s << "\n";
  return s.str();
}

std::string plan_echo(const ClusterPlan& p) {
  std::ostringstream s;
  s << "plan: n_c=" << p.n_c << " r=" << p.r << " cluster_sizes=[";
  for (std::size_t i = 0; i < p.cluster_sizes.size(); ++i) {
    s << (i ? "," : "") << p.cluster_sizes[i];
  }
  s << "] n_r=" << p.n_r << "\n";
  return s.str();
}

uint64_t reverse_bits(uint64_t x, int n) {
  uint64_t r = 0;
  for (int i = 0; i < n; ++i) r |= ((x >> i) & 1) << (n - 1 - i);
  return r;
}

Unitary qft_reference(int n) {
  Unitary v(n);
  const double dim = static_cast<double>(v.dim());
  const double scale = 1.0 / std::sqrt(dim);
  for (std::size_t a = 0; a < v.dim(); ++a) {
    for (std::size_t k = 0; k < v.dim(); ++k) {
      const double prod = static_cast<double>((a * reverse_bits(k, n)) % v.dim());
      v(k, a) = std::polar(scale, 2.0 * std::numbers::pi * prod / dim);
    }
  }
  return v;
}

bool starts_with(const std::string& s, const std::string& p) {
  return s.compare(0, p.size(), p) == 0;
}

// Returns the verification line and whether it passed.
struct Verdict {
  std::string text;
  bool ok = false;
  bool exact = true;  // false when there is no exact reference
};

Verdict verify_circuit(const Circuit& c, double tol) {
  if (c.n_qubits > unitary_qubit_cap()) {
    throw UsageError(std::to_string(c.n_qubits) + " qubits exceeds the simulator cap of " +
                     std::to_string(unitary_qubit_cap()) + " (set MCX_SIM_MAX_QUBITS)");
  }
  const Unitary u = unitary_of(c);
  const std::vector<int> perm = c.permutation_or_identity();
  std::ostringstream line;
  if (c.label == "mcx-ancilla") {
    const std::vector<int>& anc = c.ancillas;
    const int target = c.n_qubits - 1;
    uint64_t anc_mask = 0, ctl_mask = 0;
    for (int a : anc) anc_mask |= uint64_t{1} << a;
    ctl_mask = ((uint64_t{1} << target) - 1) & ~anc_mask;
    double err = 0.0;
    Complex ref{};
    for (uint64_t a = 0; a < u.dim(); ++a) {
      if (a & anc_mask) continue;
      const uint64_t b = (a & ctl_mask) == ctl_mask ? a ^ (uint64_t{1} << target) : a;
      if (ref == Complex{}) ref = u(b, a);
      for (std::size_t r = 0; r < u.dim(); ++r) {
        err = std::max(err, std::abs(u(r, a) - (r == b ? ref : Complex{})));
      }
    }
    err = std::max(err, std::abs(std::abs(ref) - 1.0));
    line << "ancilla MCX oracle: max error " << err;
    return {line.str(), err <= tol, true};
  }
  Unitary ref;
  std::string name;
  if (starts_with(c.label, "mcx")) {
    ref = mcx_permutation(c.n_qubits);
    name = "MCX permutation";
  } else if (c.label == "increment" || c.label == "decrement") {
    ref = shift_permutation(c.n_qubits, c.label == "increment" ? 1 : -1);
    name = c.label == "increment" ? "left-shift permutation" : "right-shift permutation";
  } else if (starts_with(c.label, "qft") || starts_with(c.label, "aqft")) {
    ref = qft_reference(c.n_qubits);
    name = "QFT column test";
  } else {
    throw UsageError("no oracle for circuit label '" + c.label + "'");
  }
  const Unitary aligned = permute_wires(ref, perm);
  const Equivalence e = equiv_global_phase(u, aligned, tol);
  line << name << ": max error " << e.max_error << ", global phase " << e.phase
       << ", spectral distance " << operator_distance(u, aligned);
  if (starts_with(c.label, "aqft")) {
    // Approximate transforms have no exact oracle; the distance is the result.
    return {line.str(), true, false};
  }
  return {line.str(), e.equivalent, true};
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"QFT-based multi-controlled X circuits"};
  app.require_subcommand(1);
  std::string out_path;
  double tol = 1e-9;

  Source build_src;
  auto* build = app.add_subcommand("build", "build a circuit and write its JSON");
  add_source_options(build, build_src, true);
  build->add_option("--out", out_path, "output JSON path (required)");

  Source route_src;
  auto* route = app.add_subcommand("route", "nearest-neighbour constructions");
  add_source_options(route, route_src, true);
  route->add_option("--out", out_path, "output JSON path");

  Source tr_src;
  std::string report_path;
  auto* tr = app.add_subcommand("transpile", "lower to {cx, rz, sx, x} with optimization");
  add_source_options(tr, tr_src, true);
  tr->add_option("--out", out_path, "output JSON path");
  tr->add_option("--report", report_path, "pass report JSON path");

  Source sch_src;
  std::string mode = "abstract";
  auto* sch = app.add_subcommand("schedule", "ASAP time slices");
  add_source_options(sch, sch_src, true);
  sch->add_option("--mode", mode, "abstract | ngs")
      ->check(CLI::IsMember({"abstract", "ngs"}));
  sch->add_option("--out", out_path, "slices JSON path");

  Source ver_src;
  bool ver_transpile = false;
  auto* ver = app.add_subcommand("verify", "check a circuit against its oracle");
  add_source_options(ver, ver_src, true);
  ver->add_flag("--transpile", ver_transpile, "transpile before checking");
  ver->add_option("--tol", tol, "max-entry tolerance");

  std::string sweep_kind, n_range = "3..30", r_range = "1..20", level = "ngs",
                          sweep_arch = "lnn";
  int nc = 100;
  auto* sw = app.add_subcommand("sweep", "complexity tables as CSV");
  sw->add_option("kind", sweep_kind, "figure4 | cluster | ancilla")
      ->required()
      ->check(CLI::IsMember({"figure4", "cluster", "ancilla"}));
  sw->add_option("--n", n_range, "n range for figure4, a..b");
  sw->add_option("--nc", nc, "control qubits");
  sw->add_option("--r", r_range, "ancillas (cluster) or range a..b (ancilla)");
  sw->add_option("--arch", sweep_arch, "fc | lnn")->check(CLI::IsMember({"fc", "lnn"}));
  sw->add_option("--level", level, "abstract | ngs")
      ->check(CLI::IsMember({"abstract", "ngs"}));
  sw->add_option("--out", out_path, "CSV path (default stdout)");

  Source ex_src;
  std::string format = "qasm";
  auto* ex = app.add_subcommand("export", "write QASM or JSON");
  add_source_options(ex, ex_src, true);
  ex->add_option("--format", format, "qasm | json")->check(CLI::IsMember({"qasm", "json"}));
  ex->add_option("--out", out_path, "output path (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return 2;
  }

  try {
    if (*build) {
      if (out_path.empty()) throw UsageError("build needs --out");
      const Circuit c = make_circuit(build_src);
      save_circuit(out_path, c);
      if (build_src.kind == "mcx-ancilla") out << plan_echo(plan_for(build_src));
      out << summary(c);
      return 0;
    }
    if (*route) {
      if (route_src.kind == "qft") route_src.kind = "qft-lnn";
      if (route_src.kind == "mcx") route_src.kind = "mcx-lnn";
      if (route_src.kind == "aqft-star") route_src.kind = "aqft-lnn-star";
      const Circuit c = make_circuit(route_src);
      const auto bad = check_legal(c, Architecture::linear_chain());
      if (!out_path.empty()) save_circuit(out_path, c);
      out << summary(c);
      out << "lnn violations: " << bad.size() << "\n";
      if (!c.output_permutation.empty()) {
        out << "output permutation:";
        for (int w : c.output_permutation) out << " " << w;
        out << "\n";
      }
      return bad.empty() ? 0 : 1;
    }
    if (*tr) {
      // MCX circuits are truncated after merging, other kinds when built.
      TranspileOptions opts;
      Source exact = tr_src;
      if (!tr_src.in.empty() || tr_src.kind == "mcx" || tr_src.kind == "mcx-lnn") {
        opts.cutoff = parse_cutoff(tr_src.cutoff);
        exact.cutoff = "none";
      }
      const Circuit c = make_circuit(exact);
      const Architecture arch = Architecture::from_hint(parse_arch(tr_src.arch));
      const TranspileResult res = transpile(c, arch, opts);
      if (!out_path.empty()) save_circuit(out_path, res.ngs);
      if (!report_path.empty()) write_text(report_path, reports_to_json(res.reports) + "\n", out);
      out << "gates " << res.ngs.gates.size() << ", effective depth " << res.effective_depth
          << ", raw depth " << res.raw_depth << ", merged depth "
          << schedule_asap(res.abstract, arch).depth << "\n";
      if (report_path.empty()) out << reports_to_json(res.reports) << "\n";
      return 0;
    }
    if (*sch) {
      const Circuit c = make_circuit(sch_src);
      const Architecture arch = Architecture::from_hint(parse_arch(sch_src.arch));
      const Schedule s = schedule_asap(
          c, arch, mode == "ngs" ? ScheduleMode::Ngs : ScheduleMode::Abstract);
      out << "depth " << s.depth << ", max parallelism " << max_parallelism(s) << "\n";
      if (!out_path.empty()) write_text(out_path, schedule_to_json(s) + "\n", out);
      return 0;
    }
    if (*ver) {
      Circuit c = make_circuit(ver_src);
      if (c.n_qubits > unitary_qubit_cap()) {
        throw UsageError(std::to_string(c.n_qubits) +
                         " qubits exceeds the simulator cap of " +
                         std::to_string(unitary_qubit_cap()) + " (set MCX_SIM_MAX_QUBITS)");
      }
      if (ver_transpile) {
        const ArchHint a = c.label == "mcx-lnn" || c.label == "qft-lnn" ? ArchHint::LNN
                                                                          : parse_arch(ver_src.arch);
        c = transpile(c, Architecture::from_hint(a)).ngs;
      }
      const Verdict v = verify_circuit(c, tol);
      out << (!v.exact ? "INFO " : v.ok ? "PASS " : "FAIL ") << v.text << "\n";
      return v.ok ? 0 : 1;
    }
    if (*sw) {
      const ArchHint a = parse_arch(sweep_arch);
      const Level lv = level == "ngs" ? Level::Ngs : Level::Abstract;
      std::string csv;
      if (sweep_kind == "figure4") {
        const auto [lo, hi] = parse_range(n_range);
        csv = sweep_to_csv(sweep_figure4(lo, hi), "n");
      } else if (sweep_kind == "cluster") {
        const auto [r, r2] = parse_range(r_range == "1..20" ? "5" : r_range);
        if (r != r2) throw UsageError("cluster sweep takes a single --r");
        csv = sweep_to_csv(sweep_cluster(nc, r, a, lv), "delta_nc");
      } else {
        const auto [lo, hi] = parse_range(r_range);
        csv = sweep_to_csv(sweep_ancilla(nc, lo, hi, a, lv), "r");
      }
      write_text(out_path, csv, out);
      return 0;
    }
    if (*ex) {
      const Circuit c = make_circuit(ex_src);
      write_text(out_path, format == "qasm" ? export_qasm(c) : circuit_to_string(c) + "\n",
                 out);
      return 0;
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

}  // namespace mcxqft
