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

#include "mcxqft/builder.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "mcxqft/routing.hpp"

namespace mcxqft {

namespace {

void check_cutoff(const BuildOptions& opts) {
  if (opts.cutoff && *opts.cutoff < 2) {
    throw std::invalid_argument("cutoff must be at least 2");
  }
}

bool keep_rotation(const BuildOptions& opts, int m) {
  return !opts.cutoff || m <= *opts.cutoff;
}

}  // namespace

int default_cutoff(int n) {
  if (n < 1) throw std::invalid_argument("default_cutoff: n < 1");
  return std::max(2, static_cast<int>(std::lround(std::log2(n))));
}

Circuit build_qft(int n, const BuildOptions& opts) {
  if (n < 1) throw std::invalid_argument("build_qft: n must be positive");
  check_cutoff(opts);
  if (opts.arch == ArchHint::LNN && n >= 2) return build_qft_lnn(n, opts);
  Circuit c(n, "qft");
  for (int t = n - 1; t >= 0; --t) {
    c.add(Gate::h(t));
    for (int j = t - 1; j >= 0; --j) {
      const int m = t - j + 1;
      if (keep_rotation(opts, m)) {
        c.add(Gate::cphase(j, t, PhaseExponent::rotation(m)));
      }
    }
  }
  return c;
}

Circuit build_phase_block(int n, int sign, const BuildOptions&) {
  if (n < 1) throw std::invalid_argument("build_phase_block: n must be positive");
  if (sign != 1 && sign != -1) throw std::invalid_argument("sign must be +1 or -1");
  Circuit c(n, sign > 0 ? "p+1" : "p-1");
  for (int q = 0; q < n; ++q) {
    c.add(Gate::phase_gate(q, PhaseExponent::normalize(sign, q + 1)));
  }
  return c;
}

Circuit build_increment(int n, int sign, const BuildOptions& opts) {
  if (n < 1) throw std::invalid_argument("build_increment: n must be positive");
  if (sign != 1 && sign != -1) throw std::invalid_argument("sign must be +1 or -1");
  const Circuit qft = build_qft(n, opts);
  const std::vector<int> pos = qft.permutation_or_identity();
  Circuit p(n);
  for (int q = 0; q < n; ++q) {
    p.add(Gate::phase_gate(pos[q], PhaseExponent::normalize(sign, q + 1)));
  }
  Circuit qft_only = qft;
  qft_only.output_permutation.clear();
  Circuit c = circuit_concat(circuit_concat(qft_only, p), circuit_inverse(qft_only));
  c.label = sign > 0 ? "increment" : "decrement";
  return c;
}

Circuit build_mcx(int n, const BuildOptions& opts) {
  if (n < 2) throw std::invalid_argument("build_mcx: n must be at least 2");
  check_cutoff(opts);
  if (opts.arch == ArchHint::LNN) return route_mcx_lnn(n, opts);
  Circuit c = build_increment(n, +1, opts);
  c.add_barrier();
  std::vector<int> lower(n - 1);
  for (int q = 0; q < n - 1; ++q) lower[q] = q;
  c = circuit_concat(c, embed(build_increment(n - 1, -1, opts), n, lower));
  c.label = "mcx";
  return c;
}

}  // namespace mcxqft
