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

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "mcxqft/analyzer.hpp"
#include "mcxqft/builder.hpp"

namespace mcxqft {

int ClusterPlan::max_cluster() const {
  return cluster_sizes.empty() ? 0
                               : *std::max_element(cluster_sizes.begin(),
                                                   cluster_sizes.end());
}

void ClusterPlan::validate() const {
  if (r < 1 || static_cast<int>(cluster_sizes.size()) != r) {
    throw std::invalid_argument("plan: need one size per ancilla");
  }
  int sum = 0;
  for (int s : cluster_sizes) {
    if (s < 1) throw std::invalid_argument("plan: empty cluster");
    sum += s;
  }
  const auto [lo, hi] = std::minmax_element(cluster_sizes.begin(), cluster_sizes.end());
  if (*hi - *lo > 1) throw std::invalid_argument("plan: unbalanced clusters");
  if (n_r < 0 || sum + n_r != n_c) {
    throw std::invalid_argument("plan: sizes do not add up to n_c");
  }
}

ClusterPlan plan_ancilla(int n_c, int r, PlanObjective objective, ArchHint arch,
                         Level level) {
  if (r < 1 || r >= n_c) {
    throw std::invalid_argument("plan_ancilla: need 1 <= r < n_c");
  }
  ClusterPlan p;
  p.n_c = n_c;
  p.r = r;
  if (objective == PlanObjective::Depth) {
    const int q = (n_c + r - 1) / r;
    const int big = n_c - (q - 1) * r;
    for (int i = 0; i < r; ++i) p.cluster_sizes.push_back(i < big ? q : q - 1);
    p.n_r = 0;
    return p;
  }
  const BlockModel model{arch, level};
  const int hi_limit = n_c / r;
  auto cost = [&](int d) {
    ClusterPlan t{n_c, r, std::vector<int>(r, d), n_c - r * d};
    return ancilla_cost(t, model).gates;
  };
  // (n_c + r) / (r + 1) rounded half up seeds a small window.
  const int seed = static_cast<int>((2LL * (n_c + r) + (r + 1)) / (2LL * (r + 1)));
  int lo = std::max(1, seed - 2), hi = std::min(hi_limit, seed + 2);
  if (lo > hi) lo = hi = std::clamp(seed, 1, hi_limit);
  int best = lo;
  for (;;) {
    best = lo;
    for (int d = lo + 1; d <= hi; ++d) {
      if (cost(d) < cost(best)) best = d;
    }
    bool grew = false;
    if (best == lo && lo > 1) --lo, grew = true;
    if (best == hi && hi < hi_limit) ++hi, grew = true;
    if (!grew) break;
  }
  p.cluster_sizes.assign(r, best);
  p.n_r = n_c - r * best;
  return p;
}

int optimal_ancillas(int n_c) {
  if (n_c < 2) throw std::invalid_argument("optimal_ancillas: n_c < 2");
  return static_cast<int>(std::llround(std::sqrt(static_cast<double>(n_c))));
}

AncillaLayout ancilla_layout(const ClusterPlan& plan) {
  AncillaLayout l;
  int w = 0;
  for (int s : plan.cluster_sizes) {
    std::vector<int> ctl;
    for (int i = 0; i < s; ++i) ctl.push_back(w++);
    l.cluster_controls.push_back(ctl);
    l.ancillas.push_back(w++);
  }
  for (int i = 0; i < plan.n_r; ++i) l.remainder.push_back(w++);
  l.target = w;
  return l;
}

Circuit build_mcx_ancilla(int n_c, const ClusterPlan& plan, const BuildOptions& opts) {
  if (plan.n_c != n_c) throw std::invalid_argument("plan does not match n_c");
  plan.validate();
  const AncillaLayout lay = ancilla_layout(plan);
  const int n = n_c + plan.r + 1;
  BuildOptions fc = opts;
  fc.arch = ArchHint::FC;

  Circuit anc(n);
  for (std::size_t i = 0; i < lay.ancillas.size(); ++i) {
    std::vector<int> map = lay.cluster_controls[i];
    map.push_back(lay.ancillas[i]);  // the ancilla is the carry-out bit
    const int s = static_cast<int>(map.size());
    anc = circuit_concat(anc, embed(build_increment(s, +1, fc), n, map));
  }
  anc.barriers.clear();

  std::vector<int> central = lay.ancillas;
  central.insert(central.end(), lay.remainder.begin(), lay.remainder.end());
  central.push_back(lay.target);
  const Circuit mcx =
      embed(build_mcx(static_cast<int>(central.size()), fc), n, central);

  Circuit c = anc;
  c.add_barrier();
  c = circuit_concat(c, mcx);
  c.add_barrier();
  c = circuit_concat(c, circuit_inverse(anc));
  c.ancillas = lay.ancillas;
  c.label = "mcx-ancilla";
  return c;
}

}  // namespace mcxqft
