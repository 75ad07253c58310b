// Copyright 2026 The Privbound Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "privbound/sandwich.h"

#include <algorithm>
#include <cmath>
#include <utility>

#include "privbound/bounds.h"
#include "privbound/function_atoms.h"
#include "privbound/mechanism.h"
#include "privbound/oracle.h"
#include "privbound/perfect_privacy.h"

namespace privbound {
namespace {

void Add(SandwichReport& report, std::string name, double measured,
         double limit) {
  report.items.push_back(
      {std::move(name), measured, limit, measured <= limit});
}

}  // namespace

bool SandwichReport::passed() const {
  return std::all_of(items.begin(), items.end(),
                     [](const SandwichItem& item) { return item.passed; });
}

absl::StatusOr<SandwichReport> SandwichCheck(const JointDistribution& joint,
                                             double epsilon,
                                             const SearchConfig& config) {
  BoundOptions options;
  options.with_g0 = joint.ny() <= kMaxPerfectPrivacyPayload;
  auto bounds = ComputeBoundReport(joint, epsilon, options);
  if (!bounds.ok()) return bounds.status();
  auto h = SearchH(joint, epsilon, DefaultCardinalityH(joint), config);
  if (!h.ok()) return h.status();
  auto g = SearchG(joint, epsilon, DefaultCardinalityG(joint), config);
  if (!g.ok()) return g.status();
  auto efrl = Efrl(joint, epsilon);
  if (!efrl.ok()) return efrl.status();
  auto esfrl = Esfrl(joint, epsilon, config);
  if (!esfrl.ok()) return esfrl.status();
  auto improved = Improve(joint, h->mechanism);
  if (!improved.ok()) return improved.status();

  SandwichReport report;
  report.epsilon = epsilon;
  report.best_lower = bounds->best_lower;
  report.upper_h = bounds->upper_h;
  report.oracle_h = h->value;
  report.oracle_g = g->value;

  double decomposition = 0;
  double leakage_excess = -epsilon;
  std::vector<double> utilities;
  for (const Mechanism* m : {&h->mechanism, &g->mechanism, &*efrl,
                             &esfrl->mechanism, &*improved}) {
    auto r = Report(joint, *m);
    if (!r.ok()) return r.status();
    decomposition =
        std::max(decomposition, std::abs(DecompositionGap(joint, *r)));
    if (m == &h->mechanism || m == &g->mechanism) {
      leakage_excess = std::max(leakage_excess, r->leakage - epsilon);
    }
    utilities.push_back(r->utility);
  }
  report.efrl_utility = utilities[2];
  report.esfrl_utility = utilities[3];
  report.improve_gain = utilities[4] - utilities[0];

  Add(report, "lower_bound", report.best_lower - report.oracle_h, 1e-3);
  Add(report, "upper_bound", report.oracle_h - report.upper_h, 1e-6);
  Add(report, "efrl_dominated", report.efrl_utility - report.oracle_h, 1e-9);
  Add(report, "esfrl_dominated", report.esfrl_utility - report.oracle_h, 1e-9);
  Add(report, "improve_gain", report.improve_gain, 1e-3);
  Add(report, "hidden_below_observed", report.oracle_g - report.oracle_h,
      1e-6);
  Add(report, "feasibility", leakage_excess, 1e-9);
  Add(report, "decomposition", decomposition, 1e-9);
  report.chain_triggered =
      std::abs(report.oracle_g - (bounds->h_y_given_x + epsilon)) <= 1e-3;
  if (report.chain_triggered) {
    Add(report, "saturation_chain",
        std::abs(report.oracle_h - report.oracle_g), 2e-3);
  }
  return report;
}

}  // namespace privbound
