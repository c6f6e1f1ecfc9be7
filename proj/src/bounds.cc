/*
 * Copyright 2026 The causaldt Authors.
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     https://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "causaldt/bounds.h"

#include <algorithm>
#include <cmath>
#include <limits>

#include <fmt/core.h>

#include "causaldt/error.h"

namespace causaldt {
namespace {

// Adding 0.0 turns -0.0 into +0.0.
double Clamp01(double v) { return std::clamp(v, 0.0, 1.0) + 0.0; }

Interval ClampedInterval(double lo, double hi) {
  return Interval{Clamp01(lo), Clamp01(hi)};
}

void FinishReport(BenefitHarmReport& report) {
  report.xi = ClampedInterval(report.xi.lo, report.xi.hi);
  report.pb = ClampedInterval(report.pb.lo, report.pb.hi);
  report.ph = ClampedInterval(report.pb.lo - report.tau,
                              report.pb.hi - report.tau);
  report.point_identified = report.xi.Width() <= kProbabilityTolerance;
}

void CollectWitnesses(const std::string& label, const InterventionalSpec& spec,
                      std::vector<ZeroCellWitness>& out) {
  for (int x : {1, 0}) {
    for (int y : {1, 0}) {
      if (spec.Outcome(x, y) <= kProbabilityTolerance) {
        out.push_back({label, x, y});
      }
    }
  }
}

}  // namespace

Interval XiInterval(const TauRho& tr) {
  const TauRho checked = TauRho::Make(tr.tau, tr.rho);
  return ClampedInterval(std::abs(checked.tau), 1.0 - std::abs(checked.rho));
}

PoJointTable PoJoint(const TauRho& tr, double xi) {
  const Interval range = XiInterval(tr);
  if (!std::isfinite(xi) || !range.Contains(xi)) {
    throw Error(ErrorKind::kXiOutOfRange,
                fmt::format("xi = {} outside feasible range [{}, {}]", xi,
                            range.lo, range.hi));
  }
  const double t = tr.tau;
  const double r = tr.rho;
  PoJointTable table;
  table.cell[0][0] = Clamp01(0.5 * (1 + r - xi));
  table.cell[0][1] = Clamp01(0.5 * (xi + t));
  table.cell[1][0] = Clamp01(0.5 * (xi - t));
  table.cell[1][1] = Clamp01(0.5 * (1 - r - xi));
  return table;
}

BenefitHarmReport PbPhReport(const InterventionalSpec& spec) {
  const TauRho tr = ToTauRho(spec);
  BenefitHarmReport report;
  report.tau = tr.tau;
  report.rho = tr.rho;
  report.xi = XiInterval(tr);
  report.pb = Interval{std::max(tr.tau, 0.0),
                       std::min(spec.p1(), 1.0 - spec.p0())};
  CollectWitnesses("", spec, report.witnesses);
  FinishReport(report);
  return report;
}

BenefitHarmReport CovariateReport(const CovariateSpec& cov) {
  BenefitHarmReport report;
  double abs_tau = 0.0;
  double abs_rho = 0.0;
  double rho = 0.0;
  for (const auto& level : cov.levels()) {
    const TauRho raw = ToTauRho(level.spec);
    const TauRho tr = ProjectFeasible(raw.tau, raw.rho, &report.warnings);
    const double w = level.weight;
    report.tau += w * tr.tau;
    rho += w * tr.rho;
    abs_tau += w * std::abs(tr.tau);
    abs_rho += w * std::abs(tr.rho);
    report.pb.lo += w * std::max(tr.tau, 0.0);
    report.pb.hi += w * 0.5 * (1.0 - std::abs(tr.rho) + tr.tau);
    CollectWitnesses(level.label, level.spec, report.witnesses);
  }
  report.rho = rho;
  report.xi = Interval{abs_tau, 1.0 - abs_rho};
  FinishReport(report);
  return report;
}

Interval OraclePbBounds(const CovariateSpec& cov, int grid_n) {
  if (grid_n < 2) {
    throw Error(ErrorKind::kInvalidProbability, "oracle grid needs >= 2 points");
  }
  Interval total{0.0, 0.0};
  for (const auto& level : cov.levels()) {
    const double p1 = level.spec.p1();
    const double p0 = level.spec.p0();
    // Frechet range for P(Y(1)=1, Y(0)=1) given both margins.
    const double both_lo = std::max(0.0, p1 + p0 - 1.0);
    const double both_hi = std::min(p1, p0);
    double best_lo = std::numeric_limits<double>::infinity();
    double best_hi = -std::numeric_limits<double>::infinity();
    for (int i = 0; i < grid_n; ++i) {
      const double both =
          both_lo + (both_hi - both_lo) * static_cast<double>(i) / (grid_n - 1);
      const double benefit = p1 - both;
      const double harm = p0 - both;
      const double neither = 1.0 - p1 - p0 + both;
      if (std::min({both, benefit, harm, neither}) < -kProbabilityTolerance) {
        continue;
      }
      best_lo = std::min(best_lo, benefit);
      best_hi = std::max(best_hi, benefit);
    }
    total.lo += level.weight * best_lo;
    total.hi += level.weight * best_hi;
  }
  return total;
}

Interval OraclePbBounds(const InterventionalSpec& spec, int grid_n) {
  return OraclePbBounds(CovariateSpec::Single(spec), grid_n);
}

}  // namespace causaldt
