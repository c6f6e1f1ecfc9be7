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

#include "causaldt/fusion.h"

#include <algorithm>
#include <cmath>

#include <fmt/core.h>

#include "causaldt/error.h"

namespace causaldt {
namespace {

double ClampIdentified(double value, double tolerance, const char* name,
                       std::vector<std::string>& warnings) {
  if (!std::isfinite(value) || value < -tolerance || value > 1.0 + tolerance) {
    throw Error(ErrorKind::kInconsistentData,
                fmt::format("identified {} = {} lies outside [0, 1]; the "
                            "experimental and observational data cannot "
                            "share a population",
                            name, value));
  }
  const double clamped = std::clamp(value, 0.0, 1.0);
  if (std::abs(clamped - value) > kProbabilityTolerance) {
    warnings.push_back(
        fmt::format("clamped {} from {:.3e} to {}", name, value, clamped));
  }
  return clamped;
}

}  // namespace

std::vector<ConsistencyFinding> CheckConsistency(const InterventionalSpec& exp,
                                                 const ObservationalJoint& obs,
                                                 double tolerance) {
  std::vector<ConsistencyFinding> findings;
  for (int x : {1, 0}) {
    for (int y : {1, 0}) {
      const double lhs = exp.Outcome(x, y);
      const double rhs = obs.Cell(x, y);
      const double violation = std::max(rhs - lhs, 0.0);
      if (violation > tolerance) {
        findings.push_back({x, y, lhs, rhs, violation});
      }
    }
  }
  return findings;
}

IttConditional IdentifyItt(const InterventionalSpec& exp,
                           const ObservationalJoint& obs, double tolerance) {
  const double treated = obs.TreatedShare();
  const double untreated = 1.0 - treated;
  if (treated <= kProbabilityTolerance || untreated <= kProbabilityTolerance) {
    throw Error(ErrorKind::kDegenerateObservational,
                fmt::format("observational P(X=1) = {}; fusion needs "
                            "0 < P(X=1) < 1",
                            treated));
  }

  IttConditional itt;
  itt.intends_treatment = treated;
  // Received equals intended treatment in the observational regime.
  itt.recovery[1][1] = obs.RecoveryGiven(1);
  itt.recovery[0][0] = obs.RecoveryGiven(0);
  // Mixing over X* under X<-x and solving for the unobserved arm.
  itt.recovery[1][0] = ClampIdentified(
      (exp.p0() - obs.Cell(0, 1)) / treated, tolerance,
      "P(Y=1|X*=1, X<-0)", itt.warnings);
  itt.recovery[0][1] = ClampIdentified(
      (exp.p1() - obs.Cell(1, 1)) / untreated, tolerance,
      "P(Y=1|X*=0, X<-1)", itt.warnings);
  return itt;
}

CovariateSpec FusedCovariateSpec(const IttConditional& itt) {
  const double w = itt.intends_treatment;
  return CovariateSpec::Make({
      {kIntendsTreatment, w,
       InterventionalSpec::Make(itt.At(1, 1), itt.At(1, 0))},
      {kIntendsControl, 1.0 - w,
       InterventionalSpec::Make(itt.At(0, 1), itt.At(0, 0))},
  });
}

CovariateSpec FusedCovariateSpec(const InterventionalSpec& exp,
                                 const ObservationalJoint& obs,
                                 double tolerance) {
  return FusedCovariateSpec(IdentifyItt(exp, obs, tolerance));
}

FusedReport MakeFusedReport(const InterventionalSpec& exp,
                            const ObservationalJoint& obs, double tolerance) {
  IttConditional itt = IdentifyItt(exp, obs, tolerance);
  CovariateSpec cov = FusedCovariateSpec(itt);
  BenefitHarmReport bounds = CovariateReport(cov);
  for (auto& w : itt.warnings) bounds.warnings.push_back(w);

  const double k = obs.Cell(1, 1) + obs.Cell(0, 0);
  const double recovered = obs.RecoveredShare();
  const double lower = std::abs(recovered - exp.p0()) +
                       std::abs(recovered - exp.p1());
  const double one_minus_upper =
      std::abs((1.0 - exp.p0()) - k) + std::abs(exp.p1() - k);
  const Interval closed{lower, 1.0 - one_minus_upper};

  // Clamping noisy entries can move the mixture off the closed form.
  if (std::abs(closed.lo - bounds.xi.lo) > kProbabilityTolerance ||
      std::abs(closed.hi - bounds.xi.hi) > kProbabilityTolerance) {
    bounds.warnings.push_back(fmt::format(
        "closed-form xi range [{:.6f}, {:.6f}] differs from mixture range "
        "[{:.6f}, {:.6f}]",
        closed.lo, closed.hi, bounds.xi.lo, bounds.xi.hi));
  }

  auto arm_pinned = [&](int x) {
    for (int y : {1, 0}) {
      if (std::abs(exp.Outcome(x, y) - obs.Cell(x, y)) <=
          kProbabilityTolerance) {
        return true;
      }
    }
    return false;
  };

  FusedReport report{std::move(itt), std::move(cov), std::move(bounds), k,
                     closed, arm_pinned(0) && arm_pinned(1)};
  return report;
}

}  // namespace causaldt
