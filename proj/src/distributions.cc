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

#include "causaldt/distributions.h"

#include <algorithm>
#include <cmath>
#include <set>

#include <fmt/core.h>

#include "causaldt/error.h"

namespace causaldt {

std::string_view ErrorKindName(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kInvalidProbability: return "InvalidProbability";
    case ErrorKind::kInfeasibleTauRho: return "InfeasibleTauRho";
    case ErrorKind::kXiOutOfRange: return "XiOutOfRange";
    case ErrorKind::kEmptyStratum: return "EmptyStratum";
    case ErrorKind::kParse: return "ParseError";
    case ErrorKind::kDegenerateObservational: return "DegenerateObservational";
    case ErrorKind::kInconsistentData: return "InconsistentData";
    case ErrorKind::kInsufficientInformation: return "InsufficientInformation";
    case ErrorKind::kPolicy: return "PolicyError";
    case ErrorKind::kSimulation: return "SimulationError";
  }
  return "Unknown";
}

double CheckProbability(double value, std::string_view what) {
  if (!std::isfinite(value) || value < -kProbabilityTolerance ||
      value > 1.0 + kProbabilityTolerance) {
    throw Error(ErrorKind::kInvalidProbability,
                fmt::format("probability out of range: {} = {}", what, value));
  }
  return std::clamp(value, 0.0, 1.0);
}

InterventionalSpec InterventionalSpec::Make(double p1, double p0) {
  return InterventionalSpec(CheckProbability(p1, "P(Y=1|X<-1)"),
                            CheckProbability(p0, "P(Y=1|X<-0)"));
}

double InterventionalSpec::Outcome(int x, int y) const {
  const double p = x == 1 ? p1_ : p0_;
  return y == 1 ? p : 1.0 - p;
}

TauRho TauRho::Make(double tau, double rho) {
  if (!std::isfinite(tau) || !std::isfinite(rho) ||
      std::abs(tau) + std::abs(rho) > 1.0 + kProbabilityTolerance) {
    throw Error(ErrorKind::kInfeasibleTauRho,
                fmt::format("infeasible (tau, rho) = ({}, {}): |tau| + |rho| "
                            "exceeds 1",
                            tau, rho));
  }
  return TauRho{tau, rho};
}

TauRho ToTauRho(const InterventionalSpec& spec) {
  return TauRho{spec.p1() - spec.p0(), spec.p1() + spec.p0() - 1.0};
}

TauRho ProjectFeasible(double tau, double rho,
                       std::vector<std::string>* warnings) {
  const double excess = std::abs(tau) + std::abs(rho) - 1.0;
  if (excess <= kProbabilityTolerance) return TauRho::Make(tau, rho);
  if (excess > kFeasibilityProjectionLimit || std::abs(tau) > 1.0) {
    return TauRho::Make(tau, rho);  // throws
  }
  const double projected = std::copysign(std::max(0.0, std::abs(rho) - excess),
                                         rho);
  if (warnings != nullptr) {
    warnings->push_back(fmt::format(
        "projected rho from {:.3e} to {:.3e} to restore |tau|+|rho| <= 1",
        rho, projected));
  }
  return TauRho{tau, projected};
}

double TransitionMatrix::MinEntry() const {
  return std::min({entry[0][0], entry[0][1], entry[1][0], entry[1][1]});
}

TransitionMatrix ToTransitionMatrix(const TauRho& tr) {
  const TauRho checked = TauRho::Make(tr.tau, tr.rho);
  const double t = checked.tau;
  const double r = checked.rho;
  auto cell = [](double v) { return std::max(0.0, v); };
  TransitionMatrix m;
  m.entry[0] = {cell(0.5 * (1 + t + r)), cell(0.5 * (1 - t - r))};
  m.entry[1] = {cell(0.5 * (1 - t + r)), cell(0.5 * (1 + t - r))};
  return m;
}

ObservationalJoint ObservationalJoint::Make(
    const std::array<std::array<double, 2>, 2>& cells) {
  std::array<std::array<double, 2>, 2> checked{};
  double total = 0.0;
  for (int x = 0; x < 2; ++x) {
    for (int y = 0; y < 2; ++y) {
      checked[x][y] = CheckProbability(
          cells[x][y], fmt::format("P(X={}, Y={})", x, y));
      total += checked[x][y];
    }
  }
  if (std::abs(total - 1.0) > kProbabilityTolerance) {
    throw Error(ErrorKind::kInvalidProbability,
                fmt::format("observational cells sum to {}, not 1", total));
  }
  return ObservationalJoint(checked);
}

ObservationalJoint ObservationalJoint::FromCells(double x1y1, double x1y0,
                                                 double x0y1, double x0y0) {
  return Make({{{x0y0, x0y1}, {x1y0, x1y1}}});
}

double ObservationalJoint::RecoveryGiven(int x) const {
  const double px = cells_[x][0] + cells_[x][1];
  if (px <= 0.0) {
    throw Error(ErrorKind::kDegenerateObservational,
                fmt::format("P(X={}) = 0; conditional undefined", x));
  }
  return std::clamp(cells_[x][1] / px, 0.0, 1.0);
}

ObservationalMargins ObsMargins(const ObservationalJoint& obs) {
  return {obs.TreatedShare(), obs.RecoveredShare()};
}

CovariateSpec CovariateSpec::Make(std::vector<CovariateLevel> levels) {
  if (levels.empty()) {
    throw Error(ErrorKind::kInvalidProbability,
                "covariate specification needs at least one level");
  }
  std::set<std::string> seen;
  double total = 0.0;
  for (const auto& level : levels) {
    if (!seen.insert(level.label).second) {
      throw Error(ErrorKind::kInvalidProbability,
                  fmt::format("duplicate covariate level '{}'", level.label));
    }
    if (!std::isfinite(level.weight) || level.weight <= 0.0 ||
        level.weight > 1.0 + kProbabilityTolerance) {
      throw Error(ErrorKind::kInvalidProbability,
                  fmt::format("probability out of range: weight of level "
                              "'{}' = {} (must be in (0, 1])",
                              level.label, level.weight));
    }
    total += level.weight;
  }
  if (std::abs(total - 1.0) > kProbabilityTolerance) {
    throw Error(ErrorKind::kInvalidProbability,
                fmt::format("covariate weights sum to {}, not 1", total));
  }
  return CovariateSpec(std::move(levels));
}

CovariateSpec CovariateSpec::Single(const InterventionalSpec& spec,
                                    std::string label) {
  return Make({CovariateLevel{std::move(label), 1.0, spec}});
}

}  // namespace causaldt
