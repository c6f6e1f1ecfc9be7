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

#include "causaldt/ground_truth.h"

#include <cmath>

#include <fmt/core.h>

#include "causaldt/error.h"

namespace causaldt {

GroundTruthJoint GroundTruthJoint::Make(std::vector<Level> levels) {
  if (levels.empty()) {
    throw Error(ErrorKind::kInvalidProbability, "ground truth has no levels");
  }
  double total_weight = 0.0;
  for (const auto& level : levels) {
    if (!(level.weight > 0.0)) {
      throw Error(ErrorKind::kInvalidProbability,
                  fmt::format("level '{}' has non-positive weight {}",
                              level.label, level.weight));
    }
    total_weight += level.weight;
    double total = 0.0;
    for (const auto& row : level.table.cell) {
      for (double c : row) {
        if (!(c >= -kProbabilityTolerance)) {
          throw Error(ErrorKind::kInvalidProbability,
                      fmt::format("level '{}' has negative cell {}",
                                  level.label, c));
        }
        total += c;
      }
    }
    if (std::abs(total - 1.0) > kProbabilityTolerance) {
      throw Error(ErrorKind::kInvalidProbability,
                  fmt::format("level '{}' cells sum to {}", level.label,
                              total));
    }
  }
  if (std::abs(total_weight - 1.0) > kProbabilityTolerance) {
    throw Error(ErrorKind::kInvalidProbability,
                fmt::format("level weights sum to {}", total_weight));
  }
  return GroundTruthJoint(std::move(levels));
}

InterventionalSpec GroundTruthJoint::LevelSpec(std::size_t i) const {
  const PoJointTable& t = levels_.at(i).table;
  return InterventionalSpec::Make(t.At(1, 1) + t.At(1, 0),
                                  t.At(1, 1) + t.At(0, 1));
}

CovariateSpec GroundTruthJoint::ToCovariateSpec() const {
  std::vector<CovariateLevel> levels;
  levels.reserve(levels_.size());
  for (std::size_t i = 0; i < levels_.size(); ++i) {
    levels.push_back({levels_[i].label, levels_[i].weight, LevelSpec(i)});
  }
  return CovariateSpec::Make(std::move(levels));
}

InterventionalSpec GroundTruthJoint::Marginal() const {
  double p1 = 0.0;
  double p0 = 0.0;
  for (std::size_t i = 0; i < levels_.size(); ++i) {
    const InterventionalSpec s = LevelSpec(i);
    p1 += levels_[i].weight * s.p1();
    p0 += levels_[i].weight * s.p0();
  }
  return InterventionalSpec::Make(p1, p0);
}

GroundTruthJoint MakeGroundTruth(const CovariateSpec& cov,
                                 const XiChoice& choice) {
  if (choice.mode == XiChoice::Mode::kExplicit &&
      choice.values.size() != cov.size()) {
    throw Error(ErrorKind::kXiOutOfRange,
                fmt::format("{} explicit xi values given for {} levels",
                            choice.values.size(), cov.size()));
  }
  std::vector<GroundTruthJoint::Level> levels;
  for (std::size_t i = 0; i < cov.size(); ++i) {
    const CovariateLevel& level = cov.levels()[i];
    const TauRho tr = ToTauRho(level.spec);
    const Interval range = XiInterval(tr);
    double xi = range.Midpoint();
    switch (choice.mode) {
      case XiChoice::Mode::kMidpoint: break;
      case XiChoice::Mode::kLower: xi = range.lo; break;
      case XiChoice::Mode::kUpper: xi = range.hi; break;
      case XiChoice::Mode::kExplicit: xi = choice.values[i]; break;
    }
    levels.push_back({level.label, level.weight, PoJoint(tr, xi)});
  }
  return GroundTruthJoint::Make(std::move(levels));
}

}  // namespace causaldt
