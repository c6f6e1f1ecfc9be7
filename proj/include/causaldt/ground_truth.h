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

#ifndef CAUSALDT_GROUND_TRUTH_H_
#define CAUSALDT_GROUND_TRUTH_H_

#include <string>
#include <vector>

#include "causaldt/bounds.h"
#include "causaldt/distributions.h"

namespace causaldt {

// Full distribution of (L, Y(1), Y(0)). Used as the simulation oracle: unlike
// any data set it fixes the joint law of both potential outcomes.
class GroundTruthJoint {
 public:
  struct Level {
    std::string label;
    double weight = 0.0;
    PoJointTable table;
  };

  // Throws kInvalidProbability on negative cells, cells not summing to one,
  // or weights that are not positive and summing to one.
  static GroundTruthJoint Make(std::vector<Level> levels);

  const std::vector<Level>& levels() const { return levels_; }
  std::size_t size() const { return levels_.size(); }

  // Interventional margins of a level: P(Y(1)=1 | l), P(Y(0)=1 | l).
  InterventionalSpec LevelSpec(std::size_t i) const;
  CovariateSpec ToCovariateSpec() const;
  // Population margins P(Y(1)=1), P(Y(0)=1).
  InterventionalSpec Marginal() const;

 private:
  explicit GroundTruthJoint(std::vector<Level> levels)
      : levels_(std::move(levels)) {}
  std::vector<Level> levels_;
};

struct XiChoice {
  enum class Mode { kMidpoint, kLower, kUpper, kExplicit };
  Mode mode = Mode::kMidpoint;
  std::vector<double> values;  // one per level, kExplicit only

  static XiChoice Explicit(std::vector<double> values) {
    return {Mode::kExplicit, std::move(values)};
  }
};

// Builds a ground truth whose per-level margins match `cov`, choosing the
// slack xi(l) of every level as requested. Explicit values outside a level's
// feasible range throw kXiOutOfRange.
GroundTruthJoint MakeGroundTruth(const CovariateSpec& cov,
                                 const XiChoice& choice = {});

}  // namespace causaldt

#endif  // CAUSALDT_GROUND_TRUTH_H_
