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

// Fusion of experimental and observational data through the
// intention-to-treat variable X*.
//
// X* is the treatment a patient would choose if left alone. It is unaffected
// by an imposed treatment, and in the observational regime it equals the
// received treatment X. Under distributional consistency these two facts
// identify P(Y=1 | X*=x*, X<-x) for all four (x*, x), which makes X* a
// sufficient covariate with weights P(X*=1) = P(X=1).

#ifndef CAUSALDT_FUSION_H_
#define CAUSALDT_FUSION_H_

#include <array>
#include <string>
#include <vector>

#include "causaldt/bounds.h"
#include "causaldt/distributions.h"

namespace causaldt {

// Level labels used for X* in fused covariate specifications.
inline constexpr const char* kIntendsTreatment = "X*=1";
inline constexpr const char* kIntendsControl = "X*=0";

// Default clamp window for identified entries that fall marginally outside
// [0, 1] because the inputs are estimates.
inline constexpr double kIttClampTolerance = 1e-6;

struct IttConditional {
  // recovery[x*][x] = P(Y=1 | X*=x*, X<-x).
  std::array<std::array<double, 2>, 2> recovery{};
  double intends_treatment = 0.0;  // P(X*=1)
  std::vector<std::string> warnings;

  double At(int intended, int imposed) const {
    return recovery[intended][imposed];
  }
};

// A cell where P(Y=y, X=x) exceeds P(Y=y | X<-x), which is impossible under
// the fusion assumptions.
struct ConsistencyFinding {
  int x = 0;
  int y = 0;
  double interventional = 0.0;  // P(Y=y | X<-x)
  double observational = 0.0;   // P(Y=y, X=x)
  double violation = 0.0;       // max(observational - interventional, 0)
};

std::vector<ConsistencyFinding> CheckConsistency(
    const InterventionalSpec& exp, const ObservationalJoint& obs,
    double tolerance = kProbabilityTolerance);

// Throws kDegenerateObservational unless 0 < P(X=1) < 1, and
// kInconsistentData when an identified probability leaves
// [-tolerance, 1 + tolerance]. Entries inside that window are clamped.
IttConditional IdentifyItt(const InterventionalSpec& exp,
                           const ObservationalJoint& obs,
                           double tolerance = kIttClampTolerance);

// Two levels, X*=1 then X*=0, with the identified interventional specs.
CovariateSpec FusedCovariateSpec(const IttConditional& itt);
CovariateSpec FusedCovariateSpec(const InterventionalSpec& exp,
                                 const ObservationalJoint& obs,
                                 double tolerance = kIttClampTolerance);

struct FusedReport {
  IttConditional itt;
  CovariateSpec covariate;
  BenefitHarmReport bounds;
  // K = P(Y=1, X=1) + P(Y=0, X=0), read from the observational cells.
  double k = 0.0;
  // Closed-form xi range from the margins and K; must agree with bounds.xi.
  Interval closed_form_xi;
  // Point identification from the data alone: for each arm x some y has
  // P(Y=y | X<-x) = P(Y=y, X=x).
  bool margin_conditions_hold = false;
};

FusedReport MakeFusedReport(const InterventionalSpec& exp,
                            const ObservationalJoint& obs,
                            double tolerance = kIttClampTolerance);

}  // namespace causaldt

#endif  // CAUSALDT_FUSION_H_
