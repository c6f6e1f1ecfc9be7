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

// Treatment decision rules.
//
// The decision-theoretic (dt) rule treats exactly when the conditional average
// treatment effect is positive; it maximises expected recoveries among all
// rules that use the same information. The lambda rule treats when
// PB > lambda * PH and exists here to be evaluated against it.

#ifndef CAUSALDT_POLICY_H_
#define CAUSALDT_POLICY_H_

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "causaldt/bounds.h"
#include "causaldt/distributions.h"
#include "causaldt/ground_truth.h"

namespace causaldt {

inline constexpr double kIndifferenceBand = 1e-9;

enum class Action { kTreat, kNoTreat, kIndifferent };

std::string_view ActionName(Action action);

struct Rationale {
  std::string rule;      // "dt" or "lambda"
  std::string quantity;  // what was compared, e.g. "CATE"
  double value = 0.0;    // the deciding quantity
  double threshold = 0.0;
  std::string note;
};

struct Decision {
  Action action = Action::kIndifferent;
  Rationale rationale;

  // Indifference resolves to no treatment.
  bool Treats() const { return action == Action::kTreat; }
  // One-line human summary, four decimals.
  std::string Describe() const;
};

// How an interval-valued PB or PH is reduced to a number.
enum class Resolution { kMidpoint, kLower, kUpper };

std::string_view ResolutionName(Resolution resolution);
double Resolve(const Interval& interval, Resolution resolution);

struct PolicyRule {
  enum class Kind { kDt, kTreatAll, kTreatNone, kLambda, kOracleIte };
  Kind kind = Kind::kDt;
  double lambda = 1.0;
  Resolution resolution = Resolution::kMidpoint;

  static PolicyRule Dt() { return {Kind::kDt}; }
  static PolicyRule TreatAll() { return {Kind::kTreatAll}; }
  static PolicyRule TreatNone() { return {Kind::kTreatNone}; }
  static PolicyRule OracleIte() { return {Kind::kOracleIte}; }
  // Throws kPolicy unless lambda > 0.
  static PolicyRule Lambda(double lambda,
                           Resolution resolution = Resolution::kMidpoint);

  // Accepts "dt", "treat_all", "treat_none", "oracle_ite",
  // "lambda:<value>[:midpoint|lower|upper]".
  static PolicyRule Parse(std::string_view text);
  std::string Name() const;
};

// What the decision maker knows about a unit when deciding.
//   kNone:  nothing; one action for everybody.
//   kLevel: the unit's covariate level.
//   kFull:  both potential outcomes (only oracle_ite needs this).
enum class Information { kNone, kLevel, kFull };

std::string_view InformationName(Information info);

Decision DtDecide(const InterventionalSpec& spec);

// Averages per-level specs over the level weights; what a decision maker must
// use when the target's level is unknown.
InterventionalSpec MarginalSpec(const CovariateSpec& cov);

struct Candidate {
  std::string id;
  double cate = 0.0;
};

// Ids with CATE above the indifference band, highest first, at most
// `capacity` of them. Equal CATEs keep input order.
std::vector<std::string> UnitSelect(std::span<const Candidate> patients,
                                    std::size_t capacity);

Decision LambdaDecide(const BenefitHarmReport& report, double lambda,
                      Resolution resolution = Resolution::kMidpoint);

// Per-level treat/no-treat plan of a rule that does not need the unit's
// potential outcomes. Throws kInsufficientInformation for oracle_ite unless
// info is kFull, in which case it throws kPolicy (oracle plans are per unit).
std::vector<bool> LevelPlan(const GroundTruthJoint& gt, const PolicyRule& rule,
                            Information info);

// Exact per-capita expected recovery rate under a rule.
double ExpectedRecoveries(const GroundTruthJoint& gt, const PolicyRule& rule,
                          Information info);

// Exact rate of a fixed level-measurable plan (treat[l] per level).
double ExpectedRecoveries(const GroundTruthJoint& gt,
                          const std::vector<bool>& treat);

}  // namespace causaldt

#endif  // CAUSALDT_POLICY_H_
