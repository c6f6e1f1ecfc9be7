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

// Validated probability tables for a binary treatment X and binary outcome Y.
//
// Interventional quantities P(Y=1 | X<-x) come from experiments, observational
// quantities P(X=x, Y=y) from passive observation. All types are immutable
// once constructed; factories validate and clamp values that lie within
// kProbabilityTolerance of [0, 1].

#ifndef CAUSALDT_DISTRIBUTIONS_H_
#define CAUSALDT_DISTRIBUTIONS_H_

#include <array>
#include <string>
#include <string_view>
#include <vector>

namespace causaldt {

inline constexpr double kProbabilityTolerance = 1e-9;

// Returns `value` clamped into [0, 1] when it lies within the tolerance of
// that range; throws kInvalidProbability otherwise. `what` names the value in
// the error message.
double CheckProbability(double value, std::string_view what);

// The pair P(Y=1 | X<-1), P(Y=1 | X<-0).
class InterventionalSpec {
 public:
  static InterventionalSpec Make(double p1, double p0);

  double p1() const { return p1_; }
  double p0() const { return p0_; }
  // P(Y=y | X<-x).
  double Outcome(int x, int y) const;

 private:
  InterventionalSpec(double p1, double p0) : p1_(p1), p0_(p0) {}
  double p1_;
  double p0_;
};

// tau = p1 - p0 is the average treatment effect; rho = p1 + p0 - 1 measures
// how common recovery is. A pair is feasible iff |tau| + |rho| <= 1.
struct TauRho {
  double tau = 0.0;
  double rho = 0.0;

  // Throws kInfeasibleTauRho when |tau| + |rho| > 1 + tolerance.
  static TauRho Make(double tau, double rho);
};

TauRho ToTauRho(const InterventionalSpec& spec);

// Restores feasibility of (tau, rho) obtained from noisy estimates. Excess up
// to kFeasibilityProjectionLimit is removed by shrinking |rho| and a warning
// is appended; larger excess throws kInfeasibleTauRho.
inline constexpr double kFeasibilityProjectionLimit = 1e-6;
TauRho ProjectFeasible(double tau, double rho,
                       std::vector<std::string>* warnings);

// Rows indexed by x in {1, 0}, columns by y in {1, 0}, in that order.
struct TransitionMatrix {
  std::array<std::array<double, 2>, 2> entry{};

  // P(Y=y | X<-x) using natural 0/1 indices.
  double At(int x, int y) const { return entry[1 - x][1 - y]; }
  double MinEntry() const;
};

TransitionMatrix ToTransitionMatrix(const TauRho& tr);

// Joint distribution of received treatment and outcome in the observational
// regime. Degenerate treatment margins are representable; operations that
// need positivity check it themselves.
class ObservationalJoint {
 public:
  // cells[x][y] = P(X=x, Y=y).
  static ObservationalJoint Make(
      const std::array<std::array<double, 2>, 2>& cells);
  static ObservationalJoint FromCells(double x1y1, double x1y0, double x0y1,
                                     double x0y0);

  double Cell(int x, int y) const { return cells_[x][y]; }
  double TreatedShare() const { return cells_[1][0] + cells_[1][1]; }
  double RecoveredShare() const { return cells_[0][1] + cells_[1][1]; }
  // P(Y=1 | X=x); requires P(X=x) > 0.
  double RecoveryGiven(int x) const;

 private:
  explicit ObservationalJoint(
      const std::array<std::array<double, 2>, 2>& cells)
      : cells_(cells) {}
  std::array<std::array<double, 2>, 2> cells_;
};

struct ObservationalMargins {
  double treated = 0.0;    // P(X=1)
  double recovered = 0.0;  // P(Y=1)
};

ObservationalMargins ObsMargins(const ObservationalJoint& obs);

struct CovariateLevel {
  std::string label;
  double weight = 0.0;
  InterventionalSpec spec;
};

// A discrete pre-treatment covariate with known level weights P(L=l) and
// per-level interventional probabilities. Level order is input order.
class CovariateSpec {
 public:
  static CovariateSpec Make(std::vector<CovariateLevel> levels);
  static CovariateSpec Single(const InterventionalSpec& spec,
                              std::string label = "all");

  const std::vector<CovariateLevel>& levels() const { return levels_; }
  std::size_t size() const { return levels_.size(); }

 private:
  explicit CovariateSpec(std::vector<CovariateLevel> levels)
      : levels_(std::move(levels)) {}
  std::vector<CovariateLevel> levels_;
};

}  // namespace causaldt

#endif  // CAUSALDT_DISTRIBUTIONS_H_
