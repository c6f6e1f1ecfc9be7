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

// Bounds on the probabilities of benefit and harm.
//
// Interventional margins fix the joint distribution of the potential outcomes
// (Y(1), Y(0)) up to one slack parameter xi, with
//
//   P(1,1) = (1 + rho - xi)/2    P(1,0) = (xi + tau)/2
//   P(0,1) = (xi - tau)/2        P(0,0) = (1 - rho - xi)/2
//
// and |tau| <= xi <= 1 - |rho|. Benefit is PB = P(1,0), harm PH = P(0,1) =
// PB - tau. A covariate L narrows the range of xi to a mixture of per-level
// ranges.

#ifndef CAUSALDT_BOUNDS_H_
#define CAUSALDT_BOUNDS_H_

#include <array>
#include <string>
#include <vector>

#include "causaldt/distributions.h"

namespace causaldt {

struct Interval {
  double lo = 0.0;
  double hi = 0.0;

  double Width() const { return hi - lo; }
  double Midpoint() const { return 0.5 * (lo + hi); }
  bool Contains(double v, double tolerance = kProbabilityTolerance) const {
    return v >= lo - tolerance && v <= hi + tolerance;
  }
  bool Within(const Interval& outer,
              double tolerance = kProbabilityTolerance) const {
    return lo >= outer.lo - tolerance && hi <= outer.hi + tolerance;
  }
};

// P(Y(1)=y1, Y(0)=y0) stored as cell[1-y1][1-y0], i.e. rows and columns in
// the order 1, 0.
struct PoJointTable {
  std::array<std::array<double, 2>, 2> cell{};

  double At(int y1, int y0) const { return cell[1 - y1][1 - y0]; }
  double Benefit() const { return At(1, 0); }
  double Harm() const { return At(0, 1); }
};

// A cell with P(Y=y | level, X<-x) = 0. An empty label means no covariate.
struct ZeroCellWitness {
  std::string level;
  int x = 0;
  int y = 0;
};

struct BenefitHarmReport {
  double tau = 0.0;
  double rho = 0.0;
  Interval xi;
  Interval pb;
  Interval ph;
  bool point_identified = false;
  std::vector<ZeroCellWitness> witnesses;
  std::vector<std::string> warnings;
};

Interval XiInterval(const TauRho& tr);

// Throws kXiOutOfRange when xi lies outside XiInterval(tr).
PoJointTable PoJoint(const TauRho& tr, double xi);

BenefitHarmReport PbPhReport(const InterventionalSpec& spec);

BenefitHarmReport CovariateReport(const CovariateSpec& cov);

// Brute-force bounds on PB. For every level, enumerates grid_n joint tables
// with the level's margins, spanning the full Frechet range of the P(1,1)
// cell, and reads PB off the table. Since PB mixes linearly across levels the
// extremes are sums of per-level extremes. grid_n must be at least 2.
Interval OraclePbBounds(const CovariateSpec& cov, int grid_n);
Interval OraclePbBounds(const InterventionalSpec& spec, int grid_n);

}  // namespace causaldt

#endif  // CAUSALDT_BOUNDS_H_
