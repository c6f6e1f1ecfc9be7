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

#include "causaldt/worked_examples.h"

#include <algorithm>
#include <cmath>

#include <fmt/core.h>

#include "causaldt/bounds.h"
#include "causaldt/fusion.h"
#include "causaldt/ground_truth.h"
#include "causaldt/policy.h"

namespace causaldt {
namespace {

constexpr double kMatchTolerance = 1e-9;

double Shown(double v) { return std::abs(v) < 5e-5 ? 0.0 : v; }

class Checker {
 public:
  explicit Checker(WorkedExamplesResult& result) : result_(result) {}

  void Scalar(const std::string& example, const std::string& label,
              double actual, double expected) {
    Add(example, fmt::format("{} = {:.4f}", label, Shown(actual)),
        fmt::format("{} = {:.4f}", label, Shown(expected)),
        std::abs(actual - expected) <= kMatchTolerance);
  }

  void Range(const std::string& example, const std::string& label,
             const Interval& actual, double lo, double hi) {
    Add(example,
        fmt::format("{} ∈ [{:.4f}, {:.4f}]", label, Shown(actual.lo),
                    Shown(actual.hi)),
        fmt::format("{} ∈ [{:.4f}, {:.4f}]", label, lo, hi),
        std::abs(actual.lo - lo) <= kMatchTolerance &&
            std::abs(actual.hi - hi) <= kMatchTolerance);
  }

  // A point-identified quantity: the interval must collapse onto `expected`.
  void Point(const std::string& example, const std::string& label,
             const Interval& actual, double expected) {
    const bool ok = actual.Width() <= kMatchTolerance &&
                    std::abs(actual.lo - expected) <= kMatchTolerance;
    Add(example,
        ok ? fmt::format("{} = {:.4f}", label, Shown(actual.lo))
           : fmt::format("{} ∈ [{:.4f}, {:.4f}]", label, Shown(actual.lo),
                         Shown(actual.hi)),
        fmt::format("{} = {:.4f}", label, expected), ok);
  }

  void Choice(const std::string& example, const std::string& label,
              const Decision& actual, Action expected) {
    Add(example, fmt::format("{}: {}", label, actual.Describe()),
        fmt::format("{}: {}", label, ActionName(expected)),
        actual.action == expected);
  }

  void Flag(const std::string& example, const std::string& label,
            bool actual, bool expected) {
    Add(example, fmt::format("{}: {}", label, actual ? "yes" : "no"),
        fmt::format("{}: {}", label, expected ? "yes" : "no"),
        actual == expected);
  }

 private:
  void Add(const std::string& example, std::string actual,
           std::string expected, bool match) {
    if (!match) ++result_.mismatches;
    result_.checks.push_back(
        {example, std::move(actual), std::move(expected), match});
  }

  WorkedExamplesResult& result_;
};

// Level weight times tau or rho for a fused level.
double WeightedTau(const CovariateLevel& level) {
  return level.weight * ToTauRho(level.spec).tau;
}
double WeightedRho(const CovariateLevel& level) {
  return level.weight * ToTauRho(level.spec).rho;
}
double PbLower(const CovariateLevel& level) {
  return std::max(ToTauRho(level.spec).tau, 0.0);
}
double PbUpper(const CovariateLevel& level) {
  return std::min(level.spec.p1(), 1.0 - level.spec.p0());
}

void SingleTargetPatient(Checker& check) {
  const std::string ex = "single patient";
  const InterventionalSpec spec = TrialRecoveryRates();
  check.Scalar(ex, "CATE", spec.p1() - spec.p0(), 0.28);
  check.Choice(ex, "dt decision", DtDecide(spec), Action::kTreat);
  const GroundTruthJoint gt = MakeGroundTruth(CovariateSpec::Single(spec));
  check.Scalar(ex, "recovery rate when all treated",
               ExpectedRecoveries(gt, PolicyRule::Dt(), Information::kNone),
               0.49);
}

void ExperimentalBounds(Checker& check) {
  const std::string ex = "experimental bounds";
  const BenefitHarmReport r = PbPhReport(TrialRecoveryRates());
  check.Scalar(ex, "τ", r.tau, 0.28);
  check.Scalar(ex, "ρ", r.rho, -0.30);
  check.Range(ex, "PB", r.pb, 0.28, 0.49);
  check.Range(ex, "PH", r.ph, 0.0, 0.21);
}

void Females(Checker& check, WorkedExamplesResult& result) {
  const std::string ex = "females";
  const FusedReport f =
      MakeFusedReport(TrialRecoveryRates(), FemalesObservational());
  const auto& wants = f.covariate.levels()[0];
  const auto& declines = f.covariate.levels()[1];
  check.Scalar(ex, "0.7×τ(1)", WeightedTau(wants), 0.19);
  check.Scalar(ex, "0.3×τ(0)", WeightedTau(declines), 0.09);
  check.Scalar(ex, "0.7×ρ(1)", WeightedRho(wants), -0.51);
  check.Scalar(ex, "0.3×ρ(0) (corrected)", WeightedRho(declines), 0.21);
  check.Scalar(ex, "PB-(1)", PbLower(wants), 19.0 / 70.0);
  check.Scalar(ex, "PB+(1)", PbUpper(wants), 19.0 / 70.0);
  check.Scalar(ex, "P(Y=1|X*=1, X←0)", f.itt.At(1, 0), 0.0);
  check.Scalar(ex, "PB-(0)", PbLower(declines), 0.3);
  check.Scalar(ex, "PB+(0)", PbUpper(declines), 0.3);
  check.Scalar(ex, "P(Y=0|X*=0, X←1)", 1.0 - f.itt.At(0, 1), 0.0);
  check.Point(ex, "PB", f.bounds.pb, 0.28);
  check.Point(ex, "PH", f.bounds.ph, 0.0);
  check.Flag(ex, "point identified", f.bounds.point_identified, true);
  check.Choice(ex, "λ=3 rule", LambdaDecide(f.bounds, 3.0), Action::kTreat);
  check.Choice(ex, "dt decision", DtDecide(TrialRecoveryRates()),
               Action::kTreat);

  result.errata.push_back(fmt::format(
      "{} erratum: printed 0.3×ρ(0) = 0.11; P(Y=1|X←1) − K gives "
      "0.3×ρ(0) = {:.4f}, the value that makes U = 0.28 and PB = 0.28",
      ex, WeightedRho(declines)));
}

void Males(Checker& check, WorkedExamplesResult& result) {
  const std::string ex = "males";
  const FusedReport f =
      MakeFusedReport(TrialRecoveryRates(), MalesObservational());
  check.Point(ex, "PB", f.bounds.pb, 0.49);
  check.Point(ex, "PH", f.bounds.ph, 0.21);
  check.Scalar(ex, "P(Y=1|X*=0, X←1)", f.itt.At(0, 1), 0.0);
  check.Scalar(ex, "P(Y=1|X*=1, X←0)", f.itt.At(1, 0), 0.0);
  check.Choice(ex, "λ=3 rule", LambdaDecide(f.bounds, 3.0), Action::kNoTreat);
  check.Choice(ex, "dt decision", DtDecide(TrialRecoveryRates()),
               Action::kTreat);

  const GroundTruthJoint gt = MakeGroundTruth(f.covariate);
  check.Scalar(ex, "recovery rate under dt",
               ExpectedRecoveries(gt, PolicyRule::Dt(), Information::kNone),
               0.49);
  check.Scalar(ex, "recovery rate under λ=3 rule",
               ExpectedRecoveries(gt, PolicyRule::Lambda(3.0),
                                  Information::kNone),
               0.21);

  result.errata.push_back(fmt::format(
      "{} erratum: when balancing, the text labels PH as 0.49 and PB as "
      "0.21; derived PB = {:.4f}, PH = {:.4f} (PH = PB − τ)",
      ex, f.bounds.pb.lo, f.bounds.ph.lo));
}

void Mixed(Checker& check) {
  const std::string ex = "mixed";
  const FusedReport f =
      MakeFusedReport(TrialRecoveryRates(), MixedObservational());
  const auto& wants = f.covariate.levels()[0];
  const auto& declines = f.covariate.levels()[1];
  check.Scalar(ex, "0.7×τ(1)", WeightedTau(wants), 0.09);
  check.Scalar(ex, "0.3×τ(0)", WeightedTau(declines), 0.19);
  check.Scalar(ex, "0.7×ρ(1)", WeightedRho(wants), -0.39);
  check.Scalar(ex, "0.3×ρ(0)", WeightedRho(declines), 0.09);
  check.Range(ex, "ξ", f.bounds.xi, 0.28, 0.52);
  check.Range(ex, "PB", f.bounds.pb, 0.28, 0.40);
  check.Range(ex, "PH", f.bounds.ph, 0.0, 0.12);
  check.Flag(ex, "point identified", f.bounds.point_identified, false);
  check.Choice(ex, "λ=3 rule at midpoints", LambdaDecide(f.bounds, 3.0),
               Action::kTreat);
}

}  // namespace

InterventionalSpec TrialRecoveryRates() {
  return InterventionalSpec::Make(0.49, 0.21);
}

ObservationalJoint FemalesObservational() {
  return ObservationalJoint::FromCells(0.19, 0.51, 0.21, 0.09);
}

ObservationalJoint MalesObservational() {
  return ObservationalJoint::FromCells(0.49, 0.21, 0.21, 0.09);
}

ObservationalJoint MixedObservational() {
  return ObservationalJoint::FromCells(0.2, 0.5, 0.1, 0.2);
}

std::optional<Dataset> FindDataset(std::string_view name) {
  if (name == "simple") return Dataset{"simple", TrialRecoveryRates(), {}};
  if (name == "females") {
    return Dataset{"females", TrialRecoveryRates(), FemalesObservational()};
  }
  if (name == "males") {
    return Dataset{"males", TrialRecoveryRates(), MalesObservational()};
  }
  if (name == "mixed") {
    return Dataset{"mixed", TrialRecoveryRates(), MixedObservational()};
  }
  return std::nullopt;
}

std::vector<std::string> DatasetNames() {
  return {"simple", "females", "males", "mixed"};
}

WorkedExamplesResult RunWorkedExamples() {
  WorkedExamplesResult result;
  Checker check(result);
  SingleTargetPatient(check);
  ExperimentalBounds(check);
  Females(check, result);
  Males(check, result);
  Mixed(check);
  return result;
}

void PrintWorkedExamples(const WorkedExamplesResult& result,
                         std::ostream& out) {
  for (const auto& c : result.checks) {
    out << c.example << ": " << c.actual << (c.match ? " MATCH" : " MISMATCH");
    if (!c.match) out << " (expected " << c.expected << ")";
    out << '\n';
  }
  for (const auto& e : result.errata) out << e << '\n';
  out << fmt::format("{} checks, {} mismatches\n", result.checks.size(),
                     result.mismatches);
}

}  // namespace causaldt
