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

// Acceptance checks. Prints one PASS/FAIL line per criterion and exits
// nonzero when any fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <fmt/core.h>

#include "causaldt/bounds.h"
#include "causaldt/cli.h"
#include "causaldt/distributions.h"
#include "causaldt/fusion.h"
#include "causaldt/ground_truth.h"
#include "causaldt/policy.h"
#include "causaldt/simulation.h"
#include "causaldt/worked_examples.h"

namespace causaldt {
namespace {

constexpr double kEps = 1e-9;

// Accumulates failures of one criterion.
class Tally {
 public:
  void Expect(bool ok, const std::string& what) {
    if (!ok && first_failure_.empty()) first_failure_ = what;
    failures_ += !ok;
  }
  void Near(double actual, double expected, double tol,
            const std::string& what) {
    Expect(std::abs(actual - expected) <= tol,
           fmt::format("{}: got {:.12g}, want {:.12g}", what, actual,
                       expected));
  }
  bool ok() const { return failures_ == 0; }
  const std::string& first_failure() const { return first_failure_; }

 private:
  int failures_ = 0;
  std::string first_failure_;
};

struct SyntheticWorld {
  double pi1 = 0.5;
  double recovery[2][2] = {};  // [x*][x]
  InterventionalSpec exp = InterventionalSpec::Make(0, 0);
  ObservationalJoint obs = ObservationalJoint::FromCells(0, 0, 0, 1);
};

SyntheticWorld DrawWorld(std::mt19937_64& gen) {
  std::uniform_real_distribution<double> share(0.05, 0.95);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  SyntheticWorld w;
  w.pi1 = share(gen);
  for (auto& row : w.recovery) {
    for (double& v : row) v = unit(gen);
  }
  const double pi0 = 1.0 - w.pi1;
  const double p1 = w.pi1 * w.recovery[1][1] + pi0 * w.recovery[0][1];
  const double p0 = w.pi1 * w.recovery[1][0] + pi0 * w.recovery[0][0];
  w.exp = InterventionalSpec::Make(p1, p0);
  w.obs = ObservationalJoint::FromCells(
      w.pi1 * w.recovery[1][1], w.pi1 * (1.0 - w.recovery[1][1]),
      pi0 * w.recovery[0][0], pi0 * (1.0 - w.recovery[0][0]));
  return w;
}

CovariateSpec DrawCovariate(std::mt19937_64& gen, int max_levels) {
  std::uniform_int_distribution<int> count(1, max_levels);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const int n = count(gen);
  std::vector<double> w(n);
  double total = 0.0;
  for (double& v : w) total += (v = 0.05 + unit(gen));
  std::vector<CovariateLevel> levels;
  for (int i = 0; i < n; ++i) {
    levels.push_back({"l" + std::to_string(i), w[i] / total,
                      InterventionalSpec::Make(unit(gen), unit(gen))});
  }
  return CovariateSpec::Make(std::move(levels));
}

GroundTruthJoint DrawGroundTruth(std::mt19937_64& gen, int max_levels) {
  std::uniform_int_distribution<int> count(1, max_levels);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const int n = count(gen);
  std::vector<double> w(n);
  double total = 0.0;
  for (double& v : w) total += (v = 0.05 + unit(gen));
  std::vector<GroundTruthJoint::Level> levels;
  for (int i = 0; i < n; ++i) {
    double c[4];
    double s = 0.0;
    for (double& v : c) s += (v = unit(gen));
    PoJointTable t;
    t.cell = {{{c[0] / s, c[1] / s}, {c[2] / s, c[3] / s}}};
    levels.push_back({"l" + std::to_string(i), w[i] / total, t});
  }
  return GroundTruthJoint::Make(std::move(levels));
}

Tally SimpleBounds() {
  Tally t;
  const BenefitHarmReport r = PbPhReport(InterventionalSpec::Make(0.49, 0.21));
  t.Near(r.pb.lo, 0.28, kEps, "PB lower");
  t.Near(r.pb.hi, 0.49, kEps, "PB upper");
  t.Near(r.ph.lo, 0.0, kEps, "PH lower");
  t.Near(r.ph.hi, 0.21, kEps, "PH upper");
  return t;
}

Tally Females() {
  Tally t;
  const IttConditional itt =
      IdentifyItt(TrialRecoveryRates(), FemalesObservational());
  t.Near(itt.At(1, 0), 0.0, kEps, "P(Y=1|X*=1, X<-0)");
  t.Near(1.0 - itt.At(0, 1), 0.0, kEps, "P(Y=0|X*=0, X<-1)");
  const FusedReport f =
      MakeFusedReport(TrialRecoveryRates(), FemalesObservational());
  t.Near(f.bounds.pb.lo, 0.28, kEps, "PB lower");
  t.Near(f.bounds.pb.hi, 0.28, kEps, "PB upper");
  t.Near(f.bounds.ph.lo, 0.0, kEps, "PH lower");
  t.Near(f.bounds.ph.hi, 0.0, kEps, "PH upper");
  t.Expect(f.bounds.pb.Width() <= kEps && f.bounds.ph.Width() <= kEps,
           "interval width");
  return t;
}

Tally Males() {
  Tally t;
  const FusedReport f =
      MakeFusedReport(TrialRecoveryRates(), MalesObservational());
  t.Near(f.bounds.pb.lo, 0.49, kEps, "PB lower");
  t.Near(f.bounds.pb.hi, 0.49, kEps, "PB upper");
  t.Near(f.bounds.ph.lo, 0.21, kEps, "PH lower");
  t.Near(f.bounds.ph.hi, 0.21, kEps, "PH upper");
  t.Expect(f.bounds.point_identified, "point identified");
  t.Expect(LambdaDecide(f.bounds, 3.0, Resolution::kMidpoint).action ==
               Action::kNoTreat,
           "lambda=3 decision");
  t.Expect(DtDecide(TrialRecoveryRates()).action == Action::kTreat,
           "dt decision");
  return t;
}

Tally Mixed() {
  Tally t;
  const FusedReport f =
      MakeFusedReport(TrialRecoveryRates(), MixedObservational());
  t.Near(f.bounds.xi.lo, 0.28, kEps, "xi lower");
  t.Near(f.bounds.xi.hi, 0.52, kEps, "xi upper");
  t.Near(f.bounds.pb.lo, 0.28, kEps, "PB lower");
  t.Near(f.bounds.pb.hi, 0.40, kEps, "PB upper");
  t.Near(f.bounds.ph.lo, 0.0, kEps, "PH lower");
  t.Near(f.bounds.ph.hi, 0.12, kEps, "PH upper");
  t.Expect(!f.bounds.point_identified, "not point identified");
  const Interval oracle = OraclePbBounds(f.covariate, 1001);
  t.Near(oracle.lo, f.bounds.pb.lo, 1e-3, "oracle PB lower");
  t.Near(oracle.hi, f.bounds.pb.hi, 1e-3, "oracle PB upper");
  return t;
}

Tally RecoveryComparison() {
  Tally t;
  const auto start = std::chrono::steady_clock::now();
  const GroundTruthJoint gt = MakeGroundTruth(
      FusedCovariateSpec(TrialRecoveryRates(), MalesObservational()));
  const SimReport report = ComparePolicies(
      gt, {PolicyRule::Dt(), PolicyRule::TreatAll(), PolicyRule::Lambda(3.0)},
      Information::kNone, 100000, 20260101, 20);
  const double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();
  const double expected[] = {0.49, 0.49, 0.21};
  for (std::size_t i = 0; i < report.policies.size(); ++i) {
    const PolicyResult& p = report.policies[i];
    t.Near(p.exact, expected[i], kEps, p.policy + " exact");
    t.Expect(std::abs(p.mc_rate - p.exact) <= 4 * p.mc_stderr,
             fmt::format("{} Monte Carlo {:.5f} vs exact {:.5f}, se {:.6f}",
                         p.policy, p.mc_rate, p.exact, p.mc_stderr));
  }
  t.Expect(seconds <= 5.0, fmt::format("runtime {:.2f} s", seconds));
  return t;
}

Tally PropertySuite() {
  constexpr int kInstances = 1000;
  Tally t;
  std::mt19937_64 gen(20260415);
  std::uniform_real_distribution<double> unit(0.0, 1.0);

  // Mixing the identified conditionals over P(X*) returns the experiment.
  for (int i = 0; i < kInstances; ++i) {
    const SyntheticWorld w = DrawWorld(gen);
    const InterventionalSpec m =
        MarginalSpec(FusedCovariateSpec(w.exp, w.obs));
    t.Near(m.p1(), w.exp.p1(), kEps, "mixture p1");
    t.Near(m.p0(), w.exp.p0(), kEps, "mixture p0");
  }
  // Covariate bounds sit inside the marginal bounds.
  for (int i = 0; i < kInstances; ++i) {
    const CovariateSpec cov = DrawCovariate(gen, 5);
    const BenefitHarmReport fine = CovariateReport(cov);
    const BenefitHarmReport coarse = PbPhReport(MarginalSpec(cov));
    t.Expect(fine.xi.Within(coarse.xi, kEps), "xi refinement");
    t.Expect(fine.pb.Within(coarse.pb, kEps), "PB refinement");
    t.Expect(fine.ph.Within(coarse.ph, kEps), "PH refinement");
  }
  // PH = PB - tau at both ends.
  for (int i = 0; i < kInstances; ++i) {
    const CovariateSpec cov = DrawCovariate(gen, 3);
    const BenefitHarmReport r = CovariateReport(cov);
    t.Near(r.ph.lo, r.pb.lo - r.tau, kEps, "PH lower");
    t.Near(r.ph.hi, r.pb.hi - r.tau, kEps, "PH upper");
  }
  // Potential-outcome tables reproduce the transition matrix.
  for (int i = 0; i < kInstances; ++i) {
    const TauRho tr = ToTauRho(InterventionalSpec::Make(unit(gen), unit(gen)));
    const Interval xi = XiInterval(tr);
    const PoJointTable table = PoJoint(tr, xi.lo + unit(gen) * xi.Width());
    const TransitionMatrix m = ToTransitionMatrix(tr);
    t.Near(table.At(1, 1) + table.At(1, 0), m.At(1, 1), kEps, "Y(1) margin");
    t.Near(table.At(1, 1) + table.At(0, 1), m.At(0, 1), kEps, "Y(0) margin");
    double total = 0.0;
    for (int a = 0; a < 2; ++a) {
      for (int b = 0; b < 2; ++b) {
        t.Expect(table.At(a, b) >= -kEps, "nonnegative cell");
        total += table.At(a, b);
      }
    }
    t.Near(total, 1.0, kEps, "table total");
  }
  // The fused conditionals recover the generating world.
  for (int i = 0; i < kInstances; ++i) {
    const SyntheticWorld w = DrawWorld(gen);
    const IttConditional itt = IdentifyItt(w.exp, w.obs);
    t.Near(itt.intends_treatment, w.pi1, kEps, "P(X*=1)");
    for (int s = 0; s < 2; ++s) {
      for (int x = 0; x < 2; ++x) {
        t.Near(itt.At(s, x), w.recovery[s][x], kEps, "ITT conditional");
      }
    }
  }
  return t;
}

Tally Optimality() {
  Tally t;
  std::mt19937_64 gen(20260507);
  for (int i = 0; i < 200; ++i) {
    const GroundTruthJoint gt = DrawGroundTruth(gen, 4);
    const double dt =
        ExpectedRecoveries(gt, PolicyRule::Dt(), Information::kLevel);
    const std::size_t n = gt.size();
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
      std::vector<bool> plan(n);
      for (std::size_t l = 0; l < n; ++l) plan[l] = (mask >> l) & 1u;
      t.Expect(dt + 1e-12 >= ExpectedRecoveries(gt, plan),
               fmt::format("ground truth {} plan {}", i, mask));
    }
  }
  std::uniform_real_distribution<double> cate(-1.0, 1.0);
  std::uniform_int_distribution<int> size(0, 12);
  for (int i = 0; i < 100; ++i) {
    const int n = size(gen);
    std::vector<Candidate> patients;
    for (int k = 0; k < n; ++k) {
      patients.push_back({std::to_string(k), cate(gen)});
    }
    const std::size_t capacity = std::uniform_int_distribution<int>(0, n)(gen);
    double best = 0.0;
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
      if (static_cast<std::size_t>(__builtin_popcount(mask)) > capacity) {
        continue;
      }
      double sum = 0.0;
      for (int k = 0; k < n; ++k) {
        if (mask & (1u << k)) sum += patients[k].cate;
      }
      best = std::max(best, sum);
    }
    const auto chosen = UnitSelect(patients, capacity);
    double got = 0.0;
    for (const auto& id : chosen) got += patients[std::stoi(id)].cate;
    t.Expect(chosen.size() <= capacity, "capacity respected");
    t.Near(got, best, 1e-12, fmt::format("selection instance {}", i));
  }
  return t;
}

Tally WorkedExamples() {
  Tally t;
  std::ostringstream out;
  std::ostringstream err;
  const int code = RunCli({"paper-examples"}, out, err);
  const std::string text = out.str();
  t.Expect(code == 0, fmt::format("exit code {}", code));
  t.Expect(text.find(" 0 mismatches") != std::string::npos, "mismatch count");
  t.Expect(text.find("0.3×ρ(0) = 0.2100") != std::string::npos,
           "corrected 0.3×ρ(0) reported");
  t.Expect(text.find("labels PH as 0.49 and PB as 0.21") != std::string::npos &&
               text.find("derived PB = 0.4900, PH = 0.2100") !=
                   std::string::npos,
           "PB/PH label order reported");
  return t;
}

struct Criterion {
  std::string name;
  std::function<Tally()> check;
};

}  // namespace
}  // namespace causaldt

int main() {
  using causaldt::Criterion;
  const std::vector<Criterion> criteria{
      {"simple bounds from (0.49, 0.21)", causaldt::SimpleBounds},
      {"females: zero cells, PB = 0.28 and PH = 0 point values",
       causaldt::Females},
      {"males: PB = 0.49, PH = 0.21; lambda=3 no_treat; dt treat",
       causaldt::Males},
      {"mixed: xi, PB and PH intervals; oracle grid 1001 agrees",
       causaldt::Mixed},
      {"recovery rates 0.49 vs 0.21, Monte Carlo within 4 se, <= 5 s",
       causaldt::RecoveryComparison},
      {"property suite, 5 x 1000 seeded instances", causaldt::PropertySuite},
      {"dt optimal by enumeration; unit selection matches brute force",
       causaldt::Optimality},
      {"paper-examples exits 0 and reports both errata",
       causaldt::WorkedExamples},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    causaldt::Tally tally;
    try {
      tally = criteria[i].check();
    } catch (const std::exception& e) {
      tally.Expect(false, std::string("exception: ") + e.what());
    }
    if (tally.ok()) {
      std::cout << fmt::format("criterion {}: PASS  {}\n", i + 1,
                               criteria[i].name);
    } else {
      ++failed;
      std::cout << fmt::format("criterion {}: FAIL  {}  ({})\n", i + 1,
                               criteria[i].name, tally.first_failure());
    }
  }
  std::cout << fmt::format("{} of {} criteria passed\n",
                           criteria.size() - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
