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

#include "causaldt/simulation.h"

#include <cmath>
#include <future>

#include <fmt/core.h>

#include "causaldt/error.h"

namespace causaldt {
namespace {

struct CellEntry {
  double cumulative;
  Unit unit;
};

std::vector<CellEntry> BuildCdf(const GroundTruthJoint& gt) {
  static constexpr std::uint8_t kOrder[4][2] = {{1, 1}, {1, 0}, {0, 1}, {0, 0}};
  std::vector<CellEntry> cdf;
  double total = 0.0;
  for (std::size_t l = 0; l < gt.size(); ++l) {
    const auto& level = gt.levels()[l];
    for (const auto& [y1, y0] : kOrder) {
      const double p = level.weight * level.table.At(y1, y0);
      if (p <= 0.0) continue;
      total += p;
      cdf.push_back({total, Unit{static_cast<std::uint32_t>(l), y1, y0}});
    }
  }
  // Rounding must not leave a gap at the top.
  cdf.back().cumulative = 1.0;
  return cdf;
}

struct ReplicateOutcome {
  std::vector<double> rates;  // per rule
};

ReplicateOutcome RunReplicate(const GroundTruthJoint& gt,
                              const std::vector<PolicyRule>& rules,
                              const std::vector<std::vector<bool>>& plans,
                              std::size_t n, std::uint64_t seed,
                              std::uint64_t stream) {
  const std::vector<Unit> cohort = SampleCohort(gt, n, seed, stream);
  ReplicateOutcome out;
  out.rates.reserve(rules.size());
  for (std::size_t r = 0; r < rules.size(); ++r) {
    std::uint64_t recovered = 0;
    if (rules[r].kind == PolicyRule::Kind::kOracleIte) {
      for (const Unit& u : cohort) recovered += (u.y1 | u.y0);
    } else {
      const std::vector<bool>& plan = plans[r];
      for (const Unit& u : cohort) recovered += plan[u.level] ? u.y1 : u.y0;
    }
    out.rates.push_back(static_cast<double>(recovered) /
                        static_cast<double>(n));
  }
  return out;
}

}  // namespace

std::uint64_t SplitMix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::uint64_t StreamSeed(std::uint64_t seed, std::uint64_t stream) {
  return SplitMix64(seed ^ SplitMix64(stream + 1));
}

std::vector<Unit> SampleCohort(const GroundTruthJoint& gt, std::size_t n,
                               std::uint64_t seed, std::uint64_t stream) {
  if (n == 0) {
    throw Error(ErrorKind::kSimulation, "cohort size must be at least 1");
  }
  const std::vector<CellEntry> cdf = BuildCdf(gt);
  Rng rng(seed, stream);
  std::vector<Unit> cohort;
  cohort.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double u = rng.Uniform();
    std::size_t k = 0;
    while (k + 1 < cdf.size() && u >= cdf[k].cumulative) ++k;
    cohort.push_back(cdf[k].unit);
  }
  return cohort;
}

SimReport ComparePolicies(const GroundTruthJoint& gt,
                          const std::vector<PolicyRule>& rules,
                          Information info, std::size_t n, std::uint64_t seed,
                          std::size_t replicates) {
  if (n == 0) {
    throw Error(ErrorKind::kSimulation, "cohort size must be at least 1");
  }
  if (replicates == 0) {
    throw Error(ErrorKind::kSimulation, "need at least one replicate");
  }

  SimReport report;
  report.info = info;
  report.n = n;
  report.seed = seed;
  report.replicates = replicates;

  std::vector<std::vector<bool>> plans(rules.size());
  for (std::size_t r = 0; r < rules.size(); ++r) {
    PolicyResult result;
    result.policy = rules[r].Name();
    result.exact = ExpectedRecoveries(gt, rules[r], info);
    if (rules[r].kind != PolicyRule::Kind::kOracleIte) {
      plans[r] = LevelPlan(gt, rules[r], info);
    }
    report.policies.push_back(std::move(result));
  }

  std::vector<std::future<ReplicateOutcome>> pending;
  pending.reserve(replicates);
  for (std::size_t rep = 0; rep < replicates; ++rep) {
    pending.push_back(std::async(std::launch::async, RunReplicate,
                                 std::cref(gt), std::cref(rules),
                                 std::cref(plans), n, seed, rep));
  }
  for (auto& f : pending) {
    const ReplicateOutcome outcome = f.get();
    for (std::size_t r = 0; r < rules.size(); ++r) {
      report.policies[r].replicate_rates.push_back(outcome.rates[r]);
    }
  }

  for (auto& result : report.policies) {
    const auto& rates = result.replicate_rates;
    const double k = static_cast<double>(rates.size());
    double mean = 0.0;
    for (double v : rates) mean += v;
    mean /= k;
    double stderr_sq = 0.0;
    if (rates.size() >= 2) {
      double ss = 0.0;
      for (double v : rates) ss += (v - mean) * (v - mean);
      stderr_sq = ss / (k - 1.0) / k;
    } else {
      stderr_sq = mean * (1.0 - mean) / static_cast<double>(n);
    }
    result.mc_rate = mean;
    result.mc_stderr = std::sqrt(stderr_sq);
    result.flagged = std::abs(mean - result.exact) > 5.0 * result.mc_stderr +
                                                         kProbabilityTolerance;
  }
  return report;
}

}  // namespace causaldt
