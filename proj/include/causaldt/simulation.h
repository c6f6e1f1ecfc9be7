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

// Monte Carlo comparison of treatment rules on a known ground truth.
//
// Random streams: every (seed, stream) pair seeds an independent
// std::mt19937_64 with SplitMix64(seed ^ SplitMix64(stream + 1)). Replicate r
// of a comparison uses stream r. Uniform variates take the top 53 bits of a
// draw, so cohorts are bit-identical across platforms.

#ifndef CAUSALDT_SIMULATION_H_
#define CAUSALDT_SIMULATION_H_

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "causaldt/ground_truth.h"
#include "causaldt/policy.h"

namespace causaldt {

std::uint64_t SplitMix64(std::uint64_t x);
std::uint64_t StreamSeed(std::uint64_t seed, std::uint64_t stream);

class Rng {
 public:
  Rng(std::uint64_t seed, std::uint64_t stream)
      : engine_(StreamSeed(seed, stream)) {}

  // Uniform on [0, 1).
  double Uniform() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  }

 private:
  std::mt19937_64 engine_;
};

struct Unit {
  std::uint32_t level = 0;
  std::uint8_t y1 = 0;
  std::uint8_t y0 = 0;
};

// n i.i.d. units by inverse CDF over the cells in fixed order: levels in
// order, then (y1, y0) = (1,1), (1,0), (0,1), (0,0). Throws kSimulation when
// n is zero.
std::vector<Unit> SampleCohort(const GroundTruthJoint& gt, std::size_t n,
                               std::uint64_t seed, std::uint64_t stream = 0);

struct PolicyResult {
  std::string policy;
  double exact = 0.0;
  double mc_rate = 0.0;
  double mc_stderr = 0.0;
  // |mc_rate - exact| > 5 * mc_stderr.
  bool flagged = false;
  std::vector<double> replicate_rates;
};

struct SimReport {
  std::vector<PolicyResult> policies;
  Information info = Information::kNone;
  std::size_t n = 0;
  std::uint64_t seed = 0;
  std::size_t replicates = 0;
};

// Runs every rule on the same cohorts. Replicates run concurrently; results
// are assembled in replicate order. Throws kSimulation for n == 0 or
// replicates == 0; policy errors propagate.
SimReport ComparePolicies(const GroundTruthJoint& gt,
                          const std::vector<PolicyRule>& rules,
                          Information info, std::size_t n, std::uint64_t seed,
                          std::size_t replicates);

}  // namespace causaldt

#endif  // CAUSALDT_SIMULATION_H_
