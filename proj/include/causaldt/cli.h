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

// Command-line front end: bounds, fuse, decide, select, simulate and
// paper-examples.
//
// Exit codes:
//   0  success
//   1  internal error
//   2  invalid input (bad flag, unreadable file, probability out of range,
//      infeasible parameters, empty stratum)
//   3  data fusion refused (inconsistent or degenerate observational data)
//   4  policy evaluation failed (bad rule, missing information)
//   5  simulation failed
// paper-examples exits 1 when any embedded value fails to reproduce.

#ifndef CAUSALDT_CLI_H_
#define CAUSALDT_CLI_H_

#include <istream>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "causaldt/distributions.h"
#include "causaldt/error.h"
#include "causaldt/policy.h"
#include "causaldt/records.h"

namespace causaldt {

enum ExitCode : int {
  kExitOk = 0,
  kExitInternal = 1,
  kExitInvalidInput = 2,
  kExitFusion = 3,
  kExitPolicy = 4,
  kExitSimulation = 5,
};

int ExitCodeFor(ErrorKind kind);

// Tables supplied to an analysis. Each regime comes from exactly one source.
struct AnalysisInput {
  std::optional<InterventionalSpec> experimental;
  std::optional<CovariateSpec> covariate;
  std::optional<ObservationalJoint> observational;
  std::optional<RecordCounts> counts;  // set when records were ingested
};

// JSON document with optional keys:
//   "experimental": {"p1": .., "p0": ..} or a list of levels
//   "observational": {"x1y1": .., "x1y0": .., "x0y1": .., "x0y0": ..}
//   "covariate": a list of levels, or {"levels": [...]}
// where a level is {"label": .., "weight": .., "p1": .., "p0": ..}.
// A list under "experimental" is read as the covariate specification.
AnalysisInput ParseAnalysisJson(std::string_view text);

// CSV with header `id,cate`.
std::vector<Candidate> ParseCandidates(std::istream& in);

int RunCli(const std::vector<std::string>& args, std::ostream& out,
           std::ostream& err);

}  // namespace causaldt

#endif  // CAUSALDT_CLI_H_
