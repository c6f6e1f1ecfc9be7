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

// Built-in data sets and the worked-example regression report.
//
// All four data sets share the experimental recovery rates 0.49 (treated)
// and 0.21 (untreated). They differ in the observational joint of (X, Y).

#ifndef CAUSALDT_WORKED_EXAMPLES_H_
#define CAUSALDT_WORKED_EXAMPLES_H_

#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "causaldt/distributions.h"

namespace causaldt {

struct Dataset {
  std::string name;
  InterventionalSpec experimental;
  std::optional<ObservationalJoint> observational;
};

InterventionalSpec TrialRecoveryRates();     // (0.49, 0.21)
ObservationalJoint FemalesObservational();   // 0.19 0.51 / 0.21 0.09
ObservationalJoint MalesObservational();     // 0.49 0.21 / 0.21 0.09
ObservationalJoint MixedObservational();    // 0.2 0.5 / 0.1 0.2

// "simple", "females", "males" or "mixed".
std::optional<Dataset> FindDataset(std::string_view name);
std::vector<std::string> DatasetNames();

struct ExampleCheck {
  std::string example;
  std::string actual;    // rendered claim as recomputed, e.g. "PH = 0.0000"
  std::string expected;  // rendered embedded value
  bool match = false;
};

struct WorkedExamplesResult {
  std::vector<ExampleCheck> checks;
  std::vector<std::string> errata;
  std::size_t mismatches = 0;
};

// Recomputes every numeric claim of the worked examples and compares it with
// the embedded expected value (tolerance 1e-9).
WorkedExamplesResult RunWorkedExamples();

// Writes one line per check ("... MATCH"/"... MISMATCH") followed by the
// errata notes.
void PrintWorkedExamples(const WorkedExamplesResult& result, std::ostream& out);

}  // namespace causaldt

#endif  // CAUSALDT_WORKED_EXAMPLES_H_
