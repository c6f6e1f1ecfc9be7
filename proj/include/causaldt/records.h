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

#ifndef CAUSALDT_RECORDS_H_
#define CAUSALDT_RECORDS_H_

#include <cstdint>
#include <istream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "causaldt/distributions.h"

namespace causaldt {

enum class Regime { kExperimental, kObservational };

struct CohortRecord {
  Regime regime = Regime::kExperimental;
  int x = 0;
  int y = 0;
  std::optional<std::string> level;
};

// Reads delimiter-separated records with header `regime,x,y[,l]`. The
// delimiter (',', ';' or tab) is taken from the header line. Blank lines and
// lines starting with '#' are skipped.
std::vector<CohortRecord> ParseRecords(std::istream& in);

// counts[x][y] within one stratum.
using CellCounts = std::array<std::array<std::int64_t, 2>, 2>;

struct RecordCounts {
  // Experimental counts per level label ("" when unlabelled), in order of
  // first appearance.
  std::vector<std::pair<std::string, CellCounts>> experimental;
  CellCounts observational{};
  std::int64_t total_experimental = 0;
  std::int64_t total_observational = 0;
};

struct EstimatedTables {
  // Exactly one of these is set: labelled experimental records yield a
  // covariate specification, unlabelled ones a single specification.
  std::optional<InterventionalSpec> experimental;
  std::optional<CovariateSpec> covariate;
  std::optional<ObservationalJoint> observational;
  RecordCounts counts;
};

// Maximum-likelihood frequencies. Level weights are estimated from the
// experimental records, where the covariate is unaffected by assignment.
// Throws kEmptyStratum when an experimental arm (per level, if labelled) has
// no records, and kParse when labelled and unlabelled experimental records are
// mixed.
EstimatedTables EstimateTables(const std::vector<CohortRecord>& records);

}  // namespace causaldt

#endif  // CAUSALDT_RECORDS_H_
