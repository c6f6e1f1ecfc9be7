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

#include "causaldt/records.h"

#include <algorithm>
#include <sstream>

#include <fmt/core.h>

#include "causaldt/error.h"

namespace causaldt {
namespace {

std::string Trim(const std::string& s) {
  const auto begin = s.find_first_not_of(" \t\r");
  if (begin == std::string::npos) return "";
  const auto end = s.find_last_not_of(" \t\r");
  return s.substr(begin, end - begin + 1);
}

std::vector<std::string> Split(const std::string& line, char delimiter) {
  std::vector<std::string> fields;
  std::stringstream ss(line);
  std::string field;
  while (std::getline(ss, field, delimiter)) fields.push_back(Trim(field));
  if (!line.empty() && line.back() == delimiter) fields.emplace_back();
  return fields;
}

int ParseBinary(const std::string& field, const char* name, int line_no) {
  if (field == "0") return 0;
  if (field == "1") return 1;
  throw Error(ErrorKind::kParse,
              fmt::format("line {}: {} must be 0 or 1, got '{}'", line_no,
                          name, field));
}

}  // namespace

std::vector<CohortRecord> ParseRecords(std::istream& in) {
  std::string line;
  int line_no = 0;
  char delimiter = ',';
  bool have_header = false;
  bool has_level = false;
  std::vector<CohortRecord> records;

  while (std::getline(in, line)) {
    ++line_no;
    const std::string trimmed = Trim(line);
    if (trimmed.empty() || trimmed.front() == '#') continue;

    if (!have_header) {
      for (char candidate : {',', '\t', ';'}) {
        if (trimmed.find(candidate) != std::string::npos) {
          delimiter = candidate;
          break;
        }
      }
      const auto header = Split(trimmed, delimiter);
      const bool base_ok = header.size() >= 3 && header[0] == "regime" &&
                           header[1] == "x" && header[2] == "y";
      if (!base_ok || header.size() > 4 ||
          (header.size() == 4 && header[3] != "l")) {
        throw Error(ErrorKind::kParse,
                    fmt::format("line {}: expected header 'regime,x,y[,l]', "
                                "got '{}'",
                                line_no, trimmed));
      }
      has_level = header.size() == 4;
      have_header = true;
      continue;
    }

    const auto fields = Split(trimmed, delimiter);
    const std::size_t expected = has_level ? 4 : 3;
    if (fields.size() != expected &&
        !(has_level && fields.size() == 3)) {
      throw Error(ErrorKind::kParse,
                  fmt::format("line {}: expected {} fields, got {}", line_no,
                              expected, fields.size()));
    }
    CohortRecord record;
    if (fields[0] == "exp") {
      record.regime = Regime::kExperimental;
    } else if (fields[0] == "obs") {
      record.regime = Regime::kObservational;
    } else {
      throw Error(ErrorKind::kParse,
                  fmt::format("line {}: regime must be 'exp' or 'obs', got "
                              "'{}'",
                              line_no, fields[0]));
    }
    record.x = ParseBinary(fields[1], "x", line_no);
    record.y = ParseBinary(fields[2], "y", line_no);
    if (has_level && fields.size() == 4 && !fields[3].empty()) {
      record.level = fields[3];
    }
    records.push_back(std::move(record));
  }
  if (!have_header) throw Error(ErrorKind::kParse, "record file has no header");
  return records;
}

EstimatedTables EstimateTables(const std::vector<CohortRecord>& records) {
  EstimatedTables out;
  RecordCounts& counts = out.counts;
  bool any_labelled = false;
  bool any_unlabelled = false;

  for (const auto& r : records) {
    if (r.regime == Regime::kObservational) {
      ++counts.observational[r.x][r.y];
      ++counts.total_observational;
      continue;
    }
    ++counts.total_experimental;
    const std::string label = r.level.value_or("");
    (r.level ? any_labelled : any_unlabelled) = true;
    auto it = std::find_if(
        counts.experimental.begin(), counts.experimental.end(),
        [&](const auto& entry) { return entry.first == label; });
    if (it == counts.experimental.end()) {
      counts.experimental.emplace_back(label, CellCounts{});
      it = std::prev(counts.experimental.end());
    }
    ++it->second[r.x][r.y];
  }

  if (counts.total_experimental == 0) {
    throw Error(ErrorKind::kEmptyStratum, "no experimental records");
  }
  if (any_labelled && any_unlabelled) {
    throw Error(ErrorKind::kParse,
                "experimental records mix labelled and unlabelled levels");
  }

  std::vector<CovariateLevel> levels;
  for (const auto& [label, cells] : counts.experimental) {
    double p[2];
    for (int x = 0; x < 2; ++x) {
      const std::int64_t arm = cells[x][0] + cells[x][1];
      if (arm == 0) {
        throw Error(ErrorKind::kEmptyStratum,
                    label.empty()
                        ? fmt::format("no experimental records with x={}", x)
                        : fmt::format("no experimental records with x={} at "
                                      "level '{}'",
                                      x, label));
      }
      p[x] = static_cast<double>(cells[x][1]) / static_cast<double>(arm);
    }
    const double weight =
        static_cast<double>(cells[0][0] + cells[0][1] + cells[1][0] +
                            cells[1][1]) /
        static_cast<double>(counts.total_experimental);
    levels.push_back({label, weight, InterventionalSpec::Make(p[1], p[0])});
  }
  if (any_labelled) {
    out.covariate = CovariateSpec::Make(std::move(levels));
  } else {
    out.experimental = levels.front().spec;
  }

  if (counts.total_observational > 0) {
    const double n = static_cast<double>(counts.total_observational);
    const auto& c = counts.observational;
    out.observational = ObservationalJoint::FromCells(
        c[1][1] / n, c[1][0] / n, c[0][1] / n, c[0][0] / n);
  }
  return out;
}

}  // namespace causaldt
