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

#include "causaldt/cli.h"

#include <filesystem>
#include <fstream>
#include <sstream>

#include "gtest/gtest.h"
#include "json.hpp"

namespace causaldt {
namespace {

struct CliRun {
  int code = 0;
  std::string out;
  std::string err;
};

CliRun Invoke(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  CliRun r;
  r.code = RunCli(args, out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

std::string TempFile(const std::string& name, const std::string& body) {
  const auto path = std::filesystem::temp_directory_path() /
                    ("causaldt_cli_test_" + name);
  std::ofstream(path) << body;
  return path.string();
}

bool Has(const std::string& haystack, const std::string& needle) {
  return haystack.find(needle) != std::string::npos;
}

TEST(CliBoundsTest, ExperimentalOnly) {
  const CliRun r = Invoke({"bounds", "--p1", "0.49", "--p0", "0.21"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_TRUE(Has(r.out, "PB in [0.2800, 0.4900], PH in [0.0000, 0.2100]"))
      << r.out;
}

TEST(CliBoundsTest, JsonKeys) {
  const CliRun r = Invoke({"bounds", "simple", "--json"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto doc = nlohmann::json::parse(r.out);
  for (const char* key : {"tau", "rho", "xi", "pb", "ph", "point_identified",
                          "witnesses", "warnings"}) {
    EXPECT_TRUE(doc.contains(key)) << key;
  }
  EXPECT_NEAR(doc["pb"]["lo"].get<double>(), 0.28, 1e-9);
  EXPECT_NEAR(doc["pb"]["hi"].get<double>(), 0.49, 1e-9);
}

TEST(CliBoundsTest, ProbabilityOutOfRange) {
  const CliRun r = Invoke({"bounds", "--p1", "1.2", "--p0", "0.2"});
  EXPECT_EQ(r.code, 2);
  EXPECT_TRUE(Has(r.err, "probability out of range")) << r.err;
}

TEST(CliBoundsTest, BadFlagsAreInvalidInput) {
  EXPECT_EQ(Invoke({"bounds", "--p1", "0.4"}).code, 2);
  EXPECT_EQ(Invoke({"bounds", "--frobnicate"}).code, 2);
  EXPECT_EQ(Invoke({"bounds", "no_such_dataset"}).code, 2);
}

TEST(CliFuseTest, FemalesZeroCell) {
  const CliRun r = Invoke({"fuse", "females"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_TRUE(Has(r.out, "PB = 0.2800, PH = 0.0000 (point identified)"))
      << r.out;
  EXPECT_TRUE(Has(r.out, "P(Y=1|X*=1, X←0)=0")) << r.out;
}

TEST(CliFuseTest, Males) {
  const CliRun r = Invoke({"fuse", "males"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_TRUE(Has(r.out, "PB = 0.4900, PH = 0.2100 (point identified)"))
      << r.out;
}

TEST(CliFuseTest, MixedJson) {
  const CliRun r = Invoke({"fuse", "mixed", "--json"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto doc = nlohmann::json::parse(r.out);
  EXPECT_NEAR(doc["report"]["xi"]["lo"].get<double>(), 0.28, 1e-9);
  EXPECT_NEAR(doc["report"]["xi"]["hi"].get<double>(), 0.52, 1e-9);
  EXPECT_FALSE(doc["report"]["point_identified"].get<bool>());
}

TEST(CliFuseTest, InconsistentDataRefused) {
  const std::string path = TempFile(
      "inconsistent.json",
      R"({"experimental": {"p1": 0.49, "p0": 0.21},
          "observational": {"x1y1": 0.2, "x1y0": 0.2, "x0y1": 0.3, "x0y0": 0.3}})");
  const CliRun r = Invoke({"fuse", path});
  EXPECT_EQ(r.code, 3);
  EXPECT_TRUE(Has(r.err, "InconsistentData")) << r.err;
  const CliRun j = Invoke({"fuse", path, "--json"});
  EXPECT_EQ(j.code, 3);
  const auto doc = nlohmann::json::parse(j.out);
  EXPECT_EQ(doc["findings"][0]["x"].get<int>(), 0);
  EXPECT_NEAR(doc["findings"][0]["violation"].get<double>(), 0.09, 1e-9);
}

TEST(CliFuseTest, MissingObservationalIsInvalidInput) {
  EXPECT_EQ(Invoke({"fuse", "simple"}).code, 2);
}

TEST(CliDecideTest, Dt) {
  const CliRun r = Invoke({"decide", "--p1", "0.49", "--p0", "0.21"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out, "treat (CATE = 0.2800 > 0)\n");
}

TEST(CliDecideTest, LambdaOnFusedData) {
  const CliRun males = Invoke({"decide", "males", "--lambda", "3"});
  ASSERT_EQ(males.code, 0) << males.err;
  EXPECT_TRUE(Has(males.out, "no_treat")) << males.out;
  const CliRun females = Invoke({"decide", "females", "--lambda", "3", "--json"});
  ASSERT_EQ(females.code, 0) << females.err;
  EXPECT_EQ(nlohmann::json::parse(females.out)["action"], "treat");
}

TEST(CliDecideTest, PolicyErrors) {
  EXPECT_EQ(Invoke({"decide", "simple", "--lambda", "0"}).code, 4);
  EXPECT_EQ(Invoke({"decide", "simple", "--level", "old"}).code, 4);
}

TEST(CliSelectTest, CapacityLimited) {
  const std::string path =
      TempFile("candidates.csv", "id,cate\na,0.3\nb,-0.1\nc,0.5\n");
  const CliRun r = Invoke({"select", path, "--capacity", "2"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out, "c\na\n");
  const CliRun j = Invoke({"select", path, "--capacity", "1", "--json"});
  EXPECT_EQ(j.out, "[\"c\"]\n");
  EXPECT_EQ(Invoke({"select", path}).code, 2);
}

TEST(CliSimulateTest, MalesRates) {
  const CliRun r = Invoke({"simulate", "males", "--policies", "dt,lambda:3",
                        "--n", "100000", "--seed", "7"});
  ASSERT_EQ(r.code, 0) << r.err;
  std::istringstream lines(r.out);
  std::string header, dt, lambda;
  std::getline(lines, header);
  std::getline(lines, dt);
  std::getline(lines, lambda);
  EXPECT_TRUE(Has(dt, "dt") && Has(dt, "0.4900")) << dt;
  EXPECT_TRUE(Has(lambda, "lambda:3:midpoint") && Has(lambda, "0.2100"))
      << lambda;
  EXPECT_FALSE(Has(r.out, "FLAG"));
}

TEST(CliSimulateTest, JsonIsByteIdenticalAcrossRuns) {
  const std::vector<std::string> args{"simulate", "mixed", "--policies",
                                      "dt,treat_all,lambda:3", "--n", "5000",
                                      "--replicates", "5", "--json"};
  const CliRun a = Invoke(args);
  const CliRun b = Invoke(args);
  ASSERT_EQ(a.code, 0) << a.err;
  EXPECT_EQ(a.out, b.out);
}

TEST(CliSimulateTest, Errors) {
  EXPECT_EQ(Invoke({"simulate", "males", "--n", "0"}).code, 5);
  EXPECT_EQ(Invoke({"simulate", "males", "--policies", "oracle_ite"}).code, 4);
  EXPECT_EQ(Invoke({"simulate", "males", "--policies", "best"}).code, 4);
  EXPECT_EQ(Invoke({"simulate", "mixed", "--xi", "0.9,0.65"}).code, 2);
}

TEST(CliPaperExamplesTest, AllMatch) {
  const CliRun r = Invoke({"paper-examples"});
  EXPECT_EQ(r.code, 0) << r.out;
  EXPECT_TRUE(Has(r.out, "ξ ∈ [0.2800, 0.5200] MATCH")) << r.out;
  EXPECT_TRUE(Has(r.out, "PH = 0.0000 MATCH")) << r.out;
  EXPECT_TRUE(Has(r.out, "females erratum")) << r.out;
  EXPECT_TRUE(Has(r.out, " 0 mismatches")) << r.out;
}

TEST(CliInputTest, RecordsFile) {
  std::string body = "regime,x,y\n";
  for (int i = 0; i < 49; ++i) body += "exp,1,1\n";
  for (int i = 0; i < 51; ++i) body += "exp,1,0\n";
  for (int i = 0; i < 21; ++i) body += "exp,0,1\n";
  for (int i = 0; i < 79; ++i) body += "exp,0,0\n";
  const std::string path = TempFile("records.csv", body);
  const CliRun r = Invoke({"bounds", "--records", path});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_TRUE(Has(r.out, "PB in [0.2800, 0.4900]")) << r.out;
  EXPECT_EQ(Invoke({"bounds", "--records", path, "--p1", "0.5", "--p0", "0.5"})
                .code,
            2);
}

TEST(CliInputTest, CovariateJson) {
  const AnalysisInput in = ParseAnalysisJson(
      R"({"covariate": [{"label": "a", "weight": 0.5, "p1": 1.0, "p0": 0.0},
                        {"label": "b", "weight": 0.5, "p1": 0.0, "p0": 1.0}]})");
  ASSERT_TRUE(in.covariate.has_value());
  EXPECT_EQ(in.covariate->size(), 2u);
  EXPECT_FALSE(in.experimental.has_value());
  EXPECT_THROW(ParseAnalysisJson("{\"experimental\": {\"p1\": 0.5}}"), Error);
  EXPECT_THROW(ParseAnalysisJson("not json"), Error);
}

TEST(CliInputTest, Candidates) {
  std::istringstream good("id,cate\nu1,0.25\n\nu2,-1\n");
  const auto c = ParseCandidates(good);
  ASSERT_EQ(c.size(), 2u);
  EXPECT_EQ(c[1].id, "u2");
  EXPECT_EQ(c[1].cate, -1.0);
  std::istringstream bad("id,cate\nu1,abc\n");
  EXPECT_THROW(ParseCandidates(bad), Error);
}

TEST(CliExitCodeTest, Mapping) {
  EXPECT_EQ(ExitCodeFor(ErrorKind::kInvalidProbability), 2);
  EXPECT_EQ(ExitCodeFor(ErrorKind::kParse), 2);
  EXPECT_EQ(ExitCodeFor(ErrorKind::kInconsistentData), 3);
  EXPECT_EQ(ExitCodeFor(ErrorKind::kDegenerateObservational), 3);
  EXPECT_EQ(ExitCodeFor(ErrorKind::kInsufficientInformation), 4);
  EXPECT_EQ(ExitCodeFor(ErrorKind::kSimulation), 5);
}

}  // namespace
}  // namespace causaldt
