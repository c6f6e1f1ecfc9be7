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

#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <fmt/core.h>

#include "CLI11.hpp"
#include "json.hpp"

#include "causaldt/bounds.h"
#include "causaldt/fusion.h"
#include "causaldt/ground_truth.h"
#include "causaldt/simulation.h"
#include "causaldt/worked_examples.h"

namespace causaldt {
namespace {

using nlohmann::json;

double Shown(double v) { return std::abs(v) < 5e-5 ? 0.0 : v; }

std::string Fmt4(double v) { return fmt::format("{:.4f}", Shown(v)); }

std::string FormatInterval(const Interval& i) {
  return fmt::format("[{}, {}]", Fmt4(i.lo), Fmt4(i.hi));
}

std::string FormatWitness(const ZeroCellWitness& w) {
  if (w.level.empty()) return fmt::format("P(Y={}|X←{})=0", w.y, w.x);
  return fmt::format("P(Y={}|{}, X←{})=0", w.y, w.level, w.x);
}

json IntervalJson(const Interval& i) { return json{{"lo", i.lo}, {"hi", i.hi}}; }

json ReportJson(const BenefitHarmReport& r) {
  json witnesses = json::array();
  for (const auto& w : r.witnesses) {
    witnesses.push_back({{"level", w.level}, {"x", w.x}, {"y", w.y}});
  }
  return json{{"tau", r.tau},
              {"rho", r.rho},
              {"xi", IntervalJson(r.xi)},
              {"pb", IntervalJson(r.pb)},
              {"ph", IntervalJson(r.ph)},
              {"point_identified", r.point_identified},
              {"witnesses", witnesses},
              {"warnings", r.warnings}};
}

void PrintReport(const BenefitHarmReport& r, std::ostream& out) {
  out << fmt::format("tau = {}, rho = {}\n", Fmt4(r.tau), Fmt4(r.rho));
  out << "xi in " << FormatInterval(r.xi) << '\n';
  if (r.point_identified) {
    out << fmt::format("PB = {}, PH = {} (point identified)\n", Fmt4(r.pb.lo),
                       Fmt4(r.ph.lo));
  } else {
    out << fmt::format("PB in {}, PH in {}\n", FormatInterval(r.pb),
                       FormatInterval(r.ph));
  }
  if (!r.witnesses.empty()) {
    out << "zero cells:";
    for (const auto& w : r.witnesses) out << ' ' << FormatWitness(w);
    out << '\n';
  }
  for (const auto& w : r.warnings) out << "warning: " << w << '\n';
}

// ---------------------------------------------------------------------------
// Input handling.

double NumberField(const json& obj, const char* key, const char* where) {
  if (!obj.contains(key) || !obj.at(key).is_number()) {
    throw Error(ErrorKind::kParse,
                fmt::format("{}: missing numeric field '{}'", where, key));
  }
  return obj.at(key).get<double>();
}

CovariateSpec ParseLevels(const json& list) {
  if (!list.is_array()) {
    throw Error(ErrorKind::kParse, "covariate levels must be a list");
  }
  std::vector<CovariateLevel> levels;
  for (const auto& item : list) {
    if (!item.is_object() || !item.contains("label") ||
        !item.at("label").is_string()) {
      throw Error(ErrorKind::kParse, "covariate level needs a string 'label'");
    }
    levels.push_back({item.at("label").get<std::string>(),
                      NumberField(item, "weight", "covariate level"),
                      InterventionalSpec::Make(
                          NumberField(item, "p1", "covariate level"),
                          NumberField(item, "p0", "covariate level"))});
  }
  return CovariateSpec::Make(std::move(levels));
}

std::string ReadFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw Error(ErrorKind::kParse, fmt::format("cannot open '{}'", path));
  }
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

struct InputOptions {
  std::string source;  // JSON path or built-in data set name
  std::string records;
  std::optional<double> p1;
  std::optional<double> p0;
};

void AddInputOptions(CLI::App* cmd, InputOptions& o) {
  cmd->add_option("input", o.source,
                  "JSON analysis file or built-in data set (simple, females, "
                  "males, mixed)");
  cmd->add_option("--records", o.records,
                  "record file with header regime,x,y[,l]");
  cmd->add_option("--p1", o.p1, "P(Y=1|X<-1)");
  cmd->add_option("--p0", o.p0, "P(Y=1|X<-0)");
}

AnalysisInput LoadInput(const InputOptions& o) {
  AnalysisInput in;
  if (!o.source.empty()) {
    if (std::filesystem::exists(o.source)) {
      in = ParseAnalysisJson(ReadFile(o.source));
    } else if (auto ds = FindDataset(o.source)) {
      in.experimental = ds->experimental;
      in.observational = ds->observational;
    } else {
      throw Error(ErrorKind::kParse,
                  fmt::format("'{}' is neither a file nor a built-in data set",
                              o.source));
    }
  }
  if (o.p1.has_value() != o.p0.has_value()) {
    throw Error(ErrorKind::kParse, "--p1 and --p0 must be given together");
  }
  if (o.p1) {
    if (in.experimental || in.covariate) {
      throw Error(ErrorKind::kParse, "experimental data supplied twice");
    }
    in.experimental = InterventionalSpec::Make(*o.p1, *o.p0);
  }
  if (!o.records.empty()) {
    std::ifstream file(o.records);
    if (!file) {
      throw Error(ErrorKind::kParse,
                  fmt::format("cannot open '{}'", o.records));
    }
    EstimatedTables est = EstimateTables(ParseRecords(file));
    if (in.experimental || in.covariate) {
      throw Error(ErrorKind::kParse,
                  "experimental data supplied by both tables and records");
    }
    if (est.observational && in.observational) {
      throw Error(ErrorKind::kParse,
                  "observational data supplied by both tables and records");
    }
    in.experimental = est.experimental;
    in.covariate = est.covariate;
    if (est.observational) in.observational = est.observational;
    in.counts = est.counts;
  }
  return in;
}

InterventionalSpec RequireExperimental(const AnalysisInput& in) {
  if (in.experimental) return *in.experimental;
  if (in.covariate) return MarginalSpec(*in.covariate);
  throw Error(ErrorKind::kParse, "no experimental data supplied");
}

const ObservationalJoint& RequireObservational(const AnalysisInput& in) {
  if (!in.observational) {
    throw Error(ErrorKind::kParse, "no observational data supplied");
  }
  return *in.observational;
}

// Refuses fusion with exit 3 when the consistency constraint fails.
void CheckFusable(const InterventionalSpec& exp, const ObservationalJoint& obs,
                  double tolerance) {
  const auto findings = CheckConsistency(exp, obs, tolerance);
  if (findings.empty()) return;
  std::string message = "observational data contradict the experiment:";
  for (const auto& f : findings) {
    message += fmt::format(
        "\n  P(Y={0}, X={1}) = {2:.4f} exceeds P(Y={0}|X←{1}) = {3:.4f} by "
        "{4:.4f}",
        f.y, f.x, f.observational, f.interventional, f.violation);
  }
  throw Error(ErrorKind::kInconsistentData, message);
}

// ---------------------------------------------------------------------------
// Commands.

struct CommonFlags {
  bool json = false;
  double tolerance = kProbabilityTolerance;
};

int CmdBounds(const InputOptions& io, const CommonFlags& flags,
              std::ostream& out) {
  const AnalysisInput in = LoadInput(io);
  BenefitHarmReport report;
  if (in.covariate) {
    report = CovariateReport(*in.covariate);
  } else {
    report = PbPhReport(RequireExperimental(in));
  }
  if (flags.json) {
    out << ReportJson(report).dump(2) << '\n';
  } else {
    PrintReport(report, out);
  }
  return kExitOk;
}

json FindingsJson(const std::vector<ConsistencyFinding>& findings) {
  json arr = json::array();
  for (const auto& f : findings) {
    arr.push_back({{"x", f.x},
                   {"y", f.y},
                   {"interventional", f.interventional},
                   {"observational", f.observational},
                   {"violation", f.violation}});
  }
  return arr;
}

int CmdFuse(const InputOptions& io, const CommonFlags& flags,
            std::ostream& out) {
  const AnalysisInput in = LoadInput(io);
  const InterventionalSpec exp = RequireExperimental(in);
  const ObservationalJoint& obs = RequireObservational(in);
  const double tolerance = std::max(flags.tolerance, 0.0);
  const auto findings = CheckConsistency(exp, obs, tolerance);
  if (!findings.empty() && flags.json) {
    out << json{{"error", "InconsistentData"},
                {"findings", FindingsJson(findings)}}
               .dump(2)
        << '\n';
  }
  CheckFusable(exp, obs, tolerance);
  const FusedReport f =
      MakeFusedReport(exp, obs, std::max(tolerance, kIttClampTolerance));

  if (flags.json) {
    json levels = json::array();
    for (const auto& l : f.covariate.levels()) {
      const TauRho tr = ToTauRho(l.spec);
      levels.push_back({{"label", l.label},
                        {"weight", l.weight},
                        {"p1", l.spec.p1()},
                        {"p0", l.spec.p0()},
                        {"tau", tr.tau},
                        {"rho", tr.rho}});
    }
    json doc{
        {"experimental", {{"p1", exp.p1()}, {"p0", exp.p0()}}},
        {"observational",
         {{"x1y1", obs.Cell(1, 1)},
          {"x1y0", obs.Cell(1, 0)},
          {"x0y1", obs.Cell(0, 1)},
          {"x0y0", obs.Cell(0, 0)}}},
        {"consistency", FindingsJson(findings)},
        {"itt",
         {{"x*=1", {{"x<-1", f.itt.At(1, 1)}, {"x<-0", f.itt.At(1, 0)}}},
          {"x*=0", {{"x<-1", f.itt.At(0, 1)}, {"x<-0", f.itt.At(0, 0)}}},
          {"pi1", f.itt.intends_treatment}}},
        {"K", f.k},
        {"closed_form_xi", IntervalJson(f.closed_form_xi)},
        {"margin_conditions_hold", f.margin_conditions_hold},
        {"levels", levels},
        {"report", ReportJson(f.bounds)}};
    out << doc.dump(2) << '\n';
    return kExitOk;
  }

  const ObservationalMargins m = ObsMargins(obs);
  out << fmt::format("experimental: P(Y=1|X←1) = {}, P(Y=1|X←0) = {}\n",
                     Fmt4(exp.p1()), Fmt4(exp.p0()));
  out << fmt::format("observational: P(X=1) = {}, P(Y=1) = {}\n",
                     Fmt4(m.treated), Fmt4(m.recovered));
  out << "consistency: no violations\n";
  out << "identified P(Y=1|X*=x*, X←x):\n";
  for (int intended : {1, 0}) {
    out << fmt::format("  X*={}: X←1 {}, X←0 {}\n", intended,
                       Fmt4(f.itt.At(intended, 1)),
                       Fmt4(f.itt.At(intended, 0)));
  }
  out << fmt::format("K = {}\n", Fmt4(f.k));
  for (const auto& l : f.covariate.levels()) {
    const TauRho tr = ToTauRho(l.spec);
    out << fmt::format("level {}: weight {}, tau {}, rho {}\n", l.label,
                       Fmt4(l.weight), Fmt4(tr.tau), Fmt4(tr.rho));
  }
  out << "closed-form xi in " << FormatInterval(f.closed_form_xi) << '\n';
  PrintReport(f.bounds, out);
  out << fmt::format("margin conditions for point identification: {}\n",
                     f.margin_conditions_hold ? "hold" : "fail");
  return kExitOk;
}

struct DecideFlags {
  std::optional<double> lambda;
  std::string resolution = "midpoint";
  std::string level;
};

Resolution ParseResolution(const std::string& text) {
  if (text == "midpoint") return Resolution::kMidpoint;
  if (text == "lower") return Resolution::kLower;
  if (text == "upper") return Resolution::kUpper;
  throw Error(ErrorKind::kParse,
              fmt::format("unknown resolution '{}'", text));
}

const CovariateLevel& FindLevel(const CovariateSpec& cov,
                                const std::string& label) {
  for (const auto& l : cov.levels()) {
    if (l.label == label) return l;
  }
  throw Error(ErrorKind::kInsufficientInformation,
              fmt::format("no covariate level '{}'", label));
}

int CmdDecide(const InputOptions& io, const CommonFlags& flags,
              const DecideFlags& df, std::ostream& out) {
  const AnalysisInput in = LoadInput(io);
  const Resolution resolution = ParseResolution(df.resolution);
  Decision decision;
  if (!df.lambda) {
    if (!df.level.empty()) {
      if (!in.covariate) {
        throw Error(ErrorKind::kInsufficientInformation,
                    "--level needs a covariate specification");
      }
      decision = DtDecide(FindLevel(*in.covariate, df.level).spec);
    } else {
      decision = DtDecide(RequireExperimental(in));
    }
  } else {
    BenefitHarmReport report;
    if (!df.level.empty()) {
      if (!in.covariate) {
        throw Error(ErrorKind::kInsufficientInformation,
                    "--level needs a covariate specification");
      }
      report = PbPhReport(FindLevel(*in.covariate, df.level).spec);
    } else if (in.observational) {
      const InterventionalSpec exp = RequireExperimental(in);
      CheckFusable(exp, *in.observational, flags.tolerance);
      report = MakeFusedReport(exp, *in.observational,
                               std::max(flags.tolerance, kIttClampTolerance))
                   .bounds;
    } else if (in.covariate) {
      report = CovariateReport(*in.covariate);
    } else {
      report = PbPhReport(RequireExperimental(in));
    }
    decision = LambdaDecide(report, *df.lambda, resolution);
  }
  if (flags.json) {
    out << json{{"action", ActionName(decision.action)},
                {"rule", decision.rationale.rule},
                {"quantity", decision.rationale.quantity},
                {"value", decision.rationale.value},
                {"threshold", decision.rationale.threshold},
                {"note", decision.rationale.note}}
               .dump(2)
        << '\n';
  } else {
    out << decision.Describe() << '\n';
  }
  return kExitOk;
}

int CmdSelect(const std::string& path, std::size_t capacity,
              const CommonFlags& flags, std::ostream& out) {
  std::ifstream file(path);
  if (!file) {
    throw Error(ErrorKind::kParse, fmt::format("cannot open '{}'", path));
  }
  const std::vector<Candidate> patients = ParseCandidates(file);
  const std::vector<std::string> chosen = UnitSelect(patients, capacity);
  if (flags.json) {
    out << json(chosen).dump() << '\n';
  } else {
    for (const auto& id : chosen) out << id << '\n';
  }
  return kExitOk;
}

struct SimulateFlags {
  std::string policies = "dt,treat_all,treat_none";
  std::string xi = "midpoint";
  std::string info = "none";
  std::size_t n = 100000;
  std::uint64_t seed = 1;
  std::size_t replicates = 20;
};

std::vector<std::string> SplitList(const std::string& text) {
  std::vector<std::string> parts;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) parts.push_back(item);
  }
  return parts;
}

XiChoice ParseXiChoice(const std::string& text) {
  if (text == "midpoint") return {XiChoice::Mode::kMidpoint, {}};
  if (text == "lower") return {XiChoice::Mode::kLower, {}};
  if (text == "upper") return {XiChoice::Mode::kUpper, {}};
  std::vector<double> values;
  for (const auto& part : SplitList(text)) {
    try {
      std::size_t used = 0;
      values.push_back(std::stod(part, &used));
      if (used != part.size()) throw std::invalid_argument(part);
    } catch (const std::exception&) {
      throw Error(ErrorKind::kParse,
                  fmt::format("--xi expects midpoint, lower, upper or a "
                              "comma-separated list of numbers, got '{}'",
                              text));
    }
  }
  return XiChoice::Explicit(std::move(values));
}

Information ParseInformation(const std::string& text) {
  if (text == "none") return Information::kNone;
  if (text == "level") return Information::kLevel;
  if (text == "full") return Information::kFull;
  throw Error(ErrorKind::kParse, fmt::format("unknown --info '{}'", text));
}

int CmdSimulate(const InputOptions& io, const CommonFlags& flags,
                const SimulateFlags& sf, std::ostream& out) {
  const AnalysisInput in = LoadInput(io);
  const XiChoice xi = ParseXiChoice(sf.xi);
  const Information info = ParseInformation(sf.info);

  std::vector<PolicyRule> rules;
  for (const auto& name : SplitList(sf.policies)) {
    rules.push_back(PolicyRule::Parse(name));
  }
  if (rules.empty()) throw Error(ErrorKind::kPolicy, "no policies given");

  CovariateSpec cov = [&] {
    if (in.observational) {
      const InterventionalSpec exp = RequireExperimental(in);
      CheckFusable(exp, *in.observational, flags.tolerance);
      return FusedCovariateSpec(exp, *in.observational,
                                std::max(flags.tolerance, kIttClampTolerance));
    }
    if (in.covariate) return *in.covariate;
    return CovariateSpec::Single(RequireExperimental(in));
  }();
  const GroundTruthJoint gt = MakeGroundTruth(cov, xi);
  const SimReport report =
      ComparePolicies(gt, rules, info, sf.n, sf.seed, sf.replicates);

  if (flags.json) {
    json policies = json::array();
    for (const auto& p : report.policies) {
      policies.push_back({{"policy", p.policy},
                          {"exact", p.exact},
                          {"mc_rate", p.mc_rate},
                          {"mc_stderr", p.mc_stderr},
                          {"flagged", p.flagged},
                          {"replicate_rates", p.replicate_rates}});
    }
    out << json{{"n", report.n},
                {"seed", report.seed},
                {"replicates", report.replicates},
                {"info", InformationName(report.info)},
                {"xi", sf.xi},
                {"policies", policies}}
               .dump(2)
        << '\n';
    return kExitOk;
  }
  out << fmt::format("{:<22} {:>8} {:>8} {:>10}\n", "policy", "exact",
                     "mc_rate", "mc_stderr");
  for (const auto& p : report.policies) {
    out << fmt::format("{:<22} {:>8} {:>8} {:>10.6f}{}\n", p.policy,
                       Fmt4(p.exact), Fmt4(p.mc_rate), p.mc_stderr,
                       p.flagged ? "  FLAG: |mc - exact| > 5 se" : "");
  }
  out << fmt::format("n = {}, replicates = {}, seed = {}, info = {}, xi = {}\n",
                     report.n, report.replicates, report.seed,
                     InformationName(report.info), sf.xi);
  return kExitOk;
}

int CmdPaperExamples(std::ostream& out) {
  const WorkedExamplesResult result = RunWorkedExamples();
  PrintWorkedExamples(result, out);
  return result.mismatches == 0 ? kExitOk : kExitInternal;
}

}  // namespace

int ExitCodeFor(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kInvalidProbability:
    case ErrorKind::kInfeasibleTauRho:
    case ErrorKind::kXiOutOfRange:
    case ErrorKind::kEmptyStratum:
    case ErrorKind::kParse:
      return kExitInvalidInput;
    case ErrorKind::kDegenerateObservational:
    case ErrorKind::kInconsistentData:
      return kExitFusion;
    case ErrorKind::kInsufficientInformation:
    case ErrorKind::kPolicy:
      return kExitPolicy;
    case ErrorKind::kSimulation:
      return kExitSimulation;
  }
  return kExitInternal;
}

AnalysisInput ParseAnalysisJson(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorKind::kParse, fmt::format("invalid JSON: {}", e.what()));
  }
  if (!doc.is_object()) {
    throw Error(ErrorKind::kParse, "analysis input must be a JSON object");
  }
  AnalysisInput in;
  if (doc.contains("experimental")) {
    const json& e = doc.at("experimental");
    if (e.is_array()) {
      in.covariate = ParseLevels(e);
    } else if (e.is_object()) {
      in.experimental = InterventionalSpec::Make(
          NumberField(e, "p1", "experimental"),
          NumberField(e, "p0", "experimental"));
    } else {
      throw Error(ErrorKind::kParse,
                  "'experimental' must be an object or a list of levels");
    }
  }
  if (doc.contains("covariate")) {
    if (in.covariate) {
      throw Error(ErrorKind::kParse,
                  "covariate levels supplied under both 'experimental' and "
                  "'covariate'");
    }
    const json& c = doc.at("covariate");
    in.covariate = ParseLevels(c.is_object() && c.contains("levels")
                                   ? c.at("levels")
                                   : c);
  }
  if (doc.contains("observational")) {
    const json& o = doc.at("observational");
    if (!o.is_object()) {
      throw Error(ErrorKind::kParse, "'observational' must be an object");
    }
    in.observational = ObservationalJoint::FromCells(
        NumberField(o, "x1y1", "observational"),
        NumberField(o, "x1y0", "observational"),
        NumberField(o, "x0y1", "observational"),
        NumberField(o, "x0y0", "observational"));
  }
  return in;
}

std::vector<Candidate> ParseCandidates(std::istream& in) {
  std::vector<Candidate> out;
  std::string line;
  bool header = false;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line.front() == '#') continue;
    const auto comma = line.find(',');
    if (comma == std::string::npos) {
      throw Error(ErrorKind::kParse,
                  fmt::format("line {}: expected 'id,cate'", line_no));
    }
    std::string id = line.substr(0, comma);
    std::string value = line.substr(comma + 1);
    if (!header) {
      if (id != "id" || value != "cate") {
        throw Error(ErrorKind::kParse, "expected header 'id,cate'");
      }
      header = true;
      continue;
    }
    double cate = 0.0;
    try {
      std::size_t used = 0;
      cate = std::stod(value, &used);
      if (used != value.size()) throw std::invalid_argument(value);
    } catch (const std::exception&) {
      throw Error(ErrorKind::kParse,
                  fmt::format("line {}: bad cate '{}'", line_no, value));
    }
    out.push_back({std::move(id), cate});
  }
  if (!header) throw Error(ErrorKind::kParse, "expected header 'id,cate'");
  return out;
}

int RunCli(const std::vector<std::string>& args, std::ostream& out,
           std::ostream& err) {
  CLI::App app{"Bounds on benefit and harm, data fusion, and treatment "
               "policy evaluation",
               "causaldt"};
  app.require_subcommand(1);

  CommonFlags flags;
  auto add_common = [&](CLI::App* cmd) {
    cmd->add_flag("--json", flags.json, "machine-readable output");
    cmd->add_option("--tolerance", flags.tolerance,
                    "consistency tolerance for estimated data")
        ->check(CLI::NonNegativeNumber);
  };

  InputOptions io;
  auto* bounds = app.add_subcommand("bounds", "bounds on PB and PH");
  AddInputOptions(bounds, io);
  add_common(bounds);

  auto* fuse = app.add_subcommand(
      "fuse", "combine experimental and observational data");
  AddInputOptions(fuse, io);
  add_common(fuse);

  DecideFlags df;
  auto* decide = app.add_subcommand("decide", "treatment decision");
  AddInputOptions(decide, io);
  add_common(decide);
  decide->add_option("--lambda", df.lambda,
                     "use the rule PB > lambda * PH instead of dt");
  decide->add_option("--resolution", df.resolution,
                     "interval resolution: midpoint, lower or upper");
  decide->add_option("--level", df.level, "decide for one covariate level");

  std::string select_path;
  std::size_t capacity = 0;
  auto* select = app.add_subcommand("select", "capacity-limited selection");
  select->add_option("file", select_path, "CSV with header id,cate")
      ->required();
  select->add_option("--capacity", capacity, "number of treatments")
      ->required();
  add_common(select);

  SimulateFlags sf;
  auto* simulate = app.add_subcommand("simulate", "compare policies");
  AddInputOptions(simulate, io);
  add_common(simulate);
  simulate->add_option("--policies", sf.policies,
                       "comma-separated: dt, treat_all, treat_none, "
                       "oracle_ite, lambda:<v>[:resolution]");
  simulate->add_option("--xi", sf.xi,
                       "midpoint, lower, upper or one value per level");
  simulate->add_option("--info", sf.info, "none, level or full");
  simulate->add_option("--n", sf.n, "cohort size per replicate");
  simulate->add_option("--seed", sf.seed, "random seed");
  simulate->add_option("--replicates", sf.replicates, "number of replicates");

  auto* examples = app.add_subcommand(
      "paper-examples", "reproduce the worked examples");

  std::vector<std::string> argv_storage;
  argv_storage.reserve(args.size() + 1);
  argv_storage.push_back("causaldt");
  for (const auto& a : args) argv_storage.push_back(a);
  std::vector<const char*> argv;
  for (const auto& a : argv_storage) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInvalidInput;
  }

  try {
    if (bounds->parsed()) return CmdBounds(io, flags, out);
    if (fuse->parsed()) return CmdFuse(io, flags, out);
    if (decide->parsed()) return CmdDecide(io, flags, df, out);
    if (select->parsed()) return CmdSelect(select_path, capacity, flags, out);
    if (simulate->parsed()) return CmdSimulate(io, flags, sf, out);
    if (examples->parsed()) return CmdPaperExamples(out);
  } catch (const Error& e) {
    err << "error [" << ErrorKindName(e.kind()) << "]: " << e.what() << '\n';
    return ExitCodeFor(e.kind());
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kExitInternal;
  }
  return kExitInternal;
}

}  // namespace causaldt
