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

#include "causaldt/policy.h"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <numeric>

#include <fmt/core.h>

#include "causaldt/error.h"

namespace causaldt {
namespace {

Action Compare(double value, double threshold) {
  if (value > threshold + kIndifferenceBand) return Action::kTreat;
  if (value < threshold - kIndifferenceBand) return Action::kNoTreat;
  return Action::kIndifferent;
}

double Fixed4(double v) { return std::abs(v) < 5e-5 ? 0.0 : v; }

}  // namespace

std::string_view ActionName(Action action) {
  switch (action) {
    case Action::kTreat: return "treat";
    case Action::kNoTreat: return "no_treat";
    case Action::kIndifferent: return "indifferent";
  }
  return "?";
}

std::string Decision::Describe() const {
  const char* relation = action == Action::kTreat     ? ">"
                         : action == Action::kNoTreat ? "<="
                                                      : "~";
  std::string text;
  if (rationale.rule == "dt") {
    text = fmt::format("{} ({} = {:.4f} {} 0)", ActionName(action),
                       rationale.quantity, Fixed4(rationale.value),
                       action == Action::kNoTreat ? "<" : relation);
  } else {
    text = fmt::format("{} ({} = {:.4f} {} {:.4f}; {})", ActionName(action),
                       rationale.quantity, Fixed4(rationale.value), relation,
                       Fixed4(rationale.threshold), rationale.note);
  }
  if (action == Action::kIndifferent) text += "; indifference resolves to no_treat";
  return text;
}

std::string_view ResolutionName(Resolution resolution) {
  switch (resolution) {
    case Resolution::kMidpoint: return "midpoint";
    case Resolution::kLower: return "lower";
    case Resolution::kUpper: return "upper";
  }
  return "?";
}

double Resolve(const Interval& interval, Resolution resolution) {
  switch (resolution) {
    case Resolution::kLower: return interval.lo;
    case Resolution::kUpper: return interval.hi;
    case Resolution::kMidpoint: break;
  }
  return interval.Midpoint();
}

PolicyRule PolicyRule::Lambda(double lambda, Resolution resolution) {
  if (!std::isfinite(lambda) || lambda <= 0.0) {
    throw Error(ErrorKind::kPolicy,
                fmt::format("lambda must be positive, got {}", lambda));
  }
  return {Kind::kLambda, lambda, resolution};
}

PolicyRule PolicyRule::Parse(std::string_view text) {
  if (text == "dt") return Dt();
  if (text == "treat_all") return TreatAll();
  if (text == "treat_none") return TreatNone();
  if (text == "oracle_ite") return OracleIte();
  constexpr std::string_view kPrefix = "lambda:";
  if (text.substr(0, kPrefix.size()) == kPrefix) {
    std::string_view rest = text.substr(kPrefix.size());
    Resolution resolution = Resolution::kMidpoint;
    if (const auto colon = rest.find(':'); colon != std::string_view::npos) {
      const std::string_view res = rest.substr(colon + 1);
      if (res == "midpoint") {
        resolution = Resolution::kMidpoint;
      } else if (res == "lower") {
        resolution = Resolution::kLower;
      } else if (res == "upper") {
        resolution = Resolution::kUpper;
      } else {
        throw Error(ErrorKind::kPolicy,
                    fmt::format("unknown resolution '{}'", res));
      }
      rest = rest.substr(0, colon);
    }
    double lambda = 0.0;
    const auto [ptr, ec] =
        std::from_chars(rest.data(), rest.data() + rest.size(), lambda);
    if (ec != std::errc() || ptr != rest.data() + rest.size()) {
      throw Error(ErrorKind::kPolicy,
                  fmt::format("cannot parse lambda in '{}'", text));
    }
    return Lambda(lambda, resolution);
  }
  throw Error(ErrorKind::kPolicy, fmt::format("unknown policy '{}'", text));
}

std::string PolicyRule::Name() const {
  switch (kind) {
    case Kind::kDt: return "dt";
    case Kind::kTreatAll: return "treat_all";
    case Kind::kTreatNone: return "treat_none";
    case Kind::kOracleIte: return "oracle_ite";
    case Kind::kLambda:
      return fmt::format("lambda:{}:{}", lambda, ResolutionName(resolution));
  }
  return "?";
}

std::string_view InformationName(Information info) {
  switch (info) {
    case Information::kNone: return "none";
    case Information::kLevel: return "level";
    case Information::kFull: return "full";
  }
  return "?";
}

Decision DtDecide(const InterventionalSpec& spec) {
  const double cate = spec.p1() - spec.p0();
  Decision d;
  d.action = Compare(cate, 0.0);
  d.rationale = {"dt", "CATE", cate, 0.0,
                 fmt::format("P(Y=1|X<-1) = {:.4f}, P(Y=1|X<-0) = {:.4f}",
                             spec.p1(), spec.p0())};
  return d;
}

InterventionalSpec MarginalSpec(const CovariateSpec& cov) {
  double p1 = 0.0;
  double p0 = 0.0;
  for (const auto& level : cov.levels()) {
    p1 += level.weight * level.spec.p1();
    p0 += level.weight * level.spec.p0();
  }
  return InterventionalSpec::Make(p1, p0);
}

std::vector<std::string> UnitSelect(std::span<const Candidate> patients,
                                    std::size_t capacity) {
  std::vector<std::size_t> order;
  for (std::size_t i = 0; i < patients.size(); ++i) {
    if (patients[i].cate > kIndifferenceBand) order.push_back(i);
  }
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) {
                     return patients[a].cate > patients[b].cate;
                   });
  if (order.size() > capacity) order.resize(capacity);
  std::vector<std::string> ids;
  ids.reserve(order.size());
  for (std::size_t i : order) ids.push_back(patients[i].id);
  return ids;
}

Decision LambdaDecide(const BenefitHarmReport& report, double lambda,
                      Resolution resolution) {
  if (!std::isfinite(lambda) || lambda <= 0.0) {
    throw Error(ErrorKind::kPolicy,
                fmt::format("lambda must be positive, got {}", lambda));
  }
  const double pb = Resolve(report.pb, resolution);
  const double ph = Resolve(report.ph, resolution);
  Decision d;
  d.action = Compare(pb, lambda * ph);
  d.rationale = {"lambda", "PB", pb, lambda * ph,
                 fmt::format("threshold = {} x PH, PH = {:.4f}, {}", lambda,
                             Fixed4(ph), ResolutionName(resolution))};
  return d;
}

std::vector<bool> LevelPlan(const GroundTruthJoint& gt, const PolicyRule& rule,
                            Information info) {
  const std::size_t n = gt.size();
  const bool per_level = info != Information::kNone;
  switch (rule.kind) {
    case PolicyRule::Kind::kTreatAll: return std::vector<bool>(n, true);
    case PolicyRule::Kind::kTreatNone: return std::vector<bool>(n, false);
    case PolicyRule::Kind::kDt: {
      if (!per_level) {
        return std::vector<bool>(n, DtDecide(gt.Marginal()).Treats());
      }
      std::vector<bool> plan(n);
      for (std::size_t i = 0; i < n; ++i) {
        plan[i] = DtDecide(gt.LevelSpec(i)).Treats();
      }
      return plan;
    }
    case PolicyRule::Kind::kLambda: {
      if (!per_level) {
        const BenefitHarmReport report = CovariateReport(gt.ToCovariateSpec());
        return std::vector<bool>(
            n, LambdaDecide(report, rule.lambda, rule.resolution).Treats());
      }
      std::vector<bool> plan(n);
      for (std::size_t i = 0; i < n; ++i) {
        plan[i] = LambdaDecide(PbPhReport(gt.LevelSpec(i)), rule.lambda,
                               rule.resolution)
                      .Treats();
      }
      return plan;
    }
    case PolicyRule::Kind::kOracleIte:
      if (info != Information::kFull) {
        throw Error(ErrorKind::kInsufficientInformation,
                    "oracle_ite needs both potential outcomes of every unit "
                    "(information 'full')");
      }
      throw Error(ErrorKind::kPolicy,
                  "oracle_ite decides per unit, not per level");
  }
  return {};
}

double ExpectedRecoveries(const GroundTruthJoint& gt,
                          const std::vector<bool>& treat) {
  if (treat.size() != gt.size()) {
    throw Error(ErrorKind::kPolicy,
                fmt::format("plan has {} entries for {} levels", treat.size(),
                            gt.size()));
  }
  double rate = 0.0;
  for (std::size_t i = 0; i < gt.size(); ++i) {
    const PoJointTable& t = gt.levels()[i].table;
    const double p = treat[i] ? t.At(1, 1) + t.At(1, 0)
                              : t.At(1, 1) + t.At(0, 1);
    rate += gt.levels()[i].weight * p;
  }
  return std::clamp(rate, 0.0, 1.0);
}

double ExpectedRecoveries(const GroundTruthJoint& gt, const PolicyRule& rule,
                          Information info) {
  if (rule.kind == PolicyRule::Kind::kOracleIte) {
    if (info != Information::kFull) LevelPlan(gt, rule, info);  // throws
    double rate = 0.0;
    for (const auto& level : gt.levels()) {
      rate += level.weight * (1.0 - level.table.At(0, 0));
    }
    return std::clamp(rate, 0.0, 1.0);
  }
  return ExpectedRecoveries(gt, LevelPlan(gt, rule, info));
}

}  // namespace causaldt
