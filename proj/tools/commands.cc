// Copyright 2026 The Privbound Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "commands.h"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdint>
#include <optional>
#include <sstream>
#include <string_view>
#include <utility>

#include "CLI11.hpp"
#include "absl/status/status.h"
#include "absl/status/statusor.h"
#include "absl/strings/str_format.h"
#include "privbound/bounds.h"
#include "privbound/distribution.h"
#include "privbound/function_atoms.h"
#include "privbound/io.h"
#include "privbound/measures.h"
#include "privbound/mechanism.h"
#include "privbound/oracle.h"
#include "privbound/perfect_privacy.h"
#include "privbound/representation.h"
#include "privbound/sandwich.h"

namespace privbound::cli {
namespace {

int ExitCodeFor(const absl::Status& status) {
  switch (status.code()) {
    case absl::StatusCode::kInvalidArgument:
    case absl::StatusCode::kNotFound:
    case absl::StatusCode::kPermissionDenied:
    case absl::StatusCode::kDataLoss:
      return kParseError;
    default:
      return kDomainError;
  }
}

int Fail(std::ostream& err, const absl::Status& status) {
  err << "error: " << status.message() << "\n";
  return ExitCodeFor(status);
}

void Row(std::ostream& out, std::string_view key, double value) {
  out << key << ',' << FormatNumber(value) << '\n';
}

void Row(std::ostream& out, std::string_view key, int value) {
  out << key << ',' << value << '\n';
}

void Row(std::ostream& out, std::string_view key, std::string_view value) {
  out << key << ',' << value << '\n';
}

absl::StatusOr<JointDistribution> LoadDistribution(const std::string& path) {
  auto text = ReadFile(path);
  if (!text.ok()) return text.status();
  auto joint = ParseDistribution(*text);
  if (!joint.ok()) {
    return absl::InvalidArgumentError(
        absl::StrFormat("%s: %s", path, joint.status().message()));
  }
  return joint;
}

absl::StatusOr<Mechanism> LoadMechanism(const std::string& path) {
  auto text = ReadFile(path);
  if (!text.ok()) return text.status();
  auto mechanism = ParseMechanism(*text);
  if (!mechanism.ok()) {
    return absl::InvalidArgumentError(
        absl::StrFormat("%s: %s", path, mechanism.status().message()));
  }
  return mechanism;
}

void PrintReport(std::ostream& out, const MechanismReport& report) {
  Row(out, "utility", report.utility);
  Row(out, "leakage", report.leakage);
  Row(out, "cond_leakage", report.cond_leakage);
  Row(out, "residual", report.residual);
  Row(out, "entropy_u", report.entropy_u);
  Row(out, "cardinality", report.cardinality);
}

double SumOfSecretEntropies(const JointDistribution& joint) {
  double total = 0;
  for (double h : PerSecretEntropies(joint)) total += h;
  return total;
}

double BinaryEntropyOrZero(double a) {
  auto h = BinaryEntropy(std::clamp(a, 0.0, 1.0));
  return h.ok() ? *h : 0.0;
}

// ---------------------------------------------------------------- bounds

struct BoundsArgs {
  std::string dist;
  double eps = 0;
  bool sharp = false;
  bool with_g0 = false;
  bool csv = false;
};

int RunBounds(const BoundsArgs& args, std::ostream& out, std::ostream& err) {
  auto joint = LoadDistribution(args.dist);
  if (!joint.ok()) return Fail(err, joint.status());
  if (auto s = CheckLeakageBudget(*joint, args.eps); !s.ok()) {
    return Fail(err, s);
  }
  BoundOptions options;
  options.variant = args.sharp ? L2Variant::kSharp : L2Variant::kStandard;
  options.with_g0 = args.with_g0;
  auto report = ComputeBoundReport(*joint, args.eps, options);
  if (!report.ok()) return Fail(err, report.status());
  if (args.csv) out << "key,value\n";
  Row(out, "epsilon", report->epsilon);
  Row(out, "alpha", report->alpha);
  Row(out, "I_XY", report->mutual_information);
  Row(out, "H_Y_given_X", report->h_y_given_x);
  Row(out, "H_X_given_Y", report->h_x_given_y);
  Row(out, "L1", report->l1);
  Row(out, "L2", report->l2);
  Row(out, "L2_standard", report->l2_standard);
  Row(out, "L2_sharp", report->l2_sharp);
  if (report->l3) Row(out, "L3", *report->l3);
  if (report->g0) Row(out, "g0", *report->g0);
  Row(out, "best_lower", report->best_lower);
  Row(out, "upper_h", report->upper_h);
  Row(out, "best_upper", report->best_upper);
  if (report->u1) Row(out, "U1", *report->u1);
  if (report->u2) Row(out, "U2", *report->u2);
  if (report->psi_lower) Row(out, "psi_lower", *report->psi_lower);
  if (report->layered_integral) Row(out, "layered_T", *report->layered_integral);
  Row(out, "entropy_floor", report->entropy_floor.value);
  Row(out, "entropy_floor_weak", report->entropy_floor.weak);
  Row(out, "utility_exceeds_budget", report->utility_exceeds_budget ? 1 : 0);
  return kOk;
}

// ------------------------------------------------------------- construct

struct ConstructArgs {
  std::string dist;
  std::string method = "efrl";
  double eps = 0;
  std::string out;
  int restarts = SearchConfig{}.restarts;
};

int RunConstruct(const ConstructArgs& args, const SearchConfig& base,
                 std::ostream& out, std::ostream& err) {
  auto joint = LoadDistribution(args.dist);
  if (!joint.ok()) return Fail(err, joint.status());
  SearchConfig config = base;
  config.restarts = args.restarts;

  std::optional<Mechanism> mechanism;
  std::optional<double> cond_bound;
  double alpha = 0;
  if (args.method == "frl") {
    if (args.eps != 0) err << "warning: frl ignores --eps\n";
    auto m = Frl(*joint);
    if (!m.ok()) return Fail(err, m.status());
    mechanism = *std::move(m);
  } else {
    if (auto s = CheckLeakageBudget(*joint, args.eps); !s.ok()) {
      return Fail(err, s);
    }
    auto a = LeakageMixingWeight(*joint, args.eps);
    if (!a.ok()) return Fail(err, a.status());
    alpha = *a;
    if (args.method == "efrl") {
      auto m = Efrl(*joint, args.eps);
      if (!m.ok()) return Fail(err, m.status());
      mechanism = *std::move(m);
    } else {
      auto m = Esfrl(*joint, args.eps, config);
      if (!m.ok()) return Fail(err, m.status());
      mechanism = std::move(m->mechanism);
      cond_bound =
          alpha * ConditionalEntropy(*joint, Conditioning::kXGivenY) +
          (1 - alpha) * StrongRepresentationConstant(MutualInformation(*joint),
                                                     L2Variant::kStandard);
    }
  }
  auto report = Report(*joint, *mechanism);
  if (!report.ok()) return Fail(err, report.status());
  Row(out, "method", args.method);
  Row(out, "epsilon", args.method == "frl" ? 0.0 : args.eps);
  Row(out, "alpha", alpha);
  PrintReport(out, *report);
  if (args.method != "frl") {
    const double entropy_bound = SumOfSecretEntropies(*joint) + args.eps +
                                 BinaryEntropyOrZero(alpha);
    Row(out, "entropy_bound", entropy_bound);
  }
  if (cond_bound) {
    Row(out, "cond_leakage_bound", *cond_bound);
    Row(out, "cond_leakage_within_bound",
        report->cond_leakage <= *cond_bound + 1e-9 ? "yes" : "no");
  }
  if (!args.out.empty()) {
    if (auto s = WriteFile(args.out, FormatMechanism(*mechanism)); !s.ok()) {
      return Fail(err, s);
    }
  }
  return kOk;
}

// ---------------------------------------------------------------- oracle

struct OracleArgs {
  std::string dist;
  double eps = 0;
  std::string scenario = "observed";
  int card = 0;
  int restarts = SearchConfig{}.restarts;
  int max_iters = SearchConfig{}.max_iters;
  std::string out;
};

int RunOracle(const OracleArgs& args, const SearchConfig& base,
              std::ostream& out, std::ostream& err) {
  auto joint = LoadDistribution(args.dist);
  if (!joint.ok()) return Fail(err, joint.status());
  if (auto s = CheckLeakageBudget(*joint, args.eps); !s.ok()) {
    return Fail(err, s);
  }
  SearchConfig config = base;
  config.restarts = args.restarts;
  config.max_iters = args.max_iters;
  const bool hidden = args.scenario == "hidden";
  const int card = args.card > 0 ? args.card
                   : hidden      ? DefaultCardinalityG(*joint)
                                 : DefaultCardinalityH(*joint);
  auto result = hidden ? SearchG(*joint, args.eps, card, config)
                       : SearchH(*joint, args.eps, card, config);
  if (!result.ok()) return Fail(err, result.status());
  Row(out, "scenario", args.scenario);
  Row(out, "epsilon", args.eps);
  Row(out, "value", result->value);
  Row(out, "leakage", result->leakage);
  Row(out, "feasible", result->feasible ? "yes" : "no");
  Row(out, "cardinality", result->mechanism.nu());
  Row(out, "iterations", result->iterations);
  Row(out, "restarts_used", result->restarts_used);
  Row(out, "seeded_from", result->seeded_from);
  if (!args.out.empty()) {
    auto s = WriteFile(args.out, FormatMechanism(result->mechanism));
    if (!s.ok()) return Fail(err, s);
  }
  return kOk;
}

// ----------------------------------------------------------------- sweep

struct SweepArgs {
  std::string family = "bsc";
  int steps = 49;
  double eps = 0;
  std::string out = "-";
  bool with_oracle = false;
};

std::string Cell(std::optional<double> value) {
  return value ? FormatNumber(*value) : std::string();
}

int RunSweep(const SweepArgs& args, const SearchConfig& config,
             std::ostream& out, std::ostream& err) {
  if (args.eps < 0) {
    return Fail(err, absl::OutOfRangeError("leakage budget is negative"));
  }
  std::ostringstream csv;
  csv << "theta,h_y_given_x,u1,u2,l1,l2,l3,upper_h,g0,oracle_h\n";
  for (int i = 0; i < args.steps; ++i) {
    const double theta = 0.01 + 0.48 * i / (args.steps - 1);
    auto joint = args.family == "bsc" ? FamilyBsc(theta) : FamilyErasure(theta);
    if (!joint.ok()) return Fail(err, joint.status());
    BoundOptions options;
    options.with_g0 = true;
    options.allow_outside_validity = true;
    auto r = ComputeBoundReport(*joint, args.eps, options);
    if (!r.ok()) return Fail(err, r.status());
    const bool valid = !r->outside_validity;
    std::optional<double> oracle;
    if (args.with_oracle && valid) {
      auto h = SearchH(*joint, args.eps, DefaultCardinalityH(*joint), config);
      if (!h.ok()) return Fail(err, h.status());
      oracle = h->value;
    }
    csv << FormatNumber(theta) << ',' << FormatNumber(r->h_y_given_x) << ','
        << Cell(r->u1) << ',' << Cell(r->u2) << ','
        << Cell(valid ? std::optional(r->l1) : std::nullopt) << ','
        << Cell(valid ? std::optional(r->l2) : std::nullopt) << ','
        << Cell(valid ? r->l3 : std::nullopt) << ','
        << FormatNumber(r->upper_h) << ',' << Cell(r->g0) << ','
        << Cell(oracle) << '\n';
  }
  if (args.out == "-") {
    out << csv.str();
    return kOk;
  }
  if (auto s = WriteFile(args.out, csv.str()); !s.ok()) return Fail(err, s);
  return kOk;
}

// ----------------------------------------------------------------- check

struct CheckArgs {
  std::string dist;
  double eps = 0;
  int restarts = SearchConfig{}.restarts;
  std::string debug_mechanism;
};

class Suite {
 public:
  void Add(std::string name, double measured, double limit) {
    items_.push_back({std::move(name), measured, limit, measured <= limit});
  }
  void Add(const SandwichItem& item) {
    items_.push_back({"sandwich." + item.name, item.measured, item.limit,
                      item.passed});
  }
  void AddDecomposition(const JointDistribution& joint,
                        const MechanismReport& report) {
    decomposition_ =
        std::max(decomposition_, std::abs(DecompositionGap(joint, report)));
  }

  // Prints every item; returns the number of failures.
  int Print(std::ostream& out) {
    Add("report.decomposition", decomposition_, 1e-9);
    int failures = 0;
    out << "check,measured,limit,status\n";
    for (const SandwichItem& item : items_) {
      out << item.name << ',' << absl::StrFormat("%.6e", item.measured) << ','
          << absl::StrFormat("%.6e", item.limit) << ','
          << (item.passed ? "ok" : "FAIL") << '\n';
      if (!item.passed) ++failures;
    }
    return failures;
  }

 private:
  std::vector<SandwichItem> items_;
  double decomposition_ = 0;
};

int Summarize(Suite& suite, std::ostream& out, std::ostream& err) {
  const int failures = suite.Print(out);
  if (failures > 0) {
    err << failures << " check(s) failed\n";
    return kCheckFailure;
  }
  out << "all checks passed\n";
  return kOk;
}

int RunDebugMechanism(const JointDistribution& joint, const std::string& path,
                      std::ostream& out, std::ostream& err) {
  auto mechanism = LoadMechanism(path);
  if (!mechanism.ok()) return Fail(err, mechanism.status());
  auto report = Report(joint, *mechanism);
  if (!report.ok()) return Fail(err, report.status());
  Suite suite;
  suite.AddDecomposition(joint, *report);
  suite.Add("frl.independence", report->leakage, 1e-9);
  suite.Add("frl.functional", report->residual, 1e-9);
  suite.Add("frl.cardinality",
            report->cardinality - (joint.nx() * (joint.ny() - 1) + 1), 0);
  return Summarize(suite, out, err);
}

int RunCheck(const CheckArgs& args, const SearchConfig& base,
             std::ostream& out, std::ostream& err) {
  auto joint = LoadDistribution(args.dist);
  if (!joint.ok()) return Fail(err, joint.status());
  if (!args.debug_mechanism.empty()) {
    return RunDebugMechanism(*joint, args.debug_mechanism, out, err);
  }
  if (auto s = CheckLeakageBudget(*joint, args.eps); !s.ok()) {
    return Fail(err, s);
  }
  SearchConfig config = base;
  config.restarts = args.restarts;
  const double eps = args.eps;
  const int nx = joint->nx();
  const int ny = joint->ny();
  const double hx = EntropyX(*joint);
  const double hy = EntropyY(*joint);
  const double mi = MutualInformation(*joint);
  const double hx_given_y = ConditionalEntropy(*joint, Conditioning::kXGivenY);
  const double secret_entropies = SumOfSecretEntropies(*joint);
  Suite suite;

  double mass = 0;
  for (double p : joint->probabilities()) mass += p;
  suite.Add("distribution.mass", std::abs(mass - 1), 1e-9);
  suite.Add("distribution.mi_range", mi - std::min(hx, hy), 1e-9);

  auto evaluate = [&](const Mechanism& m) -> absl::StatusOr<MechanismReport> {
    auto r = Report(*joint, m);
    if (r.ok()) suite.AddDecomposition(*joint, *r);
    return r;
  };

  auto frl = Frl(*joint);
  if (!frl.ok()) return Fail(err, frl.status());
  auto frl_report = evaluate(*frl);
  if (!frl_report.ok()) return Fail(err, frl_report.status());
  suite.Add("frl.independence", frl_report->leakage, 1e-9);
  suite.Add("frl.functional", frl_report->residual, 1e-9);
  suite.Add("frl.cardinality",
            frl_report->cardinality - (nx * (ny - 1) + 1), 0);
  suite.Add("frl.entropy", frl_report->entropy_u - secret_entropies, 1e-9);

  auto alpha = LeakageMixingWeight(*joint, eps);
  if (!alpha.ok()) return Fail(err, alpha.status());
  auto efrl = Efrl(*joint, eps);
  if (!efrl.ok()) return Fail(err, efrl.status());
  auto efrl_report = evaluate(*efrl);
  if (!efrl_report.ok()) return Fail(err, efrl_report.status());
  auto l1 = LowerL1(*joint, eps);
  if (!l1.ok()) return Fail(err, l1.status());
  suite.Add("efrl.leakage", std::abs(efrl_report->leakage - eps), 1e-9);
  suite.Add("efrl.functional", efrl_report->residual, 1e-9);
  suite.Add("efrl.cardinality",
            efrl_report->cardinality - (nx * (ny - 1) + 1) * (nx + 1), 0);
  suite.Add("efrl.entropy",
            efrl_report->entropy_u -
                (secret_entropies + eps + BinaryEntropyOrZero(*alpha)),
            1e-9);
  suite.Add("efrl.above_l1", *l1 - efrl_report->utility, 1e-9);

  auto sfrl = SfrlSearch(*joint, config);
  const double constant =
      StrongRepresentationConstant(mi, L2Variant::kStandard);
  if (sfrl.ok()) {
    auto sfrl_report = evaluate(sfrl->mechanism);
    if (!sfrl_report.ok()) return Fail(err, sfrl_report.status());
    suite.Add("sfrl.independence", sfrl_report->leakage, 1e-9);
    suite.Add("sfrl.functional", sfrl_report->residual, 1e-9);
    suite.Add("sfrl.above_layered_bound",
              PsiLower(*joint) - sfrl->psi_estimate, 1e-6);
    suite.Add("sfrl.below_constant", sfrl->psi_estimate - constant, 1e-9);
    auto esfrl = Esfrl(*joint, eps, config);
    if (!esfrl.ok()) return Fail(err, esfrl.status());
    auto esfrl_report = evaluate(esfrl->mechanism);
    if (!esfrl_report.ok()) return Fail(err, esfrl_report.status());
    suite.Add("esfrl.leakage", std::abs(esfrl_report->leakage - eps), 1e-9);
    suite.Add("esfrl.functional", esfrl_report->residual, 1e-9);
    suite.Add("esfrl.mixture",
              std::abs(esfrl_report->cond_leakage -
                       (*alpha * hx_given_y +
                        (1 - *alpha) * esfrl->base_cond_leakage)),
              1e-9);
    suite.Add("esfrl.cond_bound",
              esfrl_report->cond_leakage -
                  (*alpha * hx_given_y + (1 - *alpha) * constant),
              1e-9);
  } else if (!absl::IsResourceExhausted(sfrl.status())) {
    return Fail(err, sfrl.status());
  }

  BoundOptions options;
  options.with_g0 = ny <= kMaxPerfectPrivacyPayload;
  auto bounds = ComputeBoundReport(*joint, eps, options);
  if (!bounds.ok()) return Fail(err, bounds.status());
  suite.Add("bounds.layered_nonpositive", LayeredIntegral(*joint), 1e-12);
  suite.Add("bounds.psi_floor", -hy - PsiLower(*joint), 1e-9);
  suite.Add("bounds.order", bounds->best_lower - bounds->upper_h, 1e-9);

  if (options.with_g0) {
    auto g0 = PerfectPrivacyUtility(*joint);
    if (!g0.ok()) return Fail(err, g0.status());
    auto g0_report = evaluate(g0->mechanism);
    if (!g0_report.ok()) return Fail(err, g0_report.status());
    suite.Add("g0.leakage", g0_report->leakage, 1e-6);
    suite.Add("g0.utility", std::abs(g0_report->utility - g0->value), 1e-6);
    suite.Add("g0.below_upper", g0->value - bounds->h_y_given_x, 1e-9);
  }

  auto sandwich = SandwichCheck(*joint, eps, config);
  if (!sandwich.ok()) return Fail(err, sandwich.status());
  for (const SandwichItem& item : sandwich->items) suite.Add(item);
  const int code = Summarize(suite, out, err);
  out << "saturation chain triggered: "
      << (sandwich->chain_triggered ? "yes" : "no") << '\n';
  return code;
}

absl::StatusOr<uint64_t> ParseSeed(const char* text) {
  const std::string_view view(text);
  uint64_t value = 0;
  const auto [ptr, ec] =
      std::from_chars(view.data(), view.data() + view.size(), value);
  if (ec != std::errc() || ptr != view.data() + view.size() || view.empty()) {
    return absl::InvalidArgumentError(
        absl::StrFormat("PRIVBOUND_SEED is not an unsigned integer: '%s'",
                        text));
  }
  return value;
}

}  // namespace

std::string FormatNumber(double value) {
  if (std::abs(value) < 5e-7) return "0.000000";
  return absl::StrFormat("%.6f", value);
}

int Run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err, const char* env_seed) {
  SearchConfig config;
  if (env_seed != nullptr) {
    auto seed = ParseSeed(env_seed);
    if (!seed.ok()) return Fail(err, seed.status());
    config.seed = *seed;
  }

  CLI::App app{"Privacy-utility bounds and mechanisms for finite joint laws",
               "privbound"};
  app.require_subcommand(1);

  BoundsArgs bounds_args;
  auto* bounds = app.add_subcommand("bounds", "Closed-form bounds at a budget");
  bounds->add_option("--dist", bounds_args.dist, "Distribution file")
      ->required();
  bounds->add_option("--eps", bounds_args.eps, "Leakage budget in bits");
  bounds->add_flag("--sharp", bounds_args.sharp,
                   "Use the sharper representation constant for L2");
  bounds->add_flag("--with-g0", bounds_args.with_g0,
                   "Solve the perfect-privacy program and report L3");
  bounds->add_flag("--csv", bounds_args.csv, "Prefix a key,value header");

  ConstructArgs construct_args;
  auto* construct =
      app.add_subcommand("construct", "Build a mechanism and report it");
  construct->add_option("--dist", construct_args.dist, "Distribution file")
      ->required();
  construct->add_option("--method", construct_args.method)
      ->check(CLI::IsMember({"frl", "efrl", "esfrl"}));
  construct->add_option("--eps", construct_args.eps, "Leakage budget in bits");
  construct->add_option("--out", construct_args.out, "Mechanism output file");
  construct->add_option("--restarts", construct_args.restarts)
      ->check(CLI::PositiveNumber);
  uint64_t construct_seed = 0;
  auto* construct_seed_option =
      construct->add_option("--seed", construct_seed);

  OracleArgs oracle_args;
  auto* oracle = app.add_subcommand("oracle", "Search the best utility");
  oracle->add_option("--dist", oracle_args.dist, "Distribution file")
      ->required();
  oracle->add_option("--eps", oracle_args.eps, "Leakage budget in bits");
  oracle->add_option("--scenario", oracle_args.scenario)
      ->check(CLI::IsMember({"hidden", "observed"}));
  oracle->add_option("--card", oracle_args.card,
                     "Alphabet of random starting kernels");
  oracle->add_option("--restarts", oracle_args.restarts)
      ->check(CLI::PositiveNumber);
  oracle->add_option("--max-iters", oracle_args.max_iters)
      ->check(CLI::NonNegativeNumber);
  oracle->add_option("--out", oracle_args.out, "Mechanism output file");
  uint64_t oracle_seed = 0;
  auto* oracle_seed_option = oracle->add_option("--seed", oracle_seed);

  SweepArgs sweep_args;
  auto* sweep = app.add_subcommand("sweep", "Bound table over a family");
  sweep->add_option("--family", sweep_args.family)
      ->check(CLI::IsMember({"bsc", "erasure"}));
  sweep->add_option("--steps", sweep_args.steps)->check(CLI::Range(2, 100000));
  sweep->add_option("--eps", sweep_args.eps, "Leakage budget in bits");
  sweep->add_option("--out", sweep_args.out, "CSV output file, - for stdout");
  sweep->add_flag("--with-oracle", sweep_args.with_oracle);
  uint64_t sweep_seed = 0;
  auto* sweep_seed_option = sweep->add_option("--seed", sweep_seed);

  CheckArgs check_args;
  auto* check = app.add_subcommand("check", "Run the invariant suite");
  check->add_option("--dist", check_args.dist, "Distribution file")
      ->required();
  check->add_option("--eps", check_args.eps, "Leakage budget in bits");
  check->add_option("--restarts", check_args.restarts)
      ->check(CLI::PositiveNumber);
  uint64_t check_seed = 0;
  auto* check_seed_option = check->add_option("--seed", check_seed);
  check->add_option("--debug-mechanism", check_args.debug_mechanism)
      ->group("");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kParseError;
  }

  auto with_seed = [&](const CLI::Option* option, uint64_t seed) {
    SearchConfig c = config;
    if (option->count() > 0) c.seed = seed;
    return c;
  };
  if (*bounds) return RunBounds(bounds_args, out, err);
  if (*construct) {
    return RunConstruct(construct_args,
                        with_seed(construct_seed_option, construct_seed), out,
                        err);
  }
  if (*oracle) {
    return RunOracle(oracle_args, with_seed(oracle_seed_option, oracle_seed),
                     out, err);
  }
  if (*sweep) {
    return RunSweep(sweep_args, with_seed(sweep_seed_option, sweep_seed), out,
                    err);
  }
  return RunCheck(check_args, with_seed(check_seed_option, check_seed), out,
                  err);
}

}  // namespace privbound::cli
