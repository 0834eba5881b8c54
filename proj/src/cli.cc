// Copyright 2026 The gaussdp Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "gaussdp/cli.h"

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "CLI11.hpp"
#include "gaussdp/errors.h"
#include "gaussdp/gdp.h"
#include "gaussdp/mechanism.h"
#include "gaussdp/montecarlo.h"
#include "gaussdp/normal.h"
#include "gaussdp/profile.h"
#include "gaussdp/rdp.h"
#include "gaussdp/tradeoff.h"
#include "gaussdp/version.h"

namespace gaussdp {
namespace {

// ---------------------------------------------------------------------------
// Output envelope and serialization
//
// Numbers are rendered with 17 significant digits so that every double
// round-trips exactly through text; the JSON writer below is the only
// serializer, which keeps repeated runs byte-identical.
// ---------------------------------------------------------------------------

using Value = std::variant<double, long long, unsigned long long, bool,
                           std::string, std::vector<double>>;

struct Envelope {
  explicit Envelope(std::string cmd) : command(std::move(cmd)) {}

  std::string command;
  std::vector<std::pair<std::string, Value>> inputs;
  std::vector<std::pair<std::string, Value>> results;
  std::vector<std::string> warnings;
};

std::string FormatDouble(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

// Bare token used in CSV and text output. List cells join on ';' so they
// never collide with the CSV separator.
std::string FormatPlain(const Value& value) {
  struct Visitor {
    std::string operator()(double v) const { return FormatDouble(v); }
    std::string operator()(long long v) const { return std::to_string(v); }
    std::string operator()(unsigned long long v) const {
      return std::to_string(v);
    }
    std::string operator()(bool v) const { return v ? "true" : "false"; }
    std::string operator()(const std::string& v) const { return v; }
    std::string operator()(const std::vector<double>& v) const {
      std::string joined;
      for (std::size_t i = 0; i < v.size(); ++i) {
        if (i > 0) joined += ';';
        joined += FormatDouble(v[i]);
      }
      return joined;
    }
  };
  return std::visit(Visitor{}, value);
}

void WriteJsonString(std::ostream& out, const std::string& s) {
  out << '"';
  for (char c : s) {
    switch (c) {
      case '"': out << "\\\""; break;
      case '\\': out << "\\\\"; break;
      case '\n': out << "\\n"; break;
      case '\t': out << "\\t"; break;
      case '\r': out << "\\r"; break;
      default:
        if (static_cast<unsigned char>(c) < 0x20) {
          char buf[8];
          std::snprintf(buf, sizeof(buf), "\\u%04x", c);
          out << buf;
        } else {
          out << c;
        }
    }
  }
  out << '"';
}

void WriteJsonDouble(std::ostream& out, double v) {
  // Bare non-finite tokens are not valid JSON; quote them.
  if (std::isfinite(v)) {
    out << FormatDouble(v);
  } else {
    out << '"' << FormatDouble(v) << '"';
  }
}

void WriteJsonValue(std::ostream& out, const Value& value) {
  struct Visitor {
    std::ostream& out;
    void operator()(double v) const { WriteJsonDouble(out, v); }
    void operator()(long long v) const { out << v; }
    void operator()(unsigned long long v) const { out << v; }
    void operator()(bool v) const { out << (v ? "true" : "false"); }
    void operator()(const std::string& v) const { WriteJsonString(out, v); }
    void operator()(const std::vector<double>& v) const {
      out << '[';
      for (std::size_t i = 0; i < v.size(); ++i) {
        if (i > 0) out << ',';
        WriteJsonDouble(out, v[i]);
      }
      out << ']';
    }
  };
  std::visit(Visitor{out}, value);
}

void WriteJsonMap(std::ostream& out,
                  const std::vector<std::pair<std::string, Value>>& map) {
  out << '{';
  for (std::size_t i = 0; i < map.size(); ++i) {
    if (i > 0) out << ',';
    WriteJsonString(out, map[i].first);
    out << ':';
    WriteJsonValue(out, map[i].second);
  }
  out << '}';
}

void WriteEnvelope(const Envelope& envelope, const std::string& format,
                   std::ostream& out) {
  if (format == "json") {
    out << "{\"command\":";
    WriteJsonString(out, envelope.command);
    out << ",\"inputs\":";
    WriteJsonMap(out, envelope.inputs);
    out << ",\"results\":";
    WriteJsonMap(out, envelope.results);
    out << ",\"warnings\":[";
    for (std::size_t i = 0; i < envelope.warnings.size(); ++i) {
      if (i > 0) out << ',';
      WriteJsonString(out, envelope.warnings[i]);
    }
    out << "],\"tool_version\":";
    WriteJsonString(out, kToolVersion);
    out << "}\n";
  } else if (format == "csv") {
    for (std::size_t i = 0; i < envelope.results.size(); ++i) {
      if (i > 0) out << ',';
      out << envelope.results[i].first;
    }
    out << '\n';
    for (std::size_t i = 0; i < envelope.results.size(); ++i) {
      if (i > 0) out << ',';
      out << FormatPlain(envelope.results[i].second);
    }
    out << '\n';
  } else {  // text
    out << "command: " << envelope.command << '\n';
    out << "inputs:\n";
    for (const auto& [key, value] : envelope.inputs) {
      out << "  " << key << " = " << FormatPlain(value) << '\n';
    }
    out << "results:\n";
    for (const auto& [key, value] : envelope.results) {
      out << "  " << key << " = " << FormatPlain(value) << '\n';
    }
    if (!envelope.warnings.empty()) {
      out << "warnings:\n";
      for (const std::string& warning : envelope.warnings) {
        out << "  - " << warning << '\n';
      }
    }
    out << "tool_version: " << kToolVersion << '\n';
  }
}

// Tabular output for the roc and sweep commands: named columns of equal
// length. CSV uses ',' with a mandatory header; text uses two spaces.
struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<double>> data;  // data[c][row]
};

void WriteTable(const Table& table, const std::string& format,
                const Envelope& envelope, std::ostream& out) {
  if (format == "json") {
    Envelope with_columns = envelope;
    for (std::size_t c = 0; c < table.columns.size(); ++c) {
      with_columns.results.emplace_back(table.columns[c], table.data[c]);
    }
    WriteEnvelope(with_columns, "json", out);
    return;
  }
  const char* sep = format == "csv" ? "," : "  ";
  for (std::size_t c = 0; c < table.columns.size(); ++c) {
    if (c > 0) out << sep;
    out << table.columns[c];
  }
  out << '\n';
  const std::size_t rows = table.data.empty() ? 0 : table.data[0].size();
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < table.columns.size(); ++c) {
      if (c > 0) out << sep;
      out << FormatDouble(table.data[c][r]);
    }
    out << '\n';
  }
}

void AddD(std::vector<std::pair<std::string, Value>>& map,
          const std::string& key, double v) {
  map.emplace_back(key, v);
}
void AddI(std::vector<std::pair<std::string, Value>>& map,
          const std::string& key, long long v) {
  map.emplace_back(key, v);
}
void AddU(std::vector<std::pair<std::string, Value>>& map,
          const std::string& key, unsigned long long v) {
  map.emplace_back(key, v);
}
void AddB(std::vector<std::pair<std::string, Value>>& map,
          const std::string& key, bool v) {
  map.emplace_back(key, v);
}
void AddS(std::vector<std::pair<std::string, Value>>& map,
          const std::string& key, const std::string& v) {
  map.emplace_back(key, v);
}

// ---------------------------------------------------------------------------
// Command handlers
// ---------------------------------------------------------------------------

constexpr double kRdpSampleAlphas[] = {2, 4, 8, 16, 32, 64};

void RunConvert(double psi, double delta, const std::string& method,
                const std::string& format, std::ostream& out) {
  const SensitivityIndex index(psi);
  Envelope envelope{"convert"};
  AddD(envelope.inputs, "psi", psi);
  AddD(envelope.inputs, "delta", delta);
  AddS(envelope.inputs, "method", method);

  const bool all = method == "all";
  if (all || method == "profile") {
    AddD(envelope.results, "epsilon_profile", EpsilonOfDelta(index, delta));
  }
  if (all || method == "rdp-standard") {
    const ConversionResult r =
        OptimalAlphaConversion(index, delta, ConversionMethod::kRdpStandard);
    AddD(envelope.results, "epsilon_rdp_standard", r.epsilon);
    AddD(envelope.results, "alpha_star_standard", r.alpha_star);
  }
  if (all || method == "rdp-improved") {
    const ConversionResult r =
        OptimalAlphaConversion(index, delta, ConversionMethod::kRdpImproved);
    AddD(envelope.results, "epsilon_rdp_improved", r.epsilon);
    AddD(envelope.results, "alpha_star_improved", r.alpha_star);
  }
  AddD(envelope.results, "gdp_mu", psi);
  AddD(envelope.results, "auc", TradeoffCurve(index).Auc());
  for (double alpha : kRdpSampleAlphas) {
    char key[32];
    std::snprintf(key, sizeof(key), "rdp_rho_alpha_%d",
                  static_cast<int>(alpha));
    AddD(envelope.results, key, RdpCurve(index, alpha).rho);
  }
  WriteEnvelope(envelope, format, out);
}

void RunCalibrate(double sensitivity, double epsilon, double delta,
                  const std::string& format, std::ostream& out) {
  const CalibrationResult result = CalibrateSigma(sensitivity, epsilon, delta);
  Envelope envelope{"calibrate"};
  AddD(envelope.inputs, "sensitivity", sensitivity);
  AddD(envelope.inputs, "epsilon", epsilon);
  AddD(envelope.inputs, "delta", delta);
  AddD(envelope.results, "sigma", result.sigma);
  AddD(envelope.results, "psi", sensitivity / result.sigma);
  AddD(envelope.results, "achieved_delta", result.achieved_delta);
  WriteEnvelope(envelope, format, out);
}

void RunCompose(const std::vector<double>& psis, std::optional<double> delta,
                const std::string& format, std::ostream& out) {
  std::vector<SensitivityIndex> parts;
  parts.reserve(psis.size());
  for (double psi : psis) parts.emplace_back(psi);
  const SensitivityIndex total = Compose(parts);

  Envelope envelope{"compose"};
  envelope.inputs.emplace_back("psi", psis);
  if (delta) AddD(envelope.inputs, "delta", *delta);
  AddD(envelope.results, "psi_total", total.value());
  if (delta) {
    AddD(envelope.results, "epsilon", EpsilonOfDelta(total, *delta));
  }
  WriteEnvelope(envelope, format, out);
}

void RunGroup(double psi, int group_size, const std::string& format,
              std::ostream& out) {
  const SensitivityIndex grouped =
      GroupPrivacy(SensitivityIndex(psi), group_size);
  Envelope envelope{"group"};
  AddD(envelope.inputs, "psi", psi);
  AddI(envelope.inputs, "k", group_size);
  AddD(envelope.results, "psi_group", grouped.value());
  WriteEnvelope(envelope, format, out);
}

void RunDpSgd(double sigma, double sampling_rate, long long steps,
              std::optional<double> delta, const std::string& format,
              std::ostream& out) {
  const DpSgdConfig config{sigma, sampling_rate, steps};
  const SensitivityIndex index = DpSgdPsi(config);

  Envelope envelope{"dpsgd"};
  AddD(envelope.inputs, "sigma", sigma);
  AddD(envelope.inputs, "sampling_rate", sampling_rate);
  AddI(envelope.inputs, "steps", steps);
  if (delta) AddD(envelope.inputs, "delta", *delta);
  AddD(envelope.results, "s",
       sampling_rate * std::sqrt(static_cast<double>(steps)));
  AddD(envelope.results, "psi", index.value());
  if (delta) {
    AddD(envelope.results, "epsilon", EpsilonOfDelta(index, *delta));
  }
  if (auto warning = DpSgdAsymptoticsWarning(config)) {
    envelope.warnings.push_back(*warning);
  }
  WriteEnvelope(envelope, format, out);
}

// Curve export samples uniformly in z = Phi^-1(x) over [-8, 8]: the
// extreme corners carry the privacy-relevant shape and uniform-x sampling
// would starve them.
constexpr double kExportZRange = 8.0;

void RunRoc(double psi, int points, std::optional<double> epsilon,
            const std::string& format, std::ostream& out) {
  if (points < 2) {
    throw DomainError("curve export needs at least 2 points");
  }
  const SensitivityIndex index(psi);
  const TradeoffCurve curve(index);
  std::optional<TangentResult> tangent;
  if (epsilon) tangent = curve.TangentIntercept(*epsilon);

  Table table;
  table.columns = {"x", "roc"};
  if (tangent) table.columns.push_back("tangent_epsilon_intercept");
  table.data.resize(table.columns.size());
  for (int i = 0; i < points; ++i) {
    const double z =
        -kExportZRange + 2.0 * kExportZRange * i / (points - 1);
    const double x = StdNormalCdf(z);
    table.data[0].push_back(x);
    table.data[1].push_back(curve.Roc(x));
    if (tangent) {
      table.data[2].push_back(std::exp(*epsilon) * x + tangent->intercept);
    }
  }

  Envelope envelope{"roc"};
  AddD(envelope.inputs, "psi", psi);
  AddI(envelope.inputs, "points", points);
  if (epsilon) AddD(envelope.inputs, "epsilon", *epsilon);
  WriteTable(table, format, envelope, out);
}

void RunSweep(double delta, double psi_min, double psi_max, int steps,
              const std::string& format, std::ostream& out) {
  if (steps < 2) {
    throw DomainError("sweep needs at least 2 grid points");
  }
  if (!(psi_min >= 0.0 && psi_min <= psi_max)) {
    throw DomainError("sweep requires 0 <= psi_min <= psi_max");
  }
  Table table;
  table.columns = {"psi",     "eps_profile", "eps_rdp_standard",
                   "alpha_std", "eps_rdp_improved", "alpha_imp"};
  table.data.resize(table.columns.size());
  for (int i = 0; i < steps; ++i) {
    const double psi = psi_min + (psi_max - psi_min) * i / (steps - 1);
    const SensitivityIndex index(psi);
    const ConversionResult standard =
        OptimalAlphaConversion(index, delta, ConversionMethod::kRdpStandard);
    const ConversionResult improved =
        OptimalAlphaConversion(index, delta, ConversionMethod::kRdpImproved);
    table.data[0].push_back(psi);
    table.data[1].push_back(EpsilonOfDelta(index, delta));
    table.data[2].push_back(standard.epsilon);
    table.data[3].push_back(standard.alpha_star);
    table.data[4].push_back(improved.epsilon);
    table.data[5].push_back(improved.alpha_star);
  }

  Envelope envelope{"sweep"};
  AddD(envelope.inputs, "delta", delta);
  AddD(envelope.inputs, "psi_min", psi_min);
  AddD(envelope.inputs, "psi_max", psi_max);
  AddI(envelope.inputs, "steps", steps);
  WriteTable(table, format, envelope, out);
}

void RunMcVerify(double psi, std::uint64_t samples, std::uint64_t seed,
                 std::optional<double> epsilon, const std::string& format,
                 std::ostream& out) {
  const SensitivityIndex index(psi);
  const McConfig config{index, samples, seed};

  Envelope envelope{"mc-verify"};
  AddD(envelope.inputs, "psi", psi);
  AddU(envelope.inputs, "samples", samples);
  AddU(envelope.inputs, "seed", seed);
  if (epsilon) AddD(envelope.inputs, "epsilon", *epsilon);

  AddS(envelope.results, "rng", kMcRngAlgorithm);
  const McEstimate auc = McAuc(config);
  const double analytic_auc = TradeoffCurve(index).Auc();
  AddD(envelope.results, "mc_auc", auc.value);
  AddD(envelope.results, "mc_auc_se", auc.std_error);
  AddD(envelope.results, "analytic_auc", analytic_auc);
  AddB(envelope.results, "auc_within_3se",
       std::fabs(auc.value - analytic_auc) <= 3.0 * auc.std_error);

  if (psi > 0.0) {
    const McMoments moments = McPrivacyLossMoments(config);
    AddD(envelope.results, "omega_mean", moments.mean.value);
    AddD(envelope.results, "omega_mean_se", moments.mean.std_error);
    AddD(envelope.results, "omega_variance", moments.variance.value);
    AddD(envelope.results, "omega_variance_se", moments.variance.std_error);
  }
  if (epsilon) {
    const McEstimate tail = McPrivacyLossTail(config, *epsilon);
    const double analytic_tail = PrivacyLossTailProbability(index, *epsilon);
    AddD(envelope.results, "mc_tail", tail.value);
    AddD(envelope.results, "mc_tail_se", tail.std_error);
    AddD(envelope.results, "analytic_tail", analytic_tail);
    AddB(envelope.results, "tail_within_3se",
         std::fabs(tail.value - analytic_tail) <= 3.0 * tail.std_error);
  }
  WriteEnvelope(envelope, format, out);
}

}  // namespace

int RunCli(const std::vector<std::string>& args, std::ostream& out,
           std::ostream& err) {
  CLI::App app{"Privacy accounting for the Gaussian mechanism: exact\n"
               "conversions among (epsilon,delta)-DP, Gaussian DP and Renyi\n"
               "DP, all driven by the single index sensitivity/sigma."};
  app.name("gaussdp");
  app.require_subcommand(1);

  const std::vector<std::string> formats = {"json", "csv", "text"};
  auto format_check = CLI::IsMember(formats);

  struct {
    double psi = 0, delta = 0;
    std::string method = "all", format = "json";
  } convert;
  CLI::App* cmd_convert = app.add_subcommand(
      "convert", "Convert an index to every DP representation");
  cmd_convert->add_option("--psi", convert.psi, "Sensitivity index")
      ->required();
  cmd_convert->add_option("--delta", convert.delta, "Target delta")
      ->required();
  cmd_convert
      ->add_option("--method", convert.method,
                   "Conversion method (default all)")
      ->check(CLI::IsMember(
          {"profile", "rdp-standard", "rdp-improved", "all"}));
  cmd_convert->add_option("--format", convert.format, "Output format")
      ->check(format_check);

  struct {
    double sensitivity = 0, epsilon = 0, delta = 0;
    std::string format = "json";
  } calibrate;
  CLI::App* cmd_calibrate = app.add_subcommand(
      "calibrate", "Smallest noise scale meeting an (epsilon, delta) target");
  cmd_calibrate
      ->add_option("--sensitivity", calibrate.sensitivity, "L2 sensitivity")
      ->required();
  cmd_calibrate->add_option("--epsilon", calibrate.epsilon, "Target epsilon")
      ->required();
  cmd_calibrate->add_option("--delta", calibrate.delta, "Target delta")
      ->required();
  cmd_calibrate->add_option("--format", calibrate.format, "Output format")
      ->check(format_check);

  struct {
    std::vector<double> psis;
    double delta = 0;
    std::string format = "json";
  } compose;
  CLI::App* cmd_compose =
      app.add_subcommand("compose", "Compose mechanisms (Euclidean norm)");
  cmd_compose->add_option("--psi", compose.psis, "Index (repeatable)")
      ->required();
  CLI::Option* compose_delta = cmd_compose->add_option(
      "--delta", compose.delta, "Also report epsilon at this delta");
  cmd_compose->add_option("--format", compose.format, "Output format")
      ->check(format_check);

  struct {
    double psi = 0;
    int k = 1;
    std::string format = "json";
  } group;
  CLI::App* cmd_group =
      app.add_subcommand("group", "Guarantee for groups of k individuals");
  cmd_group->add_option("--psi", group.psi, "Sensitivity index")->required();
  cmd_group->add_option("--k", group.k, "Group size")->required();
  cmd_group->add_option("--format", group.format, "Output format")
      ->check(format_check);

  struct {
    double sigma = 0, sampling_rate = 0, delta = 0;
    long long steps = 0;
    std::string format = "json";
  } dpsgd;
  CLI::App* cmd_dpsgd = app.add_subcommand(
      "dpsgd", "Asymptotic accountant for subsampled noisy SGD");
  cmd_dpsgd->add_option("--sigma", dpsgd.sigma, "Noise multiplier")
      ->required();
  cmd_dpsgd
      ->add_option("--sampling-rate", dpsgd.sampling_rate,
                   "Per-step sampling rate in (0,1]")
      ->required();
  cmd_dpsgd->add_option("--steps", dpsgd.steps, "Iteration count")
      ->required();
  CLI::Option* dpsgd_delta = cmd_dpsgd->add_option(
      "--delta", dpsgd.delta, "Also report epsilon at this delta");
  cmd_dpsgd->add_option("--format", dpsgd.format, "Output format")
      ->check(format_check);

  struct {
    double psi = 0, epsilon = 0;
    int points = 256;
    std::string format = "csv";
  } roc;
  CLI::App* cmd_roc =
      app.add_subcommand("roc", "Export the worst-case ROC curve");
  cmd_roc->add_option("--psi", roc.psi, "Sensitivity index")->required();
  cmd_roc->add_option("--points", roc.points, "Sample count (default 256)");
  CLI::Option* roc_epsilon = cmd_roc->add_option(
      "--epsilon", roc.epsilon,
      "Also export the slope-e^epsilon tangent line");
  cmd_roc->add_option("--format", roc.format, "Output format")
      ->check(format_check);

  struct {
    double delta = 1e-5, psi_min = 0.1, psi_max = 6.0;
    int steps = 100;
    std::string format = "csv";
  } sweep;
  CLI::App* cmd_sweep = app.add_subcommand(
      "sweep", "Compare conversion methods over an index range");
  cmd_sweep->add_option("--delta", sweep.delta, "Target delta (default 1e-5)");
  cmd_sweep->add_option("--psi-min", sweep.psi_min, "Grid start (default 0.1)");
  cmd_sweep->add_option("--psi-max", sweep.psi_max, "Grid end (default 6)");
  cmd_sweep->add_option("--steps", sweep.steps, "Grid points (default 100)");
  cmd_sweep->add_option("--format", sweep.format, "Output format")
      ->check(format_check);

  struct {
    double psi = 0, epsilon = 0;
    std::uint64_t samples = 1000000, seed = 1;
    std::string format = "json";
  } mc;
  CLI::App* cmd_mc = app.add_subcommand(
      "mc-verify", "Check the closed forms against Monte-Carlo sampling");
  cmd_mc->add_option("--psi", mc.psi, "Sensitivity index")->required();
  cmd_mc->add_option("--samples", mc.samples, "Sample count (default 1e6)");
  cmd_mc->add_option("--seed", mc.seed, "RNG seed (default 1)");
  CLI::Option* mc_epsilon = cmd_mc->add_option(
      "--epsilon", mc.epsilon, "Also estimate the privacy-loss tail");
  cmd_mc->add_option("--format", mc.format, "Output format")
      ->check(format_check);

  std::vector<const char*> argv;
  argv.reserve(args.size() + 1);
  argv.push_back("gaussdp");
  for (const std::string& arg : args) argv.push_back(arg.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::Success& e) {
    app.exit(e, out, err);  // --help and friends
    return 0;
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return 2;
  }

  try {
    if (*cmd_convert) {
      RunConvert(convert.psi, convert.delta, convert.method, convert.format,
                 out);
    } else if (*cmd_calibrate) {
      RunCalibrate(calibrate.sensitivity, calibrate.epsilon, calibrate.delta,
                   calibrate.format, out);
    } else if (*cmd_compose) {
      std::optional<double> delta;
      if (compose_delta->count() > 0) delta = compose.delta;
      RunCompose(compose.psis, delta, compose.format, out);
    } else if (*cmd_group) {
      RunGroup(group.psi, group.k, group.format, out);
    } else if (*cmd_dpsgd) {
      std::optional<double> delta;
      if (dpsgd_delta->count() > 0) delta = dpsgd.delta;
      RunDpSgd(dpsgd.sigma, dpsgd.sampling_rate, dpsgd.steps, delta,
               dpsgd.format, out);
    } else if (*cmd_roc) {
      std::optional<double> epsilon;
      if (roc_epsilon->count() > 0) epsilon = roc.epsilon;
      RunRoc(roc.psi, roc.points, epsilon, roc.format, out);
    } else if (*cmd_sweep) {
      RunSweep(sweep.delta, sweep.psi_min, sweep.psi_max, sweep.steps,
               sweep.format, out);
    } else if (*cmd_mc) {
      std::optional<double> epsilon;
      if (mc_epsilon->count() > 0) epsilon = mc.epsilon;
      RunMcVerify(mc.psi, mc.samples, mc.seed, epsilon, mc.format, out);
    }
  } catch (const ConvergenceError& e) {
    err << "error: " << e.what() << '\n';
    return 4;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return 3;
  }
  return 0;
}

}  // namespace gaussdp
