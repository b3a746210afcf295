#include "sbound/cli.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "sbound/critline.hpp"
#include "sbound/errors.hpp"
#include "sbound/optimize.hpp"
#include "sbound/reference.hpp"
#include "sbound/sbounds.hpp"
#include "sbound/verify.hpp"

namespace sbound::cli {
namespace {

using nlohmann::json;

const std::vector<std::string> kTableColumns = {"rosser_b", "rosser_total", "conv_b",
                                                "conv_total", "subconv_b", "subconv_total"};

json optional_number(std::optional<double> v) { return v ? json(*v) : json(nullptr); }

json cert_json(const CriticalLineBound& cert) {
  return {{"label", cert.label()},
          {"theta", cert.theta()},
          {"B", optional_number(cert.prefactor())},
          {"delta", optional_number(cert.delta())},
          {"coefficient_only", cert.coefficient_only()}};
}

json bound_json(const LinearBound& bound) {
  json j = {{"a", bound.a()},
            {"b", bound.b()},
            {"t0", bound.t0()},
            {"method", to_string(bound.method())},
            {"total_at_t0", bound.value_at(bound.t0())}};
  if (bound.r()) j["r"] = *bound.r();
  return j;
}

// Published (b, total) pair for a table column, if t0 is a printed height.
json published_pair(double t0, std::string_view column, double b, double total) {
  const auto row = reference::find_row(t0);
  if (!row) return nullptr;
  double pb = 0.0;
  double pt = 0.0;
  if (column == "rosser") {
    pb = row->rosser_b;
    pt = row->rosser_total;
  } else if (column == "conv") {
    pb = row->conv_b;
    pt = row->conv_total;
  } else {
    pb = row->subconv_b;
    pt = row->subconv_total;
  }
  return {{"b_paper", pb}, {"total_paper", pt}, {"b_delta", b - pb}, {"total_delta", total - pt}};
}

std::string_view column_for(CertKind kind) {
  return kind == CertKind::ChengGraham ? "subconv" : "conv";
}

CriticalLineBound cert_from_flags(const std::string& mode, std::optional<double> delta,
                                  std::optional<double> theta, std::optional<double> B) {
  if (mode == "convexity") return make_convexity();
  if (mode == "cheng-graham") {
    if (!delta) throw DomainError("--delta is required for cheng-graham mode");
    return make_cheng_graham(*delta);
  }
  if (mode == "custom") {
    if (!theta) throw DomainError("--theta is required for custom mode");
    return make_custom(B, *theta);
  }
  throw DomainError("unknown mode " + mode);
}

std::string number_text(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

std::string number_exact(double v) {
  if (!std::isfinite(v)) return "";
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

std::string scalar_text(const json& v) {
  if (v.is_null()) return "-";
  if (v.is_number_float()) return number_text(v.get<double>());
  if (v.is_string()) return v.get<std::string>();
  return v.dump();
}

std::string scalar_csv(const json& v) {
  if (v.is_null()) return "";
  if (v.is_number_float()) return number_exact(v.get<double>());
  if (v.is_string()) {
    const auto s = v.get<std::string>();
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string quoted = "\"";
    for (char c : s) {
      if (c == '"') quoted += '"';
      quoted += c;
    }
    return quoted + "\"";
  }
  return v.dump();
}

void text_tree(std::ostream& os, const json& node, int indent) {
  const std::string pad(static_cast<std::size_t>(indent), ' ');
  if (node.is_object()) {
    for (const auto& [key, value] : node.items()) {
      if (value.is_structured() && !value.empty()) {
        os << pad << key << ":\n";
        text_tree(os, value, indent + 2);
      } else {
        os << pad << key << ": " << scalar_text(value) << "\n";
      }
    }
  } else if (node.is_array()) {
    for (const auto& value : node) {
      if (value.is_structured()) {
        os << pad << "-\n";
        text_tree(os, value, indent + 2);
      } else {
        os << pad << "- " << scalar_text(value) << "\n";
      }
    }
  } else {
    os << pad << scalar_text(node) << "\n";
  }
}

void flatten(const json& node, const std::string& prefix, std::vector<std::pair<std::string, json>>& out) {
  if (node.is_object()) {
    for (const auto& [key, value] : node.items()) flatten(value, prefix.empty() ? key : prefix + "." + key, out);
  } else if (node.is_array()) {
    for (std::size_t i = 0; i < node.size(); ++i) flatten(node[i], prefix + "." + std::to_string(i), out);
  } else {
    out.emplace_back(prefix, node);
  }
}

std::vector<std::string> table_csv_header() {
  std::vector<std::string> cols{"t0"};
  cols.insert(cols.end(), kTableColumns.begin(), kTableColumns.end());
  for (const auto& c : kTableColumns) cols.push_back(c + "_paper");
  for (const auto& c : kTableColumns) cols.push_back(c + "_delta");
  return cols;
}

std::string render_table_csv(const json& rows) {
  std::ostringstream os;
  const auto header = table_csv_header();
  for (std::size_t i = 0; i < header.size(); ++i) os << (i ? "," : "") << header[i];
  os << "\n";
  for (const auto& row : rows) {
    for (std::size_t i = 0; i < header.size(); ++i) os << (i ? "," : "") << scalar_csv(row.at(header[i]));
    os << "\n";
  }
  return os.str();
}

std::string render_table_text(const json& rows) {
  std::ostringstream os;
  char buf[256];
  std::snprintf(buf, sizeof buf, "%-10s %10s %10s %10s %10s %10s %10s\n", "t0", "rosser_b", "rosser_S",
                "conv_b", "conv_S", "subconv_b", "subconv_S");
  os << buf;
  auto cell = [](const json& v) { return v.is_null() ? std::string("-") : number_text(v.get<double>()); };
  for (const auto& row : rows) {
    std::snprintf(buf, sizeof buf, "%-10s %10s %10s %10s %10s %10s %10s\n", cell(row["t0"]).c_str(),
                  cell(row["rosser_b"]).c_str(), cell(row["rosser_total"]).c_str(), cell(row["conv_b"]).c_str(),
                  cell(row["conv_total"]).c_str(), cell(row["subconv_b"]).c_str(),
                  cell(row["subconv_total"]).c_str());
    os << buf;
    std::snprintf(buf, sizeof buf, "%-10s %10s %10s %10s %10s %10s %10s\n", " published",
                  cell(row["rosser_b_paper"]).c_str(), cell(row["rosser_total_paper"]).c_str(),
                  cell(row["conv_b_paper"]).c_str(), cell(row["conv_total_paper"]).c_str(),
                  cell(row["subconv_b_paper"]).c_str(), cell(row["subconv_total_paper"]).c_str());
    os << buf;
  }
  return os.str();
}

void add_output_options(CLI::App* sub, std::string& format, std::string& out_path) {
  sub->add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "csv", "text"}));
  sub->add_option("--out", out_path, "Also write the report to this file");
}

Format parse_format(const std::string& s) {
  if (s == "csv") return Format::Csv;
  if (s == "text") return Format::Text;
  return Format::Json;
}

}  // namespace

json ReportEnvelope::to_json() const {
  return {{"command", command},
          {"inputs", inputs},
          {"results", results},
          {"paper_refs", paper_refs},
          {"tool_version", tool_version}};
}

ReportEnvelope cmd_bound(const BoundFlags& flags) {
  ReportEnvelope env;
  env.command = "bound";
  env.inputs = {{"t0", flags.t0},
                {"mode", flags.mode},
                {"eta", optional_number(flags.eta)},
                {"delta", optional_number(flags.delta)},
                {"theta", optional_number(flags.theta)},
                {"B", optional_number(flags.B)}};

  if (flags.mode == "rosser") {
    const LinearBound bound = rosser_bound(flags.t0);
    env.results = bound_json(bound);
    env.results["total"] = bound.value_at(flags.t0);
    env.results["reference"] = published_pair(flags.t0, "rosser", bound.b(), bound.value_at(flags.t0));
    env.paper_refs = {std::string(reference::kRosserCitation), std::string(reference::kTableCitation)};
    return env;
  }

  if (!flags.eta) throw DomainError("--eta is required for mode " + flags.mode);
  const CriticalLineBound cert = cert_from_flags(flags.mode, flags.delta, flags.theta, flags.B);
  const BoundParams params{*flags.eta, flags.t0, cert};
  params.validate();
  env.paper_refs = {std::string(reference::kTheoremBCitation)};

  if (cert.coefficient_only()) {
    env.results = {{"a", nullptr},
                   {"b", theorem_b_coeff_b(*flags.eta, cert.theta())},
                   {"total", nullptr},
                   {"certificate", cert_json(cert)}};
    return env;
  }
  const LinearBound bound = theorem_b_bound(params);
  env.results = bound_json(bound);
  env.results["total"] = bound.value_at(flags.t0);
  env.results["certificate"] = cert_json(cert);
  env.results["reference"] =
      cert.kind() == CertKind::Custom
          ? json(nullptr)
          : published_pair(flags.t0, column_for(cert.kind()), bound.b(), bound.value_at(flags.t0));
  env.paper_refs.emplace_back(reference::kTableCitation);
  return env;
}

ReportEnvelope cmd_optimize(const OptimizeFlags& flags) {
  ReportEnvelope env;
  env.command = "optimize";
  env.inputs = {{"t0", flags.t0},
                {"mode", flags.mode},
                {"theta", optional_number(flags.theta)},
                {"B", optional_number(flags.B)}};
  OptimizationResult r = [&] {
    if (flags.mode == "convexity") return minimize_bound(flags.t0, CertKind::Convexity);
    if (flags.mode == "cheng-graham") return minimize_bound(flags.t0, CertKind::ChengGraham);
    return minimize_bound_for_cert(flags.t0, cert_from_flags(flags.mode, std::nullopt, flags.theta, flags.B));
  }();
  env.results = {{"mode", to_string(r.mode)},
                 {"best_eta", r.best_eta},
                 {"best_delta", optional_number(r.best_delta)},
                 {"bound", bound_json(r.bound)},
                 {"total_at_t0", r.total_at_t0},
                 {"evaluations", r.evaluations}};
  env.results["reference"] = r.mode == CertKind::Custom
                                 ? json(nullptr)
                                 : published_pair(r.t0, column_for(r.mode), r.bound.b(), r.total_at_t0);
  if (r.mode == CertKind::Convexity && std::abs(r.t0 - reference::kTheorem1T0) <= 1e-9 * r.t0) {
    env.results["theorem1_reference"] = {{"a_paper", reference::kTheorem1A}, {"b_paper", reference::kTheorem1B}};
  }
  env.paper_refs = {std::string(reference::kOptimumCitation), std::string(reference::kTableCitation)};
  return env;
}

ReportEnvelope cmd_table(const TableFlags& flags) {
  ReportEnvelope env;
  env.command = "table";
  const std::vector<double> heights = flags.t0_list.empty() ? default_table_heights() : flags.t0_list;
  env.inputs = {{"t0_list", heights}};

  json rows = json::array();
  for (const auto& row : build_table(heights)) {
    const double computed[] = {row.rosser_b, row.rosser_total, row.conv_b,
                               row.conv_total, row.subconv_b, row.subconv_total};
    std::optional<std::array<double, 6>> published;
    if (row.published) {
      const auto& p = *row.published;
      published = std::array<double, 6>{p.rosser_b, p.rosser_total, p.conv_b,
                                        p.conv_total, p.subconv_b, p.subconv_total};
    }
    json j = {{"t0", row.t0}};
    for (std::size_t i = 0; i < kTableColumns.size(); ++i) {
      const auto& name = kTableColumns[i];
      j[name] = computed[i];
      j[name + "_paper"] = published ? json((*published)[i]) : json(nullptr);
      j[name + "_delta"] = published ? json(computed[i] - (*published)[i]) : json(nullptr);
    }
    rows.push_back(std::move(j));
  }
  env.results = {{"rows", rows}};
  env.paper_refs = {std::string(reference::kTableCitation), std::string(reference::kRosserCitation),
                    std::string(reference::kTheoremBCitation)};
  return env;
}

ReportEnvelope cmd_crossover(const CrossoverFlags& flags) {
  ReportEnvelope env;
  env.command = "crossover";
  env.inputs = {{"lo", flags.lo}, {"hi", flags.hi}};
  const double t_star = crossover_height(flags.lo, flags.hi);
  const double log10_t = std::log10(t_star);
  env.results = {{"t_star", t_star},
                 {"log10_t_star", log10_t},
                 {"log10_paper", reference::kCrossoverLog10},
                 {"log10_delta", log10_t - reference::kCrossoverLog10},
                 {"margin", kCrossoverMargin}};
  env.paper_refs = {std::string(reference::kCrossoverCitation)};
  return env;
}

ReportEnvelope cmd_verify_s(const VerifySFlags& flags) {
  ReportEnvelope env;
  env.command = "verify s";
  env.inputs = {{"t_max", flags.t_max}, {"samples", flags.samples}, {"eta", flags.eta}};
  constexpr double kTLo = 4.0;
  if (!(flags.t_max > kTLo && flags.t_max <= kMaxScanHeight))
    throw DomainError("verify s: --t-max must lie in (4, 5000]");

  const std::vector<LinearBound> bounds = {rosser_bound(3.0),
                                           theorem_b_bound(BoundParams{flags.eta, 3.001, make_convexity()})};
  const ZeroScanResult scan = scan_zeros(flags.t_max);
  const EmpiricalBoundReport report = check_bounds_empirically(kTLo, flags.t_max, bounds, flags.samples, scan);

  json checks = json::array();
  for (const auto& c : report.checks) {
    checks.push_back({{"bound", bound_json(c.bound)},
                      {"min_margin", c.min_margin},
                      {"argmin_t", c.argmin_t},
                      {"violations", c.violations}});
  }
  json violations = json::array();
  for (const auto& v : report.violations)
    violations.push_back({{"bound_index", v.bound_index}, {"t", v.t}, {"s", v.s}, {"bound_value", v.bound_value}});
  json suspicious = json::array();
  for (const auto& g : scan.suspicious_gaps) suspicious.push_back({{"lo", g.lo}, {"hi", g.hi}, {"reason", g.reason}});

  env.results = {{"zero_count", scan.zero_count},
                 {"suspicious_gaps", suspicious},
                 {"t_lo", report.t_lo},
                 {"t_hi", report.t_hi},
                 {"max_abs_s", report.max_abs_s},
                 {"argmax_t", report.argmax_t},
                 {"checks", checks},
                 {"violations", violations},
                 {"passed", report.passed()}};
  env.paper_refs = {std::string(reference::kRosserValidityCitation), std::string(reference::kTheoremBCitation)};
  return env;
}

ReportEnvelope cmd_verify_lemmas(const VerifyLemmasFlags& flags) {
  ReportEnvelope env;
  env.command = "verify lemmas";
  env.inputs = {{"samples", flags.samples}, {"seed", flags.seed}};
  const LemmaReport report = check_lemmas(flags.samples, flags.seed);
  json families = json::array();
  for (const auto& f : report.families) {
    families.push_back({{"name", f.name},
                        {"samples", f.samples},
                        {"failures", f.failures},
                        {"worst_margin", f.worst_margin},
                        {"worst_sigma", f.worst_sigma},
                        {"worst_t", f.worst_t},
                        {"passed", f.passed()}});
  }
  env.results = {{"families", families}, {"passed", report.passed()}};
  env.paper_refs = {std::string(reference::kLemmaCitation)};
  return env;
}

std::string render(const ReportEnvelope& envelope, Format format) {
  const json j = envelope.to_json();
  switch (format) {
    case Format::Json:
      return j.dump(2) + "\n";
    case Format::Csv: {
      if (envelope.command == "table") return render_table_csv(envelope.results.at("rows"));
      std::vector<std::pair<std::string, json>> cells;
      flatten(envelope.results, "", cells);
      std::ostringstream os;
      os << "key,value\n";
      for (const auto& [key, value] : cells) os << key << "," << scalar_csv(value) << "\n";
      return os.str();
    }
    case Format::Text: {
      std::ostringstream os;
      os << "command: " << envelope.command << "\n";
      os << "inputs:\n";
      text_tree(os, envelope.inputs, 2);
      os << "results:\n";
      if (envelope.command == "table")
        os << render_table_text(envelope.results.at("rows"));
      else
        text_tree(os, envelope.results, 2);
      os << "paper_refs:\n";
      for (const auto& ref : envelope.paper_refs) os << "  - " << ref << "\n";
      os << "tool_version: " << envelope.tool_version << "\n";
      return os.str();
    }
  }
  return {};
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Explicit bounds for S(T), the argument of the Riemann zeta-function", "sbound"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(kToolVersion));

  std::string format = "json";
  std::string out_path;

  BoundFlags bound;
  auto* bound_cmd = app.add_subcommand("bound", "Evaluate a + b log T for given parameters");
  bound_cmd->add_option("--t0", bound.t0, "Height T0")->required();
  bound_cmd->add_option("--mode", bound.mode, "Certificate mode")
      ->required()
      ->check(CLI::IsMember({"convexity", "cheng-graham", "custom", "rosser"}));
  bound_cmd->add_option("--eta", bound.eta, "eta in (0, 1/2]");
  bound_cmd->add_option("--delta", bound.delta, "delta in (0, 1/12] (cheng-graham)");
  bound_cmd->add_option("--theta", bound.theta, "theta in (0, 1/4] (custom)");
  bound_cmd->add_option("--B", bound.B, "prefactor B (custom)");
  add_output_options(bound_cmd, format, out_path);

  OptimizeFlags optimize;
  auto* opt_cmd = app.add_subcommand("optimize", "Minimize a + b log T0 over the free parameters");
  opt_cmd->add_option("--t0", optimize.t0, "Height T0")->required();
  opt_cmd->add_option("--mode", optimize.mode, "Certificate mode")
      ->required()
      ->check(CLI::IsMember({"convexity", "cheng-graham", "custom"}));
  opt_cmd->add_option("--theta", optimize.theta, "theta in (0, 1/4] (custom)");
  opt_cmd->add_option("--B", optimize.B, "prefactor B (custom)");
  add_output_options(opt_cmd, format, out_path);

  TableFlags table;
  auto* table_cmd = app.add_subcommand("table", "Comparison table of Rosser, convexity and subconvexity bounds");
  table_cmd->add_option("--t0-list", table.t0_list, "Heights (default: the eight published heights)")
      ->delimiter(',');
  add_output_options(table_cmd, format, out_path);

  CrossoverFlags crossover;
  auto* cross_cmd = app.add_subcommand("crossover", "Height where subconvexity overtakes convexity in b");
  cross_cmd->add_option("--lo", crossover.lo, "Lower end of the bracket")->capture_default_str();
  cross_cmd->add_option("--hi", crossover.hi, "Upper end of the bracket")->capture_default_str();
  add_output_options(cross_cmd, format, out_path);

  auto* verify_cmd = app.add_subcommand("verify", "Empirical checks against computed zeta values");
  verify_cmd->require_subcommand(1);
  VerifySFlags verify_s;
  auto* s_cmd = verify_cmd->add_subcommand("s", "Check S(t) bounds against a zero scan");
  s_cmd->add_option("--t-max", verify_s.t_max, "Upper height")->capture_default_str()->check(CLI::Range(5.0, kMaxScanHeight));
  s_cmd->add_option("--samples", verify_s.samples, "Number of sample heights")->capture_default_str()->check(CLI::PositiveNumber);
  s_cmd->add_option("--eta", verify_s.eta, "eta of the convexity bound checked")->capture_default_str();
  add_output_options(s_cmd, format, out_path);
  VerifyLemmasFlags verify_lemmas;
  auto* lemmas_cmd = verify_cmd->add_subcommand("lemmas", "Random domination checks of the lemma bounds");
  lemmas_cmd->add_option("--samples", verify_lemmas.samples, "Samples per family")->capture_default_str()
      ->check(CLI::PositiveNumber);
  lemmas_cmd->add_option("--seed", verify_lemmas.seed, "RNG seed")->capture_default_str();
  add_output_options(lemmas_cmd, format, out_path);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitBadFlags;
  }

  ReportEnvelope env;
  try {
    if (*bound_cmd)
      env = cmd_bound(bound);
    else if (*opt_cmd)
      env = cmd_optimize(optimize);
    else if (*table_cmd)
      env = cmd_table(table);
    else if (*cross_cmd)
      env = cmd_crossover(crossover);
    else if (*s_cmd)
      env = cmd_verify_s(verify_s);
    else
      env = cmd_verify_lemmas(verify_lemmas);
  } catch (const DomainError& e) {
    err << "domain error: " << e.what() << "\n";
    return kExitDomain;
  } catch (const NoSignChangeError& e) {
    err << "no sign change: " << e.what() << "\n";
    return kExitNoSignChange;
  }

  const std::string text = render(env, parse_format(format));
  out << text;
  if (!out_path.empty()) {
    std::ofstream file(out_path);
    if (!file) {
      err << "cannot open " << out_path << "\n";
      return kExitBadFlags;
    }
    file << text;
  }
  if (env.results.contains("passed") && !env.results["passed"].get<bool>()) return kExitViolations;
  return kExitOk;
}

}  // namespace sbound::cli
