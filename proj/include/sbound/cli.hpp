#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

namespace sbound::cli {

inline constexpr std::string_view kToolVersion = "0.1.0";

enum ExitCode : int {
  kExitOk = 0,
  kExitBadFlags = 2,
  kExitDomain = 3,
  kExitNoSignChange = 4,
  kExitViolations = 5,
};

enum class Format { Json, Csv, Text };

/// Envelope written by every command. Keys serialize in sorted order.
struct ReportEnvelope {
  std::string command;
  nlohmann::json inputs = nlohmann::json::object();
  nlohmann::json results = nlohmann::json::object();
  std::vector<std::string> paper_refs;
  std::string tool_version{kToolVersion};

  nlohmann::json to_json() const;
};

struct BoundFlags {
  double t0 = 0.0;
  std::string mode;
  std::optional<double> eta;
  std::optional<double> delta;
  std::optional<double> theta;
  std::optional<double> B;
};

struct OptimizeFlags {
  double t0 = 0.0;
  std::string mode;
  std::optional<double> theta;
  std::optional<double> B;
};

struct TableFlags {
  std::vector<double> t0_list;  // empty: the eight published heights
};

struct CrossoverFlags {
  double lo = 1e20;
  double hi = 1e32;
};

struct VerifySFlags {
  double t_max = 1000.0;
  int samples = 2000;
  double eta = 0.351;
};

struct VerifyLemmasFlags {
  int samples = 500;
  std::uint64_t seed = 42;
};

// Each command throws DomainError / NoSignChangeError on failure; verify
// commands set results["passed"].
ReportEnvelope cmd_bound(const BoundFlags& flags);
ReportEnvelope cmd_optimize(const OptimizeFlags& flags);
ReportEnvelope cmd_table(const TableFlags& flags);
ReportEnvelope cmd_crossover(const CrossoverFlags& flags);
ReportEnvelope cmd_verify_s(const VerifySFlags& flags);
ReportEnvelope cmd_verify_lemmas(const VerifyLemmasFlags& flags);

std::string render(const ReportEnvelope& envelope, Format format);

/// Parses argv, dispatches, renders to `out`; returns the process exit code.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace sbound::cli
