#pragma once

#include <cstdint>
#include <exception>
#include <filesystem>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "elastics/cli/config.hpp"

namespace elastics::cli {

inline constexpr int kSchemaVersion = 1;
const char* library_version();

namespace exit_code {
inline constexpr int ok = 0;
inline constexpr int config = 1;
inline constexpr int no_solution = 2;  // NoSolution, NotClosedForm, CaseNotCovered
inline constexpr int ill_conditioned = 3;
inline constexpr int incompatible = 4;
inline constexpr int domain = 5;  // AxisSingularity, DomainError, ...
inline constexpr int verification = 6;
inline constexpr int io = 7;
}  // namespace exit_code

int exit_code_for(const std::exception& err);

/// Command-line values that take precedence over the config; they are
/// written into the document so the artifact metadata records them.
struct Overrides {
  std::optional<double> tolerance;
  std::optional<double> case4_C;
  std::optional<std::uint64_t> seed;
  std::optional<Format> format;
};

void apply_overrides(ConfigDoc& doc, const Overrides& o);

struct RunResult {
  std::string command;
  /// File name inside the output directory, then its exact content.
  std::vector<std::pair<std::string, std::string>> files;
  /// check name -> max relative residual
  std::vector<std::pair<std::string, double>> residuals;
  bool checks_pass = true;
  std::string summary;
};

/// Runs a subcommand without touching the filesystem. Library errors
/// propagate unchanged.
RunResult run(const std::string& command, const ConfigDoc& doc);

/// Creates dir as needed; each file is written to a temporary name and
/// renamed into place.
void write_files(const std::filesystem::path& dir, const RunResult& result);

struct VerifyOutcome {
  bool pass = false;
  json report;
  std::string summary;
};

/// Reruns the command recorded in an artifact's metadata and compares the
/// regenerated files and residuals with those next to it.
VerifyOutcome verify_artifact(const std::filesystem::path& artifact);

/// The whole command line; returns the process exit code.
int main(int argc, char** argv);

}  // namespace elastics::cli
