#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "elastics/cli/config_doc.hpp"
#include "elastics/core_model.hpp"
#include "elastics/displacement.hpp"
#include "elastics/potentials.hpp"
#include "elastics/relaxation.hpp"
#include "elastics/vibration.hpp"

namespace elastics::cli {

enum class Format { Csv, Json, Both };

const char* to_string(Format f);
/// Throws InvalidArgument.
Format format_from_string(const std::string& name);

/// count points from lo to hi inclusive; count == 1 gives lo.
struct Axis {
  double lo = 0.0;
  double hi = 0.0;
  int count = 1;

  std::vector<double> values() const;
};

struct GridSpec {
  Axis r;
  Axis theta;
  Axis z;
  Axis t;

  std::size_t size() const;
};

/// Typed lookups by dotted path; every failure names the field and, for
/// TOML input, the line.
class Reader {
 public:
  explicit Reader(const ConfigDoc& doc) : doc_(doc) {}

  const json* find(const std::string& path) const;
  bool has(const std::string& path) const { return find(path) != nullptr; }

  double number(const std::string& path) const;
  double number(const std::string& path, double fallback) const;
  std::optional<double> optional_number(const std::string& path) const;
  int integer(const std::string& path) const;
  int integer(const std::string& path, int fallback) const;
  bool boolean(const std::string& path, bool fallback) const;
  std::string string(const std::string& path) const;
  std::string string(const std::string& path, const std::string& fallback) const;
  /// [lo, hi, count]
  Axis axis(const std::string& path, const Axis& fallback) const;

  [[noreturn]] void fail(const std::string& path, const std::string& message) const;

 private:
  const ConfigDoc& doc_;
};

/// problem kind, from "problem" at the top level.
std::string problem_kind(const Reader& in);

Material material(const Reader& in);

struct Verification {
  double tolerance = 1e-5;
  std::uint64_t seed = 20240601;
  int points = 50;
};

Verification verification(const Reader& in);

vibration::VibrationProblem vibration_problem(const Reader& in);
vibration::SolveOptions vibration_options(const Reader& in);

relaxation::RelaxationProblem relaxation_problem(const Reader& in);

struct FamilyConfig {
  SolutionFamily family;
  /// Radial extent used for the difference-step scales.
  double extent = 1.0;
};

FamilyConfig family(const Reader& in);

struct SovChiConfig {
  SovChi chi;
  double extent = 1.0;
};

SovChiConfig sov_chi(const Reader& in);

/// [grid] with per-axis defaults.
GridSpec grid(const Reader& in, const GridSpec& defaults);

}  // namespace elastics::cli
