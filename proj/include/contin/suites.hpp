#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "contin/io.hpp"

namespace contin {

struct SuiteFailure {
  std::string check;
  Json inputs;
  std::string expected;
  std::string actual;
};

struct SuiteReport {
  std::string suite;
  int max_size = 0;
  std::uint64_t seed = 0;
  bool mutant = false;
  std::size_t cases = 0;
  std::size_t failure_count = 0;
  /// The first kMaxRecorded failures; failure_count has the total.
  std::vector<SuiteFailure> failures;
  /// Named counts and values worth reporting (e.g. rejected transports).
  Json metrics = Json::object();
  /// Not part of the JSON form, which must be reproducible byte for byte.
  double wall_seconds = 0;

  static constexpr std::size_t kMaxRecorded = 50;
  bool passed() const { return failure_count == 0; }
  Json to_json() const;
};

struct SuiteOptions {
  int max_size = 0;  // 0 selects the suite's default scale
  std::uint64_t seed = 1;
  /// Runs the checks against a deliberately broken variant (swapped encoder
  /// intervals, flipped sigma sign, mirrored witness, ...) so that the
  /// suite must report failures.
  bool mutant = false;
};

const std::vector<std::string>& suite_names();

/// Runs the property checks of one module. Throws std::invalid_argument for
/// an unknown suite name or a negative size.
SuiteReport run_suite(const std::string& name, const SuiteOptions& options);

}  // namespace contin
