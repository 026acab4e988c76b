#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "moonfill/generate.hpp"

namespace moonfill {

struct CheckResult {
  std::string name;
  bool passed = true;
  long long instances = 0;
  /// First failing instance (shape, e, s, filling, subset), smallest shapes first.
  std::string counterexample;
};

struct SuiteReport {
  std::string suite;
  std::uint64_t seed = default_seed;
  std::vector<CheckResult> checks;

  bool passed() const;
};

struct VerifyOptions {
  std::uint64_t seed = default_seed;
  int shapes = 20;
  int max_rows = 5;
  int max_cols = 5;
  int max_matching = 4;
  int max_catalan = 5;
  int threads = 1;
};

const std::vector<std::string>& suite_names();

/// Throws std::invalid_argument for an unknown suite.
SuiteReport run_suite(std::string_view name, const VerifyOptions& options);

std::string format_report(const SuiteReport& report);

}  // namespace moonfill
