#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "commands.hpp"

namespace regionbound::cli {

struct Check {
  std::string suite;
  std::string name;
  bool passed = false;
  std::string detail;
};

std::span<const std::string_view> verify_suite_names();

/// Runs one suite, or every suite for "all". Counterexample artifacts go to
/// config.out_dir. Throws UsageError for an unknown suite.
std::vector<Check> run_verify_suite(std::string_view suite, const RunConfig& config);

}  // namespace regionbound::cli
