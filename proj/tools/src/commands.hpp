#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>

#include "document.hpp"

namespace regionbound::cli {

struct RunConfig {
  std::string arch;
  std::string family = "star";
  std::optional<int> p0;
  std::optional<int> p1;
  std::uint64_t trials = 1000;
  std::uint64_t seed = 0;
  Format format = Format::text;
  std::string out_dir = ".";
  bool allow_conjecture = false;
  /// Comma-separated block lengths for subnetwork composition, e.g. "2,2".
  std::string blocks;
  std::string suite = "all";
  std::string input;
};

/// Maps to exit code 2.
class UsageError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Maps to exit code 3.
class PolicyError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Each command writes its report to `out` and returns the exit code.
int cmd_bound(const RunConfig& config, std::ostream& out);
int cmd_compare(const RunConfig& config, std::ostream& out);
int cmd_tau(const RunConfig& config, std::ostream& out);
int cmd_matrix(const RunConfig& config, std::ostream& out);
int cmd_verify(const RunConfig& config, std::ostream& out);

int cmd_oracle_tau1(const RunConfig& config, std::ostream& out);
int cmd_oracle_cells(const RunConfig& config, std::ostream& out);
int cmd_oracle_hot_center(const RunConfig& config, std::ostream& out);
int cmd_oracle_search(const RunConfig& config, std::ostream& out);
int cmd_oracle_net(const RunConfig& config, std::ostream& out);
int cmd_oracle_empirical(const RunConfig& config, std::ostream& out);

}  // namespace regionbound::cli
