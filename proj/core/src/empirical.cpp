#include "regionbound/empirical.hpp"

#include <algorithm>
#include <stdexcept>

#include "regionbound/arrangement1d.hpp"
#include "regionbound/arrangement2d.hpp"
#include "regionbound/net1d.hpp"

namespace regionbound {

namespace {

void check_topology(const std::vector<int>& topology) {
  if (topology.empty()) throw std::invalid_argument("topology must be non-empty");
  for (int w : topology) {
    if (w < 1) throw std::invalid_argument("topology widths must be >= 1");
  }
}

// First layer with breakpoints 1..p1 all facing the middle interval.
ReluNet1D hot_center_net(const std::vector<int>& topology, std::mt19937_64& rng) {
  ReluNet1D net = random_net_1d(topology, rng);
  const std::vector<int> sigma = hot_center_orientation_1d(topology.front());
  ReluLayer& first = net.layers.front();
  for (std::size_t i = 0; i < sigma.size(); ++i) {
    const Rational t(static_cast<long>(i) + 1);
    first.weights[i] = {Rational(sigma[i])};
    first.bias[i] = -sigma[i] * t;
  }
  return net;
}

Histogram sample_input_one(const std::vector<int>& topology, std::uint64_t trials,
                           std::uint64_t seed) {
  std::mt19937_64 hot_rng = trial_rng(seed, trials);
  Histogram result = count_regions_1d_net(hot_center_net(topology, hot_rng), kBreakpointBudget)
                         .min_histogram;
  for (std::uint64_t trial = 0; trial < trials; ++trial) {
    std::mt19937_64 rng = trial_rng(seed, trial);
    result = join(result, count_regions_1d_net(random_net_1d(topology, rng)).min_histogram);
  }
  return result;
}

Histogram sample_input_two(int p1, std::uint64_t trials, std::uint64_t seed) {
  if (p1 > kTau2SearchCap) {
    throw std::invalid_argument("input dimension 2 sampling supports widths up to " +
                                std::to_string(kTau2SearchCap));
  }
  Histogram result = orientation_join(enumerate_cells_2d(hot_center_arrangement(p1)), p1);
  for (std::uint64_t trial = 0; trial < trials; ++trial) {
    std::mt19937_64 rng = trial_rng(seed, trial);
    result = join(result,
                  orientation_join(enumerate_cells_2d(random_general_position_arrangement(p1, rng)),
                                   p1));
  }
  return result;
}

}  // namespace

Histogram empirical_subnet_histogram(const std::vector<int>& topology, int p0,
                                     std::uint64_t trials, std::uint64_t seed) {
  check_topology(topology);
  if (p0 == 1) return sample_input_one(topology, trials, seed);
  if (p0 == 2) {
    if (topology.size() != 1) {
      throw std::invalid_argument("input dimension 2 sampling is limited to single-layer topologies");
    }
    return sample_input_two(topology.front(), trials, seed);
  }
  throw std::invalid_argument("empirical sampling supports input dimension 1 or 2, got " +
                              std::to_string(p0));
}

SubnetGammaFamily empirical_subnet_family(const std::vector<int>& topology,
                                          std::uint64_t trials, std::uint64_t seed) {
  check_topology(topology);
  const int narrowest = *std::min_element(topology.begin(), topology.end());
  std::vector<Histogram> estimates{Histogram::unit(static_cast<std::size_t>(narrowest))};
  estimates.push_back(empirical_subnet_histogram(topology, 1, trials, seed));
  if (topology.size() == 1 && topology.front() >= 2) {
    estimates.push_back(empirical_subnet_histogram(topology, 2, trials, seed));
  }
  auto generator = [estimates](int p0) {
    return estimates[std::min(static_cast<std::size_t>(p0), estimates.size() - 1)];
  };
  return SubnetGammaFamily(topology, SubnetProvenance::empirical, std::move(generator),
                           "empirical");
}

}  // namespace regionbound
