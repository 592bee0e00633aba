#pragma once

#include <cstdint>
#include <vector>

#include "regionbound/bound.hpp"
#include "regionbound/histogram.hpp"

namespace regionbound {

/// Join over sampled networks of sum_s e_{min_l |s_l|}: a LOWER bound on the
/// subnetwork histogram join for topology `topology` and input dimension p0.
///
/// p0 = 1 samples random 1-D networks and always includes the network whose
/// first layer places its breakpoints around a hot center. p0 = 2 is limited
/// to single-layer topologies and joins all orientations of random
/// general-position arrangements and of the hot-center arrangement.
/// Throws std::invalid_argument for unsupported p0 or topology.
Histogram empirical_subnet_histogram(const std::vector<int>& topology, int p0,
                                     std::uint64_t trials, std::uint64_t seed);

/// Subnetwork family built from the estimates above, tagged empirical. Input
/// dimensions beyond the sampled ones reuse the largest sampled estimate,
/// which stays a lower bound because the join is monotone in p0.
SubnetGammaFamily empirical_subnet_family(const std::vector<int>& topology,
                                          std::uint64_t trials, std::uint64_t seed);

}  // namespace regionbound
