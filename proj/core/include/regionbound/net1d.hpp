#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "regionbound/bigint.hpp"
#include "regionbound/histogram.hpp"

namespace regionbound {

inline constexpr std::size_t kBreakpointBudget = 100000;

/// x -> ReLU(W x + b) with rational weights; weights[i] is the row of neuron i.
struct ReluLayer {
  std::vector<std::vector<Rational>> weights;
  std::vector<Rational> bias;

  std::size_t width() const noexcept { return bias.size(); }
  std::size_t input_dim() const noexcept { return weights.empty() ? 0 : weights.front().size(); }
};

/// Feed-forward ReLU network with scalar input. The affine output map is
/// omitted since it does not change the activation regions.
struct ReluNet1D {
  std::vector<ReluLayer> layers;

  /// Throws std::invalid_argument unless the first layer takes one input,
  /// consecutive shapes match and no layer is empty.
  void validate() const;
  std::vector<int> widths() const;

  /// Per-layer activation patterns at x (true = positive pre-activation).
  std::vector<std::vector<bool>> activation_pattern(const Rational& x) const;
};

/// Continuous piecewise-affine map R -> R^n: pieces[k] acts on the interval
/// between breakpoints[k-1] and breakpoints[k] (unbounded at the ends).
struct PiecewiseLinearPath {
  struct Piece {
    std::vector<Rational> slope;
    std::vector<Rational> intercept;
  };
  std::vector<Rational> breakpoints;
  std::vector<Piece> pieces;

  /// Interior sample of piece k.
  Rational sample(std::size_t k) const;
};

struct NetRegionCount {
  /// Number of distinct activation patterns over all inputs.
  std::uint64_t count = 0;
  /// Entry l: sum over distinct patterns of layers 1..l+1 of e_{#active in layer l+1}.
  std::vector<Histogram> layer_histograms;
  /// Sum over distinct full patterns of e_{min over layers of #active}.
  Histogram min_histogram;
  std::vector<Rational> breakpoints;
};

/// Pushes the identity path through each layer, splitting pieces at exact
/// zero crossings, then evaluates the pattern on every open piece and at every
/// breakpoint. Throws std::length_error when more than `budget` breakpoints
/// arise.
NetRegionCount count_regions_1d_net(const ReluNet1D& net, std::size_t budget = kBreakpointBudget);

struct RandomNetOptions {
  int max_numerator = 5;
  int max_denominator = 4;
};

/// Network 1 -> widths[0] -> ... with entries n/d drawn uniformly.
ReluNet1D random_net_1d(const std::vector<int>& widths, std::mt19937_64& rng,
                        const RandomNetOptions& options = {});

/// The network x -> (ReLU(1 - x), ReLU(x), ReLU(x - 2)).
ReluNet1D composition_loss_net();

}  // namespace regionbound
