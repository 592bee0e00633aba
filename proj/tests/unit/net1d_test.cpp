#include "regionbound/net1d.hpp"

#include <gtest/gtest.h>

#include <set>

#include "regionbound/arrangement2d.hpp"
#include "regionbound/bound.hpp"
#include "support/generators.hpp"

namespace regionbound {
namespace {

using testing::rational;

Histogram H(std::initializer_list<long> entries) {
  std::vector<BigInt> v;
  for (long e : entries) v.emplace_back(e);
  return Histogram(std::move(v));
}

// Distinct patterns seen on a fine rational grid; a lower bound on the count.
std::size_t grid_patterns(const ReluNet1D& net, long lo, long hi, long steps_per_unit) {
  std::set<std::vector<std::vector<bool>>> seen;
  for (long k = lo * steps_per_unit; k <= hi * steps_per_unit; ++k) {
    seen.insert(net.activation_pattern(rational(k, steps_per_unit)));
  }
  return seen.size();
}

TEST(CountRegions, CompositionLossExample) {
  const NetRegionCount c = count_regions_1d_net(composition_loss_net());
  EXPECT_EQ(c.count, 4u);
  ASSERT_EQ(c.layer_histograms.size(), 1u);
  EXPECT_EQ(c.layer_histograms[0], H({0, 2, 2}));
  EXPECT_EQ(c.min_histogram, H({0, 2, 2}));
  EXPECT_EQ(c.breakpoints, (std::vector<Rational>{0, 1, 2}));
}

TEST(CountRegions, SingleLayerDistinctBreakpoints) {
  for (int p1 = 1; p1 <= 8; ++p1) {
    ReluLayer layer;
    for (int i = 0; i < p1; ++i) {
      layer.weights.push_back({Rational(i % 2 ? 1 : -1)});
      layer.bias.push_back(Rational(i % 2 ? -i : i));
    }
    EXPECT_EQ(count_regions_1d_net(ReluNet1D{{layer}}).count, static_cast<std::uint64_t>(p1 + 1));
  }
}

TEST(CountRegions, TouchingZeroAtAKinkIsItsOwnPattern) {
  // Layer 2 neuron relu(|x|-ish) sees z = h1 + h2 - 0 which is zero only at x = 0.
  ReluLayer first{{{Rational(1)}, {Rational(-1)}}, {Rational(0), Rational(0)}};
  ReluLayer second{{{Rational(1), Rational(1)}}, {Rational(0)}};
  const NetRegionCount c = count_regions_1d_net(ReluNet1D{{first, second}});
  // Patterns: x<0: (01,1), x=0: (00,0), x>0: (10,1).
  EXPECT_EQ(c.count, 3u);
}

TEST(CountRegions, MatchesGridLowerBoundAndFrameworkBound) {
  const GammaFamily star = GammaFamily::by_name("star");
  testing::for_all(120, 61, [&](testing::Gen& g) {
    std::vector<int> widths(static_cast<std::size_t>(g.uniform(1, 3)));
    for (int& w : widths) w = g.uniform(1, 5);
    const ReluNet1D net = random_net_1d(widths, g.engine());
    const NetRegionCount c = count_regions_1d_net(net);
    EXPECT_GE(c.count, grid_patterns(net, -30, 30, 48));
    EXPECT_LE(BigInt(static_cast<unsigned long>(c.count)),
              compose_bound(star, Architecture{1, widths}).bound);
    EXPECT_EQ(c.min_histogram.l1_norm(), BigInt(static_cast<unsigned long>(c.count)));
    EXPECT_EQ(c.layer_histograms.back().l1_norm(), BigInt(static_cast<unsigned long>(c.count)));
  });
}

TEST(CountRegions, InvariantUnderPositiveNeuronScaling) {
  // Scaling a neuron's row by c > 0 and the next layer's matching column by 1/c
  // leaves every pre-activation sign unchanged.
  testing::for_all(60, 62, [](testing::Gen& g) {
    std::vector<int> widths{g.uniform(1, 4), g.uniform(1, 4)};
    const ReluNet1D net = random_net_1d(widths, g.engine());
    ReluNet1D scaled = net;
    const auto l = static_cast<std::size_t>(g.uniform(0, 1));
    auto& layer = scaled.layers[l];
    const auto row = static_cast<std::size_t>(g.uniform(0, static_cast<int>(layer.width()) - 1));
    const Rational factor = rational(g.uniform(1, 9), g.uniform(1, 9));
    for (auto& w : layer.weights[row]) w *= factor;
    layer.bias[row] *= factor;
    if (l + 1 < scaled.layers.size()) {
      for (auto& next_row : scaled.layers[l + 1].weights) next_row[row] /= factor;
    }
    const NetRegionCount a = count_regions_1d_net(net);
    const NetRegionCount b = count_regions_1d_net(scaled);
    EXPECT_EQ(a.count, b.count);
    EXPECT_EQ(a.layer_histograms, b.layer_histograms);
  });
}

TEST(CountRegions, BudgetAndValidation) {
  std::mt19937_64 rng = trial_rng(5, 0);
  const ReluNet1D net = random_net_1d({5, 5}, rng);
  EXPECT_THROW(count_regions_1d_net(net, 1), std::length_error);
  ReluNet1D broken = net;
  broken.layers[1].weights[0].pop_back();
  EXPECT_THROW(count_regions_1d_net(broken), std::invalid_argument);
  EXPECT_THROW(count_regions_1d_net(ReluNet1D{}), std::invalid_argument);
}

TEST(PiecewiseLinearPath, SamplesLieInsidePieces) {
  PiecewiseLinearPath path;
  path.breakpoints = {Rational(-1), Rational(3)};
  EXPECT_LT(path.sample(0), -1);
  EXPECT_EQ(path.sample(1), 1);
  EXPECT_GT(path.sample(2), 3);
}

}  // namespace
}  // namespace regionbound
