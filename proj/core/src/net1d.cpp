#include "regionbound/net1d.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace regionbound {

void ReluNet1D::validate() const {
  if (layers.empty()) throw std::invalid_argument("network has no layers");
  std::size_t expected_input = 1;
  for (std::size_t l = 0; l < layers.size(); ++l) {
    const ReluLayer& layer = layers[l];
    if (layer.width() == 0 || layer.weights.size() != layer.width()) {
      throw std::invalid_argument("layer " + std::to_string(l + 1) +
                                  ": weights and bias disagree or are empty");
    }
    for (const auto& row : layer.weights) {
      if (row.size() != expected_input) {
        throw std::invalid_argument("layer " + std::to_string(l + 1) + ": expected " +
                                    std::to_string(expected_input) + " inputs per neuron");
      }
    }
    expected_input = layer.width();
  }
}

std::vector<int> ReluNet1D::widths() const {
  std::vector<int> w;
  for (const auto& layer : layers) w.push_back(static_cast<int>(layer.width()));
  return w;
}

std::vector<std::vector<bool>> ReluNet1D::activation_pattern(const Rational& x) const {
  std::vector<std::vector<bool>> pattern;
  std::vector<Rational> value{x};
  for (const ReluLayer& layer : layers) {
    std::vector<Rational> next(layer.width());
    std::vector<bool> active(layer.width());
    for (std::size_t i = 0; i < layer.width(); ++i) {
      Rational z = layer.bias[i];
      for (std::size_t j = 0; j < value.size(); ++j) z += layer.weights[i][j] * value[j];
      active[i] = sgn(z) > 0;
      if (active[i]) next[i] = z;
    }
    pattern.push_back(std::move(active));
    value = std::move(next);
  }
  return pattern;
}

Rational PiecewiseLinearPath::sample(std::size_t k) const {
  if (breakpoints.empty()) return Rational(0);
  if (k == 0) return breakpoints.front() - 1;
  if (k == breakpoints.size()) return breakpoints.back() + 1;
  Rational mid = (breakpoints[k - 1] + breakpoints[k]) / 2;
  mid.canonicalize();
  return mid;
}

namespace {

PiecewiseLinearPath push_through(const PiecewiseLinearPath& path, const ReluLayer& layer,
                                 std::size_t budget) {
  const std::size_t width = layer.width();
  // Pre-activations z = W(slope x + intercept) + b on every piece.
  std::vector<PiecewiseLinearPath::Piece> pre(path.pieces.size());
  for (std::size_t k = 0; k < path.pieces.size(); ++k) {
    const auto& piece = path.pieces[k];
    pre[k].slope.assign(width, Rational(0));
    pre[k].intercept = layer.bias;
    for (std::size_t i = 0; i < width; ++i) {
      for (std::size_t j = 0; j < piece.slope.size(); ++j) {
        pre[k].slope[i] += layer.weights[i][j] * piece.slope[j];
        pre[k].intercept[i] += layer.weights[i][j] * piece.intercept[j];
      }
    }
  }

  std::set<Rational> cuts(path.breakpoints.begin(), path.breakpoints.end());
  for (std::size_t k = 0; k < pre.size(); ++k) {
    for (std::size_t i = 0; i < width; ++i) {
      if (sgn(pre[k].slope[i]) == 0) continue;
      Rational root = -pre[k].intercept[i] / pre[k].slope[i];
      const bool above = k == 0 || root > path.breakpoints[k - 1];
      const bool below = k == path.breakpoints.size() || root < path.breakpoints[k];
      if (above && below) cuts.insert(root);
    }
    if (cuts.size() > budget) {
      throw std::length_error("breakpoint budget of " + std::to_string(budget) + " exceeded");
    }
  }

  PiecewiseLinearPath out;
  out.breakpoints.assign(cuts.begin(), cuts.end());
  out.pieces.resize(out.breakpoints.size() + 1);
  std::size_t source = 0;
  for (std::size_t k = 0; k < out.pieces.size(); ++k) {
    const Rational x = out.sample(k);
    while (source < path.breakpoints.size() && x > path.breakpoints[source]) ++source;
    auto& piece = out.pieces[k];
    piece.slope.assign(width, Rational(0));
    piece.intercept.assign(width, Rational(0));
    for (std::size_t i = 0; i < width; ++i) {
      if (sgn(pre[source].slope[i] * x + pre[source].intercept[i]) > 0) {
        piece.slope[i] = pre[source].slope[i];
        piece.intercept[i] = pre[source].intercept[i];
      }
    }
  }
  return out;
}

}  // namespace

NetRegionCount count_regions_1d_net(const ReluNet1D& net, std::size_t budget) {
  net.validate();
  PiecewiseLinearPath path;
  path.pieces.push_back({{Rational(1)}, {Rational(0)}});
  for (const ReluLayer& layer : net.layers) path = push_through(path, layer, budget);

  std::vector<Rational> probes;
  for (std::size_t k = 0; k < path.pieces.size(); ++k) probes.push_back(path.sample(k));
  probes.insert(probes.end(), path.breakpoints.begin(), path.breakpoints.end());

  std::set<std::vector<std::vector<bool>>> patterns;
  for (const Rational& x : probes) patterns.insert(net.activation_pattern(x));

  const std::size_t depth = net.layers.size();
  NetRegionCount result;
  result.count = patterns.size();
  result.breakpoints = std::move(path.breakpoints);
  std::vector<BigInt> min_counts;
  for (std::size_t l = 0; l < depth; ++l) {
    std::set<std::vector<std::vector<bool>>> prefixes;
    for (const auto& p : patterns) prefixes.emplace(p.begin(), p.begin() + static_cast<long>(l) + 1);
    std::vector<BigInt> counts(net.layers[l].width() + 1);
    for (const auto& p : prefixes) counts[std::count(p.back().begin(), p.back().end(), true)] += 1;
    result.layer_histograms.emplace_back(std::move(counts));
  }
  for (const auto& p : patterns) {
    std::size_t low = p.front().size();
    for (const auto& layer : p) {
      low = std::min(low, static_cast<std::size_t>(std::count(layer.begin(), layer.end(), true)));
    }
    if (min_counts.size() <= low) min_counts.resize(low + 1);
    min_counts[low] += 1;
  }
  result.min_histogram = Histogram(std::move(min_counts));
  return result;
}

ReluNet1D random_net_1d(const std::vector<int>& widths, std::mt19937_64& rng,
                        const RandomNetOptions& options) {
  if (widths.empty()) throw std::invalid_argument("random_net_1d needs at least one layer");
  std::uniform_int_distribution<long> num(-options.max_numerator, options.max_numerator);
  std::uniform_int_distribution<long> den(1, options.max_denominator);
  auto draw = [&] {
    long n = num(rng);
    Rational r(n, den(rng));
    r.canonicalize();
    return r;
  };
  ReluNet1D net;
  std::size_t input = 1;
  for (int w : widths) {
    if (w < 1) throw std::invalid_argument("random_net_1d widths must be >= 1");
    ReluLayer layer;
    for (int i = 0; i < w; ++i) {
      std::vector<Rational> row;
      for (std::size_t j = 0; j < input; ++j) row.push_back(draw());
      layer.weights.push_back(std::move(row));
      layer.bias.push_back(draw());
    }
    net.layers.push_back(std::move(layer));
    input = static_cast<std::size_t>(w);
  }
  return net;
}

ReluNet1D composition_loss_net() {
  ReluLayer layer;
  layer.weights = {{Rational(-1)}, {Rational(1)}, {Rational(1)}};
  layer.bias = {Rational(1), Rational(0), Rational(-2)};
  return ReluNet1D{{layer}};
}

}  // namespace regionbound
