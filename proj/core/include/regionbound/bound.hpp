#pragma once

#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "regionbound/gamma.hpp"
#include "regionbound/histogram.hpp"

namespace regionbound {

/// Input dimension n0 and hidden widths (n1, ..., nL) of a ReLU network. The
/// final affine output map is not part of the architecture.
struct Architecture {
  int input_dim = 1;
  std::vector<int> widths;

  /// Parses "n0xn1x...xnL", e.g. "3x6x6". Throws std::invalid_argument.
  static Architecture parse(std::string_view text);

  /// Throws std::invalid_argument unless input_dim >= 1, depth >= 1 and every
  /// width >= 1.
  void validate() const;

  std::size_t depth() const noexcept { return widths.size(); }
  std::string to_string() const;
  bool constant_width() const;

  friend bool operator==(const Architecture&, const Architecture&) = default;
};

/// Dense square matrix of non-negative big integers, 0-based.
class BoundMatrix {
 public:
  explicit BoundMatrix(std::size_t dim);

  std::size_t dim() const noexcept { return dim_; }
  const BigInt& at(std::size_t row, std::size_t col) const { return cells_.at(row * dim_ + col); }
  void set(std::size_t row, std::size_t col, BigInt value);

  bool upper_triangular() const;
  std::vector<BigInt> apply(std::span<const BigInt> x) const;

  friend bool operator==(const BoundMatrix&, const BoundMatrix&) = default;

 private:
  std::size_t dim_;
  std::vector<BigInt> cells_;
};

/// sum_{j <= min(p0,p1)} binomial(p1, j): the maximal number of regions cut
/// out by p1 hyperplanes in R^p0.
BigInt schlaefli_count(int p0, int p1);

/// Transformation rule of one layer of width p1:
/// v -> sum_{p0} v_{p0} cl_{min(p0,p1)}(gamma_{min(p0,p1),p1}).
Histogram phi_apply(const GammaFamily& family, int p1, const Histogram& v);

/// Column j holds cl_j(gamma_{j,p1}); size (p1+1) x (p1+1).
BoundMatrix build_bound_matrix(const GammaFamily& family, int p1);

/// M_{p0,p1}: lifts a vector indexed by 0..p0 into 0..p1, folding indices
/// above p1 onto p1.
std::vector<BigInt> lift(std::span<const BigInt> x, int p1);

struct ComposedBound {
  BigInt bound;
  /// Histogram after each layer (or block) has been applied.
  std::vector<Histogram> per_layer;
  bool conjectured = false;
};

/// Upper bound on the number of regions from pushing e_{n0} through the
/// transformation rules of every layer. The histogram composition and the
/// B*M matrix product are both evaluated; a disagreement throws
/// std::logic_error.
ComposedBound compose_bound(const GammaFamily& family, const Architecture& arch);

/// Base of the O(.^L) growth of an equal-width network: the largest of the
/// first n0+1 diagonal entries of B_n. Requires 1 <= n0 <= n.
BigInt growth_rate(const GammaFamily& family, int n0, int n);

/// Layer index boundaries 0 = r_0 < r_1 < ... < r_m = L.
struct SubnetworkPartition {
  std::vector<int> boundaries;

  /// Every block a single layer.
  static SubnetworkPartition singletons(std::size_t depth);
  /// Consecutive blocks of the given lengths.
  static SubnetworkPartition from_block_lengths(std::span<const int> lengths);

  /// Throws std::invalid_argument unless boundaries start at 0, end at
  /// `depth` and strictly increase.
  void validate(std::size_t depth) const;
  std::size_t blocks() const noexcept { return boundaries.empty() ? 0 : boundaries.size() - 1; }
};

/// How a subnetwork family was obtained.
enum class SubnetProvenance {
  proven,
  conjectured,
  /// Sampled from concrete networks: a lower bound on tau^p, not an upper bound.
  empirical,
};

std::string_view to_string(SubnetProvenance p);

/// A collection gamma^p_{p0}, p0 = 0..p_1, for a block of layers with widths
/// p = (p_1, ..., p_l).
class SubnetGammaFamily {
 public:
  using Generator = std::function<Histogram(int p0)>;

  SubnetGammaFamily(std::vector<int> topology, SubnetProvenance provenance, Generator generator,
                    std::string name = "custom");

  /// The layer-wise family as a single-layer block of width p1.
  static SubnetGammaFamily from_layerwise(const GammaFamily& family, int p1);

  /// gamma^p_{p0} := phi_{p_l} o ... o phi_{p_1}(e_{p0}) with the layer-wise
  /// family. Its block transformation rule coincides with composing the layers.
  static SubnetGammaFamily from_composition(const GammaFamily& family, std::vector<int> topology);

  const std::vector<int>& topology() const noexcept { return topology_; }
  int first_width() const noexcept { return topology_.front(); }
  SubnetProvenance provenance() const noexcept { return provenance_; }
  const std::string& name() const noexcept { return name_; }

  /// gamma^p_{min(p0, p_1)}.
  Histogram operator()(int p0) const;

 private:
  std::vector<int> topology_;
  SubnetProvenance provenance_;
  Generator generator_;
  std::string name_;
};

/// v -> sum_i v_i cl_{min(i,p_1)}(gamma^p_{min(i,p_1)}).
Histogram subnet_phi_apply(const SubnetGammaFamily& family, const Histogram& v);

/// Square matrix of size p_1 + 1 with column j = cl_j(gamma^p_j).
BoundMatrix build_subnet_bound_matrix(const SubnetGammaFamily& family);

enum class SoundnessPolicy { require_upper_bounds, allow_empirical };

/// Composes one block family per partition block. Throws std::invalid_argument
/// on a topology mismatch, std::domain_error when an empirical family is used
/// without SoundnessPolicy::allow_empirical, and std::logic_error if the
/// histogram and matrix paths disagree.
ComposedBound subnet_compose_bound(std::span<const SubnetGammaFamily> families,
                                   const SubnetworkPartition& partition, const Architecture& arch,
                                   SoundnessPolicy policy = SoundnessPolicy::require_upper_bounds);

}  // namespace regionbound
