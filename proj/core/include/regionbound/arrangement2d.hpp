#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <vector>

#include "regionbound/bigint.hpp"
#include "regionbound/fourier_motzkin.hpp"
#include "regionbound/histogram.hpp"

namespace regionbound {

inline constexpr int kCellEnumerationCap = 16;
inline constexpr int kTau2SearchCap = 12;

/// Oriented line a*x + b*y + c = 0 whose active side is a*x + b*y + c > 0.
struct Line {
  Rational a;
  Rational b;
  Rational c;

  bool degenerate() const { return sgn(a) == 0 && sgn(b) == 0; }
  Line flipped() const { return Line{-a, -b, -c}; }

  friend bool operator==(const Line&, const Line&) = default;
};

struct OrientedArrangement2D {
  std::vector<Line> lines;

  std::size_t size() const noexcept { return lines.size(); }

  /// Pairwise non-parallel and no three lines through one point, decided
  /// exactly.
  bool general_position() const;

  /// Reverses the orientation of line i for every set bit i of `mask`.
  OrientedArrangement2D flipped(std::uint32_t mask) const;

  friend bool operator==(const OrientedArrangement2D&, const OrientedArrangement2D&) = default;
};

/// Bit i set means the cell lies on the active side of line i.
struct SignVector {
  std::uint32_t bits = 0;
  int size = 0;

  int active() const noexcept;
  bool operator[](int i) const noexcept { return (bits >> i) & 1U; }

  friend auto operator<=>(const SignVector&, const SignVector&) = default;
};

struct Cell {
  SignVector signs;
  Point2 witness;
};

/// All nonempty open cells with an exact interior witness, sorted by sign
/// bits. Throws std::invalid_argument on a degenerate line and
/// std::domain_error for more than kCellEnumerationCap lines.
std::vector<Cell> enumerate_cells_2d(const OrientedArrangement2D& arrangement);

/// Sum over nonempty cells of e_{#active lines}.
Histogram activation_histogram_2d(const OrientedArrangement2D& arrangement);

/// Histogram of the same cells after flipping the lines in `flip_mask`.
Histogram histogram_from_cells(std::span<const Cell> cells, std::uint32_t flip_mask);

/// p1 tangent lines to the unit circle, each oriented so the origin is on
/// its active side. Tangent points sit near angles 2*pi*k/p1, perturbed by
/// k*pi/(8*p1^2) to keep antipodal tangents from being parallel, and are
/// rational points of the circle. Requires 1 <= p1 <= kCellEnumerationCap.
OrientedArrangement2D hot_center_arrangement(int p1);

struct RandomLineOptions {
  int max_numerator = 10;
  int max_denominator = 10;
};

/// Lines with coefficients n/d, |n| <= max_numerator, 1 <= d <= max_denominator,
/// resampled until the arrangement is in general position.
OrientedArrangement2D random_general_position_arrangement(int p1, std::mt19937_64& rng,
                                                          const RandomLineOptions& options = {});

/// Per-trial generator: mt19937_64 seeded with splitmix64(seed + trial).
std::mt19937_64 trial_rng(std::uint64_t seed, std::uint64_t trial);

struct Tau2Counterexample {
  std::uint64_t seed = 0;
  std::uint64_t trial = 0;
  OrientedArrangement2D arrangement;  // orientation already applied
  Histogram histogram;
  Histogram conjectured;
};

struct Tau2SearchResult {
  int p1 = 0;
  std::uint64_t trials = 0;
  Histogram join;
  /// Arrangements whose cell count differed from 1 + p1 + binomial(p1, 2).
  std::uint64_t cell_count_mismatches = 0;
  std::optional<Tau2Counterexample> counterexample;
};

/// Samples `trials` random general-position arrangements and joins the
/// activation histograms of all 2^p1 orientations of each. The reported
/// counterexample, if any, is the one from the lowest trial index.
/// Requires 2 <= p1 <= kTau2SearchCap.
Tau2SearchResult search_tau2(int p1, std::uint64_t trials, std::uint64_t seed,
                             unsigned threads = 0);

/// Join over all orientations of one arrangement.
Histogram orientation_join(std::span<const Cell> cells, int p1);

}  // namespace regionbound
