#pragma once

#include <span>
#include <vector>

#include "regionbound/bigint.hpp"
#include "regionbound/histogram.hpp"

namespace regionbound {

/// Largest p1 accepted by oracle_tau1 (2^p1 orientation vectors).
inline constexpr int kTau1OracleCap = 24;

/// Oriented points t_1 < ... < t_p1 on the real line. sigma_i = +1 marks the
/// half-line right of t_i as active, -1 the half-line to the left.
struct OrientedArrangement1D {
  std::vector<Rational> points;
  std::vector<int> orientations;

  /// Throws std::invalid_argument unless points strictly increase, sizes
  /// match and every orientation is +1 or -1.
  void validate() const;
};

/// H_sigma = sum_{i=1}^{p1+1} e_{f(i)} with f(1) = #{i : sigma_i = -1} and
/// f(i+1) = f(i) + sigma_i. Throws std::invalid_argument on entries other
/// than +1 / -1.
Histogram histogram_of_sigma(std::span<const int> sigma);

/// Activation histogram of a concrete 1-D arrangement, evaluated at one
/// sample point per open interval.
Histogram activation_histogram_1d(const OrientedArrangement1D& arrangement);

/// Join of histogram_of_sigma over all 2^p1 orientation vectors.
/// Throws std::domain_error unless 0 <= p1 <= kTau1OracleCap.
Histogram oracle_tau1(int p1, unsigned threads = 0);

/// Orientation with every point facing the middle interval: the first
/// ceil(p1/2) entries +1, the rest -1.
std::vector<int> hot_center_orientation_1d(int p1);

}  // namespace regionbound
