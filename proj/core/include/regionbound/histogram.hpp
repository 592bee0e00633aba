#pragma once

#include <cstddef>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "regionbound/bigint.hpp"

namespace regionbound {

/// A finitely supported sequence of non-negative counts.
///
/// Entry i counts regions with value i (a dimension or a number of active
/// neurons). Values are kept in canonical form without trailing zeros, so two
/// histograms are equal exactly when their entry vectors are equal. Instances
/// are immutable; every operation returns a new histogram.
class Histogram {
 public:
  Histogram() = default;

  /// Throws std::invalid_argument if any entry is negative.
  explicit Histogram(std::vector<BigInt> entries);

  /// count * e_index.
  static Histogram unit(std::size_t index, const BigInt& count = 1);

  /// Sum over i of binomial(n, i) e_i.
  static Histogram binomial_row(std::size_t n);

  /// Number of stored entries (index of the last nonzero entry plus one).
  std::size_t size() const noexcept { return entries_.size(); }
  bool is_zero() const noexcept { return entries_.empty(); }

  /// Entry at `index`; zero beyond the support.
  const BigInt& operator[](std::size_t index) const noexcept;

  std::span<const BigInt> entries() const noexcept { return entries_; }

  BigInt l1_norm() const;

  /// s[J] = sum_{j >= J} v_j for J < size().
  std::vector<BigInt> suffix_sums() const;

  Histogram operator+(const Histogram& other) const;
  Histogram scaled(const BigInt& factor) const;

  /// Human-readable form such as "4e2 + 16e3 + e6"; "0" for the zero histogram.
  std::string to_string() const;

  friend bool operator==(const Histogram&, const Histogram&) = default;

 private:
  void trim();

  std::vector<BigInt> entries_;
};

std::ostream& operator<<(std::ostream& os, const Histogram& h);

/// True iff v precedes w in the suffix-sum order: for every J,
/// sum_{j >= J} v_j <= sum_{j >= J} w_j.
bool dominated_by(const Histogram& v, const Histogram& w);

/// Least upper bound of v and w in the suffix-sum order.
Histogram join(const Histogram& v, const Histogram& w);

/// Join of a collection; the zero histogram for an empty collection.
Histogram join(std::span<const Histogram> values);

/// cl_j: moves all mass above index j down to j.
Histogram clip(const Histogram& v, std::size_t j);

/// pi^times: moves every entry up by `times` indices.
Histogram shift(const Histogram& v, std::size_t times = 1);

/// binomial(delta_j, delta_i) * pi^(delta_j - delta_i)(v), counting the
/// lattice paths between two cells of the gamma* recursion grid.
/// Throws std::domain_error if delta_j < delta_i.
Histogram k_operator(const Histogram& v, std::size_t delta_i, std::size_t delta_j);

}  // namespace regionbound
