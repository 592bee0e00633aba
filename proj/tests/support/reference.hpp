#pragma once

// Straight-from-the-definition reference implementations on plain int64
// vectors, used as oracles for the library.

#include <algorithm>
#include <cstdint>
#include <vector>

#include "regionbound/histogram.hpp"

namespace regionbound::testing {

using Ref = std::vector<std::int64_t>;

inline Ref to_ref(const Histogram& h) {
  Ref r;
  for (const auto& e : h.entries()) r.push_back(e.get_si());
  return r;
}

inline Histogram from_ref(const Ref& r) {
  std::vector<BigInt> v;
  for (auto x : r) v.emplace_back(static_cast<long>(x));
  return Histogram(std::move(v));
}

inline std::int64_t ref_suffix(const Ref& v, std::size_t j) {
  std::int64_t s = 0;
  for (std::size_t i = j; i < v.size(); ++i) s += v[i];
  return s;
}

inline bool ref_dominated(const Ref& v, const Ref& w) {
  const std::size_t n = std::max(v.size(), w.size());
  for (std::size_t j = 0; j <= n; ++j) {
    if (ref_suffix(v, j) > ref_suffix(w, j)) return false;
  }
  return true;
}

inline Ref ref_join(const Ref& v, const Ref& w) {
  const std::size_t n = std::max(v.size(), w.size());
  Ref out(n);
  for (std::size_t j = 0; j < n; ++j) {
    out[j] = std::max(ref_suffix(v, j), ref_suffix(w, j)) -
             std::max(ref_suffix(v, j + 1), ref_suffix(w, j + 1));
  }
  return out;
}

inline Ref ref_clip(const Ref& v, std::size_t j) {
  Ref out(j + 1);
  for (std::size_t i = 0; i < v.size(); ++i) out[std::min(i, j)] += v[i];
  return out;
}

inline Ref ref_binomial_row(int n) {
  Ref row{1};
  for (int k = 0; k < n; ++k) {
    Ref next(row.size() + 1);
    for (std::size_t i = 0; i < row.size(); ++i) {
      next[i] += row[i];
      next[i + 1] += row[i];
    }
    row = next;
  }
  return row;
}

inline std::int64_t ref_binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  return ref_binomial_row(n)[static_cast<std::size_t>(k)];
}

}  // namespace regionbound::testing
