#include "regionbound/fourier_motzkin.hpp"

#include <stdexcept>
#include <vector>

namespace regionbound {

namespace {

// Picks a rational strictly inside (lo, hi); either end may be open-ended.
Rational interior_point(const std::optional<Rational>& lo, const std::optional<Rational>& hi) {
  if (lo && hi) {
    Rational mid = (*lo + *hi) / 2;
    mid.canonicalize();
    return mid;
  }
  if (lo) return *lo + 1;
  if (hi) return *hi - 1;
  return Rational(0);
}

// Affine function of x: slope * x + offset.
struct Affine {
  Rational slope;
  Rational offset;
};

}  // namespace

std::optional<Rational> strict_feasible_point_1d(std::span<const Rational> alpha,
                                                 std::span<const Rational> beta) {
  if (alpha.size() != beta.size()) {
    throw std::invalid_argument("strict_feasible_point_1d: coefficient spans differ in length");
  }
  std::optional<Rational> lo;
  std::optional<Rational> hi;
  for (std::size_t i = 0; i < alpha.size(); ++i) {
    const int s = sgn(alpha[i]);
    if (s == 0) {
      if (sgn(beta[i]) <= 0) return std::nullopt;
      continue;
    }
    Rational root = -beta[i] / alpha[i];
    if (s > 0) {
      if (!lo || root > *lo) lo = root;
    } else {
      if (!hi || root < *hi) hi = root;
    }
  }
  if (lo && hi && *lo >= *hi) return std::nullopt;
  return interior_point(lo, hi);
}

std::optional<Point2> strict_feasible_point(std::span<const HalfPlane> constraints) {
  std::vector<Affine> lower;  // y > lower(x)
  std::vector<Affine> upper;  // y < upper(x)
  std::vector<Rational> alpha;
  std::vector<Rational> beta;

  for (const HalfPlane& h : constraints) {
    const int s = sgn(h.b);
    if (s == 0) {
      alpha.push_back(h.a);
      beta.push_back(h.c);
      continue;
    }
    Affine bound{-h.a / h.b, -h.c / h.b};
    (s > 0 ? lower : upper).push_back(std::move(bound));
  }
  for (const Affine& l : lower) {
    for (const Affine& u : upper) {
      alpha.push_back(u.slope - l.slope);
      beta.push_back(u.offset - l.offset);
    }
  }

  std::optional<Rational> x = strict_feasible_point_1d(alpha, beta);
  if (!x) return std::nullopt;

  std::optional<Rational> y_lo;
  std::optional<Rational> y_hi;
  for (const Affine& l : lower) {
    Rational v = l.slope * *x + l.offset;
    if (!y_lo || v > *y_lo) y_lo = v;
  }
  for (const Affine& u : upper) {
    Rational v = u.slope * *x + u.offset;
    if (!y_hi || v < *y_hi) y_hi = v;
  }
  Point2 p{*x, interior_point(y_lo, y_hi)};
  p.y.canonicalize();
  return p;
}

}  // namespace regionbound
