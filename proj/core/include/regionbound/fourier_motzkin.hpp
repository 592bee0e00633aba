#pragma once

#include <optional>
#include <span>

#include "regionbound/bigint.hpp"

namespace regionbound {

/// Open half-plane {(x, y) : a*x + b*y + c > 0}.
struct HalfPlane {
  Rational a;
  Rational b;
  Rational c;
};

struct Point2 {
  Rational x;
  Rational y;

  friend bool operator==(const Point2&, const Point2&) = default;
};

/// Exact feasibility of a system of strict linear inequalities in two
/// variables by eliminating y. Returns a point strictly inside every
/// half-plane, or nullopt if the intersection is empty. An empty system is
/// feasible with witness (0, 0). A constraint with a = b = 0 is satisfied iff
/// c > 0.
std::optional<Point2> strict_feasible_point(std::span<const HalfPlane> constraints);

/// Strict feasibility in one variable: all alpha*x + beta > 0.
std::optional<Rational> strict_feasible_point_1d(std::span<const Rational> alpha,
                                                 std::span<const Rational> beta);

}  // namespace regionbound
