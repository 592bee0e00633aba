#pragma once

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "regionbound/histogram.hpp"

namespace regionbound {

enum class Provenance { proven, conjectured };

std::string_view to_string(Provenance p);

// Elementary collections. All require 0 <= p0 <= p1 and p1 >= 1, and throw
// std::domain_error otherwise.

/// 2^p1 e_{p1}.
Histogram gamma_hat(int p0, int p1);
/// (sum_{j <= p0} binomial(p1, j)) e_{p1}.
Histogram gamma_tilde(int p0, int p1);
/// sum_{j <= p0} binomial(p1, j) e_{p1 - j}.
Histogram gamma_bar(int p0, int p1);

/// Activation histogram join for the cases where it is known exactly:
/// p0 == 1 (points on a line, hot region in the middle) and p0 >= p1
/// (every pattern attainable, binomial row). Rejects 1 < p0 < p1.
Histogram tau_closed_form(int p0, int p1);

/// Conjectured join for oriented lines in the plane, p1 >= 2.
Histogram conjecture_tau2(int p1);

/// pi(inner) + lower, the step of the shift recursion.
Histogram recursion_step(const Histogram& inner, const Histogram& lower);

/// gamma*_{p0,p1} by the memoized shift recursion anchored at tau_1.
/// Requires 1 <= p0 <= p1.
Histogram gamma_star_recursive(int p0, int p1);

/// gamma*_{p0,p1} by its closed form. Requires 2 <= p0 <= p1.
Histogram gamma_star_explicit(int p0, int p1);

/// gamma*_{p0,p1} by unfolding the recursion into lattice-path counts
/// (K operators) over the anchor column and row. Requires 2 <= p0 <= p1.
Histogram gamma_star_k_expansion(int p0, int p1);

/// The recursion of gamma* placed on top of conjecture_tau2 at p0 == 2.
/// Requires 1 <= p0 <= p1. Conjectured.
Histogram gamma_star_conjecture(int p0, int p1);

/// A named collection gamma_{p0,p1} of histogram bounds.
///
/// The generator is only ever called with 0 <= p0 <= p1; operator() folds
/// p0 > p1 onto p0 = p1.
class GammaFamily {
 public:
  using Generator = std::function<Histogram(int p0, int p1)>;

  GammaFamily(std::string name, Provenance provenance, Generator generator);

  /// One of "hat", "tilde", "bar", "star", "star-conjecture".
  /// Throws std::invalid_argument for unknown names.
  static GammaFamily by_name(std::string_view name);
  static std::span<const std::string_view> builtin_names();

  const std::string& name() const noexcept { return name_; }
  Provenance provenance() const noexcept { return provenance_; }
  bool conjectured() const noexcept { return provenance_ == Provenance::conjectured; }

  /// gamma_{min(p0,p1),p1}. Throws std::domain_error for p0 < 0 or p1 < 1.
  Histogram operator()(int p0, int p1) const;

 private:
  std::string name_;
  Provenance provenance_;
  Generator generator_;
};

/// A histogram known to be dominated by tau_{p0}^{p1}, e.g. an activation
/// histogram observed on a concrete arrangement.
struct TauLowerBound {
  int p0 = 0;
  int p1 = 0;
  Histogram histogram;
  std::string source;
};

struct Violation {
  enum class Kind { monotonicity, tau_domination, empty_column };
  Kind kind;
  int p0;
  int p1;
  std::string detail;
};

std::string_view to_string(Violation::Kind kind);

struct ValidationReport {
  std::string family;
  int p1_max = 0;
  std::vector<Violation> violations;

  bool ok() const noexcept { return violations.empty(); }
};

/// Checks the layer-wise bound condition for all 1 <= p1 <= p1_max:
/// monotonicity in p0 exhaustively, and domination of every known lower bound
/// on tau (tau_1 closed form, the binomial row at p0 == p1, and `extra`).
/// Since tau is monotone in p0, a lower bound at p0' also bounds every p0 >= p0'.
ValidationReport validate_bound_condition(const GammaFamily& family, int p1_max,
                                          std::span<const TauLowerBound> extra = {});

}  // namespace regionbound
