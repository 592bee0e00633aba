#include "regionbound/gamma.hpp"

#include <array>
#include <map>
#include <mutex>
#include <shared_mutex>
#include <stdexcept>
#include <utility>

namespace regionbound {

namespace {

void require_column(int p0, int p1, const char* what) {
  if (p1 < 1 || p0 < 0 || p0 > p1) {
    throw std::domain_error(std::string(what) + " requires 0 <= p0 <= p1 and p1 >= 1 (got p0=" +
                            std::to_string(p0) + ", p1=" + std::to_string(p1) + ")");
  }
}

std::size_t idx(int i) { return static_cast<std::size_t>(i); }

// Write-once-per-key memo shared by all callers. Concurrent misses on the same
// key may compute the value twice; the first insertion wins and later ones are
// identical by construction.
class MemoTable {
 public:
  std::optional<Histogram> find(int p0, int p1) const {
    std::shared_lock lock(mutex_);
    auto it = table_.find({p0, p1});
    if (it == table_.end()) return std::nullopt;
    return it->second;
  }

  const Histogram& insert(int p0, int p1, Histogram value) {
    std::unique_lock lock(mutex_);
    return table_.try_emplace({p0, p1}, std::move(value)).first->second;
  }

 private:
  mutable std::shared_mutex mutex_;
  std::map<std::pair<int, int>, Histogram> table_;
};

using Anchor = std::optional<Histogram> (*)(int p0, int p1);

// gamma_{p0,p1} = pi(gamma_{min(p0,p1-1),p1-1}) + gamma_{p0-1,p1-1} above the
// anchor rows, with gamma_{p0,p1} := gamma_{p1,p1} for p0 > p1.
Histogram unfold_recursion(int p0, int p1, Anchor anchor, MemoTable& memo) {
  if (p0 > p1) p0 = p1;
  if (auto anchored = anchor(p0, p1)) return *std::move(anchored);
  if (auto cached = memo.find(p0, p1)) return *std::move(cached);
  Histogram inner = unfold_recursion(std::min(p0, p1 - 1), p1 - 1, anchor, memo);
  Histogram lower = unfold_recursion(p0 - 1, p1 - 1, anchor, memo);
  return memo.insert(p0, p1, recursion_step(inner, lower));
}

std::optional<Histogram> star_anchor(int p0, int p1) {
  if (p0 == 1) return tau_closed_form(1, p1);
  return std::nullopt;
}

std::optional<Histogram> conjecture_anchor(int p0, int p1) {
  if (p0 == 1) return tau_closed_form(1, p1);
  if (p0 == 2) return conjecture_tau2(p1);
  return std::nullopt;
}

MemoTable& star_memo() {
  static MemoTable table;
  return table;
}

MemoTable& conjecture_memo() {
  static MemoTable table;
  return table;
}

void require_explicit_domain(int p0, int p1, const char* what) {
  if (p0 < 2 || p0 > p1) {
    throw std::domain_error(std::string(what) + " requires 2 <= p0 <= p1 (got p0=" +
                            std::to_string(p0) + ", p1=" + std::to_string(p1) + ")");
  }
}

}  // namespace

std::string_view to_string(Provenance p) {
  return p == Provenance::proven ? "proven" : "conjectured";
}

Histogram gamma_hat(int p0, int p1) {
  require_column(p0, p1, "gamma_hat");
  return Histogram::unit(idx(p1), power_of_two(static_cast<std::uint64_t>(p1)));
}

Histogram gamma_tilde(int p0, int p1) {
  require_column(p0, p1, "gamma_tilde");
  BigInt total = 0;
  for (int j = 0; j <= p0; ++j) total += binomial(p1, j);
  return Histogram::unit(idx(p1), total);
}

Histogram gamma_bar(int p0, int p1) {
  require_column(p0, p1, "gamma_bar");
  std::vector<BigInt> entries(idx(p1) + 1);
  for (int j = 0; j <= p0; ++j) entries[idx(p1 - j)] = binomial(p1, j);
  return Histogram(std::move(entries));
}

Histogram tau_closed_form(int p0, int p1) {
  if (p0 < 1 || p1 < 1) {
    throw std::domain_error("tau_closed_form requires p0, p1 >= 1");
  }
  if (p0 >= p1) return Histogram::binomial_row(idx(p1));
  if (p0 != 1) {
    throw std::domain_error("tau_" + std::to_string(p0) + "^" + std::to_string(p1) +
                            " has no known closed form (1 < p0 < p1)");
  }
  std::vector<BigInt> entries(idx(p1) + 1);
  if (p1 % 2 == 1) entries[idx((p1 - 1) / 2)] = 1;
  for (int i = (p1 + 1) / 2; i < p1; ++i) entries[idx(i)] = 2;
  entries[idx(p1)] = 1;
  return Histogram(std::move(entries));
}

Histogram conjecture_tau2(int p1) {
  if (p1 < 2) throw std::domain_error("conjecture_tau2 requires p1 >= 2");
  std::vector<BigInt> entries(idx(p1) + 1);
  const int first = p1 / 2;
  if (p1 % 2 == 0) entries[idx(first - 1)] = p1 / 2;
  for (int i = first; i < p1; ++i) entries[idx(i)] = p1;
  entries[idx(p1)] = 1;
  return Histogram(std::move(entries));
}

Histogram recursion_step(const Histogram& inner, const Histogram& lower) {
  return shift(inner) + lower;
}

Histogram gamma_star_recursive(int p0, int p1) {
  if (p0 < 1 || p0 > p1) {
    throw std::domain_error("gamma_star_recursive requires 1 <= p0 <= p1");
  }
  return unfold_recursion(p0, p1, star_anchor, star_memo());
}

Histogram gamma_star_conjecture(int p0, int p1) {
  if (p0 < 1 || p0 > p1) {
    throw std::domain_error("gamma_star_conjecture requires 1 <= p0 <= p1");
  }
  return unfold_recursion(p0, p1, conjecture_anchor, conjecture_memo());
}

Histogram gamma_star_explicit(int p0, int p1) {
  require_explicit_domain(p0, p1, "gamma_star_explicit");
  const int d = p1 - p0;
  std::vector<BigInt> entries(idx(p1) + 1);
  if (d % 2 == 0) entries[idx(d / 2)] += 1;
  for (int k = d / 2 + 1; k <= d; ++k) {
    entries[idx(k)] += binomial(2 * p0 + 2 * k - p1 - 2, p0 - 1) +
                       binomial(2 * p0 + 2 * k - p1 - 1, p0 - 1);
  }
  for (int k = d + 1; k <= p1; ++k) entries[idx(k)] += binomial(p1, p1 - k);
  return Histogram(std::move(entries));
}

Histogram gamma_star_k_expansion(int p0, int p1) {
  require_explicit_domain(p0, p1, "gamma_star_k_expansion");
  const int i = p0;
  const int j = p1;
  Histogram total;
  // Paths entering from the anchor row gamma*_{1,l} through cell (2, l+1).
  for (int l = 1; l <= j - i + 1; ++l) {
    total = total + k_operator(tau_closed_form(1, l), idx(i - 2), idx(j - l - 1));
  }
  // Paths entering from the folded column gamma*_{k,1} = gamma*_{1,1}.
  const Histogram corner = tau_closed_form(1, 1);
  for (int k = 2; k <= i; ++k) {
    total = total + k_operator(corner, idx(i - k), idx(j - 1));
  }
  return total;
}

GammaFamily::GammaFamily(std::string name, Provenance provenance, Generator generator)
    : name_(std::move(name)), provenance_(provenance), generator_(std::move(generator)) {
  if (!generator_) throw std::invalid_argument("GammaFamily needs a generator");
}

Histogram GammaFamily::operator()(int p0, int p1) const {
  if (p1 < 1 || p0 < 0) {
    throw std::domain_error("gamma family '" + name_ + "' evaluated at p0=" + std::to_string(p0) +
                            ", p1=" + std::to_string(p1));
  }
  return generator_(std::min(p0, p1), p1);
}

std::span<const std::string_view> GammaFamily::builtin_names() {
  static constexpr std::array<std::string_view, 5> names = {"hat", "tilde", "bar", "star",
                                                            "star-conjecture"};
  return names;
}

GammaFamily GammaFamily::by_name(std::string_view name) {
  // A region of dimension zero carries a single pattern; the worst case is all
  // neurons active.
  auto with_zero_column = [](Histogram (*f)(int, int)) {
    return [f](int p0, int p1) {
      return p0 == 0 ? Histogram::unit(static_cast<std::size_t>(p1)) : f(p0, p1);
    };
  };
  if (name == "hat") return {"hat", Provenance::proven, with_zero_column(gamma_hat)};
  if (name == "tilde") return {"tilde", Provenance::proven, with_zero_column(gamma_tilde)};
  if (name == "bar") return {"bar", Provenance::proven, with_zero_column(gamma_bar)};
  if (name == "star") return {"star", Provenance::proven, with_zero_column(gamma_star_recursive)};
  if (name == "star-conjecture") {
    return {"star-conjecture", Provenance::conjectured, with_zero_column(gamma_star_conjecture)};
  }
  throw std::invalid_argument("unknown gamma family '" + std::string(name) +
                              "' (expected hat, tilde, bar, star or star-conjecture)");
}

std::string_view to_string(Violation::Kind kind) {
  switch (kind) {
    case Violation::Kind::monotonicity: return "monotonicity";
    case Violation::Kind::tau_domination: return "tau-domination";
    case Violation::Kind::empty_column: return "empty-column";
  }
  return "unknown";
}

ValidationReport validate_bound_condition(const GammaFamily& family, int p1_max,
                                          std::span<const TauLowerBound> extra) {
  if (p1_max < 1) throw std::domain_error("validate_bound_condition requires p1_max >= 1");
  ValidationReport report{family.name(), p1_max, {}};

  for (int p1 = 1; p1 <= p1_max; ++p1) {
    std::vector<Histogram> columns;
    columns.reserve(idx(p1) + 1);
    for (int p0 = 0; p0 <= p1; ++p0) columns.push_back(family(p0, p1));

    if (columns[0].l1_norm() < 1) {
      report.violations.push_back({Violation::Kind::empty_column, 0, p1,
                                   "gamma_0 must account for the single region"});
    }
    for (int p0 = 1; p0 <= p1; ++p0) {
      if (!dominated_by(columns[idx(p0 - 1)], columns[idx(p0)])) {
        report.violations.push_back(
            {Violation::Kind::monotonicity, p0, p1,
             "gamma_{" + std::to_string(p0 - 1) + "," + std::to_string(p1) + "} = " +
                 columns[idx(p0 - 1)].to_string() + " is not below gamma_{" + std::to_string(p0) +
                 "," + std::to_string(p1) + "} = " + columns[idx(p0)].to_string()});
      }
    }

    std::vector<TauLowerBound> known;
    known.push_back({1, p1, tau_closed_form(1, p1), "tau_1 closed form"});
    known.push_back({p1, p1, Histogram::binomial_row(idx(p1)), "binomial row"});
    for (const auto& lb : extra) {
      if (lb.p1 == p1) known.push_back({std::min(lb.p0, p1), p1, lb.histogram, lb.source});
    }
    for (int p0 = 1; p0 <= p1; ++p0) {
      for (const auto& lb : known) {
        if (lb.p0 > p0 || dominated_by(lb.histogram, columns[idx(p0)])) continue;
        report.violations.push_back(
            {Violation::Kind::tau_domination, p0, p1,
             lb.source + " " + lb.histogram.to_string() + " (p0=" + std::to_string(lb.p0) +
                 ") is not below " + columns[idx(p0)].to_string()});
      }
    }
  }
  return report;
}

}  // namespace regionbound
