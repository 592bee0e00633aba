#include "regionbound/arrangement2d.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <thread>

#include "regionbound/gamma.hpp"

namespace regionbound {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

Rational det3(const Line& p, const Line& q, const Line& r) {
  return p.a * (q.b * r.c - q.c * r.b) - p.b * (q.a * r.c - q.c * r.a) +
         p.c * (q.a * r.b - q.b * r.a);
}

HalfPlane side(const Line& line, bool active) {
  if (active) return HalfPlane{line.a, line.b, line.c};
  return HalfPlane{-line.a, -line.b, -line.c};
}

void check_enumerable(const OrientedArrangement2D& arrangement) {
  if (arrangement.size() > static_cast<std::size_t>(kCellEnumerationCap)) {
    throw std::domain_error("cell enumeration supports at most " +
                            std::to_string(kCellEnumerationCap) + " lines, got " +
                            std::to_string(arrangement.size()));
  }
  for (std::size_t i = 0; i < arrangement.size(); ++i) {
    if (arrangement.lines[i].degenerate()) {
      throw std::invalid_argument("line " + std::to_string(i) + " has a = b = 0");
    }
  }
}

void extend_cells(const OrientedArrangement2D& arrangement, std::vector<HalfPlane>& prefix,
                  std::uint32_t bits, std::vector<Cell>& out) {
  const std::size_t depth = prefix.size();
  for (int active = 0; active <= 1; ++active) {
    prefix.push_back(side(arrangement.lines[depth], active == 1));
    std::optional<Point2> witness = strict_feasible_point(prefix);
    if (witness) {
      const std::uint32_t next = bits | (static_cast<std::uint32_t>(active) << depth);
      if (prefix.size() == arrangement.size()) {
        out.push_back(Cell{SignVector{next, static_cast<int>(arrangement.size())},
                           std::move(*witness)});
      } else {
        extend_cells(arrangement, prefix, next, out);
      }
    }
    prefix.pop_back();
  }
}

// Rational point of the unit circle near angle theta, from t = tan(theta/2)
// rounded to a multiple of 1/1024.
std::pair<Rational, Rational> rational_circle_point(double theta) {
  bool antipode = false;
  if (std::abs(std::cos(theta / 2)) < 0.5) {
    theta -= std::numbers::pi;
    antipode = true;
  }
  Rational t(static_cast<long>(std::lround(std::tan(theta / 2) * 1024)), 1024);
  t.canonicalize();
  Rational denom = 1 + t * t;
  Rational u = (1 - t * t) / denom;
  Rational v = 2 * t / denom;
  if (antipode) {
    u = -u;
    v = -v;
  }
  return {u, v};
}

}  // namespace

bool OrientedArrangement2D::general_position() const {
  for (std::size_t i = 0; i < lines.size(); ++i) {
    if (lines[i].degenerate()) return false;
    for (std::size_t j = i + 1; j < lines.size(); ++j) {
      if (sgn(lines[i].a * lines[j].b - lines[j].a * lines[i].b) == 0) return false;
      for (std::size_t k = j + 1; k < lines.size(); ++k) {
        if (sgn(det3(lines[i], lines[j], lines[k])) == 0) return false;
      }
    }
  }
  return true;
}

OrientedArrangement2D OrientedArrangement2D::flipped(std::uint32_t mask) const {
  OrientedArrangement2D out = *this;
  for (std::size_t i = 0; i < out.lines.size(); ++i) {
    if ((mask >> i) & 1U) out.lines[i] = out.lines[i].flipped();
  }
  return out;
}

int SignVector::active() const noexcept { return std::popcount(bits); }

std::vector<Cell> enumerate_cells_2d(const OrientedArrangement2D& arrangement) {
  check_enumerable(arrangement);
  std::vector<Cell> cells;
  if (arrangement.size() == 0) {
    cells.push_back(Cell{SignVector{}, Point2{}});
    return cells;
  }
  std::vector<HalfPlane> prefix;
  prefix.reserve(arrangement.size());
  extend_cells(arrangement, prefix, 0, cells);
  std::sort(cells.begin(), cells.end(),
            [](const Cell& x, const Cell& y) { return x.signs < y.signs; });
  return cells;
}

Histogram histogram_from_cells(std::span<const Cell> cells, std::uint32_t flip_mask) {
  std::vector<BigInt> counts(kCellEnumerationCap + 1);
  for (const Cell& cell : cells) {
    counts[static_cast<std::size_t>(std::popcount(cell.signs.bits ^ flip_mask))] += 1;
  }
  return Histogram(std::move(counts));
}

Histogram activation_histogram_2d(const OrientedArrangement2D& arrangement) {
  return histogram_from_cells(enumerate_cells_2d(arrangement), 0);
}

Histogram orientation_join(std::span<const Cell> cells, int p1) {
  const std::size_t width = static_cast<std::size_t>(p1) + 1;
  std::vector<std::uint64_t> best(width, 0);
  std::vector<std::uint64_t> counts(width);
  for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << p1); ++mask) {
    std::fill(counts.begin(), counts.end(), 0);
    for (const Cell& cell : cells) ++counts[std::popcount(cell.signs.bits ^ mask)];
    std::uint64_t suffix = 0;
    for (std::size_t j = width; j-- > 0;) {
      suffix += counts[j];
      best[j] = std::max(best[j], suffix);
    }
  }
  std::vector<BigInt> entries(width);
  for (std::size_t j = 0; j < width; ++j) {
    entries[j] = static_cast<unsigned long>(best[j] - (j + 1 < width ? best[j + 1] : 0));
  }
  return Histogram(std::move(entries));
}

OrientedArrangement2D hot_center_arrangement(int p1) {
  if (p1 < 1 || p1 > kCellEnumerationCap) {
    throw std::domain_error("hot_center_arrangement requires 1 <= p1 <= " +
                            std::to_string(kCellEnumerationCap));
  }
  OrientedArrangement2D arrangement;
  const double n = p1;
  for (int k = 0; k < p1; ++k) {
    const double theta = 2 * std::numbers::pi * k / n + k * std::numbers::pi / (8 * n * n);
    auto [u, v] = rational_circle_point(theta);
    arrangement.lines.push_back(Line{-u, -v, Rational(1)});
  }
  return arrangement;
}

OrientedArrangement2D random_general_position_arrangement(int p1, std::mt19937_64& rng,
                                                          const RandomLineOptions& options) {
  if (p1 < 0) throw std::domain_error("random arrangement needs p1 >= 0");
  if (options.max_numerator < 1 || options.max_denominator < 1) {
    throw std::invalid_argument("random line options need positive bounds");
  }
  std::uniform_int_distribution<long> num(-options.max_numerator, options.max_numerator);
  std::uniform_int_distribution<long> den(1, options.max_denominator);
  auto coefficient = [&] {
    long n = num(rng);
    Rational r(n, den(rng));
    r.canonicalize();
    return r;
  };
  while (true) {
    OrientedArrangement2D arrangement;
    for (int i = 0; i < p1; ++i) {
      Rational a = coefficient();
      Rational b = coefficient();
      Rational c = coefficient();
      arrangement.lines.push_back(Line{a, b, c});
    }
    if (arrangement.general_position()) return arrangement;
  }
}

std::mt19937_64 trial_rng(std::uint64_t seed, std::uint64_t trial) {
  return std::mt19937_64(splitmix64(seed + trial));
}

namespace {

struct ChunkResult {
  std::vector<std::uint64_t> suffix_max;
  std::uint64_t mismatches = 0;
  std::optional<Tau2Counterexample> counterexample;
};

ChunkResult search_chunk(int p1, std::uint64_t seed, std::uint64_t begin, std::uint64_t end,
                         const Histogram& conjectured) {
  const std::size_t width = static_cast<std::size_t>(p1) + 1;
  const std::vector<BigInt> limit_big = conjectured.suffix_sums();
  std::vector<std::uint64_t> limit(width, 0);
  for (std::size_t j = 0; j < limit_big.size() && j < width; ++j) {
    limit[j] = limit_big[j].get_ui();
  }
  const auto expected_cells = static_cast<std::uint64_t>(1 + p1 + p1 * (p1 - 1) / 2);

  ChunkResult result;
  result.suffix_max.assign(width, 0);
  std::vector<std::uint64_t> counts(width);
  for (std::uint64_t trial = begin; trial < end; ++trial) {
    std::mt19937_64 rng = trial_rng(seed, trial);
    OrientedArrangement2D arrangement = random_general_position_arrangement(p1, rng);
    const std::vector<Cell> cells = enumerate_cells_2d(arrangement);
    if (cells.size() != expected_cells) ++result.mismatches;
    for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << p1); ++mask) {
      std::fill(counts.begin(), counts.end(), 0);
      for (const Cell& cell : cells) ++counts[std::popcount(cell.signs.bits ^ mask)];
      std::uint64_t suffix = 0;
      bool violates = false;
      for (std::size_t j = width; j-- > 0;) {
        suffix += counts[j];
        result.suffix_max[j] = std::max(result.suffix_max[j], suffix);
        if (suffix > limit[j]) violates = true;
      }
      if (violates && !result.counterexample) {
        result.counterexample = Tau2Counterexample{seed, trial, arrangement.flipped(mask),
                                                   histogram_from_cells(cells, mask), conjectured};
      }
    }
  }
  return result;
}

}  // namespace

Tau2SearchResult search_tau2(int p1, std::uint64_t trials, std::uint64_t seed, unsigned threads) {
  if (p1 < 2 || p1 > kTau2SearchCap) {
    throw std::domain_error("search_tau2 supports 2 <= p1 <= " + std::to_string(kTau2SearchCap) +
                            ", got " + std::to_string(p1));
  }
  const Histogram conjectured = conjecture_tau2(p1);
  if (threads == 0) threads = std::max(1U, std::thread::hardware_concurrency());
  const std::uint64_t chunks = std::max<std::uint64_t>(1, std::min<std::uint64_t>(threads, trials));

  std::vector<ChunkResult> partial(chunks);
  std::vector<std::thread> workers;
  for (std::uint64_t c = 0; c < chunks; ++c) {
    const std::uint64_t begin = trials * c / chunks;
    const std::uint64_t end = trials * (c + 1) / chunks;
    workers.emplace_back([&, c, begin, end] {
      partial[c] = search_chunk(p1, seed, begin, end, conjectured);
    });
  }
  for (auto& w : workers) w.join();

  Tau2SearchResult result;
  result.p1 = p1;
  result.trials = trials;
  const std::size_t width = static_cast<std::size_t>(p1) + 1;
  std::vector<std::uint64_t> suffix(width, 0);
  for (ChunkResult& part : partial) {
    for (std::size_t j = 0; j < width; ++j) suffix[j] = std::max(suffix[j], part.suffix_max[j]);
    result.cell_count_mismatches += part.mismatches;
    if (part.counterexample && !result.counterexample) {
      result.counterexample = std::move(part.counterexample);
    }
  }
  std::vector<BigInt> entries(width);
  for (std::size_t j = 0; j < width; ++j) {
    entries[j] = static_cast<unsigned long>(suffix[j] - (j + 1 < width ? suffix[j + 1] : 0));
  }
  result.join = Histogram(std::move(entries));
  return result;
}

}  // namespace regionbound
