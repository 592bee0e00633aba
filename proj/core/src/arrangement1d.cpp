#include "regionbound/arrangement1d.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <stdexcept>
#include <thread>

namespace regionbound {

void OrientedArrangement1D::validate() const {
  if (points.size() != orientations.size()) {
    throw std::invalid_argument("arrangement has " + std::to_string(points.size()) +
                                " points but " + std::to_string(orientations.size()) +
                                " orientations");
  }
  for (std::size_t i = 1; i < points.size(); ++i) {
    if (!(points[i - 1] < points[i])) {
      throw std::invalid_argument("arrangement points must be strictly increasing");
    }
  }
  for (int s : orientations) {
    if (s != 1 && s != -1) throw std::invalid_argument("orientations must be +1 or -1");
  }
}

Histogram histogram_of_sigma(std::span<const int> sigma) {
  int f = 0;
  for (int s : sigma) {
    if (s != 1 && s != -1) throw std::invalid_argument("orientations must be +1 or -1");
    if (s == -1) ++f;
  }
  std::vector<BigInt> counts(sigma.size() + 1);
  counts[static_cast<std::size_t>(f)] += 1;
  for (int s : sigma) {
    f += s;
    counts[static_cast<std::size_t>(f)] += 1;
  }
  return Histogram(std::move(counts));
}

Histogram activation_histogram_1d(const OrientedArrangement1D& arrangement) {
  arrangement.validate();
  const auto& t = arrangement.points;
  const std::size_t n = t.size();
  std::vector<BigInt> counts(n + 1);
  for (std::size_t region = 0; region <= n; ++region) {
    Rational x;
    if (n == 0) {
      x = 0;
    } else if (region == 0) {
      x = t.front() - 1;
    } else if (region == n) {
      x = t.back() + 1;
    } else {
      x = (t[region - 1] + t[region]) / 2;
    }
    std::size_t active = 0;
    for (std::size_t i = 0; i < n; ++i) {
      const bool right = x > t[i];
      if (right == (arrangement.orientations[i] == 1)) ++active;
    }
    counts[active] += 1;
  }
  return Histogram(std::move(counts));
}

namespace {

// Suffix-sum maxima over the orientation masks in [begin, end). Bit i of a
// mask set means sigma_{i+1} = -1.
std::vector<std::uint64_t> tau1_suffix_max(int p1, std::uint64_t begin, std::uint64_t end) {
  const std::size_t width = static_cast<std::size_t>(p1) + 1;
  std::vector<std::uint64_t> best(width, 0);
  std::vector<std::uint64_t> counts(width);
  for (std::uint64_t mask = begin; mask < end; ++mask) {
    std::fill(counts.begin(), counts.end(), 0);
    int f = std::popcount(mask);
    ++counts[static_cast<std::size_t>(f)];
    for (int i = 0; i < p1; ++i) {
      f += ((mask >> i) & 1U) ? -1 : 1;
      ++counts[static_cast<std::size_t>(f)];
    }
    std::uint64_t suffix = 0;
    for (std::size_t j = width; j-- > 0;) {
      suffix += counts[j];
      best[j] = std::max(best[j], suffix);
    }
  }
  return best;
}

}  // namespace

Histogram oracle_tau1(int p1, unsigned threads) {
  if (p1 < 0 || p1 > kTau1OracleCap) {
    throw std::domain_error("oracle_tau1 supports 0 <= p1 <= " + std::to_string(kTau1OracleCap) +
                            ", got " + std::to_string(p1));
  }
  const std::uint64_t total = std::uint64_t{1} << p1;
  if (threads == 0) threads = std::max(1U, std::thread::hardware_concurrency());
  const std::uint64_t chunks = std::min<std::uint64_t>(threads, total);

  std::vector<std::vector<std::uint64_t>> partial(chunks);
  std::vector<std::thread> workers;
  for (std::uint64_t c = 0; c < chunks; ++c) {
    const std::uint64_t begin = total * c / chunks;
    const std::uint64_t end = total * (c + 1) / chunks;
    workers.emplace_back([&partial, c, p1, begin, end] {
      partial[c] = tau1_suffix_max(p1, begin, end);
    });
  }
  for (auto& w : workers) w.join();

  const std::size_t width = static_cast<std::size_t>(p1) + 1;
  std::vector<std::uint64_t> suffix(width, 0);
  for (const auto& part : partial) {
    for (std::size_t j = 0; j < width; ++j) suffix[j] = std::max(suffix[j], part[j]);
  }
  std::vector<BigInt> entries(width);
  for (std::size_t j = 0; j < width; ++j) {
    const std::uint64_t next = j + 1 < width ? suffix[j + 1] : 0;
    entries[j] = static_cast<unsigned long>(suffix[j] - next);
  }
  return Histogram(std::move(entries));
}

std::vector<int> hot_center_orientation_1d(int p1) {
  if (p1 < 0) throw std::domain_error("hot_center_orientation_1d requires p1 >= 0");
  std::vector<int> sigma(static_cast<std::size_t>(p1), -1);
  std::fill_n(sigma.begin(), (p1 + 1) / 2, 1);
  return sigma;
}

}  // namespace regionbound
