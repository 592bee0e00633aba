#include "regionbound/histogram.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace regionbound {

namespace {
const BigInt kZero = 0;
}

Histogram::Histogram(std::vector<BigInt> entries) : entries_(std::move(entries)) {
  for (const auto& e : entries_) {
    if (sgn(e) < 0) throw std::invalid_argument("histogram entries must be non-negative");
  }
  trim();
}

Histogram Histogram::unit(std::size_t index, const BigInt& count) {
  std::vector<BigInt> entries(index + 1);
  entries[index] = count;
  return Histogram(std::move(entries));
}

Histogram Histogram::binomial_row(std::size_t n) {
  std::vector<BigInt> entries(n + 1);
  for (std::size_t i = 0; i <= n; ++i) {
    entries[i] = binomial(static_cast<std::int64_t>(n), static_cast<std::int64_t>(i));
  }
  return Histogram(std::move(entries));
}

void Histogram::trim() {
  while (!entries_.empty() && entries_.back() == 0) entries_.pop_back();
}

const BigInt& Histogram::operator[](std::size_t index) const noexcept {
  return index < entries_.size() ? entries_[index] : kZero;
}

BigInt Histogram::l1_norm() const {
  BigInt total = 0;
  for (const auto& e : entries_) total += e;
  return total;
}

std::vector<BigInt> Histogram::suffix_sums() const {
  std::vector<BigInt> sums(entries_.size());
  BigInt running = 0;
  for (std::size_t i = entries_.size(); i-- > 0;) {
    running += entries_[i];
    sums[i] = running;
  }
  return sums;
}

Histogram Histogram::operator+(const Histogram& other) const {
  std::vector<BigInt> sum(std::max(size(), other.size()));
  for (std::size_t i = 0; i < sum.size(); ++i) sum[i] = (*this)[i] + other[i];
  return Histogram(std::move(sum));
}

Histogram Histogram::scaled(const BigInt& factor) const {
  if (sgn(factor) < 0) throw std::invalid_argument("histogram scale factor must be non-negative");
  std::vector<BigInt> out(entries_.begin(), entries_.end());
  for (auto& e : out) e *= factor;
  return Histogram(std::move(out));
}

std::string Histogram::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (entries_[i] == 0) continue;
    if (!first) os << " + ";
    first = false;
    if (entries_[i] != 1) os << entries_[i].get_str();
    os << 'e' << i;
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Histogram& h) { return os << h.to_string(); }

bool dominated_by(const Histogram& v, const Histogram& w) {
  // Above the longer support both suffix sums are zero.
  if (v.size() > w.size()) return false;
  BigInt sv = 0;
  BigInt sw = 0;
  for (std::size_t i = w.size(); i-- > 0;) {
    sv += v[i];
    sw += w[i];
    if (sv > sw) return false;
  }
  return true;
}

Histogram join(const Histogram& v, const Histogram& w) {
  const std::size_t n = std::max(v.size(), w.size());
  std::vector<BigInt> out(n);
  BigInt sv = 0;
  BigInt sw = 0;
  BigInt previous = 0;  // max suffix sum at index i + 1
  for (std::size_t i = n; i-- > 0;) {
    sv += v[i];
    sw += w[i];
    const BigInt& current = sv > sw ? sv : sw;
    out[i] = current - previous;
    previous = current;
  }
  return Histogram(std::move(out));
}

Histogram join(std::span<const Histogram> values) {
  Histogram result;
  for (const auto& v : values) result = join(result, v);
  return result;
}

Histogram clip(const Histogram& v, std::size_t j) {
  if (v.size() <= j + 1) return v;
  std::vector<BigInt> out(v.entries().begin(), v.entries().begin() + static_cast<std::ptrdiff_t>(j + 1));
  for (std::size_t i = j + 1; i < v.size(); ++i) out[j] += v[i];
  return Histogram(std::move(out));
}

Histogram shift(const Histogram& v, std::size_t times) {
  if (v.is_zero()) return v;
  std::vector<BigInt> out(v.size() + times);
  std::copy(v.entries().begin(), v.entries().end(), out.begin() + static_cast<std::ptrdiff_t>(times));
  return Histogram(std::move(out));
}

Histogram k_operator(const Histogram& v, std::size_t delta_i, std::size_t delta_j) {
  if (delta_j < delta_i) {
    throw std::domain_error("k_operator requires delta_j >= delta_i");
  }
  return shift(v, delta_j - delta_i)
      .scaled(binomial(static_cast<std::int64_t>(delta_j), static_cast<std::int64_t>(delta_i)));
}

}  // namespace regionbound
