#include "regionbound/bound.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <stdexcept>

namespace regionbound {

namespace {

std::size_t idx(int i) { return static_cast<std::size_t>(i); }

int parse_positive(std::string_view token, std::string_view whole) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc{} || ptr != token.data() + token.size() || value < 1) {
    throw std::invalid_argument("malformed architecture '" + std::string(whole) +
                                "': expected positive integers separated by 'x'");
  }
  return value;
}

Histogram from_vector(std::span<const BigInt> x) {
  return Histogram(std::vector<BigInt>(x.begin(), x.end()));
}

void check_paths_agree(const Histogram& by_histograms, std::span<const BigInt> by_matrices,
                       std::size_t step) {
  if (from_vector(by_matrices) != by_histograms) {
    throw std::logic_error("histogram and matrix composition disagree after step " +
                           std::to_string(step) + ": " + by_histograms.to_string() + " vs " +
                           from_vector(by_matrices).to_string());
  }
}

}  // namespace

Architecture Architecture::parse(std::string_view text) {
  Architecture arch;
  std::vector<int> values;
  std::size_t start = 0;
  while (true) {
    std::size_t pos = text.find('x', start);
    std::string_view token = text.substr(start, pos == std::string_view::npos ? pos : pos - start);
    values.push_back(parse_positive(token, text));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  if (values.size() < 2) {
    throw std::invalid_argument("architecture '" + std::string(text) +
                                "' needs an input dimension and at least one layer");
  }
  arch.input_dim = values.front();
  arch.widths.assign(values.begin() + 1, values.end());
  return arch;
}

void Architecture::validate() const {
  if (input_dim < 1) throw std::invalid_argument("input dimension must be >= 1");
  if (widths.empty()) throw std::invalid_argument("architecture needs at least one layer");
  for (int w : widths) {
    if (w < 1) throw std::invalid_argument("layer widths must be >= 1");
  }
}

std::string Architecture::to_string() const {
  std::string s = std::to_string(input_dim);
  for (int w : widths) s += "x" + std::to_string(w);
  return s;
}

bool Architecture::constant_width() const {
  return !widths.empty() &&
         std::all_of(widths.begin(), widths.end(), [&](int w) { return w == widths.front(); });
}

BoundMatrix::BoundMatrix(std::size_t dim) : dim_(dim), cells_(dim * dim) {}

void BoundMatrix::set(std::size_t row, std::size_t col, BigInt value) {
  cells_.at(row * dim_ + col) = std::move(value);
}

bool BoundMatrix::upper_triangular() const {
  for (std::size_t i = 0; i < dim_; ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      if (at(i, j) != 0) return false;
    }
  }
  return true;
}

std::vector<BigInt> BoundMatrix::apply(std::span<const BigInt> x) const {
  if (x.size() != dim_) throw std::invalid_argument("BoundMatrix::apply: dimension mismatch");
  std::vector<BigInt> y(dim_);
  for (std::size_t i = 0; i < dim_; ++i) {
    for (std::size_t j = 0; j < dim_; ++j) {
      if (x[j] != 0 && at(i, j) != 0) y[i] += at(i, j) * x[j];
    }
  }
  return y;
}

BigInt schlaefli_count(int p0, int p1) {
  if (p0 < 0 || p1 < 0) throw std::domain_error("schlaefli_count requires p0, p1 >= 0");
  BigInt total = 0;
  for (int j = 0; j <= std::min(p0, p1); ++j) total += binomial(p1, j);
  return total;
}

Histogram phi_apply(const GammaFamily& family, int p1, const Histogram& v) {
  Histogram result;
  for (std::size_t p0 = 0; p0 < v.size(); ++p0) {
    if (v[p0] == 0) continue;
    const int column = std::min(static_cast<int>(p0), p1);
    result = result + clip(family(column, p1), idx(column)).scaled(v[p0]);
  }
  return result;
}

BoundMatrix build_bound_matrix(const GammaFamily& family, int p1) {
  if (p1 < 1) throw std::domain_error("build_bound_matrix requires p1 >= 1");
  BoundMatrix matrix(idx(p1) + 1);
  for (int j = 0; j <= p1; ++j) {
    const Histogram column = clip(family(j, p1), idx(j));
    for (std::size_t i = 0; i < column.size(); ++i) matrix.set(i, idx(j), column[i]);
  }
  return matrix;
}

std::vector<BigInt> lift(std::span<const BigInt> x, int p1) {
  std::vector<BigInt> y(idx(p1) + 1);
  for (std::size_t j = 0; j < x.size(); ++j) y[std::min(j, idx(p1))] += x[j];
  return y;
}

ComposedBound compose_bound(const GammaFamily& family, const Architecture& arch) {
  arch.validate();
  ComposedBound out;
  out.conjectured = family.conjectured();

  Histogram v = Histogram::unit(idx(arch.input_dim));
  std::vector<BigInt> x(idx(arch.input_dim) + 1);
  x.back() = 1;
  std::map<int, BoundMatrix> matrices;

  for (std::size_t l = 0; l < arch.widths.size(); ++l) {
    const int width = arch.widths[l];
    v = phi_apply(family, width, v);
    auto it = matrices.find(width);
    if (it == matrices.end()) it = matrices.emplace(width, build_bound_matrix(family, width)).first;
    x = it->second.apply(lift(x, width));
    check_paths_agree(v, x, l + 1);
    out.per_layer.push_back(v);
  }
  out.bound = v.l1_norm();
  return out;
}

BigInt growth_rate(const GammaFamily& family, int n0, int n) {
  if (n0 < 1 || n0 > n) throw std::domain_error("growth_rate requires 1 <= n0 <= n");
  const BoundMatrix b = build_bound_matrix(family, n);
  BigInt best = 0;
  for (std::size_t i = 0; i <= idx(n0); ++i) best = std::max(best, b.at(i, i));
  return best;
}

SubnetworkPartition SubnetworkPartition::singletons(std::size_t depth) {
  SubnetworkPartition p;
  for (std::size_t i = 0; i <= depth; ++i) p.boundaries.push_back(static_cast<int>(i));
  return p;
}

SubnetworkPartition SubnetworkPartition::from_block_lengths(std::span<const int> lengths) {
  SubnetworkPartition p;
  p.boundaries.push_back(0);
  for (int len : lengths) p.boundaries.push_back(p.boundaries.back() + len);
  return p;
}

void SubnetworkPartition::validate(std::size_t depth) const {
  if (boundaries.size() < 2 || boundaries.front() != 0 ||
      boundaries.back() != static_cast<int>(depth)) {
    throw std::invalid_argument("partition boundaries must run from 0 to the network depth");
  }
  for (std::size_t i = 1; i < boundaries.size(); ++i) {
    if (boundaries[i] <= boundaries[i - 1]) {
      throw std::invalid_argument("partition boundaries must be strictly increasing");
    }
  }
}

std::string_view to_string(SubnetProvenance p) {
  switch (p) {
    case SubnetProvenance::proven: return "proven";
    case SubnetProvenance::conjectured: return "conjectured";
    case SubnetProvenance::empirical: return "empirical-lower-bound";
  }
  return "unknown";
}

SubnetGammaFamily::SubnetGammaFamily(std::vector<int> topology, SubnetProvenance provenance,
                                     Generator generator, std::string name)
    : topology_(std::move(topology)),
      provenance_(provenance),
      generator_(std::move(generator)),
      name_(std::move(name)) {
  if (topology_.empty()) throw std::invalid_argument("subnetwork topology must be non-empty");
  for (int w : topology_) {
    if (w < 1) throw std::invalid_argument("subnetwork widths must be >= 1");
  }
  if (!generator_) throw std::invalid_argument("SubnetGammaFamily needs a generator");
}

SubnetGammaFamily SubnetGammaFamily::from_layerwise(const GammaFamily& family, int p1) {
  auto provenance = family.conjectured() ? SubnetProvenance::conjectured : SubnetProvenance::proven;
  return SubnetGammaFamily({p1}, provenance, [family, p1](int p0) { return family(p0, p1); },
                           family.name());
}

SubnetGammaFamily SubnetGammaFamily::from_composition(const GammaFamily& family,
                                                      std::vector<int> topology) {
  auto provenance = family.conjectured() ? SubnetProvenance::conjectured : SubnetProvenance::proven;
  auto generator = [family, topology](int p0) {
    Histogram v = Histogram::unit(idx(p0));
    for (int w : topology) v = phi_apply(family, w, v);
    return v;
  };
  return SubnetGammaFamily(topology, provenance, std::move(generator),
                           family.name() + "-composed");
}

Histogram SubnetGammaFamily::operator()(int p0) const {
  if (p0 < 0) throw std::domain_error("subnetwork family evaluated at negative input dimension");
  return generator_(std::min(p0, first_width()));
}

Histogram subnet_phi_apply(const SubnetGammaFamily& family, const Histogram& v) {
  Histogram result;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] == 0) continue;
    const int column = std::min(static_cast<int>(i), family.first_width());
    result = result + clip(family(column), idx(column)).scaled(v[i]);
  }
  return result;
}

BoundMatrix build_subnet_bound_matrix(const SubnetGammaFamily& family) {
  const int p1 = family.first_width();
  BoundMatrix matrix(idx(p1) + 1);
  for (int j = 0; j <= p1; ++j) {
    const Histogram column = clip(family(j), idx(j));
    for (std::size_t i = 0; i < column.size(); ++i) matrix.set(i, idx(j), column[i]);
  }
  return matrix;
}

ComposedBound subnet_compose_bound(std::span<const SubnetGammaFamily> families,
                                   const SubnetworkPartition& partition, const Architecture& arch,
                                   SoundnessPolicy policy) {
  arch.validate();
  partition.validate(arch.depth());
  if (families.size() != partition.blocks()) {
    throw std::invalid_argument("expected one subnetwork family per partition block (" +
                                std::to_string(partition.blocks()) + "), got " +
                                std::to_string(families.size()));
  }

  ComposedBound out;
  for (std::size_t k = 0; k < families.size(); ++k) {
    const auto begin = arch.widths.begin() + partition.boundaries[k];
    const auto end = arch.widths.begin() + partition.boundaries[k + 1];
    if (!std::equal(begin, end, families[k].topology().begin(), families[k].topology().end())) {
      throw std::invalid_argument("family for block " + std::to_string(k + 1) +
                                  " has a topology that does not match the architecture");
    }
    if (families[k].provenance() == SubnetProvenance::empirical &&
        policy != SoundnessPolicy::allow_empirical) {
      throw std::domain_error("block " + std::to_string(k + 1) +
                              " uses an empirical (lower-bound) family; refusing to claim an "
                              "upper bound");
    }
    if (families[k].provenance() != SubnetProvenance::proven) out.conjectured = true;
  }

  Histogram v = Histogram::unit(idx(arch.input_dim));
  std::vector<BigInt> x(idx(arch.input_dim) + 1);
  x.back() = 1;
  for (std::size_t k = 0; k < families.size(); ++k) {
    v = subnet_phi_apply(families[k], v);
    x = build_subnet_bound_matrix(families[k]).apply(lift(x, families[k].first_width()));
    check_paths_agree(v, x, k + 1);
    out.per_layer.push_back(v);
  }
  out.bound = v.l1_norm();
  return out;
}

}  // namespace regionbound
