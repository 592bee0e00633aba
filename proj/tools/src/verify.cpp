#include "verify.hpp"

#include <array>
#include <filesystem>
#include <fstream>
#include <random>

#include "regionbound/arrangement1d.hpp"
#include "regionbound/arrangement2d.hpp"
#include "regionbound/bound.hpp"
#include "regionbound/gamma.hpp"
#include "regionbound/json_io.hpp"
#include "regionbound/net1d.hpp"

namespace regionbound::cli {

namespace {

constexpr std::array<std::string_view, 10> kSuites = {
    "table1", "matrices6", "tau1",  "conjecture", "tightness",
    "recursion", "paths", "prior", "soundness", "validator"};

using Checks = std::vector<Check>;

void record(Checks& out, std::string_view suite, std::string name, bool passed,
            std::string detail = {}) {
  out.push_back(Check{std::string(suite), std::move(name), passed, std::move(detail)});
}

Histogram row(std::initializer_list<int> entries) {
  std::vector<BigInt> v;
  for (int e : entries) v.emplace_back(e);
  return Histogram(std::move(v));
}

std::string pq(int p0, int p1) {
  return "(" + std::to_string(p0) + "," + std::to_string(p1) + ")";
}

Checks suite_table1() {
  // Columns p0 = 0..6 of gamma*_{p0,6}, entries indexed by i = 0..6.
  const std::array<Histogram, 7> expected = {
      row({0, 0, 0, 0, 0, 0, 1}),    row({0, 0, 0, 2, 2, 2, 1}),
      row({0, 0, 1, 5, 9, 6, 1}),    row({0, 0, 4, 16, 15, 6, 1}),
      row({0, 1, 14, 20, 15, 6, 1}), row({0, 6, 15, 20, 15, 6, 1}),
      row({1, 6, 15, 20, 15, 6, 1})};
  Checks out;
  const GammaFamily star = GammaFamily::by_name("star");
  for (int p0 = 0; p0 <= 6; ++p0) {
    const Histogram& want = expected[static_cast<std::size_t>(p0)];
    const Histogram got = star(p0, 6);
    record(out, "table1", "family column p0=" + std::to_string(p0), got == want, got.to_string());
    if (p0 >= 1) {
      const Histogram rec = gamma_star_recursive(p0, 6);
      record(out, "table1", "recursive p0=" + std::to_string(p0), rec == want, rec.to_string());
    }
    if (p0 >= 2) {
      const Histogram ex = gamma_star_explicit(p0, 6);
      const Histogram kx = gamma_star_k_expansion(p0, 6);
      record(out, "table1", "explicit p0=" + std::to_string(p0), ex == want, ex.to_string());
      record(out, "table1", "k-expansion p0=" + std::to_string(p0), kx == want, kx.to_string());
    }
  }
  const BigInt clipped = clip(star(3, 6), 3)[3];
  record(out, "table1", "clipped count 38", clipped == 38, to_decimal(clipped));
  return out;
}

Checks suite_matrices6() {
  using Rows = std::array<std::array<int, 7>, 7>;
  const Rows bar = {{{1, 0, 0, 0, 0, 0, 1},
                     {0, 7, 0, 0, 0, 6, 6},
                     {0, 0, 22, 0, 15, 15, 15},
                     {0, 0, 0, 42, 20, 20, 20},
                     {0, 0, 0, 0, 22, 15, 15},
                     {0, 0, 0, 0, 0, 7, 6},
                     {0, 0, 0, 0, 0, 0, 1}}};
  const Rows star = {{{1, 0, 0, 0, 0, 0, 1},
                      {0, 7, 0, 0, 1, 6, 6},
                      {0, 0, 22, 4, 14, 15, 15},
                      {0, 0, 0, 38, 20, 20, 20},
                      {0, 0, 0, 0, 22, 15, 15},
                      {0, 0, 0, 0, 0, 7, 6},
                      {0, 0, 0, 0, 0, 0, 1}}};
  const Rows con = {{{1, 0, 0, 0, 0, 0, 1},
                     {0, 7, 0, 0, 2, 6, 6},
                     {0, 0, 22, 7, 13, 15, 15},
                     {0, 0, 0, 35, 20, 20, 20},
                     {0, 0, 0, 0, 22, 15, 15},
                     {0, 0, 0, 0, 0, 7, 6},
                     {0, 0, 0, 0, 0, 0, 1}}};
  const std::array<std::tuple<std::string_view, const Rows*, int>, 3> cases = {
      {{"bar", &bar, 42}, {"star", &star, 38}, {"star-conjecture", &con, 35}}};
  Checks out;
  for (const auto& [name, rows, growth] : cases) {
    const GammaFamily family = GammaFamily::by_name(name);
    const BoundMatrix m = build_bound_matrix(family, 6);
    std::string mismatch;
    for (std::size_t i = 0; i < 7; ++i) {
      for (std::size_t j = 0; j < 7; ++j) {
        if (m.at(i, j) != (*rows)[i][j] && mismatch.empty()) {
          mismatch = "cell (" + std::to_string(i) + "," + std::to_string(j) + ") = " +
                     to_decimal(m.at(i, j));
        }
      }
    }
    record(out, "matrices6", std::string(name) + " matrix", mismatch.empty(), mismatch);
    const BigInt g = growth_rate(family, 3, 6);
    record(out, "matrices6", std::string(name) + " growth base", g == growth, to_decimal(g));
  }
  return out;
}

Checks suite_tau1(const RunConfig& config) {
  Checks out;
  const int p1_max = config.p1.value_or(16);
  for (int p1 = 1; p1 <= p1_max; ++p1) {
    const Histogram oracle = oracle_tau1(p1);
    record(out, "tau1", "p1=" + std::to_string(p1), oracle == tau_closed_form(1, p1),
           oracle.to_string());
  }
  return out;
}

Checks suite_conjecture(const RunConfig& config) {
  Checks out;
  std::vector<int> targets;
  if (config.p1) {
    targets.push_back(*config.p1);
  } else {
    targets = {3, 4, 5, 6};
  }
  for (int p1 : targets) {
    const Tau2SearchResult result = search_tau2(p1, config.trials, config.seed);
    const Histogram conjectured = conjecture_tau2(p1);
    const std::string tag = "p1=" + std::to_string(p1);
    if (result.counterexample) {
      std::filesystem::create_directories(config.out_dir);
      const auto path = std::filesystem::path(config.out_dir) /
                        ("tau2-counterexample-p" + std::to_string(p1) + "-seed" +
                         std::to_string(config.seed) + ".json");
      std::ofstream(path) << counterexample_to_json(*result.counterexample).dump(2) << '\n';
      record(out, "conjecture", tag + " no counterexample", false, "artifact " + path.string());
    } else {
      record(out, "conjecture", tag + " no counterexample", true,
             std::to_string(result.trials) + " arrangements");
    }
    record(out, "conjecture", tag + " join equals conjecture", result.join == conjectured,
           result.join.to_string());
    record(out, "conjecture", tag + " generic cell counts", result.cell_count_mismatches == 0,
           std::to_string(result.cell_count_mismatches) + " mismatches");
  }
  for (int p1 = 2; p1 <= 8; ++p1) {
    const OrientedArrangement2D hot = hot_center_arrangement(p1);
    const Histogram h = activation_histogram_2d(hot);
    record(out, "conjecture", "hot center p1=" + std::to_string(p1),
           hot.general_position() && h == conjecture_tau2(p1), h.to_string());
  }
  return out;
}

Checks suite_tightness(const RunConfig& config) {
  Checks out;
  const int p1_max = config.p1.value_or(20);
  const GammaFamily star = GammaFamily::by_name("star");
  const GammaFamily bar = GammaFamily::by_name("bar");
  const GammaFamily tilde = GammaFamily::by_name("tilde");
  const GammaFamily hat = GammaFamily::by_name("hat");
  std::string failure;
  int checked = 0;
  for (int p1 = 1; p1 <= p1_max; ++p1) {
    for (int p0 = 1; p0 <= p1; ++p0) {
      ++checked;
      const bool ok = dominated_by(star(p0, p1), bar(p0, p1)) &&
                      dominated_by(bar(p0, p1), tilde(p0, p1)) &&
                      dominated_by(tilde(p0, p1), hat(p0, p1));
      if (!ok && failure.empty()) failure = "fails at " + pq(p0, p1);
    }
  }
  record(out, "tightness", "star <= bar <= tilde <= hat", failure.empty(),
         failure.empty() ? std::to_string(checked) + " pairs" : failure);
  return out;
}

Checks suite_recursion(const RunConfig& config) {
  Checks out;
  const int p1_max = config.p1.value_or(20);
  const GammaFamily bar = GammaFamily::by_name("bar");

  std::string failure;
  for (int p1 = 2; p1 <= p1_max && failure.empty(); ++p1) {
    for (int n = 2; n <= p1; ++n) {
      if (recursion_step(bar(n, p1 - 1), bar(n - 1, p1 - 1)) != bar(n, p1)) {
        failure = "fails at " + pq(n, p1);
        break;
      }
    }
  }
  record(out, "recursion", "bar shift recursion", failure.empty(), failure);

  failure.clear();
  for (int p1 = 2; p1 <= p1_max && failure.empty(); ++p1) {
    for (int p0 = 2; p0 <= p1; ++p0) {
      const Histogram r = gamma_star_recursive(p0, p1);
      if (r != gamma_star_explicit(p0, p1) || r != gamma_star_k_expansion(p0, p1)) {
        failure = "paths differ at " + pq(p0, p1);
        break;
      }
    }
  }
  record(out, "recursion", "star three-path agreement", failure.empty(), failure);

  failure.clear();
  for (int p = 1; p <= p1_max; ++p) {
    if (gamma_star_recursive(p, p) != Histogram::binomial_row(static_cast<std::size_t>(p))) {
      failure = "diagonal differs at p=" + std::to_string(p);
      break;
    }
  }
  record(out, "recursion", "star diagonal is binomial row", failure.empty(), failure);

  failure.clear();
  for (int p1 = 2; p1 <= 64; ++p1) {
    if (conjecture_tau2(p1).l1_norm() != 1 + p1 + binomial(p1, 2)) {
      failure = "norm differs at p1=" + std::to_string(p1);
      break;
    }
  }
  record(out, "recursion", "conjecture norm identity", failure.empty(), failure);
  return out;
}

Architecture random_architecture(std::mt19937_64& rng, int max_depth, int max_width) {
  std::uniform_int_distribution<int> depth(1, max_depth);
  std::uniform_int_distribution<int> width(1, max_width);
  Architecture arch;
  arch.input_dim = width(rng);
  const int layers = depth(rng);
  for (int l = 0; l < layers; ++l) arch.widths.push_back(width(rng));
  return arch;
}

Checks suite_paths(const RunConfig& config) {
  Checks out;
  std::mt19937_64 rng = trial_rng(config.seed, 0);
  const GammaFamily star = GammaFamily::by_name("star");
  int agreed = 0;
  std::string failure;
  for (int t = 0; t < 50; ++t) {
    const Architecture arch = random_architecture(rng, 5, 8);
    try {
      const ComposedBound layerwise = compose_bound(star, arch);
      std::vector<SubnetGammaFamily> singles;
      for (int w : arch.widths) singles.push_back(SubnetGammaFamily::from_layerwise(star, w));
      const ComposedBound blocks =
          subnet_compose_bound(singles, SubnetworkPartition::singletons(arch.depth()), arch);
      if (blocks.bound != layerwise.bound) {
        if (failure.empty()) failure = "singleton partition differs on " + arch.to_string();
        continue;
      }
      ++agreed;
    } catch (const std::logic_error& e) {
      if (failure.empty()) failure = arch.to_string() + ": " + e.what();
    }
  }
  record(out, "paths", "histogram/matrix/singleton agreement", failure.empty(),
         failure.empty() ? std::to_string(agreed) + " architectures" : failure);
  return out;
}

BigInt prior_product(const Architecture& arch) {
  BigInt product = 1;
  int narrowest = arch.input_dim;
  for (int w : arch.widths) {
    BigInt sum = 0;
    for (int i = 0; i <= std::min(narrowest, w); ++i) sum += binomial(w, i);
    product *= sum;
    narrowest = std::min(narrowest, w);
  }
  return product;
}

Checks suite_prior(const RunConfig& config) {
  Checks out;
  std::mt19937_64 rng = trial_rng(config.seed, 1);
  const GammaFamily tilde = GammaFamily::by_name("tilde");
  std::string failure;
  for (int t = 0; t < 20; ++t) {
    const Architecture arch = random_architecture(rng, 4, 8);
    const BigInt got = compose_bound(tilde, arch).bound;
    const BigInt want = prior_product(arch);
    if (got != want && failure.empty()) {
      failure = arch.to_string() + ": " + to_decimal(got) + " vs " + to_decimal(want);
    }
  }
  record(out, "prior", "tilde composition equals product formula", failure.empty(),
         failure.empty() ? "20 architectures" : failure);
  return out;
}

Checks suite_soundness(const RunConfig& config) {
  Checks out;
  const NetRegionCount example = count_regions_1d_net(composition_loss_net());
  record(out, "soundness", "composition loss example",
         example.count == 4 && example.layer_histograms.front() == row({0, 2, 2}),
         std::to_string(example.count) + " regions, " +
             example.layer_histograms.front().to_string());

  const GammaFamily star = GammaFamily::by_name("star");
  std::string failure;
  for (std::uint64_t t = 0; t < 100; ++t) {
    std::mt19937_64 rng = trial_rng(config.seed, t);
    std::uniform_int_distribution<int> depth(1, 3);
    std::uniform_int_distribution<int> width(1, 5);
    std::vector<int> widths(static_cast<std::size_t>(depth(rng)));
    for (int& w : widths) w = width(rng);
    const ReluNet1D net = random_net_1d(widths, rng);
    const Architecture arch{1, widths};
    const NetRegionCount count = count_regions_1d_net(net);
    const BigInt bound = compose_bound(star, arch).bound;
    if (BigInt(static_cast<unsigned long>(count.count)) > bound && failure.empty()) {
      failure = "trial " + std::to_string(t) + " on " + arch.to_string() + ": " +
                std::to_string(count.count) + " > " + to_decimal(bound);
    }
  }
  record(out, "soundness", "random nets within star bound", failure.empty(),
         failure.empty() ? "100 networks" : failure);
  return out;
}

Checks suite_validator() {
  Checks out;
  for (std::string_view name : {"bar", "star"}) {
    const ValidationReport report = validate_bound_condition(GammaFamily::by_name(name), 10);
    record(out, "validator", std::string(name) + " bound condition", report.ok(),
           std::to_string(report.violations.size()) + " violations");
  }
  return out;
}

}  // namespace

std::span<const std::string_view> verify_suite_names() { return kSuites; }

std::vector<Check> run_verify_suite(std::string_view suite, const RunConfig& config) {
  if (suite == "all") {
    Checks all;
    for (std::string_view s : kSuites) {
      Checks part = run_verify_suite(s, config);
      all.insert(all.end(), part.begin(), part.end());
    }
    return all;
  }
  if (suite == "table1") return suite_table1();
  if (suite == "matrices6") return suite_matrices6();
  if (suite == "tau1") return suite_tau1(config);
  if (suite == "conjecture") return suite_conjecture(config);
  if (suite == "tightness") return suite_tightness(config);
  if (suite == "recursion") return suite_recursion(config);
  if (suite == "paths") return suite_paths(config);
  if (suite == "prior") return suite_prior(config);
  if (suite == "soundness") return suite_soundness(config);
  if (suite == "validator") return suite_validator();
  throw UsageError("unknown verify suite '" + std::string(suite) + "'");
}

int cmd_verify(const RunConfig& config, std::ostream& out) {
  const std::vector<Check> checks = run_verify_suite(config.suite, config);
  std::size_t failed = 0;
  Document doc;
  doc.columns = {"suite", "check", "result", "detail"};
  doc.rows_key = "checks";
  for (const Check& c : checks) {
    if (!c.passed) ++failed;
    doc.rows.push_back({c.suite, c.name, c.passed ? "PASS" : "FAIL", c.detail});
  }
  doc.add("suite", config.suite);
  doc.add("seed", config.seed);
  doc.add("passed", checks.size() - failed);
  doc.add("failed", failed);
  doc.render(out, config.format);
  return failed == 0 ? 0 : 1;
}

}  // namespace regionbound::cli
