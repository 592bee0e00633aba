#include "commands.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "regionbound/arrangement1d.hpp"
#include "regionbound/arrangement2d.hpp"
#include "regionbound/bound.hpp"
#include "regionbound/empirical.hpp"
#include "regionbound/gamma.hpp"
#include "regionbound/json_io.hpp"
#include "regionbound/net1d.hpp"

namespace regionbound::cli {

namespace {

Architecture require_arch(const RunConfig& config) {
  if (config.arch.empty()) throw UsageError("--arch is required");
  Architecture arch = Architecture::parse(config.arch);
  arch.validate();
  return arch;
}

int require_p1(const RunConfig& config) {
  if (!config.p1) throw UsageError("--p1 is required");
  return *config.p1;
}

std::vector<int> parse_block_lengths(const std::string& text) {
  std::vector<int> lengths;
  std::stringstream ss(text);
  std::string token;
  while (std::getline(ss, token, ',')) {
    try {
      std::size_t used = 0;
      int n = std::stoi(token, &used);
      if (used != token.size() || n < 1) throw std::invalid_argument(token);
      lengths.push_back(n);
    } catch (const std::exception&) {
      throw UsageError("malformed --blocks '" + text + "': expected positive lengths like 2,2");
    }
  }
  return lengths;
}

std::string status_of(bool conjectured) { return conjectured ? "conjectured" : "proven"; }

std::optional<BigInt> constant_width_growth(const GammaFamily& family, const Architecture& arch) {
  if (!arch.constant_width()) return std::nullopt;
  const int n = arch.widths.front();
  return growth_rate(family, std::min(arch.input_dim, n), n);
}

Json read_json_file(const std::string& path) {
  if (path.empty()) throw UsageError("--input is required");
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open '" + path + "'");
  try {
    return Json::parse(in);
  } catch (const Json::exception& e) {
    throw UsageError("'" + path + "' is not valid JSON: " + e.what());
  }
}

std::string sign_string(const SignVector& s) {
  std::string out;
  for (int i = 0; i < s.size; ++i) out += s[i] ? '1' : '0';
  return out;
}

}  // namespace

int cmd_bound(const RunConfig& config, std::ostream& out) {
  const Architecture arch = require_arch(config);
  const GammaFamily family = GammaFamily::by_name(config.family);
  if (family.conjectured() && !config.allow_conjecture) {
    throw PolicyError("family '" + family.name() +
                      "' rests on an unproven conjecture; pass --allow-conjecture to use it");
  }

  ComposedBound result;
  std::string partition = "layer-wise";
  if (config.blocks.empty()) {
    result = compose_bound(family, arch);
  } else {
    const std::vector<int> lengths = parse_block_lengths(config.blocks);
    const SubnetworkPartition p = SubnetworkPartition::from_block_lengths(lengths);
    p.validate(arch.depth());
    std::vector<SubnetGammaFamily> blocks;
    for (std::size_t k = 0; k < p.blocks(); ++k) {
      std::vector<int> topology(arch.widths.begin() + p.boundaries[k],
                                arch.widths.begin() + p.boundaries[k + 1]);
      blocks.push_back(SubnetGammaFamily::from_composition(family, topology));
    }
    result = subnet_compose_bound(blocks, p, arch);
    partition = config.blocks;
  }

  Document doc;
  doc.add("architecture", arch.to_string());
  doc.add("family", family.name());
  doc.add("status", status_of(result.conjectured));
  doc.add("conjectured", result.conjectured);
  doc.add("partition", partition);
  doc.add("bound", result.bound);
  if (auto growth = constant_width_growth(family, arch)) {
    doc.add("growth_base", *growth);
    doc.add("growth", "O(" + to_decimal(*growth) + "^L)");
  }
  doc.columns = {"step", "histogram", "regions"};
  doc.rows_key = "per_layer_histograms";
  for (std::size_t l = 0; l < result.per_layer.size(); ++l) {
    doc.rows.push_back({l + 1, result.per_layer[l], result.per_layer[l].l1_norm()});
  }
  doc.render(out, config.format);
  return 0;
}

int cmd_compare(const RunConfig& config, std::ostream& out) {
  const Architecture arch = require_arch(config);
  Document doc;
  doc.add("architecture", arch.to_string());
  doc.columns = {"family", "status", "bound", "growth_base"};
  bool any_conjectured = false;
  for (std::string_view name : GammaFamily::builtin_names()) {
    const GammaFamily family = GammaFamily::by_name(name);
    const ComposedBound result = compose_bound(family, arch);
    any_conjectured = any_conjectured || family.conjectured();
    auto growth = constant_width_growth(family, arch);
    doc.rows.push_back({family.name(), status_of(family.conjectured()), result.bound,
                        growth ? Value(*growth) : Value("-", nullptr)});
  }
  doc.add("conjectured", any_conjectured);
  doc.render(out, config.format);
  return 0;
}

int cmd_tau(const RunConfig& config, std::ostream& out) {
  const int p1_max = config.p1.value_or(6);
  if (p1_max < 1) throw PolicyError("--p1 must be >= 1");
  Document doc;
  doc.columns = {"p0", "p1", "status", "histogram", "regions"};
  bool any_conjectured = false;
  auto add_cell = [&](int p0, int p1) {
    std::string status;
    Histogram h;
    if (p0 == 1 || p0 >= p1) {
      status = "proven-closed-form";
      h = tau_closed_form(p0, p1);
    } else if (p0 == 2) {
      status = "conjectured";
      h = conjecture_tau2(p1);
      any_conjectured = true;
    } else {
      status = "unknown-upper-bound";
      h = gamma_star_explicit(p0, p1);
    }
    doc.rows.push_back({p0, p1, status, h, h.l1_norm()});
  };
  if (config.p0) {
    if (*config.p0 < 1) throw PolicyError("--p0 must be >= 1");
    add_cell(*config.p0, p1_max);
  } else {
    for (int p0 = 1; p0 <= p1_max; ++p0) {
      for (int p1 = 1; p1 <= p1_max; ++p1) add_cell(p0, p1);
    }
  }
  doc.add("conjectured", any_conjectured);
  doc.render(out, config.format);
  return 0;
}

int cmd_matrix(const RunConfig& config, std::ostream& out) {
  const int p1 = config.p1.value_or(6);
  const GammaFamily family = GammaFamily::by_name(config.family);
  const BoundMatrix matrix = build_bound_matrix(family, p1);
  Document doc;
  doc.add("family", family.name());
  doc.add("status", status_of(family.conjectured()));
  doc.add("conjectured", family.conjectured());
  doc.add("p1", p1);
  doc.rows_key = "matrix";
  doc.columns.push_back("row");
  for (int j = 0; j <= p1; ++j) doc.columns.push_back("c" + std::to_string(j));
  for (std::size_t i = 0; i < matrix.dim(); ++i) {
    std::vector<Value> row{i};
    for (std::size_t j = 0; j < matrix.dim(); ++j) row.emplace_back(matrix.at(i, j));
    doc.rows.push_back(std::move(row));
  }
  doc.render(out, config.format);
  return 0;
}

int cmd_oracle_tau1(const RunConfig& config, std::ostream& out) {
  const int p1 = require_p1(config);
  const Histogram oracle = oracle_tau1(p1);
  Document doc;
  doc.add("p1", p1);
  doc.add("oracle_join", oracle);
  bool match = true;
  if (p1 >= 1) {
    const Histogram closed = tau_closed_form(1, p1);
    match = closed == oracle;
    doc.add("closed_form", closed);
    doc.add("match", match);
  }
  doc.render(out, config.format);
  return match ? 0 : 1;
}

int cmd_oracle_cells(const RunConfig& config, std::ostream& out) {
  const OrientedArrangement2D arrangement = arrangement2d_from_json(read_json_file(config.input));
  const std::vector<Cell> cells = enumerate_cells_2d(arrangement);
  Document doc;
  doc.add("lines", arrangement.size());
  doc.add("general_position", arrangement.general_position());
  doc.add("cells", cells.size());
  doc.add("histogram", histogram_from_cells(cells, 0));
  doc.columns = {"signs", "active", "x", "y"};
  doc.rows_key = "cells";
  for (const Cell& cell : cells) {
    doc.rows.push_back({sign_string(cell.signs), cell.signs.active(), to_string(cell.witness.x),
                        to_string(cell.witness.y)});
  }
  doc.render(out, config.format);
  return 0;
}

int cmd_oracle_hot_center(const RunConfig& config, std::ostream& out) {
  const int p1 = require_p1(config);
  const OrientedArrangement2D arrangement = hot_center_arrangement(p1);
  const std::vector<Cell> cells = enumerate_cells_2d(arrangement);
  Document doc;
  doc.add("p1", p1);
  doc.add("general_position", arrangement.general_position());
  doc.add("cells", cells.size());
  const Histogram hot = histogram_from_cells(cells, 0);
  doc.add("histogram", hot);
  if (p1 >= 2) {
    const Histogram conjectured = conjecture_tau2(p1);
    doc.add("conjectured_join", conjectured);
    doc.add("attains", hot == conjectured);
    doc.add("conjectured", true);
  }
  doc.columns = {"a", "b", "c"};
  doc.rows_key = "lines";
  for (const Line& line : arrangement.lines) {
    doc.rows.push_back({to_string(line.a), to_string(line.b), to_string(line.c)});
  }
  doc.render(out, config.format);
  return 0;
}

int cmd_oracle_search(const RunConfig& config, std::ostream& out) {
  const int p1 = require_p1(config);
  const Tau2SearchResult result = search_tau2(p1, config.trials, config.seed);
  const Histogram conjectured = conjecture_tau2(p1);
  Document doc;
  doc.add("p1", p1);
  doc.add("trials", result.trials);
  doc.add("seed", config.seed);
  doc.add("join", result.join);
  doc.add("conjectured_join", conjectured);
  doc.add("conjectured", true);
  doc.add("join_equals_conjecture", result.join == conjectured);
  doc.add("cell_count_mismatches", result.cell_count_mismatches);
  std::string artifact = "none";
  if (result.counterexample) {
    std::filesystem::create_directories(config.out_dir);
    artifact = (std::filesystem::path(config.out_dir) /
                ("tau2-counterexample-p" + std::to_string(p1) + "-seed" +
                 std::to_string(config.seed) + ".json"))
                   .string();
    std::ofstream(artifact) << counterexample_to_json(*result.counterexample).dump(2) << '\n';
  }
  doc.add("counterexample", artifact);
  doc.render(out, config.format);
  return result.counterexample ? 1 : 0;
}

int cmd_oracle_net(const RunConfig& config, std::ostream& out) {
  ReluNet1D net;
  if (!config.input.empty()) {
    net = net_from_json(read_json_file(config.input));
  } else {
    const Architecture arch = require_arch(config);
    if (arch.input_dim != 1) throw PolicyError("random networks need input dimension 1");
    std::mt19937_64 rng = trial_rng(config.seed, 0);
    net = random_net_1d(arch.widths, rng);
  }
  const NetRegionCount count = count_regions_1d_net(net);
  const Architecture arch{1, net.widths()};
  const BigInt bound = compose_bound(GammaFamily::by_name("star"), arch).bound;

  Document doc;
  doc.add("architecture", arch.to_string());
  doc.add("regions", count.count);
  doc.add("breakpoints", count.breakpoints.size());
  doc.add("min_histogram", count.min_histogram);
  doc.add("star_bound", bound);
  doc.add("within_bound", BigInt(static_cast<unsigned long>(count.count)) <= bound);
  doc.columns = {"layer", "histogram"};
  doc.rows_key = "layer_histograms";
  for (std::size_t l = 0; l < count.layer_histograms.size(); ++l) {
    doc.rows.push_back({l + 1, count.layer_histograms[l]});
  }
  if (config.format == Format::json && config.input.empty()) doc.add("net", Value("", net_to_json(net)));
  doc.render(out, config.format);
  return 0;
}

int cmd_oracle_empirical(const RunConfig& config, std::ostream& out) {
  const Architecture arch = require_arch(config);
  const Histogram estimate =
      empirical_subnet_histogram(arch.widths, arch.input_dim, config.trials, config.seed);
  const GammaFamily star = GammaFamily::by_name("star");
  Histogram composed = Histogram::unit(static_cast<std::size_t>(arch.input_dim));
  for (int w : arch.widths) composed = phi_apply(star, w, composed);

  Document doc;
  doc.add("architecture", arch.to_string());
  doc.add("trials", config.trials);
  doc.add("seed", config.seed);
  doc.add("kind", "empirical-lower-bound");
  doc.add("estimate", estimate);
  doc.add("star_composition", composed);
  doc.add("dominated", dominated_by(estimate, composed));
  doc.render(out, config.format);
  return 0;
}

}  // namespace regionbound::cli
