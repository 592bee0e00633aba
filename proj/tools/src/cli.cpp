#include "cli.hpp"

#include <CLI11.hpp>
#include <cstdlib>
#include <functional>
#include <map>
#include <vector>

#include "commands.hpp"
#include "regionbound/gamma.hpp"
#include "verify.hpp"

namespace regionbound::cli {

namespace {

std::uint64_t seed_from_environment() {
  const char* env = std::getenv("REGIONBOUND_SEED");
  if (env == nullptr || *env == '\0') return 0;
  try {
    std::size_t used = 0;
    const std::string text(env);
    const unsigned long long value = std::stoull(text, &used);
    if (used != text.size()) throw std::invalid_argument(text);
    return value;
  } catch (const std::exception&) {
    throw UsageError(std::string("REGIONBOUND_SEED is not an unsigned integer: '") + env + "'");
  }
}

struct Options {
  RunConfig config;
  std::string format = "text";
  std::optional<std::uint64_t> seed;
};

void add_format(CLI::App* cmd, Options& o) {
  cmd->add_option("--format", o.format, "Output format")
      ->check(CLI::IsMember({"text", "json", "csv"}))
      ->capture_default_str();
}

void add_family(CLI::App* cmd, Options& o) {
  std::vector<std::string> names;
  for (std::string_view n : GammaFamily::builtin_names()) names.emplace_back(n);
  cmd->add_option("--family", o.config.family, "Gamma family")
      ->check(CLI::IsMember(names))
      ->capture_default_str();
}

void add_seed(CLI::App* cmd, Options& o) {
  cmd->add_option("--seed", o.seed, "Random seed (default: $REGIONBOUND_SEED, else 0)");
}

void add_trials(CLI::App* cmd, Options& o) {
  cmd->add_option("--trials", o.config.trials, "Number of random samples")
      ->capture_default_str();
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact upper bounds on the number of linear regions of ReLU networks"};
  app.name("regionbound");
  app.require_subcommand(1);

  Options o;
  std::map<CLI::App*, std::function<int(const RunConfig&, std::ostream&)>> handlers;

  auto* bound = app.add_subcommand("bound", "Composed region bound for an architecture");
  bound->add_option("--arch", o.config.arch, "Architecture n0xn1x...xnL")->required();
  add_family(bound, o);
  bound->add_flag("--allow-conjecture", o.config.allow_conjecture,
                  "Permit families that rest on the unproven conjecture");
  bound->add_option("--blocks", o.config.blocks,
                    "Subnetwork block lengths, e.g. 2,2 (blocks use composed families)");
  add_format(bound, o);
  handlers[bound] = cmd_bound;

  auto* compare = app.add_subcommand("compare", "Bounds of every built-in family");
  compare->add_option("--arch", o.config.arch, "Architecture n0xn1x...xnL")->required();
  add_format(compare, o);
  handlers[compare] = cmd_compare;

  auto* tau = app.add_subcommand("tau", "Known activation histogram joins");
  tau->add_option("--p0", o.config.p0, "Input dimension (single cell)");
  tau->add_option("--p1", o.config.p1, "Width (grid size without --p0, default 6)");
  add_format(tau, o);
  handlers[tau] = cmd_tau;

  auto* matrix = app.add_subcommand("matrix", "Bound matrix of a family");
  add_family(matrix, o);
  matrix->add_option("--p1", o.config.p1, "Width (default 6)");
  add_format(matrix, o);
  handlers[matrix] = cmd_matrix;

  auto* verify = app.add_subcommand("verify", "Run verification suites");
  std::vector<std::string> suites{"all"};
  for (std::string_view s : verify_suite_names()) suites.emplace_back(s);
  verify->add_option("--suite", o.config.suite, "Suite to run")
      ->check(CLI::IsMember(suites))
      ->capture_default_str();
  verify->add_option("--p1", o.config.p1, "Restrict or bound the width range of a suite");
  add_trials(verify, o);
  add_seed(verify, o);
  verify->add_option("--out-dir", o.config.out_dir, "Directory for counterexample artifacts")
      ->capture_default_str();
  add_format(verify, o);
  handlers[verify] = cmd_verify;

  auto* oracle = app.add_subcommand("oracle", "Brute-force ground truth");
  oracle->require_subcommand(1);

  auto* o_tau1 = oracle->add_subcommand("tau1", "Exhaustive join for points on a line");
  o_tau1->add_option("--p1", o.config.p1, "Number of points")->required();
  add_format(o_tau1, o);
  handlers[o_tau1] = cmd_oracle_tau1;

  auto* o_cells = oracle->add_subcommand("cells", "Cells of a 2-D arrangement read from JSON");
  o_cells->add_option("--input", o.config.input, "Arrangement JSON file")->required();
  add_format(o_cells, o);
  handlers[o_cells] = cmd_oracle_cells;

  auto* o_hot = oracle->add_subcommand("hot-center", "Tangent-line hot-center arrangement");
  o_hot->add_option("--p1", o.config.p1, "Number of lines")->required();
  add_format(o_hot, o);
  handlers[o_hot] = cmd_oracle_hot_center;

  auto* o_search = oracle->add_subcommand("search", "Random search against the 2-D conjecture");
  o_search->add_option("--p1", o.config.p1, "Number of lines")->required();
  add_trials(o_search, o);
  add_seed(o_search, o);
  o_search->add_option("--out-dir", o.config.out_dir, "Directory for counterexample artifacts")
      ->capture_default_str();
  add_format(o_search, o);
  handlers[o_search] = cmd_oracle_search;

  auto* o_net = oracle->add_subcommand("net", "Exact region count of a 1-D input network");
  o_net->add_option("--input", o.config.input, "Network JSON file");
  o_net->add_option("--arch", o.config.arch, "Random network architecture 1xn1x...");
  add_seed(o_net, o);
  add_format(o_net, o);
  handlers[o_net] = cmd_oracle_net;

  auto* o_emp = oracle->add_subcommand("empirical", "Sampled lower bound for a subnetwork");
  o_emp->add_option("--arch", o.config.arch, "p0xp1x...xpl with p0 in {1,2}")->required();
  add_trials(o_emp, o);
  add_seed(o_emp, o);
  add_format(o_emp, o);
  handlers[o_emp] = cmd_oracle_empirical;

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    o.config.format = parse_format(o.format);
    o.config.seed = o.seed ? *o.seed : seed_from_environment();
    for (auto& [cmd, handler] : handlers) {
      if (cmd->parsed()) return handler(o.config, out);
    }
    err << "no command given\n";
    return kExitUsage;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const PolicyError& e) {
    err << "refused: " << e.what() << '\n';
    return kExitPolicy;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << '\n';
    return kExitPolicy;
  } catch (const std::length_error& e) {
    err << "error: " << e.what() << '\n';
    return kExitPolicy;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kExitVerifyFailure;
  }
}

}  // namespace regionbound::cli
