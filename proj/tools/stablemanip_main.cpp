// stablemanip: decide stable manipulation instances, print winners, and run
// manipulability experiments.
//
// Exit codes: 0 YES / success, 1 NO, 2 error.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "stablemanip/deciders.hpp"
#include "stablemanip/errors.hpp"
#include "stablemanip/experiments.hpp"
#include "stablemanip/io.hpp"
#include "stablemanip/oracle.hpp"

namespace sm = stablemanip;

namespace {

constexpr int kExitYes = 0;
constexpr int kExitNo = 1;
constexpr int kExitError = 2;
constexpr size_t kPrintedRefutations = 3;

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw sm::InputError("cannot read '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

struct DecideArgs {
  std::string path;
  bool oracle = false;
  bool anonymous = false;
  uint64_t budget = sm::OracleBudget{}.max_nodes;
};

int run_decide(const DecideArgs& args) {
  const sm::InstanceFile file = sm::parse_instance_file(read_file(args.path));
  const sm::Instance inst = sm::to_instance(file);
  sm::OracleBudget budget;
  budget.max_nodes = args.budget;
  sm::Decision decision;
  if (args.anonymous) {
    decision = sm::decide_anonymous(inst, budget);
  } else if (args.oracle) {
    decision = sm::decide_exhaustive(inst, budget);
  } else {
    decision = sm::decide(inst);
  }
  const sm::AlternativeSet& labels = file.alternatives;
  if (decision.yes()) {
    std::cout << "YES\n";
    for (size_t i = 0; i < decision.witness.size(); ++i) {
      std::cout << "manipulator " << i + 1 << ": "
                << sm::format_ranking(decision.witness[i], labels) << "\n";
    }
    return kExitYes;
  }
  std::cout << "NO\n";
  const auto& refutations = decision.refutations;
  for (size_t i = 0; i < refutations.size() && i < kPrintedRefutations; ++i) {
    std::cout << "defeating profile against manipulator ballot(s):";
    for (const sm::Ranking& w : refutations[i].manipulators) {
      std::cout << " [" << sm::format_ranking(w, labels) << "]";
    }
    std::cout << "\n";
    const sm::Profile& q = refutations[i].adversary;
    for (int v = 0; v < q.num_voters(); ++v) {
      std::cout << "  voter " << v + 1 << ": "
                << sm::format_ranking(q[v], labels) << "\n";
    }
  }
  if (refutations.size() > kPrintedRefutations) {
    std::cout << "(" << refutations.size() - kPrintedRefutations
              << " more manipulator profiles refuted)\n";
  }
  return kExitNo;
}

int run_winners(const std::string& path, const std::string& rule_flag) {
  const sm::InstanceFile file = sm::parse_instance_file(read_file(path));
  std::string rule_text = rule_flag;
  if (rule_text.empty()) {
    if (!file.rule) throw sm::InputError("no --rule given and no rule= line in file");
    rule_text = *file.rule;
  }
  const sm::Rule rule = sm::Rule::Parse(rule_text);
  std::vector<std::string> names;
  for (sm::AltId a : sm::winners(file.profile, rule)) {
    names.push_back(file.alternatives.label(a));
  }
  std::sort(names.begin(), names.end());
  for (size_t i = 0; i < names.size(); ++i) {
    std::cout << (i > 0 ? " " : "") << names[i];
  }
  std::cout << "\n";
  return kExitYes;
}

struct ExperimentArgs {
  std::vector<std::string> rules;
  std::vector<int> ms;
  std::vector<int> ns;
  std::vector<int> deltas;
  int trials = 100;
  uint64_t seed = 1;
  int manipulators = 1;
  int jobs = 1;
  bool exclude_winners = false;
  uint64_t budget = sm::OracleBudget{}.max_nodes;
  std::string out;
};

int run_experiment(const ExperimentArgs& args) {
  std::vector<sm::ExperimentConfig> configs;
  for (const std::string& rule_text : args.rules) {
    const sm::Rule rule = sm::Rule::Parse(rule_text);
    for (int m : args.ms) {
      for (int n : args.ns) {
        for (int delta : args.deltas) {
          if (m < 1 || n < 1) throw sm::InputError("--m and --n must be positive");
          if (delta < 0 || delta > sm::max_kendall_tau(m)) {
            throw sm::InputError("delta " + std::to_string(delta) +
                                 " outside [0, m(m-1)/2] for m=" + std::to_string(m));
          }
          configs.push_back(sm::ExperimentConfig{rule, m, n, delta,
                                                 args.manipulators, args.trials,
                                                 args.seed});
        }
      }
    }
  }
  sm::GridOptions options;
  options.jobs = args.jobs;
  options.manipulability.exclude_winners = args.exclude_winners;
  options.manipulability.budget.max_nodes = args.budget;
  const std::vector<sm::ExperimentRow> rows = sm::run_grid(configs, options);

  if (args.out.empty() || args.out == "-") {
    sm::write_results_csv(std::cout, rows);
  } else {
    std::ofstream out(args.out);
    if (!out) throw sm::InputError("cannot write '" + args.out + "'");
    sm::write_results_csv(out, rows);
    if (!out.flush()) throw sm::InputError("failed writing '" + args.out + "'");
  }
  for (const auto& row : rows) {
    if (row.error) {
      std::cerr << "warning: " << row.rule << " m=" << row.m << " n=" << row.n
                << " delta=" << row.delta << ": " << *row.error << "\n";
    }
  }
  return kExitYes;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Stable manipulation deciders and experiments"};
  app.require_subcommand(1);

  DecideArgs decide_args;
  auto* decide = app.add_subcommand(
      "decide", "Decide an instance file; exit 0 on YES, 1 on NO");
  decide->add_option("instance", decide_args.path, "Instance file")->required();
  decide->add_flag("--oracle", decide_args.oracle,
                   "Use the exhaustive adversary search");
  decide->add_flag("--anonymous", decide_args.anonymous,
                   "Use anonymous-profile enumeration (few alternatives only)");
  decide->add_option("--budget", decide_args.budget,
                     "Profile-check budget for the oracles");

  std::string winners_path, winners_rule;
  auto* winners = app.add_subcommand("winners", "Print the co-winners of a profile");
  winners->add_option("profile", winners_path, "Profile or instance file")->required();
  winners->add_option("--rule", winners_rule, "Voting rule (overrides rule= in file)");

  ExperimentArgs exp;
  auto* experiment = app.add_subcommand(
      "experiment", "Estimate the fraction of stably manipulable profiles");
  experiment->add_option("--rules", exp.rules, "Comma-separated rules")
      ->required()->delimiter(',');
  experiment->add_option("--m", exp.ms, "Alternative counts")->required()->delimiter(',');
  experiment->add_option("--n", exp.ns, "Voter counts")->required()->delimiter(',');
  experiment->add_option("--deltas", exp.deltas, "Swap budgets")->required()->delimiter(',');
  experiment->add_option("--trials", exp.trials, "Profiles per configuration")
      ->check(CLI::PositiveNumber);
  experiment->add_option("--seed", exp.seed, "Base seed");
  experiment->add_option("--l", exp.manipulators, "Manipulators")
      ->check(CLI::PositiveNumber);
  experiment->add_option("--jobs", exp.jobs, "Worker threads")->check(CLI::PositiveNumber);
  experiment->add_flag("--exclude-winners", exp.exclude_winners,
                       "Only count c outside the current co-winners");
  experiment->add_option("--budget", exp.budget, "Profile-check budget for oracles");
  experiment->add_option("--out", exp.out, "CSV output path (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitError;
  }

  try {
    if (*decide) return run_decide(decide_args);
    if (*winners) return run_winners(winners_path, winners_rule);
    if (*experiment) return run_experiment(exp);
  } catch (const sm::UnsupportedError& e) {
    std::cerr << "unsupported: " << e.what() << "\n";
  } catch (const sm::ResourceError& e) {
    std::cerr << "resource limit: " << e.what() << "\n";
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
  }
  return kExitError;
}
