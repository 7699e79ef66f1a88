// Command-line front end: instance generation, single optimizer runs, the
// brute-force lattice oracle, the submodularity validator, and the benchmark
// harness.  Exit codes: 0 success, 2 validation failure, 3 cost-guard
// (budget) exceeded, 1 any other error.

#include <CLI11.hpp>

#include <cstdint>
#include <exception>
#include <iostream>
#include <optional>
#include <string>

#include "bigreedy/experiment.hpp"
#include "bigreedy/grid_oracle.hpp"
#include "bigreedy/io.hpp"
#include "bigreedy/objective.hpp"
#include "bigreedy/strong_bigreedy.hpp"
#include "bigreedy/weak_bigreedy.hpp"

namespace {

constexpr int kExitValidation = 2;
constexpr int kExitBudget = 3;

bigreedy::Family parse_family(const std::string& name) {
  const auto family = bigreedy::family_from_name(name);
  if (!family) {
    throw CLI::ValidationError("--family", "unknown family '" + name +
                                               "' (expected nqp-strong, nqp-weak, or softmax)");
  }
  return *family;
}

bigreedy::Json strong_trace_to_json(const std::vector<bigreedy::StrongCoordinateTrace>& trace) {
  bigreedy::Json steps = bigreedy::Json::array();
  for (const auto& step : trace) {
    bigreedy::Json s;
    s["i"] = step.i;
    switch (step.branch) {
      case bigreedy::StrongBranch::clamp_zero: s["branch"] = "clamp_zero"; break;
      case bigreedy::StrongBranch::clamp_one: s["branch"] = "clamp_one"; break;
      case bigreedy::StrongBranch::bisect: s["branch"] = "bisect"; break;
    }
    s["iterations"] = step.iterations;
    s["z"] = step.z;
    steps.push_back(std::move(s));
  }
  bigreedy::Json j;
  j["schema"] = 1;
  j["steps"] = std::move(steps);
  return j;
}

struct GenArgs {
  std::string family;
  int n = 100;
  std::uint64_t seed = 0;
  std::string out;
};

struct RunArgs {
  std::string instance;
  std::string algo;
  double epsilon = 0.01;
  std::string order = "sequential";
  std::uint64_t seed = 0;
  std::string trace;
};

struct OracleArgs {
  std::string instance;
  int grid = 64;
};

struct ValidateArgs {
  std::string instance;
  std::string variant;  // empty = infer from the stored kind
  int probes = 32;
};

struct BenchArgs {
  std::string family;
  int n = 100;
  int trials = 20;
  std::uint64_t seed = 0;
  double epsilon = 0.01;
  std::string out;
  std::string csv;
  int threads = 0;
};

int do_gen(const GenArgs& args) {
  const bigreedy::Family family = parse_family(args.family);
  const auto obj = bigreedy::generate_instance(family, args.n, args.seed);
  bigreedy::save_instance(args.out, bigreedy::family_name(family), args.seed, *obj);
  std::cout << "wrote " << bigreedy::family_name(family) << " instance (n=" << args.n
            << ", seed=" << args.seed << ") to " << args.out << "\n";
  return 0;
}

int do_run(const RunArgs& args) {
  const bigreedy::StoredInstance inst = bigreedy::load_instance(args.instance);
  bigreedy::TrialReport report;
  bigreedy::Json trace;
  if (args.algo == "game") {
    bigreedy::RunConfig config;
    config.epsilon = args.epsilon;
    config.seed = args.seed;
    config.order = args.order == "random" ? bigreedy::CoordinateOrder::random
                                          : bigreedy::CoordinateOrder::sequential;
    config.record_trace = !args.trace.empty();
    const bigreedy::WeakRunResult result = bigreedy::run_weak_bigreedy(*inst.objective, config);
    report = result.report;
    if (!args.trace.empty()) trace = bigreedy::trace_to_json(result.trace);
  } else {
    const bigreedy::StrongRunResult result =
        bigreedy::run_strong_bigreedy(*inst.objective, args.epsilon, !args.trace.empty());
    report = result.report;
    if (!args.trace.empty()) trace = strong_trace_to_json(result.trace);
  }
  report.instance_seed = inst.seed;
  if (!args.trace.empty()) {
    bigreedy::write_text_file(args.trace, trace.dump(2) + "\n");
  }
  std::cout << bigreedy::report_to_json(report).dump(2) << "\n";
  return 0;
}

int do_oracle(const OracleArgs& args) {
  const bigreedy::StoredInstance inst = bigreedy::load_instance(args.instance);
  const bigreedy::GridOracleResult result = bigreedy::grid_oracle(*inst.objective, args.grid);
  bigreedy::Json j;
  j["schema"] = 1;
  j["resolution"] = args.grid;
  j["value"] = result.value;
  bigreedy::Json point = bigreedy::Json::array();
  for (int i = 0; i < result.point.size(); ++i) point.push_back(result.point[i]);
  j["point"] = std::move(point);
  j["evaluations"] = result.evaluations;
  std::cout << j.dump(2) << "\n";
  return 0;
}

int do_validate(const ValidateArgs& args) {
  const bigreedy::StoredInstance inst = bigreedy::load_instance(args.instance);
  bigreedy::Variant variant;
  if (args.variant.empty()) {
    const auto family = bigreedy::family_from_name(inst.kind);
    if (!family) throw std::runtime_error("instance kind has no default variant: " + inst.kind);
    variant = bigreedy::family_variant(*family);
  } else if (args.variant == "strong") {
    variant = bigreedy::Variant::strong;
  } else if (args.variant == "weak") {
    variant = bigreedy::Variant::weak;
  } else {
    throw CLI::ValidationError("--variant", "expected 'strong' or 'weak'");
  }
  const bigreedy::SubmodularityReport report =
      bigreedy::validate_submodularity(*inst.objective, variant, args.probes, inst.seed);
  std::cout << bigreedy::validation_to_json(report).dump(2) << "\n";
  return report.passed ? 0 : kExitValidation;
}

int do_bench(const BenchArgs& args) {
  bigreedy::ExperimentConfig config;
  config.family = parse_family(args.family);
  config.n = args.n;
  config.trials = args.trials;
  config.master_seed = args.seed;
  config.epsilon = args.epsilon;
  config.threads = args.threads;
  const bigreedy::ExperimentResult result = bigreedy::run_experiment(config);
  bigreedy::write_text_file(args.out, bigreedy::experiment_to_json(result).dump(2) + "\n");
  if (!args.csv.empty()) {
    bigreedy::write_text_file(args.csv, bigreedy::experiment_to_csv(result));
  }
  for (const auto& [name, stats] : result.summary) {
    std::cout << bigreedy::family_name(config.family) << " n=" << config.n << " " << name
              << ": mean=" << stats.mean << " median=" << stats.median << " q1=" << stats.q1
              << " q3=" << stats.q3 << "\n";
  }
  std::cout << "report written to " << args.out << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Bi-greedy maximizers for continuous submodular functions on the unit box"};
  app.require_subcommand(1);

  GenArgs gen_args;
  CLI::App* gen = app.add_subcommand("gen", "Generate a random instance and write it to JSON");
  gen->add_option("--family", gen_args.family, "nqp-strong, nqp-weak, or softmax")->required();
  gen->add_option("--n", gen_args.n, "dimension")->check(CLI::PositiveNumber);
  gen->add_option("--seed", gen_args.seed, "generator seed");
  gen->add_option("--out", gen_args.out, "output instance file")->required();

  RunArgs run_args;
  CLI::App* run = app.add_subcommand("run", "Run one optimizer on a stored instance");
  run->add_option("--instance", run_args.instance, "instance JSON file")->required();
  run->add_option("--algo", run_args.algo, "game (randomized) or binary (derivative bisection)")
      ->required()
      ->check(CLI::IsMember({"game", "binary"}));
  run->add_option("--epsilon", run_args.epsilon, "grid spacing / accuracy parameter");
  run->add_option("--order", run_args.order, "coordinate order for the game algorithm")
      ->check(CLI::IsMember({"sequential", "random"}));
  run->add_option("--seed", run_args.seed, "run seed for the game algorithm");
  run->add_option("--trace", run_args.trace, "write a per-coordinate trace to this file");

  OracleArgs oracle_args;
  CLI::App* oracle = app.add_subcommand("oracle", "Exhaustive lattice maximization (small n)");
  oracle->add_option("--instance", oracle_args.instance, "instance JSON file")->required();
  oracle->add_option("--grid", oracle_args.grid, "lattice resolution k")->check(CLI::PositiveNumber);

  ValidateArgs validate_args;
  CLI::App* validate = app.add_subcommand("validate", "Check the Hessian sign pattern");
  validate->add_option("--instance", validate_args.instance, "instance JSON file")->required();
  validate->add_option("--variant", validate_args.variant,
                       "strong or weak (default: the stored kind's variant)");
  validate->add_option("--probes", validate_args.probes, "number of random probe points")
      ->check(CLI::PositiveNumber);

  BenchArgs bench_args;
  CLI::App* bench = app.add_subcommand("bench", "Run the benchmark harness on one family");
  bench->add_option("--family", bench_args.family, "nqp-strong, nqp-weak, or softmax")->required();
  bench->add_option("--n", bench_args.n, "dimension")->check(CLI::PositiveNumber);
  bench->add_option("--trials", bench_args.trials, "number of trials")->check(CLI::PositiveNumber);
  bench->add_option("--seed", bench_args.seed, "master seed (trial t uses seed + t)");
  bench->add_option("--epsilon", bench_args.epsilon, "grid spacing / accuracy parameter");
  bench->add_option("--out", bench_args.out, "output report JSON")->required();
  bench->add_option("--csv", bench_args.csv, "also write per-trial rows as CSV");
  bench->add_option("--threads", bench_args.threads, "trial pool size (0 = OpenMP default)");

  try {
    app.parse(argc, argv);
    if (gen->parsed()) return do_gen(gen_args);
    if (run->parsed()) return do_run(run_args);
    if (oracle->parsed()) return do_oracle(oracle_args);
    if (validate->parsed()) return do_validate(validate_args);
    if (bench->parsed()) return do_bench(bench_args);
    return 1;
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  } catch (const bigreedy::ValidationFailure& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitValidation;
  } catch (const bigreedy::BudgetExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBudget;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
