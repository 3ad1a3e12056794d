#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "pwss/bench.hpp"
#include "pwss/json_io.hpp"

namespace {

void write_text(const std::string& path, const std::string& text) {
  if (path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << text;
}

std::string qws_path_or_env(const std::string& flag_value) {
  if (!flag_value.empty()) return flag_value;
  if (const char* env = std::getenv("PWSS_QWS_PATH"); env && *env)
    return env;
  throw std::runtime_error(
      "no QWS dataset path given (use --qws or set PWSS_QWS_PATH)");
}

std::vector<pwss::AttributeConfig> attributes_from(const std::string& config) {
  return config.empty() ? pwss::default_qws_attributes()
                        : pwss::load_attribute_config(config);
}

std::set<pwss::TransactionalProperty> parse_tc(const std::string& text) {
  std::set<pwss::TransactionalProperty> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ','))
    if (!item.empty()) out.insert(pwss::tp_from_string(item));
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "QoS-aware service selection toolkit: a ranking-reduced genetic solver "
      "(gap2wss), its full-pool baseline (pga), a brute-force oracle, and an "
      "experiment workbench.\n"
      "The PWSS_QWS_PATH environment variable names the default QWS dataset "
      "location."};
  app.require_subcommand(1);

  // gen
  auto* gen = app.add_subcommand("gen", "Generate a problem instance");
  pwss::GeneratorSpec spec;
  std::string gen_tc, gen_source = "synthetic", gen_qws, gen_attr_config;
  std::string gen_out = "-";
  gen->add_option("--tasks", spec.n_tasks, "Number of tasks (multiple of 10)")
      ->capture_default_str();
  gen->add_option("--per-task", spec.m_per_task, "Candidates per task")
      ->capture_default_str();
  gen->add_option("--qc", spec.num_qc,
                  "Bound the first N attributes at the midpoint of their "
                  "attainable composite range")
      ->capture_default_str();
  gen->add_option("--ic", spec.num_ic, "Number of interservice constraints")
      ->capture_default_str();
  gen->add_option("--tc", gen_tc,
                  "Transactional constraint set, comma list from p,c,r,cr");
  gen->add_option("--source", gen_source, "QoS source: synthetic or qws")
      ->check(CLI::IsMember({"synthetic", "qws"}))
      ->capture_default_str();
  gen->add_option("--qws", gen_qws,
                  "QWS dataset path (implies --source qws; default "
                  "$PWSS_QWS_PATH)");
  gen->add_option("--attr-config", gen_attr_config,
                  "Attribute mapping JSON (default: built-in nine-attribute "
                  "QWS mapping)");
  gen->add_option("--seed", spec.seed, "Generator seed")->capture_default_str();
  gen->add_option("-o,--out", gen_out, "Output file, - for stdout")
      ->capture_default_str();

  // solve
  auto* solve = app.add_subcommand("solve", "Solve an instance");
  std::string solve_instance, solve_algo = "gap2wss", solve_mutate_from;
  std::string solve_out = "-";
  pwss::GAConfig ga;
  std::uint64_t solve_budget = 0;
  int solve_stagnation = 15;
  double solve_fraction = -1.0;
  solve->add_option("instance", solve_instance, "Instance file")->required();
  solve->add_option("--algo", solve_algo,
                    "gap2wss (ranking-reduced pools) or pga (full pools)")
      ->check(CLI::IsMember({"gap2wss", "pga"}))
      ->capture_default_str();
  solve->add_option("--seed", ga.seed, "Solver seed")->capture_default_str();
  auto* budget_opt = solve->add_option(
      "--budget", solve_budget, "Stop at this many fitness evaluations");
  solve
      ->add_option("--stagnation", solve_stagnation,
                   "Stop after this many iterations without improvement")
      ->capture_default_str()
      ->excludes(budget_opt);
  solve->add_option("--pop", ga.population_size, "Population size")
      ->capture_default_str();
  solve->add_option("--pc", ga.crossover_rate, "Crossover rate")
      ->capture_default_str();
  solve->add_option("--pm", ga.mutation_rate, "Mutation rate")
      ->capture_default_str();
  solve->add_option("--fraction", solve_fraction,
                    "Working-pool fraction override (default: 0.2 for "
                    "gap2wss, 1.0 for pga)");
  solve
      ->add_option("--mutate-from", solve_mutate_from,
                   "Mutation parent group: offsprings or population")
      ->check(CLI::IsMember({"offsprings", "population"}));
  solve->add_option("-o,--out", solve_out, "Output file, - for stdout")
      ->capture_default_str();

  // oracle
  auto* oracle = app.add_subcommand(
      "oracle", "Enumerate every assignment of a small instance");
  std::string oracle_instance, oracle_out = "-";
  std::uint64_t oracle_limit = 10'000'000;
  int oracle_threads = 1;
  oracle->add_option("instance", oracle_instance, "Instance file")->required();
  oracle->add_option("--limit", oracle_limit, "Refuse larger search spaces")
      ->capture_default_str();
  oracle->add_option("--threads", oracle_threads, "Worker threads")
      ->capture_default_str();
  oracle->add_option("-o,--out", oracle_out, "Output file, - for stdout")
      ->capture_default_str();

  // bench
  auto* bench = app.add_subcommand("bench", "Run experiment suites");
  std::string bench_suite = "all", bench_scale = "desk", bench_qws;
  std::string bench_source = "synthetic", bench_out = "-";
  int bench_runs = 10, bench_threads = 1;
  std::uint64_t bench_seed = 1;
  bench->add_option("--suite", bench_suite,
                    "tasks, candidates, qc, ic, tc, or all")
      ->check(CLI::IsMember({"tasks", "candidates", "qc", "ic", "tc", "all"}))
      ->capture_default_str();
  bench->add_option("--runs", bench_runs, "Recorded runs per algorithm")
      ->capture_default_str();
  bench->add_option("--scale", bench_scale, "desk (minutes) or paper (hours)")
      ->check(CLI::IsMember({"desk", "paper"}))
      ->capture_default_str();
  bench->add_option("--seed", bench_seed, "Suite seed")->capture_default_str();
  bench
      ->add_option("--threads", bench_threads,
                   "Worker threads (thread count never changes results)")
      ->capture_default_str();
  bench->add_option("--source", bench_source, "QoS source: synthetic or qws")
      ->check(CLI::IsMember({"synthetic", "qws"}))
      ->capture_default_str();
  bench->add_option("--qws", bench_qws,
                    "QWS dataset path (implies --source qws; default "
                    "$PWSS_QWS_PATH)");
  bench->add_option("-o,--out", bench_out, "CSV output file, - for stdout")
      ->capture_default_str();

  // ingest-qws
  auto* ingest = app.add_subcommand(
      "ingest-qws", "Parse a QWS-style CSV into a normalized service file");
  std::string ingest_in, ingest_attr_config, ingest_out = "-";
  ingest->add_option("input", ingest_in,
                     "QWS CSV file (default $PWSS_QWS_PATH)");
  ingest->add_option("--attr-config", ingest_attr_config,
                     "Attribute mapping JSON");
  ingest->add_option("-o,--out", ingest_out, "Output file, - for stdout")
      ->capture_default_str();

  CLI11_PARSE(app, argc, argv);

  try {
    if (*gen) {
      spec.tc = parse_tc(gen_tc);
      if (!gen_qws.empty()) gen_source = "qws";
      if (gen_source == "qws") {
        spec.source = pwss::QoSSource::Qws;
        spec.qws_path = qws_path_or_env(gen_qws);
      }
      const pwss::ProblemInstance instance =
          pwss::generate_instance(spec, attributes_from(gen_attr_config));
      write_text(gen_out, pwss::instance_to_json(instance).dump(2) + "\n");
    } else if (*solve) {
      const pwss::ProblemInstance instance =
          pwss::load_instance(solve_instance);
      ga.pareto_fraction = solve_algo == "gap2wss" ? 0.2 : 1.0;
      if (solve_fraction > 0.0) ga.pareto_fraction = solve_fraction;
      if (!solve_mutate_from.empty())
        ga.mutate_from = solve_mutate_from == "population"
                             ? pwss::MutateFrom::Population
                             : pwss::MutateFrom::Offsprings;
      ga.termination = budget_opt->count() > 0
                           ? pwss::Termination::max_evaluations(solve_budget)
                           : pwss::Termination::stagnation(solve_stagnation);
      const pwss::RunResult result = pwss::run_ga(instance, ga);
      write_text(solve_out,
                 pwss::solution_to_json_text(instance, result.best,
                                             result.evaluations_used, ga.seed));
    } else if (*oracle) {
      const pwss::ProblemInstance instance =
          pwss::load_instance(oracle_instance);
      const pwss::OracleResult result =
          pwss::exhaustive_best(instance, oracle_limit, oracle_threads);
      write_text(oracle_out,
                 pwss::oracle_to_json(instance, result).dump(2) + "\n");
    } else if (*bench) {
      std::vector<std::string> names;
      if (bench_suite == "all") names = pwss::suite_names();
      else names.push_back(bench_suite);
      const bool use_qws = !bench_qws.empty() || bench_source == "qws";
      std::vector<pwss::SuiteRow> rows;
      for (const std::string& name : names) {
        pwss::SuiteSpec suite = pwss::make_suite(
            name, bench_scale == "paper" ? pwss::BenchScale::Paper
                                         : pwss::BenchScale::Desk,
            bench_runs, bench_seed);
        if (use_qws) {
          const std::string path = qws_path_or_env(bench_qws);
          for (pwss::SuiteProblem& problem : suite.problems) {
            problem.spec.source = pwss::QoSSource::Qws;
            problem.spec.qws_path = path;
          }
        }
        std::vector<pwss::SuiteRow> part = pwss::run_suite(suite, bench_threads);
        rows.insert(rows.end(), part.begin(), part.end());
      }
      std::ostringstream csv;
      pwss::write_csv(rows, csv);
      write_text(bench_out, csv.str());
    } else if (*ingest) {
      const std::vector<pwss::AttributeConfig> attributes =
          attributes_from(ingest_attr_config);
      const pwss::QwsDataset dataset =
          pwss::ingest_qws(qws_path_or_env(ingest_in), attributes);
      pwss::json j;
      j["attributes"] = pwss::json::array();
      for (const pwss::AttributeConfig& attr : attributes)
        j["attributes"].push_back(
            {{"name", attr.spec.name},
             {"direction", pwss::to_string(attr.spec.direction)},
             {"aggregation", pwss::to_string(attr.spec.aggregation)},
             {"unit", attr.spec.unit}});
      j["services"] = pwss::json::array();
      for (const pwss::QwsService& svc : dataset.services)
        j["services"].push_back({{"name", svc.name}, {"qos", svc.qos}});
      write_text(ingest_out, j.dump(2) + "\n");
      std::cerr << dataset.services.size() << " services ingested, "
                << dataset.skipped << " rows skipped\n";
      for (const std::string& warning : dataset.warnings)
        std::cerr << "warning: " << warning << "\n";
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
