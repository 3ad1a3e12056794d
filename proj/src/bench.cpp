#include "pwss/bench.hpp"

#include <atomic>
#include <chrono>
#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace pwss {

std::vector<std::string> suite_names() {
  return {"tasks", "candidates", "qc", "ic", "tc"};
}

namespace {

GeneratorSpec base_spec(int n, int m, std::uint64_t seed) {
  GeneratorSpec spec;
  spec.n_tasks = n;
  spec.m_per_task = m;
  spec.seed = seed;
  return spec;
}

// Deterministic subset of the four transactional properties, drawn once per
// problem from the suite seed.
std::set<TransactionalProperty> tc_subset(int size, std::uint64_t seed) {
  std::vector<TransactionalProperty> all = {
      TransactionalProperty::Pivot, TransactionalProperty::Compensatable,
      TransactionalProperty::Retriable,
      TransactionalProperty::CompensatableRetriable};
  Rng rng(seed);
  for (std::size_t i = all.size() - 1; i > 0; --i)
    std::swap(all[i], all[rng.index(i + 1)]);
  return {all.begin(), all.begin() + size};
}

}  // namespace

SuiteSpec make_suite(const std::string& name, BenchScale scale, int runs,
                     std::uint64_t seed) {
  if (runs < 1) throw std::invalid_argument("runs must be positive");
  SuiteSpec suite;
  suite.name = name;
  suite.runs = runs;
  suite.seed = seed;
  suite.attributes = default_qws_attributes();
  const bool paper = scale == BenchScale::Paper;

  const auto problem_seed = [seed](int index) {
    return derive_seed(seed, {0x70726f62ULL, static_cast<std::uint64_t>(index)});
  };

  if (name == "tasks") {
    const int m = paper ? 500 : 50;
    for (int n = 10, index = 0; n <= 100; n += 10, ++index)
      suite.problems.push_back(
          {"n_tasks", static_cast<double>(n), base_spec(n, m, problem_seed(index))});
  } else if (name == "candidates") {
    const int n = paper ? 50 : 20;
    const int lo = paper ? 100 : 20;
    const int hi = paper ? 1000 : 200;
    const int step = paper ? 100 : 20;
    for (int m = lo, index = 0; m <= hi; m += step, ++index)
      suite.problems.push_back({"m_per_task", static_cast<double>(m),
                                base_spec(n, m, problem_seed(index))});
  } else if (name == "qc") {
    const int n = paper ? 50 : 20;
    const int m = paper ? 500 : 50;
    const int k = static_cast<int>(suite.attributes.size());
    for (int q = 0; q <= std::min(9, k); ++q) {
      GeneratorSpec spec = base_spec(n, m, problem_seed(q));
      spec.num_qc = q;
      suite.problems.push_back({"num_qc", static_cast<double>(q), spec});
    }
  } else if (name == "ic") {
    const int n = paper ? 50 : 20;
    const int m = paper ? 500 : 50;
    const int hi = paper ? 5000 : 500;
    const int step = paper ? 500 : 50;
    for (int c = 0, index = 0; c <= hi; c += step, ++index) {
      GeneratorSpec spec = base_spec(n, m, problem_seed(index));
      spec.num_ic = c;
      suite.problems.push_back({"num_ic", static_cast<double>(c), spec});
    }
  } else if (name == "tc") {
    const int n = paper ? 50 : 20;
    const int m = paper ? 500 : 50;
    for (int z = 0; z <= 4; ++z) {
      GeneratorSpec spec = base_spec(n, m, problem_seed(z));
      spec.tc = tc_subset(
          z, derive_seed(seed, {0x7463ULL, static_cast<std::uint64_t>(z)}));
      suite.problems.push_back({"tc_size", static_cast<double>(z), spec});
    }
  } else {
    throw std::invalid_argument("unknown suite: " + name);
  }
  return suite;
}

namespace {

struct RunSlot {
  GAConfig config;
  double fitness = 0.0;
  std::uint64_t evaluations = 0;
  double ms = 0.0;
};

// Executes every slot's run, work-stealing over a shared index; results land
// in preallocated slots so thread count never changes the output.
void run_slots(const ProblemInstance& instance, std::vector<RunSlot>& slots,
               int threads) {
  std::atomic<std::size_t> next{0};
  const auto worker = [&] {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= slots.size()) return;
      const auto start = std::chrono::steady_clock::now();
      const RunResult result = run_ga(instance, slots[i].config);
      const auto stop = std::chrono::steady_clock::now();
      slots[i].fitness = result.best_fitness;
      slots[i].evaluations = result.evaluations_used;
      slots[i].ms =
          std::chrono::duration<double, std::milli>(stop - start).count();
    }
  };
  const int workers = std::max(1, std::min<int>(threads, static_cast<int>(slots.size())));
  if (workers == 1) {
    worker();
    return;
  }
  std::vector<std::thread> group;
  group.reserve(static_cast<std::size_t>(workers));
  for (int w = 0; w < workers; ++w) group.emplace_back(worker);
  for (std::thread& t : group) t.join();
}

}  // namespace

std::vector<SuiteRow> run_suite(const SuiteSpec& suite, int threads) {
  const char* algo_name[2] = {"gap2wss", "pga"};
  const double algo_fraction[2] = {0.2, 1.0};
  std::vector<SuiteRow> rows;

  for (std::size_t pi = 0; pi < suite.problems.size(); ++pi) {
    const SuiteProblem& problem = suite.problems[pi];
    const ProblemInstance instance =
        generate_instance(problem.spec, suite.attributes);

    // One pool-reduced run to stagnation fixes this problem's budget; both
    // algorithms then get exactly that many evaluations per recorded run.
    GAConfig probe;
    probe.pareto_fraction = 0.2;
    probe.termination = Termination::stagnation();
    probe.seed = derive_seed(suite.seed, {pi, 2, 0});
    const std::uint64_t budget = run_ga(instance, probe).evaluations_used;

    std::vector<RunSlot> slots(2 * static_cast<std::size_t>(suite.runs));
    for (int a = 0; a < 2; ++a)
      for (int r = 0; r < suite.runs; ++r) {
        GAConfig config;
        config.pareto_fraction = algo_fraction[a];
        config.termination = Termination::max_evaluations(budget);
        config.seed = derive_seed(
            suite.seed, {pi, static_cast<std::uint64_t>(a),
                         static_cast<std::uint64_t>(r)});
        slots[static_cast<std::size_t>(a) * static_cast<std::size_t>(suite.runs) +
              static_cast<std::size_t>(r)]
            .config = config;
      }
    run_slots(instance, slots, threads);

    for (const RunSlot& slot : slots)
      if (slot.evaluations != budget)
        throw std::logic_error("budget fairness broken: run consumed " +
                               std::to_string(slot.evaluations) + " of " +
                               std::to_string(budget));

    for (int a = 0; a < 2; ++a) {
      double mean = 0.0;
      double ms = 0.0;
      for (int r = 0; r < suite.runs; ++r) {
        const RunSlot& slot =
            slots[static_cast<std::size_t>(a) * static_cast<std::size_t>(suite.runs) +
                  static_cast<std::size_t>(r)];
        mean += slot.fitness;
        ms += slot.ms;
      }
      mean /= suite.runs;
      ms /= suite.runs;
      double var = 0.0;
      for (int r = 0; r < suite.runs; ++r) {
        const double d =
            slots[static_cast<std::size_t>(a) * static_cast<std::size_t>(suite.runs) +
                  static_cast<std::size_t>(r)]
                .fitness -
            mean;
        var += d * d;
      }
      var = suite.runs > 1 ? var / (suite.runs - 1) : 0.0;

      SuiteRow row;
      row.suite = suite.name;
      row.param_name = problem.param_name;
      row.param_value = problem.param_value;
      row.algorithm = algo_name[a];
      row.runs = suite.runs;
      row.mean_fitness = mean;
      row.std_fitness = std::sqrt(var);
      row.mean_evals = static_cast<double>(budget);
      row.mean_ms = ms;
      rows.push_back(std::move(row));
    }
  }
  return rows;
}

void write_csv(const std::vector<SuiteRow>& rows, std::ostream& out) {
  out << "suite,param_name,param_value,algorithm,runs,mean_fitness,"
         "std_fitness,mean_evals,mean_ms\n";
  for (const SuiteRow& row : rows) {
    std::ostringstream line;
    line.precision(6);
    line << std::fixed;
    line << row.suite << ',' << row.param_name << ',';
    // param_value is integral in every suite.
    line << static_cast<long long>(row.param_value) << ',' << row.algorithm
         << ',' << row.runs << ',' << row.mean_fitness << ','
         << row.std_fitness << ',';
    line.precision(1);
    line << row.mean_evals << ',';
    line.precision(3);
    line << row.mean_ms << '\n';
    out << line.str();
  }
}

void write_csv(const std::vector<SuiteRow>& rows, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  write_csv(rows, out);
}

}  // namespace pwss
