// Suite construction, the paired budget protocol, and CSV emission.

#include <doctest.h>

#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "pwss/bench.hpp"

using namespace pwss;

namespace {

SuiteSpec micro_suite() {
  SuiteSpec suite;
  suite.name = "micro";
  suite.runs = 2;
  suite.seed = 5;
  suite.attributes = default_qws_attributes();

  GeneratorSpec plain;
  plain.n_tasks = 10;
  plain.m_per_task = 3;
  plain.seed = 123;
  suite.problems.push_back({"n_tasks", 10.0, plain});

  GeneratorSpec constrained = plain;
  constrained.seed = 124;
  constrained.num_qc = 2;
  constrained.tc = {TransactionalProperty::Compensatable,
                    TransactionalProperty::CompensatableRetriable};
  suite.problems.push_back({"n_tasks", 10.0, constrained});
  return suite;
}

}  // namespace

TEST_CASE("the five stock suites have the expected sweep shapes") {
  for (const BenchScale scale : {BenchScale::Desk, BenchScale::Paper}) {
    const bool paper = scale == BenchScale::Paper;

    const SuiteSpec tasks = make_suite("tasks", scale, 10, 1);
    REQUIRE(tasks.problems.size() == 10);
    CHECK(tasks.problems[0].spec.n_tasks == 10);
    CHECK(tasks.problems[9].spec.n_tasks == 100);
    CHECK(tasks.problems[0].param_name == "n_tasks");
    for (const SuiteProblem& p : tasks.problems)
      CHECK(p.spec.m_per_task == (paper ? 500 : 50));

    const SuiteSpec candidates = make_suite("candidates", scale, 10, 1);
    REQUIRE(candidates.problems.size() == 10);
    CHECK(candidates.problems[0].spec.m_per_task == (paper ? 100 : 20));
    CHECK(candidates.problems[9].spec.m_per_task == (paper ? 1000 : 200));
    for (const SuiteProblem& p : candidates.problems)
      CHECK(p.spec.n_tasks == (paper ? 50 : 20));

    const SuiteSpec qc = make_suite("qc", scale, 10, 1);
    REQUIRE(qc.problems.size() == 10);
    for (int q = 0; q < 10; ++q) {
      CHECK(qc.problems[static_cast<std::size_t>(q)].spec.num_qc == q);
      CHECK(qc.problems[static_cast<std::size_t>(q)].param_value == q);
    }

    const SuiteSpec ic = make_suite("ic", scale, 10, 1);
    REQUIRE(ic.problems.size() == 11);
    CHECK(ic.problems[0].spec.num_ic == 0);
    CHECK(ic.problems[10].spec.num_ic == (paper ? 5000 : 500));

    const SuiteSpec tc = make_suite("tc", scale, 10, 1);
    REQUIRE(tc.problems.size() == 5);
    for (int z = 0; z <= 4; ++z) {
      CHECK(tc.problems[static_cast<std::size_t>(z)].spec.tc.size() ==
            static_cast<std::size_t>(z));
      CHECK(tc.problems[static_cast<std::size_t>(z)].param_value == z);
    }
  }
}

TEST_CASE("problem seeds differ across a sweep") {
  const SuiteSpec tasks = make_suite("tasks", BenchScale::Desk, 10, 1);
  CHECK(tasks.problems[0].spec.seed != tasks.problems[1].spec.seed);
  CHECK(tasks.problems[1].spec.seed != tasks.problems[2].spec.seed);

  // The same suite under another base seed moves every problem seed.
  const SuiteSpec other = make_suite("tasks", BenchScale::Desk, 10, 2);
  CHECK(tasks.problems[0].spec.seed != other.problems[0].spec.seed);
}

TEST_CASE("unknown suites and non-positive runs are rejected") {
  CHECK_THROWS_AS(make_suite("latency", BenchScale::Desk, 10, 1),
                  std::invalid_argument);
  CHECK_THROWS_AS(make_suite("tasks", BenchScale::Desk, 0, 1),
                  std::invalid_argument);
  CHECK(suite_names() ==
        std::vector<std::string>{"tasks", "candidates", "qc", "ic", "tc"});
}

TEST_CASE("a suite run emits paired rows under one budget") {
  const std::vector<SuiteRow> rows = run_suite(micro_suite(), 2);
  REQUIRE(rows.size() == 4);
  for (std::size_t p = 0; p < 2; ++p) {
    const SuiteRow& gap = rows[2 * p];
    const SuiteRow& pga = rows[2 * p + 1];
    CHECK(gap.algorithm == "gap2wss");
    CHECK(pga.algorithm == "pga");
    CHECK(gap.suite == "micro");
    CHECK(gap.runs == 2);
    CHECK(gap.mean_evals == pga.mean_evals);
    CHECK(gap.mean_evals > 0.0);
    CHECK(gap.mean_fitness > 0.0);
    CHECK(gap.mean_fitness <= 1.0);
    CHECK(gap.std_fitness >= 0.0);
    CHECK(gap.mean_ms >= 0.0);
  }
}

TEST_CASE("thread count changes nothing but the clock") {
  const SuiteSpec suite = micro_suite();
  const std::vector<SuiteRow> one = run_suite(suite, 1);
  const std::vector<SuiteRow> four = run_suite(suite, 4);
  REQUIRE(one.size() == four.size());
  for (std::size_t i = 0; i < one.size(); ++i) {
    CHECK(one[i].algorithm == four[i].algorithm);
    CHECK(one[i].mean_fitness == four[i].mean_fitness);
    CHECK(one[i].std_fitness == four[i].std_fitness);
    CHECK(one[i].mean_evals == four[i].mean_evals);
  }
}

TEST_CASE("CSV output carries the exact header and one line per row") {
  const SuiteSpec suite = micro_suite();
  const std::vector<SuiteRow> rows = run_suite(suite, 2);
  std::ostringstream out;
  write_csv(rows, out);

  std::istringstream in(out.str());
  std::string line;
  REQUIRE(std::getline(in, line));
  CHECK(line ==
        "suite,param_name,param_value,algorithm,runs,mean_fitness,"
        "std_fitness,mean_evals,mean_ms");
  int data_lines = 0;
  while (std::getline(in, line)) {
    ++data_lines;
    CHECK(line.find("micro,n_tasks,10,") == 0);
    int commas = 0;
    for (char c : line) commas += c == ',' ? 1 : 0;
    CHECK(commas == 8);
  }
  CHECK(data_lines == 4);
}
