#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "pwss/ga.hpp"
#include "pwss/generate.hpp"

namespace pwss {

// Paper-scale suites take hours; desk scale keeps the same shape at sizes
// that finish on a workstation.
enum class BenchScale { Desk, Paper };

struct SuiteProblem {
  std::string param_name;
  double param_value = 0.0;
  GeneratorSpec spec;
};

struct SuiteSpec {
  std::string name;
  std::vector<SuiteProblem> problems;
  int runs = 10;
  std::uint64_t seed = 0;  // base of every per-run stream
  std::vector<AttributeConfig> attributes;
};

// Known suites: tasks, candidates, qc, ic, tc.
SuiteSpec make_suite(const std::string& name, BenchScale scale, int runs,
                     std::uint64_t seed);
std::vector<std::string> suite_names();

struct SuiteRow {
  std::string suite;
  std::string param_name;
  double param_value = 0.0;
  std::string algorithm;
  int runs = 0;
  double mean_fitness = 0.0;
  double std_fitness = 0.0;
  double mean_evals = 0.0;
  double mean_ms = 0.0;
};

// Per problem: one pool-reduced run under stagnation fixes the evaluation
// budget, then both algorithms are re-run `runs` times under exactly that
// budget. Rows come in pairs (gap2wss, pga) whose mean_evals are identical by
// construction; a mismatch throws. `threads` parallelises across runs with a
// deterministic result.
std::vector<SuiteRow> run_suite(const SuiteSpec& suite, int threads = 1);

void write_csv(const std::vector<SuiteRow>& rows, std::ostream& out);
void write_csv(const std::vector<SuiteRow>& rows, const std::string& path);

}  // namespace pwss
