#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "pwss/evaluate.hpp"
#include "pwss/rng.hpp"

namespace pwss {

enum class MutateFrom { Offsprings, Population };

struct Termination {
  enum class Kind { MaxEvaluations, Stagnation };
  Kind kind = Kind::Stagnation;
  std::uint64_t budget = 0;  // MaxEvaluations only
  int window = 15;           // Stagnation only

  static Termination max_evaluations(std::uint64_t budget) {
    return {Kind::MaxEvaluations, budget, 0};
  }
  static Termination stagnation(int window = 15) {
    return {Kind::Stagnation, 0, window};
  }
};

struct GAConfig {
  int population_size = 100;
  double crossover_rate = 0.90;
  double mutation_rate = 0.15;
  // Fraction of each pool kept by the ranking pre-reduction; 1.0 disables it
  // and yields the plain-GA baseline.
  double pareto_fraction = 0.2;
  MutateFrom mutate_from = MutateFrom::Offsprings;
  Termination termination = Termination::stagnation();
  std::uint64_t seed = 0;
};

struct RunResult {
  Individual best;
  double best_fitness = 0.0;
  std::uint64_t evaluations_used = 0;
  int iterations = 0;
  // Best-so-far series: one entry after initialization, then one per
  // iteration; size = iterations + 1.
  std::vector<double> per_iteration_best;
};

// Reduced candidate pools the GA draws genes from; pointers into the
// instance's pools, one inner vector per task.
using WorkingPools = std::vector<std::vector<const CandidateService*>>;

WorkingPools build_working_pools(const ProblemInstance& instance,
                                 const QoSBounds& bounds, double fraction);

// Number of crossover parents: even, 2*ceil(rate*n/2).
int crossover_parent_count(double crossover_rate, int population_size);
// Number of mutation parents: ceil(rate*n).
int mutation_parent_count(double mutation_rate, int population_size);

// Rank-based draw of `count` indices (with replacement) over a group with the
// given fitness values. Selection probability of the rank-r member among N is
// (N - r + 1) / sum of ranks; rank 1 is the fittest, ties keep insertion
// order.
std::vector<std::size_t> select_rank_based(const std::vector<double>& fitness,
                                           int count, Rng& rng);

std::vector<Individual> init_population(const Evaluator& eval,
                                        const WorkingPools& pools, int size,
                                        Rng& rng, EvalCounter& counter);

// Parents paired consecutively; each pair exchanges tails after a cut point
// in 1..n-1. Returns the evaluated offspring group Q(t).
std::vector<Individual> crossover_step(const Evaluator& eval,
                                       const std::vector<Individual>& population,
                                       int parent_count, Rng& rng,
                                       EvalCounter& counter);

// Parents drawn from `source` (offsprings, or the population when the
// offspring group is empty); one gene is redrawn uniformly from the working
// pool minus the current value. Returns the evaluated mutant group R(t).
std::vector<Individual> mutation_step(const Evaluator& eval,
                                      const std::vector<Individual>& source,
                                      const WorkingPools& pools,
                                      int parent_count, Rng& rng,
                                      EvalCounter& counter);

// Next generation from the merged P, Q, R: the best survives unconditionally,
// the rest are rank-based draws with replacement.
std::vector<Individual> replacement_step(const std::vector<Individual>& merged,
                                         int population_size, Rng& rng);

RunResult run_ga(const ProblemInstance& instance, const GAConfig& config);

}  // namespace pwss
