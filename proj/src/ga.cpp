#include "pwss/ga.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "util.hpp"

namespace pwss {

WorkingPools build_working_pools(const ProblemInstance& instance,
                                 const QoSBounds& bounds, double fraction) {
  WorkingPools pools(instance.pools.size());
  for (int task = 1; task <= instance.task_count(); ++task) {
    const auto& pool = instance.pools[static_cast<std::size_t>(task) - 1];
    const std::vector<ScoreCard> cards =
        score_and_rank_pool(instance, bounds, task);
    const std::vector<std::size_t> kept = reduce_pool(pool, cards, fraction);
    auto& working = pools[static_cast<std::size_t>(task) - 1];
    working.reserve(kept.size());
    for (std::size_t offset : kept) working.push_back(&pool[offset]);
  }
  return pools;
}

int crossover_parent_count(double crossover_rate, int population_size) {
  return 2 * detail::ceil_count(crossover_rate * population_size / 2.0);
}

int mutation_parent_count(double mutation_rate, int population_size) {
  return detail::ceil_count(mutation_rate * population_size);
}

std::vector<std::size_t> select_rank_based(const std::vector<double>& fitness,
                                           int count, Rng& rng) {
  const std::size_t n = fitness.size();
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  // Stable sort by fitness descending keeps insertion order on ties.
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return fitness[a] > fitness[b];
  });
  // Integer weights N-r+1 per member, cumulated in insertion order so draws
  // are exact categorical samples with no floating-point rounding.
  std::vector<std::uint64_t> weight(n);
  for (std::size_t pos = 0; pos < n; ++pos)
    weight[order[pos]] = n - pos;  // rank pos+1 gets weight n-(pos+1)+1
  std::vector<std::uint64_t> cumulative(n);
  std::uint64_t total = 0;
  for (std::size_t i = 0; i < n; ++i) {
    total += weight[i];
    cumulative[i] = total;
  }
  std::vector<std::size_t> out;
  out.reserve(static_cast<std::size_t>(count));
  for (int d = 0; d < count; ++d) {
    const std::uint64_t ticket = rng.index(total);
    const auto it =
        std::upper_bound(cumulative.begin(), cumulative.end(), ticket);
    out.push_back(static_cast<std::size_t>(it - cumulative.begin()));
  }
  return out;
}

std::vector<Individual> init_population(const Evaluator& eval,
                                        const WorkingPools& pools, int size,
                                        Rng& rng, EvalCounter& counter) {
  const std::size_t n = pools.size();
  std::vector<Individual> population;
  population.reserve(static_cast<std::size_t>(size));
  std::vector<std::string> genes(n);
  for (int i = 0; i < size; ++i) {
    for (std::size_t t = 0; t < n; ++t)
      genes[t] = pools[t][rng.index(pools[t].size())]->id;
    population.push_back(eval.evaluate(genes, counter));
  }
  return population;
}

namespace {

std::vector<double> fitness_of(const std::vector<Individual>& group) {
  std::vector<double> out;
  out.reserve(group.size());
  for (const Individual& x : group) out.push_back(x.fitness);
  return out;
}

}  // namespace

std::vector<Individual> crossover_step(const Evaluator& eval,
                                       const std::vector<Individual>& population,
                                       int parent_count, Rng& rng,
                                       EvalCounter& counter) {
  const std::size_t n = population.front().genes.size();
  if (n < 2 || parent_count < 2) return {};
  const std::vector<std::size_t> parents =
      select_rank_based(fitness_of(population), parent_count, rng);
  std::vector<Individual> offsprings;
  offsprings.reserve(parents.size());
  std::vector<std::string> child1(n), child2(n);
  for (std::size_t pair = 0; pair + 1 < parents.size(); pair += 2) {
    const std::vector<std::string>& x = population[parents[pair]].genes;
    const std::vector<std::string>& y = population[parents[pair + 1]].genes;
    const std::size_t cut =
        static_cast<std::size_t>(rng.uniform_int(1, static_cast<int>(n) - 1));
    for (std::size_t g = 0; g < n; ++g) {
      child1[g] = g < cut ? x[g] : y[g];
      child2[g] = g < cut ? y[g] : x[g];
    }
    offsprings.push_back(eval.evaluate(child1, counter));
    offsprings.push_back(eval.evaluate(child2, counter));
  }
  return offsprings;
}

std::vector<Individual> mutation_step(const Evaluator& eval,
                                      const std::vector<Individual>& source,
                                      const WorkingPools& pools,
                                      int parent_count, Rng& rng,
                                      EvalCounter& counter) {
  if (source.empty() || parent_count < 1) return {};
  const std::vector<std::size_t> parents =
      select_rank_based(fitness_of(source), parent_count, rng);
  std::vector<Individual> mutants;
  mutants.reserve(parents.size());
  for (std::size_t p : parents) {
    std::vector<std::string> genes = source[p].genes;
    const std::size_t t =
        static_cast<std::size_t>(rng.uniform_int(1, static_cast<int>(genes.size()))) - 1;
    const auto& pool = pools[t];
    if (pool.size() > 1) {
      // Uniform over the pool minus the current gene: draw over size-1 slots
      // and skip past the current one. A gene from outside the pool excludes
      // nothing, so the draw covers the whole pool.
      std::size_t current = 0;
      while (current < pool.size() && pool[current]->id != genes[t]) ++current;
      if (current == pool.size()) {
        genes[t] = pool[rng.index(pool.size())]->id;
      } else {
        std::size_t pick = rng.index(pool.size() - 1);
        if (pick >= current) ++pick;
        genes[t] = pool[pick]->id;
      }
    }
    mutants.push_back(eval.evaluate(genes, counter));
  }
  return mutants;
}

std::vector<Individual> replacement_step(const std::vector<Individual>& merged,
                                         int population_size, Rng& rng) {
  std::vector<double> fitness = fitness_of(merged);
  std::size_t best = 0;
  for (std::size_t i = 1; i < merged.size(); ++i)
    if (fitness[i] > fitness[best]) best = i;
  std::vector<Individual> next;
  next.reserve(static_cast<std::size_t>(population_size));
  next.push_back(merged[best]);
  const std::vector<std::size_t> drawn =
      select_rank_based(fitness, population_size - 1, rng);
  for (std::size_t i : drawn) next.push_back(merged[i]);
  return next;
}

RunResult run_ga(const ProblemInstance& instance, const GAConfig& config) {
  {
    const std::vector<std::string> issues = validate_instance(instance);
    if (!issues.empty())
      throw std::invalid_argument("invalid instance: " + issues.front());
  }
  if (config.population_size < 2)
    throw std::invalid_argument("population size must be at least 2");
  if (config.crossover_rate < 0.0 || config.crossover_rate > 1.0 ||
      config.mutation_rate < 0.0 || config.mutation_rate > 1.0)
    throw std::invalid_argument("operator rates must lie in [0,1]");

  const Evaluator eval(instance);
  const WorkingPools pools =
      build_working_pools(instance, eval.bounds(), config.pareto_fraction);
  Rng rng(config.seed);
  EvalCounter counter{0};

  std::vector<Individual> population =
      init_population(eval, pools, config.population_size, rng, counter);

  RunResult result;
  std::size_t best = 0;
  for (std::size_t i = 1; i < population.size(); ++i)
    if (population[i].fitness > population[best].fitness) best = i;
  result.best = population[best];
  result.best_fitness = result.best.fitness;
  result.per_iteration_best.push_back(result.best_fitness);

  const int n_c =
      crossover_parent_count(config.crossover_rate, config.population_size);
  const int n_m =
      mutation_parent_count(config.mutation_rate, config.population_size);

  int stagnant = 0;
  const auto done = [&] {
    if (config.termination.kind == Termination::Kind::MaxEvaluations)
      return counter.load() >= config.termination.budget;
    return stagnant >= config.termination.window;
  };

  while (!done()) {
    std::vector<Individual> offsprings =
        crossover_step(eval, population, n_c, rng, counter);
    const std::vector<Individual>& mutation_source =
        (config.mutate_from == MutateFrom::Offsprings && !offsprings.empty())
            ? offsprings
            : population;
    std::vector<Individual> mutants =
        mutation_step(eval, mutation_source, pools, n_m, rng, counter);

    std::vector<Individual> merged = std::move(population);
    merged.reserve(merged.size() + offsprings.size() + mutants.size());
    std::move(offsprings.begin(), offsprings.end(), std::back_inserter(merged));
    std::move(mutants.begin(), mutants.end(), std::back_inserter(merged));

    population = replacement_step(merged, config.population_size, rng);
    ++result.iterations;

    // population.front() is the elite, the best of the merged groups.
    const Individual& elite = population.front();
    if (elite.fitness > result.best_fitness + 1e-12)
      stagnant = 0;
    else
      ++stagnant;
    if (elite.fitness > result.best_fitness) {
      result.best = elite;
      result.best_fitness = elite.fitness;
    }
    result.per_iteration_best.push_back(result.best_fitness);
  }

  result.evaluations_used = counter.load();
  return result;
}

}  // namespace pwss
