#include "pwss/oracle.hpp"

#include <limits>
#include <stdexcept>
#include <thread>

namespace pwss {

namespace {

struct ChunkBest {
  bool any = false;
  Individual best;
  std::uint64_t best_index = 0;
  bool any_feasible = false;
  Individual best_feasible;
  std::uint64_t best_feasible_index = 0;
};

// Evaluates assignments with linear indices [begin, end). The index is a
// mixed-radix number over pool offsets, first task most significant, so index
// order is enumeration order and ties resolve to the earliest assignment.
ChunkBest scan_chunk(const Evaluator& eval, std::uint64_t begin,
                     std::uint64_t end) {
  const ProblemInstance& instance = eval.instance();
  const std::size_t n = instance.pools.size();
  std::vector<std::size_t> offset(n);
  std::uint64_t rest = begin;
  for (std::size_t t = n; t-- > 0;) {
    const std::uint64_t m = instance.pools[t].size();
    offset[t] = static_cast<std::size_t>(rest % m);
    rest /= m;
  }
  std::vector<std::string> genes(n);
  for (std::size_t t = 0; t < n; ++t)
    genes[t] = instance.pools[t][offset[t]].id;

  ChunkBest out;
  EvalCounter counter{0};
  for (std::uint64_t index = begin; index < end; ++index) {
    Individual x = eval.evaluate(genes, counter);
    if (!out.any || x.fitness > out.best.fitness) {
      out.any = true;
      out.best = x;
      out.best_index = index;
    }
    if (x.feasible() &&
        (!out.any_feasible ||
         x.composite_utility > out.best_feasible.composite_utility)) {
      out.any_feasible = true;
      out.best_feasible = std::move(x);
      out.best_feasible_index = index;
    }
    // Odometer increment, least significant digit last.
    for (std::size_t t = n; t-- > 0;) {
      ++offset[t];
      if (offset[t] < instance.pools[t].size()) {
        genes[t] = instance.pools[t][offset[t]].id;
        break;
      }
      offset[t] = 0;
      genes[t] = instance.pools[t].front().id;
    }
  }
  return out;
}

}  // namespace

OracleResult exhaustive_best(const ProblemInstance& instance,
                             std::uint64_t limit, int threads) {
  {
    const std::vector<std::string> issues = validate_instance(instance);
    if (!issues.empty())
      throw std::invalid_argument("invalid instance: " + issues.front());
  }

  std::uint64_t space = 1;
  bool saturated = false;
  for (const auto& pool : instance.pools) {
    const std::uint64_t m = pool.size();
    if (space > std::numeric_limits<std::uint64_t>::max() / m) {
      saturated = true;
      space = std::numeric_limits<std::uint64_t>::max();
      break;
    }
    space *= m;
  }
  if (saturated || space > limit)
    throw std::runtime_error(
        "search space of " + (saturated ? std::string("more than ") : "") +
        std::to_string(space) + " assignments exceeds the limit of " +
        std::to_string(limit));

  const Evaluator eval(instance);
  const std::uint64_t worker_count = std::min<std::uint64_t>(
      space, static_cast<std::uint64_t>(std::max(threads, 1)));
  std::vector<ChunkBest> results(worker_count);
  if (worker_count <= 1) {
    results[0] = scan_chunk(eval, 0, space);
  } else {
    std::vector<std::thread> workers;
    workers.reserve(worker_count);
    const std::uint64_t chunk = space / worker_count;
    const std::uint64_t extra = space % worker_count;
    std::uint64_t begin = 0;
    for (std::uint64_t w = 0; w < worker_count; ++w) {
      const std::uint64_t end = begin + chunk + (w < extra ? 1 : 0);
      workers.emplace_back([&eval, &results, w, begin, end] {
        results[w] = scan_chunk(eval, begin, end);
      });
      begin = end;
    }
    for (std::thread& t : workers) t.join();
  }

  OracleResult out;
  out.search_space = space;
  bool any = false;
  std::uint64_t best_index = 0;
  bool any_feasible = false;
  std::uint64_t best_feasible_index = 0;
  for (const ChunkBest& r : results) {
    if (r.any && (!any || r.best.fitness > out.best.fitness ||
                  (r.best.fitness == out.best.fitness &&
                   r.best_index < best_index))) {
      any = true;
      out.best = r.best;
      best_index = r.best_index;
    }
    if (r.any_feasible &&
        (!any_feasible ||
         r.best_feasible.composite_utility >
             out.best_feasible->composite_utility ||
         (r.best_feasible.composite_utility ==
              out.best_feasible->composite_utility &&
          r.best_feasible_index < best_feasible_index))) {
      any_feasible = true;
      out.best_feasible = r.best_feasible;
      best_feasible_index = r.best_feasible_index;
    }
  }
  return out;
}

}  // namespace pwss
