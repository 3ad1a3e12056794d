#pragma once

#include <cstdint>
#include <optional>

#include "pwss/evaluate.hpp"

namespace pwss {

struct OracleResult {
  Individual best;  // by fitness, ties by lexicographically smaller genes
  std::optional<Individual> best_feasible;
  std::uint64_t search_space = 0;  // product of pool sizes
};

// Exhaustive enumeration over the full (unreduced) pools. Refuses search
// spaces above `limit` by throwing std::runtime_error naming the size.
// `threads` > 1 splits the space into contiguous chunks; the merge is
// deterministic regardless of thread count.
OracleResult exhaustive_best(const ProblemInstance& instance,
                             std::uint64_t limit = 10'000'000, int threads = 1);

}  // namespace pwss
