#pragma once

#include <string>

#include "pwss/ga.hpp"
#include "pwss/oracle.hpp"

#include <nlohmann/json.hpp>

namespace pwss {

// Field order is part of the on-disk contract, hence ordered_json throughout.
using json = nlohmann::ordered_json;

json instance_to_json(const ProblemInstance& instance);
ProblemInstance instance_from_json(const json& j);

ProblemInstance load_instance(const std::string& path);
void save_instance(const ProblemInstance& instance, const std::string& path);

// Solver result in the exact published shape:
// genes, qos, tp, fitness, feasible, violations{C,V,T}, evaluations, seed.
json solution_to_json(const ProblemInstance& instance, const Individual& best,
                      std::uint64_t evaluations, std::uint64_t seed);
std::string solution_to_json_text(const ProblemInstance& instance,
                                  const Individual& best,
                                  std::uint64_t evaluations,
                                  std::uint64_t seed);

json oracle_to_json(const ProblemInstance& instance, const OracleResult& result);

}  // namespace pwss
