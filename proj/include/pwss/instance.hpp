#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "pwss/types.hpp"
#include "pwss/workflow.hpp"

namespace pwss {

// A complete selection problem. Immutable by convention once built; solvers
// only ever take const references, so one instance can back many concurrent
// runs.
struct ProblemInstance {
  std::vector<QoSAttributeSpec> attributes;          // k entries
  std::vector<std::vector<CandidateService>> pools;  // pools[i] serves task i+1
  WorkflowNode workflow;
  std::vector<std::optional<double>> qc;  // length k; nullopt = unconstrained
  std::vector<InterserviceConstraint> dc;
  std::vector<InterserviceConstraint> cc;
  std::set<TransactionalProperty> tc;  // empty = unconstrained

  int task_count() const { return static_cast<int>(pools.size()); }
  int attribute_count() const { return static_cast<int>(attributes.size()); }

  // Linear scan; the solver keeps its own index for the hot path.
  const CandidateService* find_candidate(int task, const std::string& id) const;

  bool operator==(const ProblemInstance&) const = default;
};

// One chromosome plus its cached evaluation. genes[i] is a candidate id from
// pool i+1. The cached fields are a pure function of (instance, genes);
// Evaluator::evaluate is the only writer.
struct Individual {
  std::vector<std::string> genes;
  double composite_utility = 0.0;  // U'
  int qc_violations = 0;           // C
  int ic_violations = 0;           // V
  int tc_violated = 0;             // T, 0 or 1
  double fitness = 0.0;            // FF, in [0,1]

  bool feasible() const {
    return qc_violations == 0 && ic_violations == 0 && tc_violated == 0;
  }

  bool operator==(const Individual&) const = default;
};

// Structural validation. Returns human-readable findings; empty means the
// instance is safe to solve.
std::vector<std::string> validate_instance(const ProblemInstance& instance);

}  // namespace pwss
