#pragma once

#include <vector>

#include "pwss/instance.hpp"

namespace pwss {

// Attainable value ranges, per task and for the whole composite.
struct QoSBounds {
  // per_task_min[t][r]: minimum of attribute r over the pool of task t+1.
  std::vector<std::vector<double>> per_task_min;
  std::vector<std::vector<double>> per_task_max;
  // composite_*[r]: per-task extremes pushed through the workflow.
  std::vector<double> composite_min;
  std::vector<double> composite_max;
};

// Bottom-up aggregation of one attribute over the workflow tree.
// task_value[i-1] holds the value for task i.
double aggregate_attribute(const WorkflowNode& workflow,
                           const std::vector<double>& task_value,
                           AggregationKind kind);

QoSBounds compute_bounds(const ProblemInstance& instance);

// q'(CS) of an assignment, one entry per attribute. genes[i] names the
// selected candidate of pool i+1; unknown ids throw.
std::vector<double> aggregate_composite(const ProblemInstance& instance,
                                        const std::vector<std::string>& genes);

}  // namespace pwss
