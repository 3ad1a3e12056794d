#include "pwss/aggregate.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace pwss {

namespace {

double aggregate_node(const WorkflowNode& node,
                      const std::vector<double>& task_value,
                      AggregationKind kind) {
  using Kind = WorkflowNode::Kind;
  using Agg = AggregationKind;
  switch (node.kind) {
    case Kind::Task: {
      const std::size_t i = static_cast<std::size_t>(node.task) - 1;
      if (i >= task_value.size())
        throw std::out_of_range("no value for task " +
                                std::to_string(node.task));
      return task_value[i];
    }
    case Kind::Loop: {
      const double q = aggregate_node(node.children.front(), task_value, kind);
      switch (kind) {
        case Agg::CriticalPath:
        case Agg::Additive:
          return node.iterations * q;
        case Agg::Multiplicative:
          return std::pow(q, node.iterations);
        case Agg::Bottleneck:
          return q;
      }
      break;
    }
    case Kind::Serial:
    case Kind::Parallel:
    case Kind::Switch: {
      double acc = aggregate_node(node.children.front(), task_value, kind);
      for (std::size_t i = 1; i < node.children.size(); ++i) {
        const double q = aggregate_node(node.children[i], task_value, kind);
        switch (kind) {
          case Agg::CriticalPath:
            acc = node.kind == Kind::Serial ? acc + q : std::max(acc, q);
            break;
          case Agg::Additive:
            acc = node.kind == Kind::Switch ? std::max(acc, q) : acc + q;
            break;
          case Agg::Multiplicative:
            acc = node.kind == Kind::Switch ? std::min(acc, q) : acc * q;
            break;
          case Agg::Bottleneck:
            acc = std::min(acc, q);
            break;
        }
      }
      return acc;
    }
  }
  throw std::logic_error("unreachable workflow kind");
}

}  // namespace

double aggregate_attribute(const WorkflowNode& workflow,
                           const std::vector<double>& task_value,
                           AggregationKind kind) {
  return aggregate_node(workflow, task_value, kind);
}

// Every aggregator is monotone nondecreasing in each argument over
// nonnegative values, so pushing per-task extremes through the workflow gives
// the attainable composite extremes.
QoSBounds compute_bounds(const ProblemInstance& instance) {
  const int n = instance.task_count();
  const int k = instance.attribute_count();
  QoSBounds b;
  b.per_task_min.assign(static_cast<std::size_t>(n),
                        std::vector<double>(static_cast<std::size_t>(k)));
  b.per_task_max = b.per_task_min;
  for (int t = 0; t < n; ++t) {
    const auto& pool = instance.pools[static_cast<std::size_t>(t)];
    for (int r = 0; r < k; ++r) {
      double lo = pool.front().qos[static_cast<std::size_t>(r)];
      double hi = lo;
      for (const CandidateService& s : pool) {
        lo = std::min(lo, s.qos[static_cast<std::size_t>(r)]);
        hi = std::max(hi, s.qos[static_cast<std::size_t>(r)]);
      }
      b.per_task_min[static_cast<std::size_t>(t)][static_cast<std::size_t>(r)] = lo;
      b.per_task_max[static_cast<std::size_t>(t)][static_cast<std::size_t>(r)] = hi;
    }
  }
  b.composite_min.resize(static_cast<std::size_t>(k));
  b.composite_max.resize(static_cast<std::size_t>(k));
  std::vector<double> column(static_cast<std::size_t>(n));
  for (int r = 0; r < k; ++r) {
    const AggregationKind kind =
        instance.attributes[static_cast<std::size_t>(r)].aggregation;
    for (int t = 0; t < n; ++t)
      column[static_cast<std::size_t>(t)] =
          b.per_task_min[static_cast<std::size_t>(t)][static_cast<std::size_t>(r)];
    b.composite_min[static_cast<std::size_t>(r)] =
        aggregate_attribute(instance.workflow, column, kind);
    for (int t = 0; t < n; ++t)
      column[static_cast<std::size_t>(t)] =
          b.per_task_max[static_cast<std::size_t>(t)][static_cast<std::size_t>(r)];
    b.composite_max[static_cast<std::size_t>(r)] =
        aggregate_attribute(instance.workflow, column, kind);
  }
  return b;
}

std::vector<double> aggregate_composite(const ProblemInstance& instance,
                                        const std::vector<std::string>& genes) {
  const int n = instance.task_count();
  const int k = instance.attribute_count();
  if (static_cast<int>(genes.size()) != n)
    throw std::invalid_argument("expected " + std::to_string(n) + " genes, got " +
                                std::to_string(genes.size()));
  std::vector<const CandidateService*> selected(static_cast<std::size_t>(n));
  for (int t = 0; t < n; ++t) {
    const CandidateService* s =
        instance.find_candidate(t + 1, genes[static_cast<std::size_t>(t)]);
    if (s == nullptr)
      throw std::invalid_argument("unknown candidate " +
                                  genes[static_cast<std::size_t>(t)] +
                                  " for task " + std::to_string(t + 1));
    selected[static_cast<std::size_t>(t)] = s;
  }
  std::vector<double> out(static_cast<std::size_t>(k));
  std::vector<double> column(static_cast<std::size_t>(n));
  for (int r = 0; r < k; ++r) {
    for (int t = 0; t < n; ++t)
      column[static_cast<std::size_t>(t)] =
          selected[static_cast<std::size_t>(t)]->qos[static_cast<std::size_t>(r)];
    out[static_cast<std::size_t>(r)] = aggregate_attribute(
        instance.workflow, column,
        instance.attributes[static_cast<std::size_t>(r)].aggregation);
  }
  return out;
}

}  // namespace pwss
