#pragma once

#include <cstddef>
#include <set>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "pwss/aggregate.hpp"
#include "pwss/instance.hpp"
#include "pwss/rng.hpp"
#include "pwss/workflow.hpp"

namespace pwss::testing {

inline QoSAttributeSpec make_attr(const std::string& name, Direction direction,
                                  AggregationKind aggregation, double weight) {
  QoSAttributeSpec a;
  a.name = name;
  a.direction = direction;
  a.aggregation = aggregation;
  a.weight = weight;
  return a;
}

inline CandidateService make_candidate(
    const std::string& id, int task, std::vector<double> qos,
    TransactionalProperty tp = TransactionalProperty::Pivot) {
  CandidateService s;
  s.id = id;
  s.task = task;
  s.qos = std::move(qos);
  s.tp = tp;
  return s;
}

inline WorkflowNode serial_chain(int n) {
  if (n == 1) return wf_task(1);
  std::vector<WorkflowNode> children;
  for (int t = 1; t <= n; ++t) children.push_back(wf_task(t));
  return wf_serial(std::move(children));
}

inline std::string pool_id(int task, int slot) {
  return "t" + std::to_string(task) + "_s" + std::to_string(slot);
}

// Four-attribute instance with a pattern-bearing workflow; the workhorse for
// property tests. Constraint families are added when the counts say so.
inline ProblemInstance random_mixed_instance(Rng& rng, int n, int m,
                                             int num_qc = 0, int num_ic = 0,
                                             bool with_tc = false) {
  ProblemInstance instance;
  instance.attributes = {
      make_attr("rt", Direction::Negative, AggregationKind::CriticalPath, 0.4),
      make_attr("price", Direction::Negative, AggregationKind::Additive, 0.2),
      make_attr("av", Direction::Positive, AggregationKind::Multiplicative, 0.2),
      make_attr("th", Direction::Positive, AggregationKind::Bottleneck, 0.2),
  };
  for (int t = 1; t <= n; ++t) {
    std::vector<CandidateService> pool;
    for (int s = 1; s <= m; ++s) {
      CandidateService c = make_candidate(
          pool_id(t, s), t,
          {50.0 + 450.0 * rng.next_double(), 1.0 + 49.0 * rng.next_double(),
           0.7 + 0.3 * rng.next_double(), 1.0 + 39.0 * rng.next_double()},
          static_cast<TransactionalProperty>(rng.index(4)));
      pool.push_back(std::move(c));
    }
    instance.pools.push_back(std::move(pool));
  }

  if (n == 1) {
    instance.workflow = wf_task(1);
  } else if (n == 2) {
    instance.workflow = wf_serial({wf_task(1), wf_task(2)});
  } else {
    // Random shape: a serial chain where one adjacent pair becomes a parallel
    // or switch block and one task may sit in a loop.
    std::vector<WorkflowNode> children;
    const int pair_at = 1 + static_cast<int>(rng.index(static_cast<std::size_t>(n - 1)));
    const bool use_switch = rng.index(2) == 0;
    int loop_at = 1 + static_cast<int>(rng.index(static_cast<std::size_t>(n)));
    if (loop_at == pair_at || loop_at == pair_at + 1) loop_at = 0;
    for (int t = 1; t <= n; ++t) {
      if (t == pair_at) {
        std::vector<WorkflowNode> pair = {wf_task(t), wf_task(t + 1)};
        children.push_back(use_switch ? wf_switch(std::move(pair))
                                      : wf_parallel(std::move(pair)));
        ++t;
        continue;
      }
      WorkflowNode leaf = wf_task(t);
      if (t == loop_at)
        leaf = wf_loop(std::move(leaf), 2 + static_cast<int>(rng.index(3)));
      children.push_back(std::move(leaf));
    }
    instance.workflow = wf_serial(std::move(children));
  }

  instance.qc.assign(instance.attributes.size(), std::nullopt);
  if (num_qc > 0) {
    const QoSBounds bounds = compute_bounds(instance);
    for (int r = 0; r < num_qc && r < instance.attribute_count(); ++r) {
      const double lo = bounds.composite_min[static_cast<std::size_t>(r)];
      const double hi = bounds.composite_max[static_cast<std::size_t>(r)];
      instance.qc[static_cast<std::size_t>(r)] =
          lo + (0.2 + 0.6 * rng.next_double()) * (hi - lo);
    }
  }
  std::set<std::tuple<int, std::string, int, std::string>> used;
  while (static_cast<int>(instance.dc.size() + instance.cc.size()) < num_ic) {
    InterserviceConstraint ic;
    ic.i = 1 + static_cast<int>(rng.index(static_cast<std::size_t>(n)));
    ic.j = 1 + static_cast<int>(rng.index(static_cast<std::size_t>(n)));
    if (ic.i == ic.j) continue;
    ic.p = instance.pools[static_cast<std::size_t>(ic.i) - 1]
               [rng.index(static_cast<std::size_t>(m))].id;
    ic.q = instance.pools[static_cast<std::size_t>(ic.j) - 1]
               [rng.index(static_cast<std::size_t>(m))].id;
    if (!used.insert({ic.i, ic.p, ic.j, ic.q}).second) continue;
    if (rng.index(2) == 0) instance.dc.push_back(std::move(ic));
    else instance.cc.push_back(std::move(ic));
  }
  if (with_tc) {
    const std::size_t picks = 1 + rng.index(3);
    for (std::size_t i = 0; i < picks; ++i)
      instance.tc.insert(static_cast<TransactionalProperty>(rng.index(4)));
  }
  return instance;
}

// Two additive negative attributes, strictly-increasing patterns only, and no
// pool whose best-on-price candidate is also best-on-fee. Any assignment then
// misses at least one composite extreme, keeping the composite utility
// strictly below 1, so the half-open upper band edges cannot be touched.
inline ProblemInstance random_strict_instance(Rng& rng, int n, int m,
                                              bool with_qc, int num_ic,
                                              bool with_tc) {
  ProblemInstance instance;
  instance.attributes = {
      make_attr("price", Direction::Negative, AggregationKind::Additive, 0.5),
      make_attr("fee", Direction::Negative, AggregationKind::Additive, 0.5),
  };
  for (int t = 1; t <= n; ++t) {
    std::vector<CandidateService> pool;
    for (;;) {
      pool.clear();
      for (int s = 1; s <= m; ++s)
        pool.push_back(make_candidate(
            pool_id(t, s), t,
            {1.0 + 9.0 * rng.next_double(), 1.0 + 9.0 * rng.next_double()},
            static_cast<TransactionalProperty>(rng.index(4))));
      std::size_t best0 = 0, best1 = 0;
      for (std::size_t s = 1; s < pool.size(); ++s) {
        if (pool[s].qos[0] < pool[best0].qos[0]) best0 = s;
        if (pool[s].qos[1] < pool[best1].qos[1]) best1 = s;
      }
      if (best0 != best1) break;
    }
    instance.pools.push_back(std::move(pool));
  }

  std::vector<WorkflowNode> children;
  for (int t = 1; t <= n; ++t) {
    if (t + 1 <= n && rng.index(4) == 0) {
      children.push_back(wf_parallel({wf_task(t), wf_task(t + 1)}));
      ++t;
      continue;
    }
    WorkflowNode leaf = wf_task(t);
    if (rng.index(4) == 0)
      leaf = wf_loop(std::move(leaf), 2 + static_cast<int>(rng.index(3)));
    children.push_back(std::move(leaf));
  }
  instance.workflow =
      children.size() == 1 ? children.front() : wf_serial(std::move(children));

  instance.qc.assign(instance.attributes.size(), std::nullopt);
  if (with_qc) {
    const QoSBounds bounds = compute_bounds(instance);
    const std::size_t r = rng.index(2);
    instance.qc[r] = bounds.composite_min[r] +
                     (0.1 + 0.8 * rng.next_double()) *
                         (bounds.composite_max[r] - bounds.composite_min[r]);
  }
  std::set<std::tuple<int, std::string, int, std::string>> used;
  while (n > 1 &&
         static_cast<int>(instance.dc.size() + instance.cc.size()) < num_ic) {
    InterserviceConstraint ic;
    ic.i = 1 + static_cast<int>(rng.index(static_cast<std::size_t>(n)));
    ic.j = 1 + static_cast<int>(rng.index(static_cast<std::size_t>(n)));
    if (ic.i == ic.j) continue;
    ic.p = instance.pools[static_cast<std::size_t>(ic.i) - 1]
               [rng.index(static_cast<std::size_t>(m))].id;
    ic.q = instance.pools[static_cast<std::size_t>(ic.j) - 1]
               [rng.index(static_cast<std::size_t>(m))].id;
    if (!used.insert({ic.i, ic.p, ic.j, ic.q}).second) continue;
    if (rng.index(2) == 0) instance.dc.push_back(std::move(ic));
    else instance.cc.push_back(std::move(ic));
  }
  if (with_tc)
    instance.tc.insert(static_cast<TransactionalProperty>(rng.index(4)));
  return instance;
}

inline std::vector<std::string> random_genes(const ProblemInstance& instance,
                                             Rng& rng) {
  std::vector<std::string> genes;
  genes.reserve(instance.pools.size());
  for (const auto& pool : instance.pools)
    genes.push_back(pool[rng.index(pool.size())].id);
  return genes;
}

}  // namespace pwss::testing
