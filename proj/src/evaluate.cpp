#include "pwss/evaluate.hpp"

#include <stdexcept>

#include "pwss/transactional.hpp"

namespace pwss {

Evaluator::Evaluator(const ProblemInstance& instance)
    : instance_(&instance), bounds_(compute_bounds(instance)),
      flags_(constraint_flags(instance)) {
  for (const auto& bound : instance.qc)
    if (bound) ++c_max_;
  v_max_ = static_cast<int>(instance.dc.size() + instance.cc.size());
  index_.resize(instance.pools.size());
  for (std::size_t t = 0; t < instance.pools.size(); ++t)
    for (std::size_t o = 0; o < instance.pools[t].size(); ++o)
      index_[t].emplace(instance.pools[t][o].id, o);
}

const CandidateService& Evaluator::candidate(int task,
                                             const std::string& id) const {
  const auto& map = index_[static_cast<std::size_t>(task) - 1];
  const auto it = map.find(id);
  if (it == map.end())
    throw std::invalid_argument("unknown candidate " + id + " for task " +
                                std::to_string(task));
  return instance_->pools[static_cast<std::size_t>(task) - 1][it->second];
}

std::vector<double> Evaluator::aggregate(
    const std::vector<std::string>& genes) const {
  const std::size_t n = instance_->pools.size();
  const std::size_t k = instance_->attributes.size();
  std::vector<const CandidateService*> selected(n);
  for (std::size_t t = 0; t < n; ++t)
    selected[t] = &candidate(static_cast<int>(t) + 1, genes[t]);
  std::vector<double> out(k);
  std::vector<double> column(n);
  for (std::size_t r = 0; r < k; ++r) {
    for (std::size_t t = 0; t < n; ++t) column[t] = selected[t]->qos[r];
    out[r] = aggregate_attribute(instance_->workflow, column,
                                 instance_->attributes[r].aggregation);
  }
  return out;
}

DerivedTP Evaluator::derived_tp_of(const std::vector<std::string>& genes) const {
  std::vector<TransactionalProperty> task_tp;
  task_tp.reserve(genes.size());
  for (std::size_t t = 0; t < genes.size(); ++t)
    task_tp.push_back(candidate(static_cast<int>(t) + 1, genes[t]).tp);
  return derive_tp(instance_->workflow, task_tp);
}

Individual Evaluator::evaluate(const std::vector<std::string>& genes,
                               EvalCounter& counter) const {
  if (genes.size() != instance_->pools.size())
    throw std::invalid_argument("gene count does not match task count");
  Individual x;
  x.genes = genes;

  const std::vector<double> aggregated = aggregate(genes);
  x.composite_utility = composite_utility(*instance_, aggregated, bounds_);
  x.qc_violations = count_qc_violations(*instance_, aggregated);
  x.ic_violations = count_ic_violations(*instance_, genes);
  x.tc_violated = 0;
  if (!instance_->tc.empty()) {
    const DerivedTP derived = derived_tp_of(genes);
    const bool ok =
        derived != DerivedTP::NonAtomic &&
        instance_->tc.count(static_cast<TransactionalProperty>(
            static_cast<int>(derived))) > 0;
    x.tc_violated = ok ? 0 : 1;
  }

  ViolationProfile p;
  p.c = x.qc_violations;
  p.v = x.ic_violations;
  p.t = x.tc_violated != 0;
  p.c_max = c_max_;
  p.v_max = v_max_;
  x.fitness = fitness_value(x.composite_utility, p);

  counter.fetch_add(1, std::memory_order_relaxed);
  return x;
}

}  // namespace pwss
