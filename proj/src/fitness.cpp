#include "pwss/fitness.hpp"

#include <stdexcept>

#include "pwss/transactional.hpp"

namespace pwss {

int count_qc_violations(const ProblemInstance& instance,
                        const std::vector<double>& aggregated) {
  int violated = 0;
  for (std::size_t r = 0; r < instance.qc.size(); ++r) {
    if (!instance.qc[r]) continue;
    const double bound = *instance.qc[r];
    const bool bad = instance.attributes[r].direction == Direction::Negative
                         ? aggregated[r] > bound
                         : aggregated[r] < bound;
    if (bad) ++violated;
  }
  return violated;
}

int count_ic_violations(const ProblemInstance& instance,
                        const std::vector<std::string>& genes) {
  int violated = 0;
  for (const InterserviceConstraint& ic : instance.dc)
    if (genes[static_cast<std::size_t>(ic.i) - 1] == ic.p &&
        genes[static_cast<std::size_t>(ic.j) - 1] != ic.q)
      ++violated;
  for (const InterserviceConstraint& ic : instance.cc)
    if (genes[static_cast<std::size_t>(ic.i) - 1] == ic.p &&
        genes[static_cast<std::size_t>(ic.j) - 1] == ic.q)
      ++violated;
  return violated;
}

bool tc_violation(const ProblemInstance& instance,
                  const std::vector<std::string>& genes) {
  if (instance.tc.empty()) return false;
  std::vector<TransactionalProperty> task_tp;
  task_tp.reserve(genes.size());
  for (std::size_t t = 0; t < genes.size(); ++t) {
    const CandidateService* s =
        instance.find_candidate(static_cast<int>(t) + 1, genes[t]);
    if (s == nullptr)
      throw std::invalid_argument("unknown candidate " + genes[t] +
                                  " for task " + std::to_string(t + 1));
    task_tp.push_back(s->tp);
  }
  const DerivedTP derived = derive_tp(instance.workflow, task_tp);
  if (derived == DerivedTP::NonAtomic) return true;
  return instance.tc.count(static_cast<TransactionalProperty>(
             static_cast<int>(derived))) == 0;
}

double map_range(double value, double from_min, double from_max, double to_min,
                 double to_max) {
  if (!(from_max > from_min))
    throw std::invalid_argument("map_range needs a non-degenerate source range");
  return to_min + (value - from_min) * (to_max - to_min) / (from_max - from_min);
}

double fitness_value(double composite_utility, const ViolationProfile& p) {
  // Ratios with the 0/0 convention: an absent constraint family can never
  // count as a violated kind.
  const double rc = p.c_max > 0 ? static_cast<double>(p.c) / p.c_max : 0.0;
  const double rv = p.v_max > 0 ? static_cast<double>(p.v) / p.v_max : 0.0;
  const bool c_ok = rc == 0.0;
  const bool v_ok = rv == 0.0;
  const bool t_ok = !p.t;
  const double u = composite_utility;

  // One closed form per violated-kind combination; each maps its raw fitness
  // interval onto a disjoint band of [0,1], so fewer violated kinds always
  // dominate.
  if (c_ok && v_ok && t_ok) return (3.0 + u) / 4.0;
  if (c_ok && v_ok && !t_ok) return (2.0 + u) / 4.0;
  if (c_ok && !v_ok && t_ok) return (5.0 + u - rv) / 8.0;
  if (c_ok && !v_ok && !t_ok) return (3.0 + u - rv) / 8.0;
  if (!c_ok && v_ok && t_ok) return (5.0 + u - rc) / 8.0;
  if (!c_ok && v_ok && !t_ok) return (3.0 + u - rc) / 8.0;
  if (!c_ok && !v_ok && t_ok) return (5.0 + u - rc - rv) / 12.0;
  return (2.0 + u - rc - rv) / 12.0;
}

}  // namespace pwss
