#include "pwss/instance.hpp"

#include <cmath>
#include <set>
#include <unordered_set>

namespace pwss {

const CandidateService* ProblemInstance::find_candidate(
    int task, const std::string& id) const {
  if (task < 1 || task > task_count()) return nullptr;
  for (const CandidateService& s : pools[static_cast<std::size_t>(task) - 1])
    if (s.id == id) return &s;
  return nullptr;
}

namespace {

void check_interservice(const ProblemInstance& instance,
                        const std::vector<InterserviceConstraint>& list,
                        const char* label, std::vector<std::string>& out) {
  std::set<std::tuple<int, std::string, int, std::string>> seen;
  for (const InterserviceConstraint& ic : list) {
    const std::string where = std::string(label) + " constraint (" +
                              std::to_string(ic.i) + "," + ic.p + "," +
                              std::to_string(ic.j) + "," + ic.q + ")";
    if (ic.i < 1 || ic.i > instance.task_count() || ic.j < 1 ||
        ic.j > instance.task_count()) {
      out.push_back(where + " references an unknown task");
      continue;
    }
    if (ic.i == ic.j) out.push_back(where + " relates a task to itself");
    if (instance.find_candidate(ic.i, ic.p) == nullptr)
      out.push_back(where + ": no candidate " + ic.p + " for task " +
                    std::to_string(ic.i));
    if (instance.find_candidate(ic.j, ic.q) == nullptr)
      out.push_back(where + ": no candidate " + ic.q + " for task " +
                    std::to_string(ic.j));
    if (!seen.insert({ic.i, ic.p, ic.j, ic.q}).second)
      out.push_back(where + " is duplicated");
  }
}

}  // namespace

std::vector<std::string> validate_instance(const ProblemInstance& instance) {
  std::vector<std::string> out;
  const int k = instance.attribute_count();
  const int n = instance.task_count();

  if (k == 0) out.push_back("instance has no QoS attributes");
  double weight_sum = 0.0;
  for (const QoSAttributeSpec& attr : instance.attributes) {
    if (attr.name.empty()) out.push_back("attribute with empty name");
    if (!(attr.weight >= 0.0 && attr.weight <= 1.0))
      out.push_back("attribute " + attr.name + " has weight outside [0,1]");
    weight_sum += attr.weight;
  }
  if (k > 0 && std::abs(weight_sum - 1.0) > 1e-9)
    out.push_back("attribute weights must sum to 1, got " +
                  std::to_string(weight_sum));

  if (n == 0) out.push_back("instance has no tasks");
  std::unordered_set<std::string> ids;
  for (int t = 1; t <= n; ++t) {
    const auto& pool = instance.pools[static_cast<std::size_t>(t) - 1];
    if (pool.empty())
      out.push_back("task " + std::to_string(t) + " has an empty pool");
    for (const CandidateService& s : pool) {
      if (s.id.empty()) out.push_back("candidate with empty id");
      if (!ids.insert(s.id).second)
        out.push_back("candidate id " + s.id + " is not unique");
      if (s.task != t)
        out.push_back("candidate " + s.id + " carries task " +
                      std::to_string(s.task) + " but sits in pool " +
                      std::to_string(t));
      if (static_cast<int>(s.qos.size()) != k)
        out.push_back("candidate " + s.id + " has " +
                      std::to_string(s.qos.size()) + " QoS values, expected " +
                      std::to_string(k));
      for (double q : s.qos)
        if (!std::isfinite(q)) {
          out.push_back("candidate " + s.id + " has a non-finite QoS value");
          break;
        }
    }
  }

  collect_workflow_issues(instance.workflow, n, out);

  if (!instance.qc.empty() && static_cast<int>(instance.qc.size()) != k)
    out.push_back("qc has " + std::to_string(instance.qc.size()) +
                  " entries, expected " + std::to_string(k));
  for (const auto& bound : instance.qc)
    if (bound && !std::isfinite(*bound))
      out.push_back("qc contains a non-finite bound");

  check_interservice(instance, instance.dc, "dependency", out);
  check_interservice(instance, instance.cc, "conflict", out);
  std::set<std::tuple<int, std::string, int, std::string>> dc_set;
  for (const InterserviceConstraint& ic : instance.dc)
    dc_set.insert({ic.i, ic.p, ic.j, ic.q});
  for (const InterserviceConstraint& ic : instance.cc)
    if (dc_set.count({ic.i, ic.p, ic.j, ic.q}))
      out.push_back("constraint (" + std::to_string(ic.i) + "," + ic.p + "," +
                    std::to_string(ic.j) + "," + ic.q +
                    ") appears in both the dependency and conflict lists");

  return out;
}

}  // namespace pwss
