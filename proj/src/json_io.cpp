#include "pwss/json_io.hpp"

#include <fstream>
#include <stdexcept>

#include "pwss/transactional.hpp"

namespace pwss {

namespace {

json workflow_to_json(const WorkflowNode& node) {
  using Kind = WorkflowNode::Kind;
  json j;
  switch (node.kind) {
    case Kind::Task:
      j["kind"] = "task";
      j["task"] = node.task;
      return j;
    case Kind::Serial: j["kind"] = "serial"; break;
    case Kind::Loop:
      j["kind"] = "loop";
      j["iterations"] = node.iterations;
      break;
    case Kind::Parallel: j["kind"] = "parallel"; break;
    case Kind::Switch: j["kind"] = "switch"; break;
  }
  j["children"] = json::array();
  for (const WorkflowNode& child : node.children)
    j["children"].push_back(workflow_to_json(child));
  return j;
}

WorkflowNode workflow_from_json(const json& j) {
  const std::string kind = j.at("kind").get<std::string>();
  WorkflowNode node;
  if (kind == "task") {
    node.kind = WorkflowNode::Kind::Task;
    node.task = j.at("task").get<int>();
    return node;
  }
  if (kind == "serial") node.kind = WorkflowNode::Kind::Serial;
  else if (kind == "loop") node.kind = WorkflowNode::Kind::Loop;
  else if (kind == "parallel") node.kind = WorkflowNode::Kind::Parallel;
  else if (kind == "switch") node.kind = WorkflowNode::Kind::Switch;
  else throw std::invalid_argument("unknown workflow node kind: " + kind);
  if (node.kind == WorkflowNode::Kind::Loop)
    node.iterations = j.at("iterations").get<int>();
  for (const json& child : j.at("children"))
    node.children.push_back(workflow_from_json(child));
  return node;
}

json constraints_to_json(const std::vector<InterserviceConstraint>& list) {
  json out = json::array();
  for (const InterserviceConstraint& ic : list)
    out.push_back({{"i", ic.i}, {"p", ic.p}, {"j", ic.j}, {"q", ic.q}});
  return out;
}

std::vector<InterserviceConstraint> constraints_from_json(const json& j) {
  std::vector<InterserviceConstraint> out;
  for (const json& e : j) {
    InterserviceConstraint ic;
    ic.i = e.at("i").get<int>();
    ic.p = e.at("p").get<std::string>();
    ic.j = e.at("j").get<int>();
    ic.q = e.at("q").get<std::string>();
    out.push_back(std::move(ic));
  }
  return out;
}

// The shared {genes, qos, tp, fitness, feasible, violations} block of the
// solver and oracle outputs.
json individual_to_json(const ProblemInstance& instance, const Individual& x) {
  json j;
  j["genes"] = x.genes;
  j["qos"] = aggregate_composite(instance, x.genes);
  std::vector<TransactionalProperty> task_tp;
  task_tp.reserve(x.genes.size());
  for (std::size_t t = 0; t < x.genes.size(); ++t) {
    const CandidateService* s =
        instance.find_candidate(static_cast<int>(t) + 1, x.genes[t]);
    if (s == nullptr)
      throw std::invalid_argument("unknown candidate " + x.genes[t] +
                                  " for task " + std::to_string(t + 1));
    task_tp.push_back(s->tp);
  }
  j["tp"] = to_string(derive_tp(instance.workflow, task_tp));
  j["fitness"] = x.fitness;
  j["feasible"] = x.feasible();
  j["violations"] = {{"C", x.qc_violations},
                     {"V", x.ic_violations},
                     {"T", x.tc_violated}};
  return j;
}

}  // namespace

json instance_to_json(const ProblemInstance& instance) {
  json j;
  j["attributes"] = json::array();
  for (const QoSAttributeSpec& attr : instance.attributes)
    j["attributes"].push_back({{"name", attr.name},
                               {"direction", to_string(attr.direction)},
                               {"aggregation", to_string(attr.aggregation)},
                               {"weight", attr.weight},
                               {"unit", attr.unit}});
  j["tasks"] = json::array();
  for (const auto& pool : instance.pools) {
    json p = json::array();
    for (const CandidateService& s : pool)
      p.push_back({{"id", s.id}, {"qos", s.qos}, {"tp", to_string(s.tp)}});
    j["tasks"].push_back(std::move(p));
  }
  j["workflow"] = workflow_to_json(instance.workflow);
  j["qc"] = json::array();
  for (const auto& bound : instance.qc) {
    if (bound) j["qc"].push_back(*bound);
    else j["qc"].push_back(nullptr);
  }
  j["dc"] = constraints_to_json(instance.dc);
  j["cc"] = constraints_to_json(instance.cc);
  j["tc"] = json::array();
  for (TransactionalProperty tp : instance.tc) j["tc"].push_back(to_string(tp));
  return j;
}

ProblemInstance instance_from_json(const json& j) {
  ProblemInstance instance;
  for (const json& a : j.at("attributes")) {
    QoSAttributeSpec attr;
    attr.name = a.at("name").get<std::string>();
    attr.direction = direction_from_string(a.at("direction").get<std::string>());
    attr.aggregation =
        aggregation_from_string(a.at("aggregation").get<std::string>());
    attr.weight = a.at("weight").get<double>();
    if (a.contains("unit")) attr.unit = a.at("unit").get<std::string>();
    instance.attributes.push_back(std::move(attr));
  }
  int task = 0;
  for (const json& p : j.at("tasks")) {
    ++task;
    std::vector<CandidateService> pool;
    for (const json& e : p) {
      CandidateService s;
      s.id = e.at("id").get<std::string>();
      s.task = task;
      s.qos = e.at("qos").get<std::vector<double>>();
      s.tp = tp_from_string(e.at("tp").get<std::string>());
      pool.push_back(std::move(s));
    }
    instance.pools.push_back(std::move(pool));
  }
  instance.workflow = workflow_from_json(j.at("workflow"));
  if (j.contains("qc") && !j.at("qc").is_null()) {
    for (const json& bound : j.at("qc")) {
      if (bound.is_null()) instance.qc.emplace_back();
      else instance.qc.emplace_back(bound.get<double>());
    }
  }
  if (j.contains("dc")) instance.dc = constraints_from_json(j.at("dc"));
  if (j.contains("cc")) instance.cc = constraints_from_json(j.at("cc"));
  if (j.contains("tc") && !j.at("tc").is_null())
    for (const json& tp : j.at("tc"))
      instance.tc.insert(tp_from_string(tp.get<std::string>()));
  return instance;
}

ProblemInstance load_instance(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read " + path);
  json j;
  in >> j;
  return instance_from_json(j);
}

void save_instance(const ProblemInstance& instance, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << instance_to_json(instance).dump(2) << '\n';
}

json solution_to_json(const ProblemInstance& instance, const Individual& best,
                      std::uint64_t evaluations, std::uint64_t seed) {
  json j = individual_to_json(instance, best);
  j["evaluations"] = evaluations;
  j["seed"] = seed;
  return j;
}

std::string solution_to_json_text(const ProblemInstance& instance,
                                  const Individual& best,
                                  std::uint64_t evaluations,
                                  std::uint64_t seed) {
  return solution_to_json(instance, best, evaluations, seed).dump(2) + "\n";
}

json oracle_to_json(const ProblemInstance& instance,
                    const OracleResult& result) {
  json j;
  j["search_space"] = result.search_space;
  j["best"] = individual_to_json(instance, result.best);
  if (result.best_feasible)
    j["best_feasible"] = individual_to_json(instance, *result.best_feasible);
  else
    j["best_feasible"] = nullptr;
  return j;
}

}  // namespace pwss
