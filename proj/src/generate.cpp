#include "pwss/generate.hpp"

#include <algorithm>
#include <stdexcept>

#include "pwss/aggregate.hpp"
#include "pwss/rng.hpp"

namespace pwss {

namespace {

// One 10-task block; shift moves its task indices to a later decade.
std::vector<WorkflowNode> canonical_block(int shift) {
  const auto t = [shift](int i) { return wf_task(i + shift); };
  std::vector<WorkflowNode> nodes;
  nodes.push_back(t(1));
  nodes.push_back(wf_parallel({t(2), t(3)}));
  nodes.push_back(t(4));
  nodes.push_back(wf_switch({t(5), t(6)}));
  nodes.push_back(wf_loop(t(7), 5));
  nodes.push_back(t(8));
  nodes.push_back(t(9));
  nodes.push_back(t(10));
  return nodes;
}

std::string padded(int value, int width) {
  std::string s = std::to_string(value);
  while (static_cast<int>(s.size()) < width) s.insert(s.begin(), '0');
  return s;
}

int digits(int value) {
  int d = 1;
  while (value >= 10) {
    value /= 10;
    ++d;
  }
  return d;
}

constexpr std::uint64_t kGenStream = 0x67656e5f777373ULL;

}  // namespace

WorkflowNode canonical_workflow(int copies) {
  if (copies < 1) throw std::invalid_argument("workflow needs at least 1 copy");
  std::vector<WorkflowNode> children;
  for (int c = 0; c < copies; ++c) {
    std::vector<WorkflowNode> block = canonical_block(10 * c);
    std::move(block.begin(), block.end(), std::back_inserter(children));
  }
  return wf_serial(std::move(children));
}

ProblemInstance generate_instance(
    const GeneratorSpec& spec, const std::vector<AttributeConfig>& attributes) {
  if (spec.n_tasks < 10 || spec.n_tasks % 10 != 0)
    throw std::invalid_argument(
        "number of tasks must be a positive multiple of 10");
  if (spec.m_per_task < 1)
    throw std::invalid_argument("need at least one candidate per task");
  if (attributes.empty()) throw std::invalid_argument("no attributes configured");
  const int k = static_cast<int>(attributes.size());
  if (spec.num_qc < 0 || spec.num_qc > k)
    throw std::invalid_argument("numQC must lie in 0..k");
  if (spec.num_ic < 0) throw std::invalid_argument("numIC must be nonnegative");

  Rng rng(derive_seed(spec.seed, {kGenStream}));
  ProblemInstance instance;
  for (const AttributeConfig& attr : attributes) {
    QoSAttributeSpec s = attr.spec;
    s.weight = 1.0 / k;
    instance.attributes.push_back(std::move(s));
  }
  instance.workflow = canonical_workflow(spec.n_tasks / 10);

  std::vector<QwsService> dataset;
  if (spec.source == QoSSource::Qws)
    dataset = ingest_qws(spec.qws_path, attributes).services;

  const int task_width = std::max(2, digits(spec.n_tasks));
  const int svc_width = std::max(4, digits(spec.m_per_task));
  std::vector<std::size_t> draw_order(dataset.size());
  for (int t = 1; t <= spec.n_tasks; ++t) {
    std::vector<CandidateService> pool;
    pool.reserve(static_cast<std::size_t>(spec.m_per_task));
    // Per-task sample without replacement when the dataset is big enough,
    // with replacement otherwise.
    const bool exclusive =
        !dataset.empty() &&
        dataset.size() >= static_cast<std::size_t>(spec.m_per_task);
    if (exclusive) {
      draw_order.resize(dataset.size());
      for (std::size_t i = 0; i < draw_order.size(); ++i) draw_order[i] = i;
    }
    for (int s = 1; s <= spec.m_per_task; ++s) {
      CandidateService c;
      c.id = "t" + padded(t, task_width) + "_s" + padded(s, svc_width);
      c.task = t;
      if (dataset.empty()) {
        c.qos.reserve(attributes.size());
        for (const AttributeConfig& attr : attributes)
          c.qos.push_back(attr.synthetic_min +
                          rng.next_double() *
                              (attr.synthetic_max - attr.synthetic_min));
      } else if (exclusive) {
        const std::size_t slot =
            static_cast<std::size_t>(s) - 1 +
            rng.index(draw_order.size() - static_cast<std::size_t>(s) + 1);
        std::swap(draw_order[static_cast<std::size_t>(s) - 1], draw_order[slot]);
        c.qos = dataset[draw_order[static_cast<std::size_t>(s) - 1]].qos;
      } else {
        c.qos = dataset[rng.index(dataset.size())].qos;
      }
      c.tp = static_cast<TransactionalProperty>(rng.index(4));
      pool.push_back(std::move(c));
    }
    instance.pools.push_back(std::move(pool));
  }

  instance.qc.assign(static_cast<std::size_t>(k), std::nullopt);
  if (spec.num_qc > 0) {
    const QoSBounds bounds = compute_bounds(instance);
    for (int r = 0; r < spec.num_qc; ++r)
      instance.qc[static_cast<std::size_t>(r)] =
          (bounds.composite_min[static_cast<std::size_t>(r)] +
           bounds.composite_max[static_cast<std::size_t>(r)]) /
          2.0;
  }

  if (spec.num_ic > 0) {
    std::set<std::tuple<int, std::string, int, std::string>> used;
    long attempts = 0;
    const long attempt_cap = 50L * spec.num_ic + 1000;
    while (static_cast<int>(instance.dc.size() + instance.cc.size()) <
           spec.num_ic) {
      if (++attempts > attempt_cap)
        throw std::runtime_error("cannot place " + std::to_string(spec.num_ic) +
                                 " interservice constraints on this instance");
      InterserviceConstraint ic;
      ic.i = rng.uniform_int(1, spec.n_tasks);
      ic.j = rng.uniform_int(1, spec.n_tasks);
      if (ic.i == ic.j) continue;
      const auto& pool_i = instance.pools[static_cast<std::size_t>(ic.i) - 1];
      const auto& pool_j = instance.pools[static_cast<std::size_t>(ic.j) - 1];
      ic.p = pool_i[rng.index(pool_i.size())].id;
      ic.q = pool_j[rng.index(pool_j.size())].id;
      // One shared key space: the same tuple may not recur in either list, so
      // direct dependency/conflict contradictions cannot arise.
      if (!used.insert({ic.i, ic.p, ic.j, ic.q}).second) continue;
      if (rng.index(2) == 0)
        instance.dc.push_back(std::move(ic));
      else
        instance.cc.push_back(std::move(ic));
    }
  }

  instance.tc = spec.tc;
  return instance;
}

}  // namespace pwss
