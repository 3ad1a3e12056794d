#pragma once

#include <cstdint>
#include <set>
#include <string>

#include "pwss/instance.hpp"
#include "pwss/qws.hpp"

namespace pwss {

enum class QoSSource { Synthetic, Qws };

struct GeneratorSpec {
  int n_tasks = 10;      // positive multiple of 10
  int m_per_task = 100;
  int num_qc = 0;        // bounds on the first num_qc attributes
  int num_ic = 0;        // interservice tuples, split evenly DC/CC
  std::set<TransactionalProperty> tc;
  QoSSource source = QoSSource::Synthetic;
  std::string qws_path;
  std::uint64_t seed = 0;
};

// The 10-task reference workflow: Serial(T1, Parallel(T2,T3), T4,
// Switch(T5,T6), Loop(T7, it=5), T8, T9, T10). `copies` > 1 concatenates
// shifted copies under one serial root.
WorkflowNode canonical_workflow(int copies = 1);

ProblemInstance generate_instance(const GeneratorSpec& spec,
                                  const std::vector<AttributeConfig>& attributes);

}  // namespace pwss
