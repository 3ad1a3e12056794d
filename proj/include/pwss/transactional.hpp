#pragma once

#include <vector>

#include "pwss/types.hpp"
#include "pwss/workflow.hpp"

namespace pwss {

// Pairwise derivation rules for transactional properties, one function per
// composition pattern. NonAtomic is absorbing: once a composite loses
// atomicity no rule can restore it.
DerivedTP tp_serial(DerivedTP current, DerivedTP next);
DerivedTP tp_loop(DerivedTP body);
DerivedTP tp_parallel(DerivedTP current, DerivedTP next);
DerivedTP tp_switch(DerivedTP current, DerivedTP next);

// Recursive derivation over the workflow; n-ary patterns left-fold their
// children in order. task_tp[i-1] is the leaf property of task i.
DerivedTP derive_tp(const WorkflowNode& workflow,
                    const std::vector<TransactionalProperty>& task_tp);

}  // namespace pwss
