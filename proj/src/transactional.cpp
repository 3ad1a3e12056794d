#include "pwss/transactional.hpp"

#include <stdexcept>

namespace pwss {

namespace {

constexpr DerivedTP P = DerivedTP::Pivot;
constexpr DerivedTP C = DerivedTP::Compensatable;
constexpr DerivedTP R = DerivedTP::Retriable;
constexpr DerivedTP CR = DerivedTP::CompensatableRetriable;
constexpr DerivedTP NA = DerivedTP::NonAtomic;

// Row = property so far, column = property of the next branch.
constexpr DerivedTP kSerial[4][4] = {
    {NA, NA, P, P},
    {P, C, P, C},
    {NA, NA, R, R},
    {P, C, R, CR},
};

constexpr DerivedTP kLoop[4] = {NA, C, R, CR};

constexpr DerivedTP kParallel[4][4] = {
    {NA, NA, NA, P},
    {NA, C, NA, C},
    {NA, NA, R, R},
    {P, C, R, CR},
};

constexpr DerivedTP kSwitch[4][4] = {
    {P, P, P, P},
    {P, C, P, C},
    {P, P, R, R},
    {P, C, R, CR},
};

DerivedTP lookup(const DerivedTP table[4][4], DerivedTP a, DerivedTP b) {
  if (a == NA || b == NA) return NA;
  return table[static_cast<int>(a)][static_cast<int>(b)];
}

}  // namespace

DerivedTP tp_serial(DerivedTP current, DerivedTP next) {
  return lookup(kSerial, current, next);
}

DerivedTP tp_loop(DerivedTP body) {
  if (body == NA) return NA;
  return kLoop[static_cast<int>(body)];
}

DerivedTP tp_parallel(DerivedTP current, DerivedTP next) {
  return lookup(kParallel, current, next);
}

DerivedTP tp_switch(DerivedTP current, DerivedTP next) {
  return lookup(kSwitch, current, next);
}

DerivedTP derive_tp(const WorkflowNode& workflow,
                    const std::vector<TransactionalProperty>& task_tp) {
  using Kind = WorkflowNode::Kind;
  switch (workflow.kind) {
    case Kind::Task: {
      const std::size_t i = static_cast<std::size_t>(workflow.task) - 1;
      if (i >= task_tp.size())
        throw std::out_of_range("no transactional property for task " +
                                std::to_string(workflow.task));
      return to_derived(task_tp[i]);
    }
    case Kind::Loop:
      return tp_loop(derive_tp(workflow.children.front(), task_tp));
    case Kind::Serial:
    case Kind::Parallel:
    case Kind::Switch: {
      DerivedTP acc = derive_tp(workflow.children.front(), task_tp);
      for (std::size_t i = 1; i < workflow.children.size(); ++i) {
        const DerivedTP next = derive_tp(workflow.children[i], task_tp);
        if (workflow.kind == Kind::Serial)
          acc = tp_serial(acc, next);
        else if (workflow.kind == Kind::Parallel)
          acc = tp_parallel(acc, next);
        else
          acc = tp_switch(acc, next);
      }
      return acc;
    }
  }
  throw std::logic_error("unreachable workflow kind");
}

}  // namespace pwss
