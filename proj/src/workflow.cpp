#include "pwss/workflow.hpp"

#include <stdexcept>
#include <utility>

namespace pwss {

WorkflowNode wf_task(int task) {
  WorkflowNode n;
  n.kind = WorkflowNode::Kind::Task;
  n.task = task;
  return n;
}

WorkflowNode wf_serial(std::vector<WorkflowNode> children) {
  WorkflowNode n;
  n.kind = WorkflowNode::Kind::Serial;
  n.children = std::move(children);
  return n;
}

WorkflowNode wf_loop(WorkflowNode child, int iterations) {
  WorkflowNode n;
  n.kind = WorkflowNode::Kind::Loop;
  n.iterations = iterations;
  n.children.push_back(std::move(child));
  return n;
}

WorkflowNode wf_parallel(std::vector<WorkflowNode> children) {
  WorkflowNode n;
  n.kind = WorkflowNode::Kind::Parallel;
  n.children = std::move(children);
  return n;
}

WorkflowNode wf_switch(std::vector<WorkflowNode> children) {
  WorkflowNode n;
  n.kind = WorkflowNode::Kind::Switch;
  n.children = std::move(children);
  return n;
}

namespace {

void collect_tasks(const WorkflowNode& node, std::vector<int>& out) {
  if (node.kind == WorkflowNode::Kind::Task) {
    out.push_back(node.task);
    return;
  }
  for (const WorkflowNode& child : node.children) collect_tasks(child, out);
}

const char* kind_name(WorkflowNode::Kind kind) {
  switch (kind) {
    case WorkflowNode::Kind::Task: return "task";
    case WorkflowNode::Kind::Serial: return "serial";
    case WorkflowNode::Kind::Loop: return "loop";
    case WorkflowNode::Kind::Parallel: return "parallel";
    case WorkflowNode::Kind::Switch: return "switch";
  }
  return "?";
}

void check_node(const WorkflowNode& node, int n_tasks,
                std::vector<std::string>& out) {
  using Kind = WorkflowNode::Kind;
  switch (node.kind) {
    case Kind::Task:
      if (node.task < 1 || node.task > n_tasks)
        out.push_back("workflow references unknown task " +
                      std::to_string(node.task));
      if (!node.children.empty())
        out.push_back("task node must not have children");
      break;
    case Kind::Loop:
      if (node.children.size() != 1)
        out.push_back("loop must have exactly one child");
      if (node.iterations < 1) out.push_back("loop iterations must be ≥ 1");
      break;
    case Kind::Serial:
    case Kind::Parallel:
    case Kind::Switch:
      if (node.children.size() < 2)
        out.push_back(std::string(kind_name(node.kind)) +
                      " node must have at least 2 children");
      break;
  }
  for (const WorkflowNode& child : node.children)
    check_node(child, n_tasks, out);
}

}  // namespace

std::vector<int> task_indices(const WorkflowNode& workflow) {
  std::vector<int> out;
  collect_tasks(workflow, out);
  std::vector<bool> seen;
  for (int t : out) {
    if (t >= 1) {
      if (seen.size() < static_cast<std::size_t>(t))
        seen.resize(static_cast<std::size_t>(t), false);
      if (seen[static_cast<std::size_t>(t) - 1])
        throw std::runtime_error("workflow mentions task " + std::to_string(t) +
                                 " more than once");
      seen[static_cast<std::size_t>(t) - 1] = true;
    }
  }
  return out;
}

void collect_workflow_issues(const WorkflowNode& workflow, int n_tasks,
                             std::vector<std::string>& out) {
  check_node(workflow, n_tasks, out);
  std::vector<int> leaves;
  collect_tasks(workflow, leaves);
  std::vector<int> count(static_cast<std::size_t>(n_tasks) + 1, 0);
  for (int t : leaves)
    if (t >= 1 && t <= n_tasks) ++count[static_cast<std::size_t>(t)];
  for (int t = 1; t <= n_tasks; ++t) {
    if (count[static_cast<std::size_t>(t)] == 0)
      out.push_back("workflow does not mention task " + std::to_string(t));
    else if (count[static_cast<std::size_t>(t)] > 1)
      out.push_back("workflow mentions task " + std::to_string(t) +
                    " more than once");
  }
}

}  // namespace pwss
