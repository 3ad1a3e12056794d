#pragma once

#include <string>
#include <vector>

namespace pwss {

// Composition-pattern tree. Leaves reference tasks by 1-based index; a valid
// workflow mentions every task of the instance exactly once.
struct WorkflowNode {
  enum class Kind { Task, Serial, Loop, Parallel, Switch };

  Kind kind = Kind::Task;
  int task = 0;                        // Kind::Task
  int iterations = 0;                  // Kind::Loop, must be >= 1
  std::vector<WorkflowNode> children;  // composite kinds; Loop has exactly one

  bool operator==(const WorkflowNode&) const = default;
};

WorkflowNode wf_task(int task);
WorkflowNode wf_serial(std::vector<WorkflowNode> children);
WorkflowNode wf_loop(WorkflowNode child, int iterations);
WorkflowNode wf_parallel(std::vector<WorkflowNode> children);
WorkflowNode wf_switch(std::vector<WorkflowNode> children);

// Left-to-right depth-first list of task leaves. Throws std::runtime_error
// on a duplicate task index.
std::vector<int> task_indices(const WorkflowNode& workflow);

// Non-throwing structural check used by instance validation; appends one
// finding per problem. n_tasks is the task count the workflow must cover.
void collect_workflow_issues(const WorkflowNode& workflow, int n_tasks,
                             std::vector<std::string>& out);

}  // namespace pwss
