// Workflow builders, leaf enumeration, and structural findings.

#include <doctest.h>

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

#include "pwss/workflow.hpp"

using namespace pwss;

namespace {
bool mentions(const std::vector<std::string>& findings, const std::string& text) {
  return std::any_of(findings.begin(), findings.end(), [&](const std::string& f) {
    return f.find(text) != std::string::npos;
  });
}
}  // namespace

TEST_CASE("builders fill the right fields") {
  const WorkflowNode t = wf_task(3);
  CHECK(t.kind == WorkflowNode::Kind::Task);
  CHECK(t.task == 3);
  CHECK(t.children.empty());

  const WorkflowNode l = wf_loop(wf_task(1), 5);
  CHECK(l.kind == WorkflowNode::Kind::Loop);
  CHECK(l.iterations == 5);
  REQUIRE(l.children.size() == 1);
  CHECK(l.children[0].task == 1);

  const WorkflowNode s = wf_serial({wf_task(1), wf_task(2)});
  CHECK(s.kind == WorkflowNode::Kind::Serial);
  CHECK(s.children.size() == 2);
  CHECK(wf_parallel({wf_task(1), wf_task(2)}).kind ==
        WorkflowNode::Kind::Parallel);
  CHECK(wf_switch({wf_task(1), wf_task(2)}).kind == WorkflowNode::Kind::Switch);
}

TEST_CASE("task_indices walks leaves left to right") {
  const WorkflowNode w =
      wf_serial({wf_task(1), wf_parallel({wf_task(2), wf_task(3)})});
  CHECK(task_indices(w) == std::vector<int>{1, 2, 3});
  CHECK(task_indices(wf_task(1)) == std::vector<int>{1});

  const WorkflowNode nested = wf_serial(
      {wf_loop(wf_task(4), 2), wf_switch({wf_task(2), wf_task(1)}), wf_task(3)});
  CHECK(task_indices(nested) == std::vector<int>{4, 2, 1, 3});
}

TEST_CASE("task_indices rejects a duplicated task") {
  const WorkflowNode w = wf_serial({wf_task(1), wf_task(1)});
  CHECK_THROWS_AS(task_indices(w), std::runtime_error);
}

TEST_CASE("loop iterations below one are reported") {
  std::vector<std::string> findings;
  collect_workflow_issues(wf_loop(wf_task(1), 0), 1, findings);
  CHECK(mentions(findings, "loop iterations must be ≥ 1"));

  findings.clear();
  collect_workflow_issues(wf_loop(wf_task(1), 1), 1, findings);
  CHECK(findings.empty());
}

TEST_CASE("composite nodes need at least two children") {
  for (auto make : {wf_serial, wf_parallel, wf_switch}) {
    std::vector<std::string> findings;
    collect_workflow_issues(make({wf_task(1)}), 1, findings);
    CHECK(mentions(findings, "at least 2 children"));
  }
}

TEST_CASE("coverage findings name the offending task") {
  std::vector<std::string> findings;
  collect_workflow_issues(wf_serial({wf_task(1), wf_task(3)}), 3, findings);
  CHECK(mentions(findings, "task 2"));

  findings.clear();
  collect_workflow_issues(wf_serial({wf_task(1), wf_task(1)}), 2, findings);
  CHECK(mentions(findings, "task 1"));
  CHECK(mentions(findings, "task 2"));

  findings.clear();
  collect_workflow_issues(wf_serial({wf_task(1), wf_task(5)}), 2, findings);
  CHECK(mentions(findings, "unknown task 5"));
}

TEST_CASE("a complete workflow over its tasks yields no findings") {
  const WorkflowNode w = wf_serial(
      {wf_task(1), wf_parallel({wf_task(2), wf_task(3)}), wf_loop(wf_task(4), 3)});
  std::vector<std::string> findings;
  collect_workflow_issues(w, 4, findings);
  CHECK(findings.empty());
}
