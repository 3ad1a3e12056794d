#pragma once

#include <atomic>
#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

#include "pwss/fitness.hpp"
#include "pwss/scoring.hpp"

namespace pwss {

using EvalCounter = std::atomic<std::uint64_t>;

// Owns the per-instance precomputation (bounds, constraint flags, id lookup)
// and turns gene vectors into fully evaluated individuals. One counter tick
// per evaluate() call; nothing else counts.
class Evaluator {
 public:
  explicit Evaluator(const ProblemInstance& instance);

  const ProblemInstance& instance() const { return *instance_; }
  const QoSBounds& bounds() const { return bounds_; }
  ConstraintFlags flags() const { return flags_; }
  int c_max() const { return c_max_; }
  int v_max() const { return v_max_; }

  // Candidate by id within a task's pool; throws on unknown id.
  const CandidateService& candidate(int task, const std::string& id) const;

  std::vector<double> aggregate(const std::vector<std::string>& genes) const;
  DerivedTP derived_tp_of(const std::vector<std::string>& genes) const;

  Individual evaluate(const std::vector<std::string>& genes,
                      EvalCounter& counter) const;

 private:
  const ProblemInstance* instance_;
  QoSBounds bounds_;
  ConstraintFlags flags_;
  int c_max_ = 0;
  int v_max_ = 0;
  // per task: candidate id -> offset into the pool
  std::vector<std::unordered_map<std::string, std::size_t>> index_;
};

}  // namespace pwss
