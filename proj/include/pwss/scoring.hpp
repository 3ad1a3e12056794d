#pragma once

#include <cstddef>
#include <vector>

#include "pwss/aggregate.hpp"

namespace pwss {

// Per-candidate scores and ranks within one task's pool.
struct ScoreCard {
  std::string candidate_id;
  double utility = 0.0;  // U, in [0,1]
  int uc = 0;            // headroom against global QoS bounds
  int uv = 0;            // headroom against interservice tuples
  int ut = 0;            // transactional suitability, 1..3
  int rq = 0;            // per-task ranks, 1 = best
  int rc = 0;
  int rv = 0;
  int rt = 0;
  double global_rank = 0.0;  // R, smaller is better
};

// Which constraint families the instance actually uses; absent families are
// dropped from the global rank and never count as violated kinds.
struct ConstraintFlags {
  bool c = false;  // any global QoS bound present
  bool v = false;  // any interservice tuple present
  bool t = false;  // transactional constraint set non-empty
};

ConstraintFlags constraint_flags(const ProblemInstance& instance);

// Min-max scaled weighted utility against the candidate's own pool. A
// degenerate range (pool-wide constant attribute) contributes a full term:
// indistinguishable candidates count as equally good.
double candidate_utility(const CandidateService& s, int task, const QoSBounds& bounds,
                         const std::vector<QoSAttributeSpec>& attributes);

// Same scaling form against the composite bounds; clamped to [0,1].
// `aggregated` is the output of aggregate_composite for the assignment.
double composite_utility(const ProblemInstance& instance,
                         const std::vector<double>& aggregated,
                         const QoSBounds& bounds);

// Fills utility/uc/uv/ut; ranks are left to rank_task.
ScoreCard score_candidate(const CandidateService& s, const ProblemInstance& instance,
                          const QoSBounds& bounds);

// Fills rq/rc/rv/rt with dense ranks 1..m (1 = best, ties by ascending
// candidate id). cards must be aligned with the pool.
void rank_task(std::vector<ScoreCard>& cards);

// R = RQ/RQmax + c*RC/RCmax + v*RV/RVmax + t*RT/RTmax.
double global_rank(const ScoreCard& card, int rq_max, int rc_max, int rv_max,
                   int rt_max, ConstraintFlags flags);

// Scores, ranks and computes global ranks for one task's pool.
std::vector<ScoreCard> score_and_rank_pool(const ProblemInstance& instance,
                                           const QoSBounds& bounds, int task);

// Pool offsets of the max(1, ceil(fraction*m)) candidates with the smallest
// global rank (ties by id), returned in original pool order. fraction must
// lie in (0,1]; 1.0 keeps the pool as-is.
std::vector<std::size_t> reduce_pool(const std::vector<CandidateService>& pool,
                                     const std::vector<ScoreCard>& cards,
                                     double fraction);

}  // namespace pwss
