#include "pwss/scoring.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "util.hpp"

namespace pwss {

ConstraintFlags constraint_flags(const ProblemInstance& instance) {
  ConstraintFlags f;
  for (const auto& bound : instance.qc)
    if (bound) f.c = true;
  f.v = !instance.dc.empty() || !instance.cc.empty();
  f.t = !instance.tc.empty();
  return f;
}

namespace {

// One scaled term of the weighted sum. A collapsed range means the candidates
// are indistinguishable on this attribute, which counts as fully good.
double scaled_term(double q, double lo, double hi, Direction direction) {
  if (hi == lo) return 1.0;
  return direction == Direction::Positive ? (q - lo) / (hi - lo)
                                          : (hi - q) / (hi - lo);
}

}  // namespace

double candidate_utility(const CandidateService& s, int task,
                         const QoSBounds& bounds,
                         const std::vector<QoSAttributeSpec>& attributes) {
  const auto& lo = bounds.per_task_min[static_cast<std::size_t>(task) - 1];
  const auto& hi = bounds.per_task_max[static_cast<std::size_t>(task) - 1];
  double u = 0.0;
  for (std::size_t r = 0; r < attributes.size(); ++r)
    u += attributes[r].weight *
         scaled_term(s.qos[r], lo[r], hi[r], attributes[r].direction);
  return u;
}

double composite_utility(const ProblemInstance& instance,
                         const std::vector<double>& aggregated,
                         const QoSBounds& bounds) {
  double u = 0.0;
  for (std::size_t r = 0; r < instance.attributes.size(); ++r)
    u += instance.attributes[r].weight *
         scaled_term(aggregated[r], bounds.composite_min[r],
                     bounds.composite_max[r], instance.attributes[r].direction);
  return std::clamp(u, 0.0, 1.0);
}

ScoreCard score_candidate(const CandidateService& s,
                          const ProblemInstance& instance,
                          const QoSBounds& bounds) {
  ScoreCard card;
  card.candidate_id = s.id;
  card.utility = candidate_utility(s, s.task, bounds, instance.attributes);

  int c_max = 0;
  int c_violated = 0;
  for (std::size_t r = 0; r < instance.qc.size(); ++r) {
    if (!instance.qc[r]) continue;
    ++c_max;
    const double bound = *instance.qc[r];
    const bool bad = instance.attributes[r].direction == Direction::Negative
                         ? s.qos[r] > bound
                         : s.qos[r] < bound;
    if (bad) ++c_violated;
  }
  card.uc = c_max - c_violated;

  const auto mentions = [&s](const InterserviceConstraint& ic) {
    return (ic.i == s.task && ic.p == s.id) || (ic.j == s.task && ic.q == s.id);
  };
  int mentioned = 0;
  for (const InterserviceConstraint& ic : instance.dc)
    if (mentions(ic)) ++mentioned;
  for (const InterserviceConstraint& ic : instance.cc)
    if (mentions(ic)) ++mentioned;
  card.uv = static_cast<int>(instance.dc.size() + instance.cc.size()) - mentioned;

  switch (s.tp) {
    case TransactionalProperty::CompensatableRetriable: card.ut = 3; break;
    case TransactionalProperty::Compensatable:
    case TransactionalProperty::Retriable: card.ut = 2; break;
    case TransactionalProperty::Pivot: card.ut = 1; break;
  }
  return card;
}

namespace {

// Dense ranks 1..m, 1 for the highest score, ties by ascending id.
template <typename Score>
void fill_ranks(std::vector<ScoreCard>& cards, Score score, int ScoreCard::*rank) {
  std::vector<std::size_t> order(cards.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (score(cards[a]) != score(cards[b]))
      return score(cards[a]) > score(cards[b]);
    return cards[a].candidate_id < cards[b].candidate_id;
  });
  for (std::size_t pos = 0; pos < order.size(); ++pos)
    cards[order[pos]].*rank = static_cast<int>(pos) + 1;
}

}  // namespace

void rank_task(std::vector<ScoreCard>& cards) {
  fill_ranks(cards, [](const ScoreCard& c) { return c.utility; },
             &ScoreCard::rq);
  fill_ranks(cards, [](const ScoreCard& c) { return double(c.uc); },
             &ScoreCard::rc);
  fill_ranks(cards, [](const ScoreCard& c) { return double(c.uv); },
             &ScoreCard::rv);
  fill_ranks(cards, [](const ScoreCard& c) { return double(c.ut); },
             &ScoreCard::rt);
}

double global_rank(const ScoreCard& card, int rq_max, int rc_max, int rv_max,
                   int rt_max, ConstraintFlags flags) {
  double r = static_cast<double>(card.rq) / rq_max;
  if (flags.c) r += static_cast<double>(card.rc) / rc_max;
  if (flags.v) r += static_cast<double>(card.rv) / rv_max;
  if (flags.t) r += static_cast<double>(card.rt) / rt_max;
  return r;
}

std::vector<ScoreCard> score_and_rank_pool(const ProblemInstance& instance,
                                           const QoSBounds& bounds, int task) {
  const auto& pool = instance.pools[static_cast<std::size_t>(task) - 1];
  std::vector<ScoreCard> cards;
  cards.reserve(pool.size());
  for (const CandidateService& s : pool)
    cards.push_back(score_candidate(s, instance, bounds));
  rank_task(cards);
  // Ranks are permutations of 1..m, so every column's maximum is m.
  const int m = static_cast<int>(pool.size());
  const ConstraintFlags flags = constraint_flags(instance);
  for (ScoreCard& card : cards)
    card.global_rank = global_rank(card, m, m, m, m, flags);
  return cards;
}

std::vector<std::size_t> reduce_pool(const std::vector<CandidateService>& pool,
                                     const std::vector<ScoreCard>& cards,
                                     double fraction) {
  if (!(fraction > 0.0 && fraction <= 1.0))
    throw std::invalid_argument("pool fraction must lie in (0,1]");
  const int m = static_cast<int>(pool.size());
  const int keep = std::max(1, detail::ceil_count(fraction * m));
  std::vector<std::size_t> order(pool.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (cards[a].global_rank != cards[b].global_rank)
      return cards[a].global_rank < cards[b].global_rank;
    return cards[a].candidate_id < cards[b].candidate_id;
  });
  order.resize(static_cast<std::size_t>(std::min(keep, m)));
  std::sort(order.begin(), order.end());
  return order;
}

}  // namespace pwss
