#include "pwss/types.hpp"

#include <stdexcept>

namespace pwss {

const char* to_string(Direction d) {
  return d == Direction::Positive ? "positive" : "negative";
}

const char* to_string(AggregationKind k) {
  switch (k) {
    case AggregationKind::CriticalPath: return "critical_path";
    case AggregationKind::Additive: return "additive";
    case AggregationKind::Multiplicative: return "multiplicative";
    case AggregationKind::Bottleneck: return "bottleneck";
  }
  return "?";
}

const char* to_string(TransactionalProperty tp) {
  switch (tp) {
    case TransactionalProperty::Pivot: return "p";
    case TransactionalProperty::Compensatable: return "c";
    case TransactionalProperty::Retriable: return "r";
    case TransactionalProperty::CompensatableRetriable: return "cr";
  }
  return "?";
}

const char* to_string(DerivedTP tp) {
  switch (tp) {
    case DerivedTP::Pivot: return "p";
    case DerivedTP::Compensatable: return "c";
    case DerivedTP::Retriable: return "r";
    case DerivedTP::CompensatableRetriable: return "cr";
    case DerivedTP::NonAtomic: return "na";
  }
  return "?";
}

Direction direction_from_string(const std::string& s) {
  if (s == "positive") return Direction::Positive;
  if (s == "negative") return Direction::Negative;
  throw std::invalid_argument("unknown direction: " + s);
}

AggregationKind aggregation_from_string(const std::string& s) {
  if (s == "critical_path") return AggregationKind::CriticalPath;
  if (s == "additive") return AggregationKind::Additive;
  if (s == "multiplicative") return AggregationKind::Multiplicative;
  if (s == "bottleneck") return AggregationKind::Bottleneck;
  throw std::invalid_argument("unknown aggregation: " + s);
}

TransactionalProperty tp_from_string(const std::string& s) {
  if (s == "p") return TransactionalProperty::Pivot;
  if (s == "c") return TransactionalProperty::Compensatable;
  if (s == "r") return TransactionalProperty::Retriable;
  if (s == "cr") return TransactionalProperty::CompensatableRetriable;
  throw std::invalid_argument("unknown transactional property: " + s);
}

}  // namespace pwss
