#pragma once

#include <string>
#include <vector>

namespace pwss {

enum class Direction { Positive, Negative };

// How a QoS attribute aggregates under each composition pattern. One value
// selects a whole row of per-pattern rules:
//
//   kind            serial    loop    parallel   switch
//   CriticalPath    sum       it*q    max        max     (latency-like)
//   Additive        sum       it*q    sum        max     (cost-like)
//   Multiplicative  product   q^it    product    min     (availability-like)
//   Bottleneck      min       q       min        min     (throughput-like)
enum class AggregationKind { CriticalPath, Additive, Multiplicative, Bottleneck };

enum class TransactionalProperty {
  Pivot,                   // p
  Compensatable,           // c
  Retriable,               // r
  CompensatableRetriable,  // cr
};

// Derived property of a composite. NonAtomic only ever results from
// derivation, never from a leaf service, and is absorbing under every
// composition rule.
enum class DerivedTP {
  Pivot,
  Compensatable,
  Retriable,
  CompensatableRetriable,
  NonAtomic,
};

struct QoSAttributeSpec {
  std::string name;
  Direction direction = Direction::Negative;
  AggregationKind aggregation = AggregationKind::CriticalPath;
  double weight = 0.0;  // in [0,1]; weights sum to 1 across an instance
  std::string unit;     // informational only

  bool operator==(const QoSAttributeSpec&) const = default;
};

struct CandidateService {
  std::string id;  // unique within the instance
  int task = 0;    // 1-based task index
  std::vector<double> qos;
  TransactionalProperty tp = TransactionalProperty::Pivot;

  bool operator==(const CandidateService&) const = default;
};

// (i, p, j, q): selecting candidate p for task i forces (dependency list) or
// forbids (conflict list) candidate q for task j.
struct InterserviceConstraint {
  int i = 0;
  std::string p;
  int j = 0;
  std::string q;

  bool operator==(const InterserviceConstraint&) const = default;
};

const char* to_string(Direction d);
const char* to_string(AggregationKind k);
const char* to_string(TransactionalProperty tp);
const char* to_string(DerivedTP tp);

// All parsers throw std::invalid_argument on unknown text.
Direction direction_from_string(const std::string& s);
AggregationKind aggregation_from_string(const std::string& s);
TransactionalProperty tp_from_string(const std::string& s);

inline DerivedTP to_derived(TransactionalProperty tp) {
  return static_cast<DerivedTP>(static_cast<int>(tp));
}

}  // namespace pwss
