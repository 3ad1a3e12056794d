#pragma once

#include <vector>

#include "pwss/aggregate.hpp"

namespace pwss {

// Violation counts plus the per-instance maxima they are normalised by.
struct ViolationProfile {
  int c = 0;      // violated global QoS bounds
  int v = 0;      // violated interservice tuples
  bool t = false; // derived transactional property outside the allowed set
  int c_max = 0;  // number of bounded attributes
  int v_max = 0;  // |DC| + |CC|
};

// Count of bounded attributes whose aggregated value falls on the wrong side
// of its bound. Positive attributes must reach the bound, negative ones must
// stay under it; equality satisfies.
int count_qc_violations(const ProblemInstance& instance,
                        const std::vector<double>& aggregated);

int count_ic_violations(const ProblemInstance& instance,
                        const std::vector<std::string>& genes);

bool tc_violation(const ProblemInstance& instance,
                  const std::vector<std::string>& genes);

// Affine map of value from [from_min, from_max] onto [to_min, to_max].
double map_range(double value, double from_min, double from_max, double to_min,
                 double to_max);

// Penalty-banded fitness: the violated-kind combination picks a disjoint
// subrange of [-1/6, 1], feasible assignments occupy [0.75, 1]. A kind whose
// maximum is zero cannot be violated and its ratio contributes zero.
double fitness_value(double composite_utility, const ViolationProfile& p);

}  // namespace pwss
