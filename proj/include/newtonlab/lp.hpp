#pragma once
#include <optional>

#include "newtonlab/arith.hpp"

namespace nl {

// Constraints on x in Q^nvars: eq rows (a.x = b) and ge rows (a.x >= b).
struct LinearSystem {
  std::size_t nvars = 0;
  RMat eq;
  RVec eq_rhs;
  RMat ge;
  RVec ge_rhs;

  void add_eq(RVec a, Rat b) {
    eq.push_back(std::move(a));
    eq_rhs.push_back(std::move(b));
  }
  void add_ge(RVec a, Rat b) {
    ge.push_back(std::move(a));
    ge_rhs.push_back(std::move(b));
  }
};

// Exact phase-one simplex (Bland's rule). Returns a feasible point or nullopt.
std::optional<RVec> feasible_point(const LinearSystem& sys);

}  // namespace nl
