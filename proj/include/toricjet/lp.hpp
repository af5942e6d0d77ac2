#pragma once

// Exact-rational two-phase simplex with Bland's rule. Variables are
// nonnegative; constraints are <=, = or >= rows.

#include <vector>

#include "toricjet/arith.hpp"

namespace toricjet {

enum class Sense { LessEqual, Equal, GreaterEqual };

struct LinearConstraint {
  RationalVector coeffs;
  Sense sense = Sense::Equal;
  Rational rhs;
};

enum class LpStatus { Optimal, Infeasible, Unbounded };

struct LpResult {
  LpStatus status = LpStatus::Infeasible;
  Rational value;
  RationalVector solution;  ///< one optimal point, when status == Optimal
};

class LinearProgram {
 public:
  explicit LinearProgram(std::size_t num_vars) : num_vars_(num_vars) {}

  std::size_t num_vars() const { return num_vars_; }
  void add_constraint(RationalVector coeffs, Sense sense, Rational rhs);

  LpResult maximize(const RationalVector& objective) const;
  LpResult minimize(const RationalVector& objective) const;

 private:
  std::size_t num_vars_;
  std::vector<LinearConstraint> constraints_;
};

}  // namespace toricjet
