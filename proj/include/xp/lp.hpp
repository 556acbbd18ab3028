#ifndef XP_LP_HPP
#define XP_LP_HPP

#include <optional>

#include "xp/qmatrix.hpp"

namespace xp {

// Exact rational linear programming in standard form:
//   maximise c.x  subject to  A x = b,  x >= 0.
// Small dense two-phase simplex with Bland's rule; sized for the
// complex-validation workloads (tens of variables).
struct LpResult {
    enum class Status { Optimal, Infeasible, Unbounded } status;
    Rational value;           // objective at optimum
    std::vector<Rational> x;  // primal solution
};

LpResult lp_solve(const QMatrix& a, const std::vector<Rational>& b,
                  const std::vector<Rational>& c);

} // namespace xp

#endif
