#ifndef XP_PARSE_HPP
#define XP_PARSE_HPP

#include <functional>
#include <memory>

#include "xp/form.hpp"

namespace xp {

// Expression grammar shared by the CLI and the JSON formats:
//   variables  z, x1..xn          (z is an alias for x1)
//   literals   integers, decimals, i
//   operators  + - * / ^ and parentheses
// The variable count is the largest xk mentioned (min_vars can force more).
RatFunc parse_ratfunc(const std::string& text, int min_vars = 0);

// Differential forms of degree 0 or 1: sums of terms "EXPR", "EXPR*dz",
// "EXPR dz", "dz", "dx2", ...
RatForm parse_form(const std::string& text, int min_vars = 0);

// Constant expressions only.
// (declared in gaussian.hpp: parse_gaussian)

// Scalar expression with the extra functions needed by volume densities:
// exp(u), sin01(u) = sin(clamp(u,0,1)), sqrtp(u) = sqrt(max(u,0)).
class ScalarExpr {
public:
    virtual ~ScalarExpr() = default;
    virtual double eval(const std::vector<double>& x) const = 0;
    virtual int nvars() const = 0;
};

using ScalarExprPtr = std::shared_ptr<const ScalarExpr>;

ScalarExprPtr parse_scalar_expr(const std::string& text, int min_vars = 0);
ScalarExprPtr scalar_from_ratfunc(const RatFunc& f);

} // namespace xp

#endif
