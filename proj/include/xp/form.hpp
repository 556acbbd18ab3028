#ifndef XP_FORM_HPP
#define XP_FORM_HPP

#include <map>

#include "xp/ratfunc.hpp"

namespace xp {

// Rational algebraic differential form sum_I a_I dx_I on affine n-space.
// Index sets are strictly increasing 0-based variable indices.
class RatForm {
public:
    using Index = std::vector<int>;

    RatForm() : nvars_(0), degree_(0) {}
    RatForm(int nvars, int degree) : nvars_(nvars), degree_(degree) {
        if (degree_ < 0 || degree_ > nvars_) throw DimensionMismatch("form degree out of range");
    }

    static RatForm zero(int nvars, int degree) { return RatForm(nvars, degree); }
    static RatForm function(const RatFunc& f); // degree-0 form

    int nvars() const { return nvars_; }
    int degree() const { return degree_; }
    bool is_zero() const;

    const std::map<Index, RatFunc>& terms() const { return terms_; }
    RatFunc coeff(const Index& idx) const;

    // Adds c dx_idx; idx need not be sorted, the sign of the sorting
    // permutation is absorbed into the coefficient.
    void add_term(Index idx, RatFunc c);

    friend RatForm operator+(const RatForm& a, const RatForm& b);
    friend RatForm operator-(const RatForm& a, const RatForm& b);
    friend RatForm operator-(const RatForm& a);
    RatForm operator*(const GaussianRational& c) const;
    RatForm operator*(const RatFunc& c) const;

    friend RatForm wedge(const RatForm& a, const RatForm& b);

    // Exterior derivative (coefficient-wise d then wedge with dx_j).
    RatForm d() const;

    std::string to_string(const std::vector<std::string>& names = {}) const;

private:
    int nvars_;
    int degree_;
    std::map<Index, RatFunc> terms_;
};

} // namespace xp

#endif
