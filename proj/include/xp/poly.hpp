#ifndef XP_POLY_HPP
#define XP_POLY_HPP

#include <complex>
#include <map>
#include <vector>

#include "xp/gaussian.hpp"

namespace xp {

// Sparse multivariate polynomial over Q(i), keyed by exponent vector.
// The number of variables is fixed per polynomial; exponent vectors all
// have length nvars().
class Polynomial {
public:
    using Exponents = std::vector<int>;

    Polynomial() : nvars_(0) {}
    explicit Polynomial(int nvars) : nvars_(nvars) {}

    static Polynomial constant(int nvars, const GaussianRational& c);
    static Polynomial variable(int nvars, int index);

    int nvars() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    GaussianRational constant_value() const; // 0 if zero polynomial

    // Total degree; -1 for the zero polynomial.
    int total_degree() const;
    // Degree in a single variable; -1 for the zero polynomial.
    int degree_in(int var) const;

    const std::map<Exponents, GaussianRational>& terms() const { return terms_; }

    void add_term(const Exponents& e, const GaussianRational& c);

    Polynomial conj() const;                    // conjugate coefficients
    Polynomial derivative(int var) const;

    // Re-embed into a polynomial ring with more variables (same indices).
    Polynomial widened(int new_nvars) const;

    std::complex<double> eval(const std::vector<std::complex<double>>& x) const;
    GaussianRational eval_exact(const std::vector<GaussianRational>& x) const;

    friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator-(const Polynomial& a);
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    Polynomial operator*(const GaussianRational& c) const;
    Polynomial pow(int k) const;

    friend bool operator==(const Polynomial& a, const Polynomial& b) {
        return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
    }

    std::string to_string(const std::vector<std::string>& names = {}) const;

private:
    int nvars_;
    std::map<Exponents, GaussianRational> terms_;
};

// --- univariate helpers (used by the curve module) ---

// Order of vanishing of p at the point a; p must be univariate and nonzero.
int valuation_at(const Polynomial& p, const GaussianRational& a);

// Synthetic division of univariate p by (z - a); remainder returned separately.
std::pair<Polynomial, GaussianRational> divide_linear(const Polynomial& p, const GaussianRational& a);

// Coefficient of z^k of a univariate polynomial.
GaussianRational coeff_of(const Polynomial& p, int k);

// Leading coefficient of a univariate polynomial.
GaussianRational leading_coeff(const Polynomial& p);

} // namespace xp

#endif
