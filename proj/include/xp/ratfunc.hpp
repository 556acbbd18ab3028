#ifndef XP_RATFUNC_HPP
#define XP_RATFUNC_HPP

#include "xp/poly.hpp"

namespace xp {

// Rational function over Q(i) in n ordered variables. The denominator is
// never identically zero; no gcd normalisation is attempted beyond
// stripping shared constant factors.
class RatFunc {
public:
    RatFunc() : num_(0), den_(Polynomial::constant(0, GaussianRational(1))) {}
    RatFunc(Polynomial num, Polynomial den);
    explicit RatFunc(Polynomial num);

    static RatFunc constant(int nvars, const GaussianRational& c);
    static RatFunc variable(int nvars, int index);

    const Polynomial& num() const { return num_; }
    const Polynomial& den() const { return den_; }
    int nvars() const { return num_.nvars(); }
    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_.is_constant(); }

    // Numerator divided by the constant denominator; throws if not polynomial.
    Polynomial as_polynomial() const;

    RatFunc derivative(int var) const;
    RatFunc conj() const;
    RatFunc widened(int new_nvars) const;

    std::complex<double> eval(const std::vector<std::complex<double>>& x) const;
    std::complex<double> eval1(std::complex<double> z) const; // univariate shortcut
    GaussianRational eval_exact(const std::vector<GaussianRational>& x) const;

    friend RatFunc operator+(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator-(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator-(const RatFunc& a);
    friend RatFunc operator*(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator/(const RatFunc& a, const RatFunc& b);
    RatFunc pow(int k) const;

    std::string to_string(const std::vector<std::string>& names = {}) const;

private:
    Polynomial num_;
    Polynomial den_;
};

// Splits f with Q(i) coefficients into real and imaginary parts as rational
// functions with purely real (rational) coefficients, valid on real
// arguments away from poles: f(x) = f1(x) + i*f2(x).
std::pair<RatFunc, RatFunc> real_imag_split(const RatFunc& f);

} // namespace xp

#endif
