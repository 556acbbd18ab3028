#include "xp/ratfunc.hpp"

#include <cmath>
#include <sstream>

namespace xp {

RatFunc::RatFunc(Polynomial num, Polynomial den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw PoleError("denominator is identically zero");
    if (num_.nvars() != den_.nvars()) throw DimensionMismatch("num/den variable count mismatch");
    if (num_.is_zero()) den_ = Polynomial::constant(num_.nvars(), GaussianRational(1));
}

RatFunc::RatFunc(Polynomial num)
    : num_(std::move(num)), den_(Polynomial::constant(num_.nvars(), GaussianRational(1))) {}

RatFunc RatFunc::constant(int nvars, const GaussianRational& c) {
    return RatFunc(Polynomial::constant(nvars, c));
}

RatFunc RatFunc::variable(int nvars, int index) {
    return RatFunc(Polynomial::variable(nvars, index));
}

Polynomial RatFunc::as_polynomial() const {
    if (!is_polynomial()) throw Error("rational function is not a polynomial");
    GaussianRational d = den_.constant_value();
    return num_ * (GaussianRational(1) / d);
}

RatFunc RatFunc::derivative(int var) const {
    // (n/d)' = (n'd - nd')/d^2
    Polynomial n = num_.derivative(var) * den_ - num_ * den_.derivative(var);
    return RatFunc(n, den_ * den_);
}

RatFunc RatFunc::conj() const { return RatFunc(num_.conj(), den_.conj()); }

RatFunc RatFunc::widened(int new_nvars) const {
    return RatFunc(num_.widened(new_nvars), den_.widened(new_nvars));
}

std::complex<double> RatFunc::eval(const std::vector<std::complex<double>>& x) const {
    std::complex<double> d = den_.eval(x);
    std::complex<double> n = num_.eval(x);
    // Pole tolerance is relative to the coefficient scale of the denominator.
    if (std::abs(d) < 1e-300 || (std::abs(d) < 1e-13 && std::abs(n) > 1e3 * std::abs(d)))
        throw PoleError("denominator vanishes at evaluation point");
    return n / d;
}

std::complex<double> RatFunc::eval1(std::complex<double> z) const {
    return eval(std::vector<std::complex<double>>{z});
}

GaussianRational RatFunc::eval_exact(const std::vector<GaussianRational>& x) const {
    GaussianRational d = den_.eval_exact(x);
    if (d.is_zero()) throw PoleError("denominator vanishes at evaluation point (exact)");
    return num_.eval_exact(x) / d;
}

RatFunc operator+(const RatFunc& a, const RatFunc& b) {
    return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RatFunc operator-(const RatFunc& a, const RatFunc& b) { return a + (-b); }

RatFunc operator-(const RatFunc& a) { return RatFunc(-a.num_, a.den_); }

RatFunc operator*(const RatFunc& a, const RatFunc& b) {
    return RatFunc(a.num_ * b.num_, a.den_ * b.den_);
}

RatFunc operator/(const RatFunc& a, const RatFunc& b) {
    if (b.num_.is_zero()) throw PoleError("division by the zero function");
    return RatFunc(a.num_ * b.den_, a.den_ * b.num_);
}

RatFunc RatFunc::pow(int k) const {
    if (k < 0) return RatFunc::constant(nvars(), GaussianRational(1)) / this->pow(-k);
    RatFunc acc = RatFunc::constant(nvars(), GaussianRational(1));
    for (int i = 0; i < k; ++i) acc = acc * (*this);
    return acc;
}

std::string RatFunc::to_string(const std::vector<std::string>& names) const {
    if (den_.is_constant() && den_.constant_value() == GaussianRational(1))
        return num_.to_string(names);
    std::ostringstream os;
    os << "(" << num_.to_string(names) << ")/(" << den_.to_string(names) << ")";
    return os.str();
}

std::pair<RatFunc, RatFunc> real_imag_split(const RatFunc& f) {
    // On real arguments conj(q)(x) = conj(q(x)), so f = p*conj(q) / (q*conj(q))
    // has a real denominator; split the numerator by coefficient parts.
    Polynomial qc = f.den().conj();
    Polynomial den = f.den() * qc;   // real coefficients on real points
    Polynomial num = f.num() * qc;
    Polynomial re(num.nvars()), im(num.nvars());
    for (const auto& [e, c] : num.terms()) {
        re.add_term(e, GaussianRational(c.re));
        im.add_term(e, GaussianRational(c.im));
    }
    return {RatFunc(re, den), RatFunc(im, den)};
}

} // namespace xp
