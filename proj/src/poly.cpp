#include "xp/poly.hpp"

#include <algorithm>
#include <sstream>

namespace xp {

Polynomial Polynomial::constant(int nvars, const GaussianRational& c) {
    Polynomial p(nvars);
    p.add_term(Exponents(nvars, 0), c);
    return p;
}

Polynomial Polynomial::variable(int nvars, int index) {
    Polynomial p(nvars);
    Exponents e(nvars, 0);
    e.at(index) = 1;
    p.add_term(e, GaussianRational(1));
    return p;
}

bool Polynomial::is_constant() const {
    if (terms_.empty()) return true;
    if (terms_.size() > 1) return false;
    const auto& e = terms_.begin()->first;
    return std::all_of(e.begin(), e.end(), [](int k) { return k == 0; });
}

GaussianRational Polynomial::constant_value() const {
    Exponents zero(nvars_, 0);
    auto it = terms_.find(zero);
    return it == terms_.end() ? GaussianRational(0) : it->second;
}

int Polynomial::total_degree() const {
    int d = -1;
    for (const auto& [e, c] : terms_) {
        int s = 0;
        for (int k : e) s += k;
        d = std::max(d, s);
    }
    return d;
}

int Polynomial::degree_in(int var) const {
    int d = -1;
    for (const auto& [e, c] : terms_) d = std::max(d, e.at(var));
    return d;
}

void Polynomial::add_term(const Exponents& e, const GaussianRational& c) {
    if (c.is_zero()) return;
    if ((int)e.size() != nvars_) throw DimensionMismatch("exponent vector length mismatch");
    auto it = terms_.find(e);
    if (it == terms_.end()) {
        terms_.emplace(e, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

Polynomial Polynomial::conj() const {
    Polynomial p(nvars_);
    for (const auto& [e, c] : terms_) p.add_term(e, c.conj());
    return p;
}

Polynomial Polynomial::derivative(int var) const {
    Polynomial p(nvars_);
    for (const auto& [e, c] : terms_) {
        if (e.at(var) == 0) continue;
        Exponents d = e;
        d[var] -= 1;
        p.add_term(d, c * GaussianRational(Rational(e[var])));
    }
    return p;
}

Polynomial Polynomial::widened(int new_nvars) const {
    if (new_nvars < nvars_) throw DimensionMismatch("cannot shrink variable list");
    Polynomial p(new_nvars);
    for (const auto& [e, c] : terms_) {
        Exponents w = e;
        w.resize(new_nvars, 0);
        p.add_term(w, c);
    }
    return p;
}

std::complex<double> Polynomial::eval(const std::vector<std::complex<double>>& x) const {
    if ((int)x.size() != nvars_) throw DimensionMismatch("evaluation point dimension mismatch");
    std::complex<double> acc = 0.0;
    for (const auto& [e, c] : terms_) {
        std::complex<double> t = c.to_complex();
        for (int v = 0; v < nvars_; ++v)
            for (int k = 0; k < e[v]; ++k) t *= x[v];
        acc += t;
    }
    return acc;
}

GaussianRational Polynomial::eval_exact(const std::vector<GaussianRational>& x) const {
    if ((int)x.size() != nvars_) throw DimensionMismatch("evaluation point dimension mismatch");
    GaussianRational acc(0);
    for (const auto& [e, c] : terms_) {
        GaussianRational t = c;
        for (int v = 0; v < nvars_; ++v)
            for (int k = 0; k < e[v]; ++k) t *= x[v];
        acc += t;
    }
    return acc;
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    if (a.nvars_ != b.nvars_) throw DimensionMismatch("polynomial variable count mismatch");
    Polynomial p = a;
    for (const auto& [e, c] : b.terms_) p.add_term(e, c);
    return p;
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + (-b); }

Polynomial operator-(const Polynomial& a) {
    Polynomial p(a.nvars_);
    for (const auto& [e, c] : a.terms_) p.add_term(e, -c);
    return p;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.nvars_ != b.nvars_) throw DimensionMismatch("polynomial variable count mismatch");
    Polynomial p(a.nvars_);
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_) {
            Polynomial::Exponents e = ea;
            for (int v = 0; v < a.nvars_; ++v) e[v] += eb[v];
            p.add_term(e, ca * cb);
        }
    return p;
}

Polynomial Polynomial::operator*(const GaussianRational& c) const {
    Polynomial p(nvars_);
    for (const auto& [e, k] : terms_) p.add_term(e, k * c);
    return p;
}

Polynomial Polynomial::pow(int k) const {
    if (k < 0) throw Error("negative power of a polynomial");
    Polynomial acc = Polynomial::constant(nvars_, GaussianRational(1));
    for (int i = 0; i < k; ++i) acc = acc * (*this);
    return acc;
}

std::string Polynomial::to_string(const std::vector<std::string>& names) const {
    if (terms_.empty()) return "0";
    auto var_name = [&](int v) {
        if (v < (int)names.size()) return names[v];
        if (nvars_ == 1) return std::string("z");
        return "x" + std::to_string(v + 1);
    };
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << "(" << gaussian_to_string(c) << ")";
        for (int v = 0; v < nvars_; ++v) {
            if (e[v] == 0) continue;
            os << "*" << var_name(v);
            if (e[v] > 1) os << "^" << e[v];
        }
    }
    return os.str();
}

int valuation_at(const Polynomial& p, const GaussianRational& a) {
    if (p.nvars() != 1) throw DimensionMismatch("valuation_at needs a univariate polynomial");
    if (p.is_zero()) throw Error("valuation of the zero polynomial");
    Polynomial q = p;
    int v = 0;
    while (true) {
        auto [quot, rem] = divide_linear(q, a);
        if (!rem.is_zero()) return v;
        ++v;
        q = quot;
        if (q.is_zero()) return v; // p was a power of (z-a) times a constant
    }
}

std::pair<Polynomial, GaussianRational> divide_linear(const Polynomial& p, const GaussianRational& a) {
    if (p.nvars() != 1) throw DimensionMismatch("divide_linear needs a univariate polynomial");
    int d = p.degree_in(0);
    std::vector<GaussianRational> coeffs(std::max(d + 1, 1), GaussianRational(0));
    for (const auto& [e, c] : p.terms()) coeffs[e[0]] = c;
    // Horner: p = (z-a) q + r
    GaussianRational carry(0);
    Polynomial q(1);
    for (int k = d; k >= 1; --k) {
        carry = coeffs[k] + carry * a;
        q.add_term({k - 1}, carry);
    }
    GaussianRational rem = (d >= 0 ? coeffs[0] : GaussianRational(0)) + carry * a;
    return {q, rem};
}

GaussianRational coeff_of(const Polynomial& p, int k) {
    if (p.nvars() != 1) throw DimensionMismatch("coeff_of needs a univariate polynomial");
    auto it = p.terms().find({k});
    return it == p.terms().end() ? GaussianRational(0) : it->second;
}

GaussianRational leading_coeff(const Polynomial& p) {
    if (p.is_zero()) return GaussianRational(0);
    return coeff_of(p, p.degree_in(0));
}

} // namespace xp
