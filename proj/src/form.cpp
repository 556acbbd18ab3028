#include "xp/form.hpp"

#include <algorithm>
#include <sstream>

namespace xp {

namespace {

// Sorts idx in place, returns the permutation sign, or 0 on a repeated index.
int sort_sign(std::vector<int>& idx) {
    int sign = 1;
    for (size_t i = 1; i < idx.size(); ++i)
        for (size_t j = i; j > 0 && idx[j - 1] >= idx[j]; --j) {
            if (idx[j - 1] == idx[j]) return 0;
            std::swap(idx[j - 1], idx[j]);
            sign = -sign;
        }
    return sign;
}

} // namespace

RatForm RatForm::function(const RatFunc& f) {
    RatForm w(f.nvars(), 0);
    w.add_term({}, f);
    return w;
}

bool RatForm::is_zero() const {
    for (const auto& [i, c] : terms_)
        if (!c.is_zero()) return false;
    return true;
}

RatFunc RatForm::coeff(const Index& idx) const {
    auto it = terms_.find(idx);
    if (it == terms_.end()) return RatFunc::constant(nvars_, GaussianRational(0));
    return it->second;
}

void RatForm::add_term(Index idx, RatFunc c) {
    if ((int)idx.size() != degree_) throw DimensionMismatch("index set size != form degree");
    for (int v : idx)
        if (v < 0 || v >= nvars_) throw DimensionMismatch("form index out of range");
    int sign = sort_sign(idx);
    if (sign == 0 || c.is_zero()) return;
    if (sign < 0) c = -c;
    auto it = terms_.find(idx);
    if (it == terms_.end()) {
        terms_.emplace(std::move(idx), std::move(c));
    } else {
        it->second = it->second + c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

RatForm operator+(const RatForm& a, const RatForm& b) {
    if (a.nvars_ != b.nvars_ || a.degree_ != b.degree_)
        throw DimensionMismatch("form shape mismatch in +");
    RatForm r = a;
    for (const auto& [i, c] : b.terms_) r.add_term(i, c);
    return r;
}

RatForm operator-(const RatForm& a, const RatForm& b) { return a + (-b); }

RatForm operator-(const RatForm& a) {
    RatForm r(a.nvars_, a.degree_);
    for (const auto& [i, c] : a.terms_) r.add_term(i, -c);
    return r;
}

RatForm RatForm::operator*(const GaussianRational& c) const {
    RatForm r(nvars_, degree_);
    for (const auto& [i, k] : terms_) r.add_term(i, k * RatFunc::constant(nvars_, c));
    return r;
}

RatForm RatForm::operator*(const RatFunc& c) const {
    RatForm r(nvars_, degree_);
    for (const auto& [i, k] : terms_) r.add_term(i, k * c);
    return r;
}

RatForm wedge(const RatForm& a, const RatForm& b) {
    if (a.nvars_ != b.nvars_) throw DimensionMismatch("form variable count mismatch in wedge");
    int deg = a.degree_ + b.degree_;
    if (deg > a.nvars_) return RatForm::zero(a.nvars_, std::min(deg, a.nvars_));
    RatForm r(a.nvars_, deg);
    for (const auto& [ia, ca] : a.terms_)
        for (const auto& [ib, cb] : b.terms_) {
            std::vector<int> idx = ia;
            idx.insert(idx.end(), ib.begin(), ib.end());
            r.add_term(std::move(idx), ca * cb);
        }
    return r;
}

RatForm RatForm::d() const {
    if (degree_ >= nvars_) return RatForm::zero(nvars_, std::min(degree_ + 1, nvars_));
    RatForm r(nvars_, degree_ + 1);
    for (const auto& [idx, c] : terms_)
        for (int v = 0; v < nvars_; ++v) {
            RatFunc dc = c.derivative(v);
            if (dc.is_zero()) continue;
            std::vector<int> j;
            j.push_back(v);
            j.insert(j.end(), idx.begin(), idx.end());
            r.add_term(std::move(j), std::move(dc));
        }
    return r;
}

std::string RatForm::to_string(const std::vector<std::string>& names) const {
    auto var_name = [&](int v) {
        if (v < (int)names.size()) return names[v];
        if (nvars_ == 1) return std::string("z");
        return "x" + std::to_string(v + 1);
    };
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [idx, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << "(" << c.to_string(names) << ")";
        for (int v : idx) os << "*d" << var_name(v);
    }
    return os.str();
}

} // namespace xp
