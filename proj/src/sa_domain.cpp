#include "xp/sa_domain.hpp"

#include <algorithm>

namespace xp {

PTildeClass classify_ptilde(const PTildePoint& p) {
    if (p.kind == PTildePoint::Kind::Finite) return PTildeClass::Finite;
    const GaussianRational& d = p.value;
    if (d.is_zero()) throw ZeroDirectionError("direction at infinity must be nonzero");
    if (d.im == 0 && d.re > 0) return PTildeClass::OneInfinity;
    if (d.re > 0) return PTildeClass::PositiveInfinityDirection;
    return PTildeClass::NonpositiveInfinityDirection;
}

bool in_positive_sector_model(const PTildePoint& p) {
    PTildeClass c = classify_ptilde(p);
    return c == PTildeClass::Finite || c == PTildeClass::OneInfinity ||
           c == PTildeClass::PositiveInfinityDirection;
}

bool in_single_ray_model(const PTildePoint& p) {
    PTildeClass c = classify_ptilde(p);
    return c == PTildeClass::Finite || c == PTildeClass::OneInfinity;
}

bool same_direction(const GaussianRational& a, const GaussianRational& b) {
    if (a.is_zero() || b.is_zero()) throw ZeroDirectionError("zero direction");
    Rational cross = a.re * b.im - a.im * b.re;
    Rational dot = a.re * b.re + a.im * b.im;
    return cross == 0 && dot > 0;
}

namespace {

bool clause_holds_exact(const SignClause& c, const std::vector<GaussianRational>& x) {
    for (const auto& p : c.eq)
        if (!p.eval_exact(x).is_zero()) return false;
    for (const auto& q : c.gt) {
        GaussianRational v = q.eval_exact(x);
        if (!(v.im == 0 && v.re > 0)) return false;
    }
    return true;
}

bool clause_holds(const SignClause& c, const std::vector<std::complex<double>>& x, double tol) {
    for (const auto& p : c.eq)
        if (std::abs(p.eval(x)) > tol) return false;
    for (const auto& q : c.gt)
        if (q.eval(x).real() <= -tol) return false;
    return true;
}

} // namespace

bool SignConditionRegion::contains_exact(const std::vector<Rational>& x) const {
    if ((int)x.size() != dim) throw DimensionMismatch("region membership dimension mismatch");
    std::vector<GaussianRational> gx;
    gx.reserve(x.size());
    for (const auto& v : x) gx.emplace_back(v);
    for (const auto& c : clauses)
        if (clause_holds_exact(c, gx)) return true;
    return false;
}

bool SignConditionRegion::contains(const std::vector<double>& x, double tol) const {
    if ((int)x.size() != dim) throw DimensionMismatch("region membership dimension mismatch");
    std::vector<std::complex<double>> cx(x.begin(), x.end());
    for (const auto& c : clauses)
        if (clause_holds(c, cx, tol)) return true;
    return false;
}

namespace {

Polynomial poly_from_json(const nlohmann::json& j, int dim) {
    // coefficient map: {"e1,e2,...": "p/q", ...}
    Polynomial p(dim);
    for (auto it = j.begin(); it != j.end(); ++it) {
        std::vector<int> exps;
        std::string key = it.key();
        size_t pos = 0;
        while (pos <= key.size()) {
            size_t comma = key.find(',', pos);
            std::string part = key.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
            if (!part.empty()) exps.push_back(std::stoi(part));
            if (comma == std::string::npos) break;
            pos = comma + 1;
        }
        if ((int)exps.size() != dim) throw ParseError("exponent key '" + key + "' has wrong arity");
        p.add_term(exps, GaussianRational(parse_rational(it.value().get<std::string>())));
    }
    return p;
}

nlohmann::json poly_to_json(const Polynomial& p) {
    nlohmann::json j = nlohmann::json::object();
    for (const auto& [e, c] : p.terms()) {
        std::string key;
        for (size_t i = 0; i < e.size(); ++i) {
            if (i) key += ",";
            key += std::to_string(e[i]);
        }
        if (c.im != 0) throw Error("region polynomials must have rational coefficients");
        j[key] = rat_to_string(c.re);
    }
    return j;
}

} // namespace

SignConditionRegion region_from_json(const nlohmann::json& j) {
    SignConditionRegion r;
    r.dim = j.at("dim").get<int>();
    for (const auto& cj : j.at("clauses")) {
        SignClause c;
        if (cj.contains("eq"))
            for (const auto& pj : cj["eq"]) c.eq.push_back(poly_from_json(pj, r.dim));
        if (cj.contains("gt"))
            for (const auto& pj : cj["gt"]) c.gt.push_back(poly_from_json(pj, r.dim));
        r.clauses.push_back(std::move(c));
    }
    return r;
}

nlohmann::json region_to_json(const SignConditionRegion& r) {
    nlohmann::json j;
    j["dim"] = r.dim;
    j["clauses"] = nlohmann::json::array();
    for (const auto& c : r.clauses) {
        nlohmann::json cj;
        cj["eq"] = nlohmann::json::array();
        cj["gt"] = nlohmann::json::array();
        for (const auto& p : c.eq) cj["eq"].push_back(poly_to_json(p));
        for (const auto& p : c.gt) cj["gt"].push_back(poly_to_json(p));
        j["clauses"].push_back(std::move(cj));
    }
    return j;
}

SignConditionRegion box_region(const std::vector<std::pair<Rational, Rational>>& bounds) {
    SignConditionRegion r;
    r.dim = (int)bounds.size();
    SignClause c;
    for (int v = 0; v < r.dim; ++v) {
        // x_v - lo > 0 and hi - x_v > 0
        Polynomial lo = Polynomial::variable(r.dim, v) -
                        Polynomial::constant(r.dim, GaussianRational(bounds[v].first));
        Polynomial hi = Polynomial::constant(r.dim, GaussianRational(bounds[v].second)) -
                        Polynomial::variable(r.dim, v);
        c.gt.push_back(lo);
        c.gt.push_back(hi);
    }
    r.clauses.push_back(std::move(c));
    return r;
}

PseudoOrientation PseudoOrientation::whole(Rational lo, Rational hi, int sign) {
    PseudoOrientation po;
    po.pieces.push_back({std::move(lo), std::move(hi), sign});
    po.check_disjoint();
    return po;
}

void PseudoOrientation::check_disjoint() const {
    std::vector<OrientedPiece> sorted = pieces;
    std::sort(sorted.begin(), sorted.end(),
              [](const OrientedPiece& a, const OrientedPiece& b) { return a.lo < b.lo; });
    for (const auto& p : sorted) {
        if (!(p.lo < p.hi)) throw Error("degenerate oriented piece");
        if (p.sign != 1 && p.sign != -1) throw Error("piece sign must be +1 or -1");
    }
    for (size_t i = 1; i < sorted.size(); ++i)
        if (sorted[i].lo < sorted[i - 1].hi)
            throw Error("oriented pieces overlap");
}

PseudoOrientation PseudoOrientation::restrict(
    const std::vector<std::pair<Rational, Rational>>& sub) const {
    PseudoOrientation out;
    for (const auto& [lo, hi] : sub) {
        if (!(lo < hi)) throw DimensionMismatch("restriction interval has lower dimension");
        for (const auto& p : pieces) {
            Rational a = std::max(p.lo, lo), b = std::min(p.hi, hi);
            if (a < b) out.pieces.push_back({a, b, p.sign});
        }
    }
    out.check_disjoint();
    return out;
}

PseudoOrientation PseudoOrientation::remove_points(const std::vector<Rational>& pts) const {
    PseudoOrientation out;
    for (const auto& p : pieces) {
        std::vector<Rational> cuts;
        for (const auto& t : pts)
            if (p.lo < t && t < p.hi) cuts.push_back(t);
        std::sort(cuts.begin(), cuts.end());
        Rational prev = p.lo;
        for (const auto& t : cuts) {
            out.pieces.push_back({prev, t, p.sign});
            prev = t;
        }
        out.pieces.push_back({prev, p.hi, p.sign});
    }
    out.check_disjoint();
    return out;
}

} // namespace xp
