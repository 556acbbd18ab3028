#include "xp/simplex.hpp"

#include <algorithm>
#include <functional>

#include "xp/lp.hpp"

namespace xp {

int GeomComplex::add_vertex(const Point& p) {
    if ((int)p.size() != ambient_) throw DimensionMismatch("vertex has wrong ambient dimension");
    auto it = vertex_ids_.find(p);
    if (it != vertex_ids_.end()) return it->second;
    int id = (int)vertices_.size();
    vertices_.push_back(p);
    vertex_ids_.emplace(p, id);
    return id;
}

void GeomComplex::add_simplex(const std::vector<int>& vertex_ids) {
    VertexSet s = vertex_ids;
    std::sort(s.begin(), s.end());
    if (std::adjacent_find(s.begin(), s.end()) != s.end())
        throw Error("repeated vertex in simplex");
    for (int v : s)
        if (v < 0 || v >= (int)vertices_.size()) throw Error("vertex id out of range");
    if (!affinely_independent(s)) throw Error("simplex vertices are affinely dependent");
    simplices_.insert(std::move(s));
}

int GeomComplex::find_vertex(const Point& p) const {
    auto it = vertex_ids_.find(p);
    return it == vertex_ids_.end() ? -1 : it->second;
}

int GeomComplex::dim() const {
    int d = -1;
    for (const auto& s : simplices_) d = std::max(d, dim_of(s));
    return d;
}

bool GeomComplex::affinely_independent(const std::vector<int>& ids) const {
    if (ids.size() <= 1) return true;
    QMatrix m((int)ids.size() - 1, ambient_);
    for (size_t i = 1; i < ids.size(); ++i)
        for (int j = 0; j < ambient_; ++j)
            m.at((int)i - 1, j) = vertices_[ids[i]][j] - vertices_[ids[0]][j];
    return rank_bareiss(m) == (int)ids.size() - 1;
}

Point GeomComplex::barycenter(const VertexSet& s) const {
    Point b(ambient_, Rational(0));
    for (int v : s)
        for (int j = 0; j < ambient_; ++j) b[j] += vertices_[v][j];
    Rational n((long)s.size());
    for (auto& c : b) c /= n;
    return b;
}

std::vector<VertexSet> GeomComplex::faces(const VertexSet& s) {
    std::vector<VertexSet> out;
    const size_t n = s.size();
    for (size_t mask = 1; mask < (size_t(1) << n); ++mask) {
        VertexSet f;
        for (size_t i = 0; i < n; ++i)
            if (mask & (size_t(1) << i)) f.push_back(s[i]);
        out.push_back(std::move(f));
    }
    return out;
}

namespace {

// Decides how the closed hulls of two simplices intersect, exactly.
// Feasible region: conv(A) ∩ conv(B) in barycentric coordinates.
struct PairCheck {
    // true if closures intersect
    bool closures_meet;
    // true if the intersection equals the closed hull of the common vertices
    bool is_common_face;
};

PairCheck check_pair(const GeomComplex& K, const VertexSet& s1, const VertexSet& s2) {
    const int N = K.ambient();
    const int n1 = (int)s1.size(), n2 = (int)s2.size();
    // variables: lambda (n1), mu (n2); constraints: coordinates + two sum-to-one rows
    QMatrix A(N + 2, n1 + n2);
    std::vector<Rational> b(N + 2, Rational(0));
    for (int j = 0; j < N; ++j) {
        for (int i = 0; i < n1; ++i) A.at(j, i) = K.vertices()[s1[i]][j];
        for (int i = 0; i < n2; ++i) A.at(j, n1 + i) = -K.vertices()[s2[i]][j];
    }
    for (int i = 0; i < n1; ++i) A.at(N, i) = 1;
    b[N] = 1;
    for (int i = 0; i < n2; ++i) A.at(N + 1, n1 + i) = 1;
    b[N + 1] = 1;

    std::vector<Rational> zero(n1 + n2, Rational(0));
    LpResult feas = lp_solve(A, b, zero);
    if (feas.status == LpResult::Status::Infeasible) return {false, true};

    std::set<int> common;
    {
        std::set<int> v1(s1.begin(), s1.end());
        for (int v : s2)
            if (v1.count(v)) common.insert(v);
    }
    // Intersection is conv(common vertices) iff every barycentric coordinate
    // of a non-common vertex is identically 0 on the intersection polytope.
    for (int i = 0; i < n1 + n2; ++i) {
        int vid = i < n1 ? s1[i] : s2[i - n1];
        if (common.count(vid)) continue;
        std::vector<Rational> c(n1 + n2, Rational(0));
        c[i] = 1;
        LpResult mx = lp_solve(A, b, c);
        if (mx.status != LpResult::Status::Optimal) throw Error("lp failed on a bounded polytope");
        if (mx.value > 0) return {true, false};
    }
    // All weight sits on common vertices; if there are none the polytope
    // would have been infeasible, so the intersection is the common face.
    return {true, !common.empty()};
}

} // namespace

std::optional<std::pair<VertexSet, VertexSet>> GeomComplex::validate() const {
    std::vector<VertexSet> list(simplices_.begin(), simplices_.end());
    for (size_t i = 0; i < list.size(); ++i)
        for (size_t j = i + 1; j < list.size(); ++j) {
            PairCheck pc = check_pair(*this, list[i], list[j]);
            if (pc.closures_meet && !pc.is_common_face)
                return std::make_pair(list[i], list[j]);
        }
    return std::nullopt;
}

GeomComplex GeomComplex::closure() const {
    GeomComplex out = *this;
    for (const auto& s : simplices_)
        for (auto& f : faces(s)) out.simplices_.insert(f);
    return out;
}

GeomComplex GeomComplex::closed_core() const {
    GeomComplex out(ambient_);
    out.vertices_ = vertices_;
    out.vertex_ids_ = vertex_ids_;
    for (const auto& s : simplices_) {
        bool all_in = true;
        for (auto& f : faces(s))
            if (!simplices_.count(f)) { all_in = false; break; }
        if (all_in) out.simplices_.insert(s);
    }
    return out;
}

GeomComplex GeomComplex::barycentric_subdivision() const {
    // Simplices of the subdivision are spanned by barycenters of chains
    // f_0 < f_1 < ... < f_k of faces of closure(K) whose top face lies in K.
    GeomComplex out(ambient_);
    GeomComplex cl = closure();

    std::map<VertexSet, int> bary_id;
    auto bary = [&](const VertexSet& s) {
        auto it = bary_id.find(s);
        if (it != bary_id.end()) return it->second;
        int id = out.add_vertex(barycenter(s));
        bary_id.emplace(s, id);
        return id;
    };

    // Depth-first over descending chains starting at each simplex of K.
    std::vector<int> chain;
    std::function<void(const VertexSet&)> descend = [&](const VertexSet& top) {
        chain.push_back(bary(top));
        out.add_simplex(chain);
        for (auto& f : faces(top)) {
            if (f.size() == top.size()) continue; // proper faces only
            descend(f);
        }
        chain.pop_back();
    };
    for (const auto& s : simplices_) descend(s);
    return out;
}

bool GeomComplex::contains_subcomplex(const GeomComplex& other) const {
    for (const auto& s : other.simplices_) {
        VertexSet mapped;
        for (int v : s) {
            auto it = vertex_ids_.find(other.vertices_[v]);
            if (it == vertex_ids_.end()) return false;
            mapped.push_back(it->second);
        }
        std::sort(mapped.begin(), mapped.end());
        if (!simplices_.count(mapped)) return false;
    }
    return true;
}

std::optional<std::vector<Rational>> GeomComplex::barycentric_coords(const VertexSet& s,
                                                                     const Point& x) const {
    const int n = (int)s.size();
    QMatrix A(ambient_ + 1, n);
    std::vector<Rational> b(ambient_ + 1);
    for (int j = 0; j < ambient_; ++j) {
        for (int i = 0; i < n; ++i) A.at(j, i) = vertices_[s[i]][j];
        b[j] = x[j];
    }
    for (int i = 0; i < n; ++i) A.at(ambient_, i) = 1;
    b[ambient_] = 1;
    std::vector<Rational> lambda;
    if (!solve_linear(A, b, lambda)) return std::nullopt;
    return lambda;
}

VertexSet GeomComplex::carrier(const Point& x) const {
    if ((int)x.size() != ambient_) throw DimensionMismatch("point has wrong ambient dimension");
    for (const auto& s : simplices_) {
        auto lambda = barycentric_coords(s, x);
        if (!lambda) continue;
        bool interior = true;
        for (const auto& l : *lambda)
            if (!(l > 0)) { interior = false; break; }
        if (interior) return s;
    }
    throw NotInPolyhedron("point is not carried by any open simplex");
}

bool GeomComplex::member(const Point& x) const {
    try {
        carrier(x);
        return true;
    } catch (const NotInPolyhedron&) {
        return false;
    }
}

nlohmann::json GeomComplex::to_json() const {
    nlohmann::json j;
    j["ambient"] = ambient_;
    j["vertices"] = nlohmann::json::array();
    for (const auto& p : vertices_) {
        nlohmann::json row = nlohmann::json::array();
        for (const auto& c : p) row.push_back(rat_to_string(c));
        j["vertices"].push_back(std::move(row));
    }
    j["simplices"] = nlohmann::json::array();
    for (const auto& s : simplices_) j["simplices"].push_back(s);
    return j;
}

GeomComplex GeomComplex::from_json(const nlohmann::json& j) {
    GeomComplex k(j.at("ambient").get<int>());
    std::vector<int> ids;
    for (const auto& row : j.at("vertices")) {
        Point p;
        for (const auto& c : row) p.push_back(parse_rational(c.get<std::string>()));
        ids.push_back(k.add_vertex(p));
    }
    for (const auto& s : j.at("simplices")) {
        std::vector<int> verts;
        for (const auto& v : s) verts.push_back(ids.at(v.get<int>()));
        k.add_simplex(verts);
    }
    return k;
}

Retraction::Retraction(const GeomComplex& k) : k_(k) {
    beta_ = k.barycentric_subdivision();
    core_ = beta_.closed_core();
    // Subdivision vertices are barycenters b(s) of faces s of closure(K);
    // the retraction only keeps weight on those with s in K.
    vertex_in_k_.assign(beta_.vertices().size(), 0);
    GeomComplex cl = k.closure();
    for (const auto& s : cl.simplices()) {
        int id = beta_.find_vertex(k.barycenter(s));
        if (id >= 0) vertex_in_k_[id] = k.has_simplex(s) ? 1 : 0;
    }
}

Point Retraction::retract(const Point& x) const {
    VertexSet car = beta_.carrier(x); // throws NotInPolyhedron outside |K|
    auto lambda = beta_.barycentric_coords(car, x);
    if (!lambda) throw Error("carrier without coordinates");
    Rational total(0);
    Point out(k_.ambient(), Rational(0));
    for (size_t i = 0; i < car.size(); ++i) {
        if (!vertex_in_k_[car[i]]) continue;
        total += (*lambda)[i];
        const Point& b = beta_.vertices()[car[i]];
        for (int j = 0; j < k_.ambient(); ++j) out[j] += (*lambda)[i] * b[j];
    }
    if (total == 0) throw Error("retraction normaliser vanished; complex invariant broken");
    for (auto& c : out) c /= total;
    return out;
}

Point Retraction::homotopy(const Point& x, const Rational& t) const {
    if (t < 0 || t > 1) throw Error("homotopy parameter outside [0,1]");
    Point r = retract(x);
    Point out(k_.ambient());
    for (int j = 0; j < k_.ambient(); ++j) out[j] = (Rational(1) - t) * x[j] + t * r[j];
    return out;
}

} // namespace xp
