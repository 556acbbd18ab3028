#include "xp/curve.hpp"

#include <algorithm>

#include "xp/parse.hpp"

namespace xp {

std::string p1_to_string(const P1Point& p) {
    return p.infinite ? "inf" : gaussian_to_string(p.value);
}

P1Point p1_from_string(const std::string& s) {
    if (s == "inf" || s == "oo" || s == "infinity") return P1Point::inf();
    return P1Point::at(parse_gaussian(s));
}

namespace {

int pole_order_at(const RatFunc& f, const P1Point& p) {
    if (f.num().is_zero()) return 0;
    if (p.infinite) {
        int d = f.num().degree_in(0) - f.den().degree_in(0);
        return std::max(d, 0);
    }
    int vden = valuation_at(f.den(), p.value);
    int vnum = valuation_at(f.num(), p.value);
    return std::max(vden - vnum, 0);
}

// order of vanishing; negative for a pole
int zero_order_at(const RatFunc& f, const P1Point& p) {
    if (f.num().is_zero()) return 1 << 20;
    if (p.infinite) return f.den().degree_in(0) - f.num().degree_in(0);
    return valuation_at(f.num(), p.value) - valuation_at(f.den(), p.value);
}

Polynomial poly_mod(Polynomial rem, const Polynomial& den) {
    while (!rem.is_zero() && rem.degree_in(0) >= den.degree_in(0)) {
        int shift = rem.degree_in(0) - den.degree_in(0);
        GaussianRational c = leading_coeff(rem) / leading_coeff(den);
        Polynomial t(1);
        t.add_term({shift}, c);
        rem = rem - t * den;
    }
    return rem;
}

} // namespace

void CurveSpec::validate() const {
    if (f.nvars() != 1) throw DimensionMismatch("curve function must be univariate");
    for (const auto& m : marked)
        for (const auto& p : punctures)
            if (m == p) throw Error("marked point coincides with a puncture");
    for (size_t i = 0; i < punctures.size(); ++i)
        for (size_t j = i + 1; j < punctures.size(); ++j)
            if (punctures[i] == punctures[j]) throw Error("repeated puncture");
    for (size_t i = 0; i < marked.size(); ++i)
        for (size_t j = i + 1; j < marked.size(); ++j)
            if (marked[i] == marked[j]) throw Error("repeated marked point");

    // every pole of f must sit at a puncture: strip puncture factors from
    // the denominator, the rest must divide the numerator
    Polynomial den = f.den();
    for (const auto& p : punctures) {
        if (p.infinite) continue;
        while (!den.is_constant()) {
            auto [q, rem] = divide_linear(den, p.value);
            if (!rem.is_zero()) break;
            den = q;
        }
    }
    if (!den.is_constant() && !poly_mod(f.num(), den).is_zero())
        throw Error("function has a pole away from the punctures");
    bool inf_punctured = std::any_of(punctures.begin(), punctures.end(),
                                     [](const P1Point& p) { return p.infinite; });
    if (!inf_punctured && pole_order_at(f, P1Point::inf()) > 0)
        throw Error("function has a pole at infinity but infinity is not punctured");
    for (const auto& m : marked)
        if (!m.infinite && zero_order_at(f, m) < 0)
            throw Error("function has a pole at a marked point");
}

nlohmann::json CurveSpec::to_json() const {
    nlohmann::json j;
    j["punctures"] = nlohmann::json::array();
    for (const auto& p : punctures) j["punctures"].push_back(p1_to_string(p));
    j["marked"] = nlohmann::json::array();
    for (const auto& m : marked) j["marked"].push_back(p1_to_string(m));
    j["f"] = f.to_string();
    return j;
}

CurveSpec CurveSpec::from_json(const nlohmann::json& j) {
    CurveSpec s;
    for (const auto& p : j.at("punctures"))
        s.punctures.push_back(p1_from_string(p.get<std::string>()));
    if (j.contains("marked"))
        for (const auto& m : j.at("marked")) s.marked.push_back(p1_from_string(m.get<std::string>()));
    s.f = parse_ratfunc(j.at("f").get<std::string>());
    s.validate();
    return s;
}

PunctureClassification classify_punctures(const CurveSpec& spec) {
    spec.validate();
    PunctureClassification out;
    std::vector<P1Point> sorted = spec.punctures;
    std::sort(sorted.begin(), sorted.end());
    for (const auto& p : sorted) {
        int d = pole_order_at(spec.f, p);
        if (d >= 1)
            out.polar.push_back({p, d});
        else
            out.regular.push_back(p);
    }
    return out;
}

namespace {

// Index bookkeeping while assembling a small CW chain complex by hand.
struct CwBuilder {
    std::vector<std::string> v_labels, e_labels, f_labels;
    std::vector<char> v_in_a, e_in_a;
    std::vector<std::pair<int, int>> e_ends; // (tail, head); (-1,-1) for loops
    std::vector<std::map<int, Rational>> f_bdry;

    int vertex(const std::string& lab, bool in_a) {
        v_labels.push_back(lab);
        v_in_a.push_back(in_a);
        return (int)v_labels.size() - 1;
    }
    int edge(const std::string& lab, int tail, int head, bool in_a) {
        e_labels.push_back(lab);
        e_in_a.push_back(in_a);
        e_ends.push_back({tail, head});
        return (int)e_labels.size() - 1;
    }
    int loop(const std::string& lab, bool in_a) { return edge(lab, -1, -1, in_a); }
    void face(const std::string& lab, std::map<int, Rational> bdry) {
        f_labels.push_back(lab);
        f_bdry.push_back(std::move(bdry));
    }

    // cellular chain complex modulo the A-cells
    ChainComplexQ relative() const {
        ChainComplexQ c;
        int top = f_labels.empty() ? 1 : 2;
        c.basis.resize(top + 1);
        c.boundary.resize(top + 1);
        std::vector<int> vidx(v_labels.size(), -1), eidx(e_labels.size(), -1);
        for (size_t i = 0; i < v_labels.size(); ++i)
            if (!v_in_a[i]) {
                vidx[i] = (int)c.basis[0].size();
                c.basis[0].push_back(v_labels[i]);
            }
        for (size_t i = 0; i < e_labels.size(); ++i)
            if (!e_in_a[i]) {
                eidx[i] = (int)c.basis[1].size();
                c.basis[1].push_back(e_labels[i]);
            }
        for (size_t i = 0; i < f_labels.size(); ++i) c.basis[2].push_back(f_labels[i]);

        c.boundary[0] = QMatrix(0, (int)c.basis[0].size());
        QMatrix d1((int)c.basis[0].size(), (int)c.basis[1].size());
        for (size_t i = 0; i < e_labels.size(); ++i) {
            if (eidx[i] < 0) continue;
            auto [tail, head] = e_ends[i];
            if (tail < 0) continue;
            if (vidx[head] >= 0) d1.at(vidx[head], eidx[i]) += 1;
            if (vidx[tail] >= 0) d1.at(vidx[tail], eidx[i]) -= 1;
        }
        c.boundary[1] = std::move(d1);
        if (top == 2) {
            QMatrix d2((int)c.basis[1].size(), (int)c.basis[2].size());
            for (size_t fi = 0; fi < f_labels.size(); ++fi)
                for (const auto& [e, coeff] : f_bdry[fi])
                    if (eidx[e] >= 0) d2.at(eidx[e], (int)fi) += coeff;
            c.boundary[2] = std::move(d2);
        }
        c.check_shapes();
        if (!c.d_squared_zero()) throw BoundaryNotSquareZero("CW model boundary broken");
        return c;
    }

    long absolute_euler() const {
        return (long)v_labels.size() - (long)e_labels.size() + (long)f_labels.size();
    }
};

// Surface model: the compact blow-up is a sphere with one boundary circle
// per puncture. Polar circles split into 2d alternating arcs, of which the
// d even ones form the relative boundary; regular circles survive whole.
// Marked points hang off the base circle as contractible hairs.
ChainComplexQ arcs_model(const CurveSpec& spec, const PunctureClassification& pc, long* euler_out) {
    CwBuilder b;
    const size_t p = spec.punctures.size();

    if (p == 0) {
        int c = b.vertex("c", false);
        for (size_t i = 0; i < spec.marked.size(); ++i) {
            int y = b.vertex("y" + std::to_string(i), true);
            b.edge("h" + std::to_string(i), c, y, false);
        }
        b.face("F", {});
        if (euler_out) *euler_out = b.absolute_euler() - 2 * (long)spec.marked.size();
        return b.relative();
    }

    struct Circle {
        std::vector<int> edges;
        int anchor;
    };
    std::vector<Circle> circles;
    std::vector<P1Point> order;
    for (const auto& pd : pc.polar) order.push_back(pd.location);
    for (const auto& q : pc.regular) order.push_back(q);

    for (const auto& loc : order) {
        auto it = std::find_if(pc.polar.begin(), pc.polar.end(),
                               [&](const PoleDatum& pd) { return pd.location == loc; });
        Circle circ;
        std::string tag = "@" + p1_to_string(loc);
        if (it != pc.polar.end()) {
            int d = it->order;
            std::vector<int> verts;
            for (int j = 0; j < 2 * d; ++j)
                verts.push_back(b.vertex("P" + tag + "." + std::to_string(j), true));
            for (int j = 0; j < 2 * d; ++j) {
                bool is_boundary_arc = j % 2 == 0;
                circ.edges.push_back(b.edge("E" + tag + "." + std::to_string(j), verts[j],
                                            verts[(j + 1) % (2 * d)], is_boundary_arc));
            }
            circ.anchor = verts[0];
        } else {
            circ.anchor = b.vertex("P" + tag, false);
            circ.edges.push_back(b.loop("E" + tag, false));
        }
        circles.push_back(std::move(circ));
    }

    for (size_t i = 1; i < circles.size(); ++i)
        b.edge("g" + std::to_string(i), circles[0].anchor, circles[i].anchor, false);
    for (size_t i = 0; i < spec.marked.size(); ++i) {
        int y = b.vertex("y" + std::to_string(i), true);
        b.edge("h" + std::to_string(i), circles[0].anchor, y, false);
    }

    // one 2-cell; cut edges cancel in its cellular boundary
    std::map<int, Rational> bdry;
    for (int e : circles[0].edges) bdry[e] += 1;
    for (size_t i = 1; i < circles.size(); ++i)
        for (int e : circles[i].edges) bdry[e] -= 1;
    b.face("F", std::move(bdry));

    if (euler_out) *euler_out = b.absolute_euler() - 2 * (long)spec.marked.size();
    return b.relative();
}

// Graph model: the curve retracts to a wedge of circles with one ray out to
// each boundary point at infinity.
ChainComplexQ points_model(const CurveSpec& spec, const PunctureClassification& pc) {
    CwBuilder b;
    const size_t p = spec.punctures.size();
    int c = b.vertex("c", false);
    if (p == 0) b.face("F", {});
    for (size_t i = 1; i < p; ++i) b.loop("l" + std::to_string(i), false);
    for (const auto& pd : pc.polar)
        for (int j = 0; j < pd.order; ++j) {
            int q = b.vertex("q@" + p1_to_string(pd.location) + "." + std::to_string(j), true);
            b.edge("s@" + p1_to_string(pd.location) + "." + std::to_string(j), c, q, false);
        }
    for (size_t i = 0; i < spec.marked.size(); ++i) {
        int y = b.vertex("y" + std::to_string(i), true);
        b.edge("h" + std::to_string(i), c, y, false);
    }
    return b.relative();
}

} // namespace

CurveRdModel build_rd_model(const CurveSpec& spec) {
    CurveRdModel model;
    model.spec = spec;
    model.punctures = classify_punctures(spec);
    model.total_boundary_pieces = 0;
    for (const auto& pd : model.punctures.polar) model.total_boundary_pieces += pd.order;
    model.arcs_complex = arcs_model(spec, model.punctures, nullptr);
    model.points_complex = points_model(spec, model.punctures);

    auto ha = homology_ranks(model.arcs_complex);
    auto hp = homology_ranks(model.points_complex);
    ha.resize(3, 0);
    hp.resize(3, 0);
    if (ha != hp) throw Error("boundary models disagree on homology ranks");
    return model;
}

long rd_model_euler(const CurveRdModel& model) {
    long euler = 0;
    arcs_model(model.spec, model.punctures, &euler);
    return euler;
}

std::vector<int> rd_ranks(const CurveSpec& spec) {
    CurveRdModel m = build_rd_model(spec);
    auto h = homology_ranks(m.arcs_complex);
    h.resize(3, 0);
    return h;
}

int rd_rank(const CurveSpec& spec, int degree) {
    if (degree < 0) throw DimensionMismatch("negative homology degree");
    auto h = rd_ranks(spec);
    return degree < (int)h.size() ? h[degree] : 0;
}

std::vector<RayDirection> rd_generators(const CurveSpec& spec) {
    spec.validate();
    if (spec.punctures.size() != 1 || !spec.punctures[0].infinite)
        throw UnsupportedShape("generator rays are provided for the affine line only");
    if (!spec.f.is_polynomial())
        throw UnsupportedShape("generator rays require a polynomial function");
    Polynomial f = spec.f.as_polynomial();
    int n = f.degree_in(0);
    if (n < 1 || f.terms().size() != 1 || !(leading_coeff(f) == GaussianRational(1)))
        throw UnsupportedShape("generator rays are provided for monic monomials only");
    std::vector<RayDirection> out;
    const double pi = 3.14159265358979323846;
    for (int m = 0; m < n; ++m) out.push_back({m, n, std::polar(1.0, 2.0 * pi * m / n)});
    return out;
}

BlowupChart blowup_chart(const std::vector<std::complex<double>>& z, int divisor_count,
                         const std::vector<std::complex<double>>& boundary_directions) {
    if (divisor_count < 0 || divisor_count > (int)z.size())
        throw DimensionMismatch("divisor count out of range");
    BlowupChart out;
    for (int i = 0; i < divisor_count; ++i) {
        double r = std::abs(z[i]);
        if (r == 0.0) {
            if (i >= (int)boundary_directions.size() || std::abs(boundary_directions[i]) == 0.0)
                throw MissingDirection("divisor point needs an explicit boundary direction");
            out.radii.push_back(0.0);
            out.directions.push_back(boundary_directions[i] / std::abs(boundary_directions[i]));
        } else {
            out.radii.push_back(r);
            out.directions.push_back(z[i] / r);
        }
    }
    for (size_t i = divisor_count; i < z.size(); ++i) out.rest.push_back(z[i]);
    return out;
}

std::vector<std::complex<double>> blowup_chart_inverse(const BlowupChart& chart) {
    std::vector<std::complex<double>> z;
    for (size_t i = 0; i < chart.radii.size(); ++i)
        z.push_back(chart.radii[i] * chart.directions[i]);
    for (const auto& w : chart.rest) z.push_back(w);
    return z;
}

} // namespace xp
