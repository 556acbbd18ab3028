#include "xp/chain.hpp"

#include <algorithm>
#include <sstream>

namespace xp {

const QMatrix& ChainComplexQ::d(int n) const {
    if (n < 0 || n > top_degree()) throw DimensionMismatch("boundary degree out of range");
    return boundary[n];
}

void ChainComplexQ::check_shapes() const {
    if (basis.size() != boundary.size()) throw Error("chain complex shape mismatch");
    for (int n = 0; n <= top_degree(); ++n) {
        int want_rows = n == 0 ? 0 : dim(n - 1);
        if (boundary[n].rows() != want_rows || boundary[n].cols() != dim(n))
            throw Error("boundary matrix shape mismatch in degree " + std::to_string(n));
    }
}

bool ChainComplexQ::d_squared_zero() const {
    for (int n = 2; n <= top_degree(); ++n)
        if (!(boundary[n - 1] * boundary[n]).is_zero()) return false;
    return true;
}

ChainComplexQ ChainComplexQ::zero() {
    ChainComplexQ c;
    c.basis.push_back({});
    c.boundary.push_back(QMatrix(0, 0));
    return c;
}

std::vector<int> homology_ranks(const ChainComplexQ& c) {
    c.check_shapes();
    if (!c.d_squared_zero()) throw BoundaryNotSquareZero("d^2 != 0");
    std::vector<int> ranks(c.top_degree() + 1, 0);
    std::vector<int> rk(c.top_degree() + 2, 0);
    for (int n = 0; n <= c.top_degree(); ++n) rk[n] = rank_bareiss(c.d(n));
    rk[c.top_degree() + 1] = 0;
    for (int n = 0; n <= c.top_degree(); ++n)
        ranks[n] = c.dim(n) - rk[n] - rk[n + 1];
    return ranks;
}

long euler_characteristic(const ChainComplexQ& c) {
    long chi = 0;
    for (int n = 0; n <= c.top_degree(); ++n)
        chi += (n % 2 == 0 ? 1 : -1) * (long)c.dim(n);
    return chi;
}

void ChainMapQ::check() const {
    if (!from || !to) throw Error("chain map endpoints not set");
    if ((int)mats.size() <= std::max(from->top_degree(), 0))
        throw Error("chain map missing degrees");
    for (int n = 0; n < (int)mats.size(); ++n) {
        int fc = from->dim(n), tr = to->dim(n);
        if (mats[n].cols() != fc || mats[n].rows() != tr)
            throw Error("chain map shape mismatch in degree " + std::to_string(n));
    }
    for (int n = 1; n < (int)mats.size(); ++n) {
        // to.d * f_n == f_{n-1} * from.d
        QMatrix lhs = (n <= to->top_degree() ? to->d(n) : QMatrix(0, to->dim(n))) * mats[n];
        QMatrix rhs = mats[n - 1] * (n <= from->top_degree() ? from->d(n) : QMatrix(from->dim(n - 1), 0));
        if (!(lhs == rhs)) throw Error("chain map does not commute with boundaries");
    }
}

namespace {

std::string simplex_label(const VertexSet& s) {
    std::string out = "s";
    for (size_t i = 0; i < s.size(); ++i) out += (i ? "." : ":") + std::to_string(s[i]);
    return out;
}

} // namespace

ChainComplexQ simplicial_chain_complex(const GeomComplex& K, const GeomComplex& L) {
    // Map L's simplices into K's vertex numbering.
    std::set<VertexSet> excluded;
    for (const auto& s : L.simplices()) {
        VertexSet mapped;
        for (int v : s) {
            int id = K.find_vertex(L.vertices()[v]);
            if (id < 0) throw NotSubcomplex("L has a vertex outside K");
            mapped.push_back(id);
        }
        std::sort(mapped.begin(), mapped.end());
        if (!K.has_simplex(mapped)) throw NotSubcomplex("L has a simplex outside K");
        excluded.insert(std::move(mapped));
    }

    int top = std::max(K.dim(), 0);
    std::vector<std::vector<VertexSet>> by_dim(top + 1);
    for (const auto& s : K.simplices()) {
        if (excluded.count(s)) continue;
        by_dim[K.dim_of(s)].push_back(s);
    }

    std::map<VertexSet, int> index;
    ChainComplexQ c;
    c.basis.resize(top + 1);
    c.boundary.resize(top + 1);
    for (int n = 0; n <= top; ++n) {
        std::sort(by_dim[n].begin(), by_dim[n].end());
        for (const auto& s : by_dim[n]) {
            index[s] = (int)c.basis[n].size();
            c.basis[n].push_back(simplex_label(s));
        }
    }
    for (int n = 0; n <= top; ++n) {
        int rows = n == 0 ? 0 : (int)c.basis[n - 1].size();
        QMatrix m(rows, (int)c.basis[n].size());
        if (n > 0) {
            for (size_t col = 0; col < by_dim[n].size(); ++col) {
                const VertexSet& s = by_dim[n][col];
                for (size_t i = 0; i < s.size(); ++i) {
                    VertexSet f = s;
                    f.erase(f.begin() + i);
                    if (excluded.count(f)) continue;
                    if (!K.has_simplex(f))
                        throw NotSubcomplex("face of a K-simplex lies in neither K nor L");
                    Rational sign = (i % 2 == 0) ? 1 : -1;
                    m.at(index.at(f), (int)col) += sign;
                }
            }
        }
        c.boundary[n] = std::move(m);
    }
    return c;
}

ChainComplexQ simplicial_chain_complex(const GeomComplex& K) {
    return simplicial_chain_complex(K, GeomComplex(K.ambient()));
}

InclusionData inclusion_chain_map(const GeomComplex& K, const GeomComplex& L) {
    InclusionData out;
    out.sub = simplicial_chain_complex(L);
    out.whole = simplicial_chain_complex(K);
    out.map.from = &out.sub;
    out.map.to = &out.whole;
    int degs = std::max(out.sub.top_degree(), out.whole.top_degree()) + 1;
    out.map.mats.resize(degs);
    // Rebuild K's labels for lookup.
    std::map<std::string, int> pos;
    for (int n = 0; n <= out.whole.top_degree(); ++n)
        for (size_t i = 0; i < out.whole.basis[n].size(); ++i)
            pos[out.whole.basis[n][i]] = (int)i;
    for (int n = 0; n < degs; ++n) {
        QMatrix m(out.whole.dim(n), out.sub.dim(n));
        for (int j = 0; j < out.sub.dim(n); ++j) {
            // translate label through coordinates
            const std::string& lab = out.sub.basis[n][j];
            VertexSet s;
            for (size_t p = 2; p < lab.size();) {
                size_t dot = lab.find('.', p);
                s.push_back(std::stoi(lab.substr(p, dot == std::string::npos ? std::string::npos : dot - p)));
                if (dot == std::string::npos) break;
                p = dot + 1;
            }
            VertexSet mapped;
            for (int v : s) mapped.push_back(K.find_vertex(L.vertices()[v]));
            std::sort(mapped.begin(), mapped.end());
            auto it = pos.find(simplex_label(mapped));
            if (it == pos.end()) throw NotSubcomplex("inclusion image missing in K");
            m.at(it->second, j) = 1;
        }
        out.map.mats[n] = std::move(m);
    }
    out.map.check();
    return out;
}

ChainComplexQ cone(const ChainMapQ& f) {
    f.check();
    const ChainComplexQ& Y = *f.from;
    const ChainComplexQ& X = *f.to;
    int top = std::max(X.top_degree(), Y.top_degree() + 1);
    ChainComplexQ c;
    c.basis.resize(top + 1);
    c.boundary.resize(top + 1);
    auto xdim = [&](int n) { return X.dim(n); };
    auto ydim = [&](int n) { return Y.dim(n); };
    for (int n = 0; n <= top; ++n) {
        for (int i = 0; i < xdim(n); ++i) c.basis[n].push_back("X." + X.basis[n][i]);
        for (int i = 0; i < ydim(n - 1); ++i) c.basis[n].push_back("Y." + Y.basis[n - 1][i]);
    }
    for (int n = 0; n <= top; ++n) {
        int rows = n == 0 ? 0 : (int)c.basis[n - 1].size();
        QMatrix m(rows, (int)c.basis[n].size());
        if (n > 0) {
            // block [ dX  f ; 0  -dY ]
            if (n <= X.top_degree())
                for (int i = 0; i < X.d(n).rows(); ++i)
                    for (int j = 0; j < X.d(n).cols(); ++j)
                        m.at(i, j) = X.d(n).at(i, j);
            if (n - 1 < (int)f.mats.size())
                for (int i = 0; i < f.mats[n - 1].rows(); ++i)
                    for (int j = 0; j < f.mats[n - 1].cols(); ++j)
                        m.at(i, xdim(n) + j) = f.mats[n - 1].at(i, j);
            if (n - 1 >= 1 && n - 1 <= Y.top_degree())
                for (int i = 0; i < Y.d(n - 1).rows(); ++i)
                    for (int j = 0; j < Y.d(n - 1).cols(); ++j)
                        m.at(xdim(n - 1) + i, xdim(n) + j) = -Y.d(n - 1).at(i, j);
        }
        c.boundary[n] = std::move(m);
    }
    c.check_shapes();
    if (!c.d_squared_zero()) throw BoundaryNotSquareZero("cone differential broke d^2 = 0");
    return c;
}

int DoubleComplexQ::dim(int p, int q) const {
    if (p < 0 || p > pmax() || q < 0 || q > qmax()) return 0;
    return (int)basis[p][q].size();
}

void DoubleComplexQ::check() const {
    for (int p = 0; p <= pmax(); ++p)
        for (int q = 0; q <= qmax(); ++q) {
            const QMatrix& h = horiz[p][q];
            const QMatrix& v = vert[p][q];
            if (h.cols() != dim(p, q) || h.rows() != dim(p - 1, q))
                throw Error("horizontal differential shape mismatch");
            if (v.cols() != dim(p, q) || v.rows() != dim(p, q - 1))
                throw Error("vertical differential shape mismatch");
        }
    for (int p = 1; p <= pmax(); ++p)
        for (int q = 0; q <= qmax(); ++q)
            if (p >= 2 && !(horiz[p - 1][q] * horiz[p][q]).is_zero())
                throw Error("rows are not complexes");
    for (int p = 0; p <= pmax(); ++p)
        for (int q = 2; q <= qmax(); ++q)
            if (!(vert[p][q - 1] * vert[p][q]).is_zero())
                throw Error("columns are not complexes");
    for (int p = 1; p <= pmax(); ++p)
        for (int q = 1; q <= qmax(); ++q) {
            QMatrix a = vert[p - 1][q] * horiz[p][q];
            QMatrix b = horiz[p][q - 1] * vert[p][q];
            if (!(a == b)) throw Error("squares of the double complex do not commute");
        }
}

ChainComplexQ total_complex(const DoubleComplexQ& dc) {
    dc.check();
    int top = dc.pmax() + dc.qmax();
    if (top < 0) return ChainComplexQ::zero();
    ChainComplexQ c;
    c.basis.resize(top + 1);
    c.boundary.resize(top + 1);

    // offsets[n][p] = column offset of block (p, n-p) inside Tot_n
    std::vector<std::map<int, int>> offset(top + 1);
    for (int n = 0; n <= top; ++n) {
        int off = 0;
        for (int p = 0; p <= dc.pmax(); ++p) {
            int q = n - p;
            if (q < 0 || q > dc.qmax()) continue;
            offset[n][p] = off;
            for (const auto& lab : dc.basis[p][q])
                c.basis[n].push_back("p" + std::to_string(p) + "q" + std::to_string(q) + "." + lab);
            off += dc.dim(p, q);
        }
    }
    for (int n = 0; n <= top; ++n) {
        int rows = n == 0 ? 0 : (int)c.basis[n - 1].size();
        QMatrix m(rows, (int)c.basis[n].size());
        if (n > 0) {
            for (int p = 0; p <= dc.pmax(); ++p) {
                int q = n - p;
                if (q < 0 || q > dc.qmax() || dc.dim(p, q) == 0) continue;
                int col0 = offset[n].at(p);
                // horizontal part into block (p-1, q)
                if (p >= 1 && dc.dim(p - 1, q) > 0) {
                    int row0 = offset[n - 1].at(p - 1);
                    const QMatrix& h = dc.horiz[p][q];
                    for (int i = 0; i < h.rows(); ++i)
                        for (int j = 0; j < h.cols(); ++j)
                            m.at(row0 + i, col0 + j) += h.at(i, j);
                }
                // vertical part into block (p, q-1), sign (-1)^p
                if (q >= 1 && dc.dim(p, q - 1) > 0) {
                    int row0 = offset[n - 1].at(p);
                    const QMatrix& v = dc.vert[p][q];
                    Rational sgn = (p % 2 == 0) ? 1 : -1;
                    for (int i = 0; i < v.rows(); ++i)
                        for (int j = 0; j < v.cols(); ++j)
                            m.at(row0 + i, col0 + j) += sgn * v.at(i, j);
                }
            }
        }
        c.boundary[n] = std::move(m);
    }
    c.check_shapes();
    if (!c.d_squared_zero())
        throw SignConventionViolation("total differential does not square to zero");
    return c;
}

namespace {

std::vector<int> tuple_support(const std::vector<int>& t) {
    std::vector<int> s = t;
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    return s;
}

const ChainComplexQ& cover_piece(const CoverData& data, const std::vector<int>& support) {
    auto it = data.piece.find(support);
    if (it == data.piece.end()) {
        std::string key;
        for (int v : support) key += std::to_string(v) + ",";
        throw MissingIntersection("no complex supplied for intersection {" + key + "}");
    }
    return it->second;
}

// Chain map C_T -> C_S in one degree, for S subset T, composed from
// one-step deletions (largest deleted element first).
QMatrix cover_restriction(const CoverData& data, const std::vector<int>& T,
                          const std::vector<int>& S, int degree) {
    const ChainComplexQ& src = cover_piece(data, T);
    QMatrix acc = QMatrix::identity(src.dim(degree));
    std::vector<int> cur = T;
    while (cur != S) {
        int del = -1;
        for (int v : cur)
            if (!std::binary_search(S.begin(), S.end(), v)) del = std::max(del, v);
        auto it = data.step.find({cur, del});
        if (it == data.step.end())
            throw MissingIntersection("no inclusion map supplied for a one-step deletion");
        cur.erase(std::find(cur.begin(), cur.end(), del));
        const ChainComplexQ& tgt = cover_piece(data, cur);
        QMatrix stepm = degree < (int)it->second.size() ? it->second[degree]
                                                        : QMatrix(tgt.dim(degree), acc.rows());
        acc = stepm * acc;
    }
    return acc;
}

} // namespace

NerveResult cech_nerve(const CoverData& data, int levels) {
    if (data.m <= 0) throw Error("cover must have at least one set");
    int L = levels > 0 ? levels : data.m + 2;

    // Collect per-subset chain complexes and find the common top degree.
    int qtop = 0;
    for (const auto& [s, c] : data.piece) qtop = std::max(qtop, c.top_degree());

    NerveResult out;
    out.tuples.resize(L + 1);
    // enumerate tuples over {0..m-1} of length p+1
    for (int p = 0; p <= L; ++p) {
        std::vector<int> t(p + 1, 0);
        while (true) {
            out.tuples[p].push_back(t);
            int i = p;
            for (; i >= 0; --i) {
                if (++t[i] < data.m) break;
                t[i] = 0;
            }
            if (i < 0) break;
        }
    }

    DoubleComplexQ dc;
    dc.basis.assign(L + 1, std::vector<std::vector<std::string>>(qtop + 1));
    dc.horiz.assign(L + 1, std::vector<QMatrix>(qtop + 1));
    dc.vert.assign(L + 1, std::vector<QMatrix>(qtop + 1));

    // per-level offsets of each tuple's summand
    std::vector<std::vector<std::vector<int>>> off(L + 1); // [p][tuple][q]
    for (int p = 0; p <= L; ++p) {
        off[p].resize(out.tuples[p].size());
        std::vector<int> cur(qtop + 1, 0);
        for (size_t ti = 0; ti < out.tuples[p].size(); ++ti) {
            const auto& tup = out.tuples[p][ti];
            const ChainComplexQ& c = cover_piece(data, tuple_support(tup));
            off[p][ti].resize(qtop + 1, 0);
            std::string tag = "t";
            for (int v : tup) tag += std::to_string(v);
            for (int q = 0; q <= qtop; ++q) {
                off[p][ti][q] = cur[q];
                for (int i = 0; i < c.dim(q); ++i)
                    dc.basis[p][q].push_back(tag + "." + c.basis[q][i]);
                cur[q] += c.dim(q);
            }
        }
    }

    // vertical differentials: block-diagonal boundary maps
    for (int p = 0; p <= L; ++p)
        for (int q = 0; q <= qtop; ++q) {
            QMatrix m((int)dc.basis[p][q == 0 ? 0 : q - 1].size(), (int)dc.basis[p][q].size());
            if (q > 0) {
                for (size_t ti = 0; ti < out.tuples[p].size(); ++ti) {
                    const ChainComplexQ& c = cover_piece(data, tuple_support(out.tuples[p][ti]));
                    if (q > c.top_degree()) continue;
                    const QMatrix& b = c.d(q);
                    for (int i = 0; i < b.rows(); ++i)
                        for (int j = 0; j < b.cols(); ++j)
                            m.at(off[p][ti][q - 1] + i, off[p][ti][q] + j) = b.at(i, j);
                }
            } else {
                m = QMatrix(0, (int)dc.basis[p][0].size());
            }
            dc.vert[p][q] = std::move(m);
        }

    // horizontal differentials: alternating sums of face deletions
    std::vector<std::map<std::vector<int>, size_t>> pos(L + 1);
    for (int p = 0; p <= L; ++p)
        for (size_t ti = 0; ti < out.tuples[p].size(); ++ti) pos[p][out.tuples[p][ti]] = ti;

    for (int p = 0; p <= L; ++p)
        for (int q = 0; q <= qtop; ++q) {
            if (p == 0) {
                dc.horiz[p][q] = QMatrix(0, (int)dc.basis[p][q].size());
                continue;
            }
            QMatrix m((int)dc.basis[p - 1][q].size(), (int)dc.basis[p][q].size());
            for (size_t ti = 0; ti < out.tuples[p].size(); ++ti) {
                const auto& tup = out.tuples[p][ti];
                std::vector<int> Tsup = tuple_support(tup);
                const ChainComplexQ& src = cover_piece(data, Tsup);
                if (src.dim(q) == 0) continue;
                for (int drop = 0; drop <= p; ++drop) {
                    std::vector<int> sub = tup;
                    sub.erase(sub.begin() + drop);
                    size_t tj = pos[p - 1].at(sub);
                    std::vector<int> Ssup = tuple_support(sub);
                    QMatrix r = cover_restriction(data, Tsup, Ssup, q);
                    Rational sgn = (drop % 2 == 0) ? 1 : -1;
                    for (int i = 0; i < r.rows(); ++i)
                        for (int j = 0; j < r.cols(); ++j) {
                            if (r.at(i, j) == 0) continue;
                            m.at(off[p - 1][tj][q] + i, off[p][ti][q] + j) += sgn * r.at(i, j);
                        }
                }
            }
            dc.horiz[p][q] = std::move(m);
        }

    out.dc = std::move(dc);
    out.dc.check();
    out.valid_up_to = L - 1;
    return out;
}

nlohmann::json matrix_to_json(const QMatrix& m) {
    nlohmann::json j;
    j["rows"] = m.rows();
    j["cols"] = m.cols();
    j["entries"] = nlohmann::json::array();
    for (int i = 0; i < m.rows(); ++i)
        for (int k = 0; k < m.cols(); ++k)
            if (m.at(i, k) != 0)
                j["entries"].push_back({i, k, rat_to_string(m.at(i, k))});
    return j;
}

QMatrix matrix_from_json(const nlohmann::json& j) {
    QMatrix m(j.at("rows").get<int>(), j.at("cols").get<int>());
    for (const auto& e : j.at("entries"))
        m.at(e.at(0).get<int>(), e.at(1).get<int>()) = parse_rational(e.at(2).get<std::string>());
    return m;
}

} // namespace xp
