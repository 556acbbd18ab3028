#include "xp/lp.hpp"

#include <algorithm>

namespace xp {

namespace {

struct Tableau {
    int m, n;
    std::vector<std::vector<Rational>> a; // m x n, basis columns reduced to identity
    std::vector<Rational> rhs;            // m, kept >= 0
    std::vector<Rational> red;            // n, reduced costs of the current objective
    Rational obj;                         // current objective value
    std::vector<int> basis;               // m

    void pivot(int r, int j) {
        Rational p = a[r][j];
        for (int k = 0; k < n; ++k) a[r][k] /= p;
        rhs[r] /= p;
        for (int i = 0; i < m; ++i) {
            if (i == r || a[i][j] == 0) continue;
            Rational f = a[i][j];
            for (int k = 0; k < n; ++k) a[i][k] -= f * a[r][k];
            rhs[i] -= f * rhs[r];
        }
        if (red[j] != 0) {
            Rational f = red[j];
            for (int k = 0; k < n; ++k) red[k] -= f * a[r][k];
            obj += f * rhs[r];
        }
        basis[r] = j;
    }

    // Recomputes reduced costs for objective c (maximisation).
    void price(const std::vector<Rational>& c) {
        red = c;
        obj = 0;
        for (int i = 0; i < m; ++i) {
            Rational cb = c[basis[i]];
            if (cb == 0) continue;
            for (int k = 0; k < n; ++k) red[k] -= cb * a[i][k];
            obj += cb * rhs[i];
        }
    }

    // Bland's rule; returns true when optimal, throws on unbounded.
    bool optimise() {
        while (true) {
            int enter = -1;
            for (int j = 0; j < n; ++j)
                if (red[j] > 0) { enter = j; break; }
            if (enter < 0) return true;
            int leave = -1;
            Rational best;
            for (int i = 0; i < m; ++i) {
                if (a[i][enter] <= 0) continue;
                Rational ratio = rhs[i] / a[i][enter];
                if (leave < 0 || ratio < best ||
                    (ratio == best && basis[i] < basis[leave])) {
                    leave = i;
                    best = ratio;
                }
            }
            if (leave < 0) throw Error("lp: unbounded");
            pivot(leave, enter);
        }
    }
};

} // namespace

LpResult lp_solve(const QMatrix& A, const std::vector<Rational>& b, const std::vector<Rational>& c) {
    const int m = A.rows(), n = A.cols();
    if ((int)b.size() != m || (int)c.size() != n) throw DimensionMismatch("lp shape mismatch");

    Tableau t;
    t.m = m;
    t.n = n + m; // real variables then artificials
    t.a.assign(m, std::vector<Rational>(t.n, Rational(0)));
    t.rhs.assign(m, Rational(0));
    t.basis.resize(m);
    for (int i = 0; i < m; ++i) {
        int s = b[i] < 0 ? -1 : 1;
        for (int j = 0; j < n; ++j) t.a[i][j] = Rational(s) * A.at(i, j);
        t.rhs[i] = Rational(s) * b[i];
        t.a[i][n + i] = 1;
        t.basis[i] = n + i;
    }

    // Phase 1: maximise minus the sum of artificials.
    std::vector<Rational> c1(t.n, Rational(0));
    for (int i = 0; i < m; ++i) c1[n + i] = -1;
    t.price(c1);
    t.optimise();
    if (t.obj < 0) return {LpResult::Status::Infeasible, Rational(0), {}};

    // Drive leftover artificials out of the basis.
    for (int i = 0; i < m; ++i) {
        if (t.basis[i] < n) continue;
        int j = 0;
        for (; j < n; ++j)
            if (t.a[i][j] != 0) break;
        if (j < n) t.pivot(i, j);
        // else: redundant row; harmless to keep, the artificial stays at 0
    }

    // Phase 2: artificial columns are kept out of the entering-variable
    // scan so they can never re-enter the basis.
    std::vector<Rational> c2(t.n, Rational(0));
    for (int j = 0; j < n; ++j) c2[j] = c[j];
    t.price(c2);
    while (true) {
        int enter = -1;
        for (int j = 0; j < n; ++j) // artificials excluded
            if (t.red[j] > 0) { enter = j; break; }
        if (enter < 0) break;
        int leave = -1;
        Rational best;
        for (int i = 0; i < m; ++i) {
            if (t.a[i][enter] <= 0) continue;
            Rational ratio = t.rhs[i] / t.a[i][enter];
            if (leave < 0 || ratio < best || (ratio == best && t.basis[i] < t.basis[leave])) {
                leave = i;
                best = ratio;
            }
        }
        if (leave < 0) return {LpResult::Status::Unbounded, Rational(0), {}};
        t.pivot(leave, enter);
    }

    LpResult res;
    res.status = LpResult::Status::Optimal;
    res.x.assign(n, Rational(0));
    for (int i = 0; i < m; ++i)
        if (t.basis[i] < n) res.x[t.basis[i]] = t.rhs[i];
    res.value = t.obj;
    return res;
}

} // namespace xp
