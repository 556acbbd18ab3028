#include "xp/qmatrix.hpp"

namespace xp {

template <typename F>
int rank_gauss(MatrixF<F> m) {
    int r = 0;
    for (int c = 0; c < m.cols() && r < m.rows(); ++c) {
        int piv = -1;
        for (int i = r; i < m.rows(); ++i)
            if (!(m.at(i, c) == F(0))) { piv = i; break; }
        if (piv < 0) continue;
        if (piv != r)
            for (int j = c; j < m.cols(); ++j) std::swap(m.at(piv, j), m.at(r, j));
        F inv = F(1) / m.at(r, c);
        for (int j = c; j < m.cols(); ++j) m.at(r, j) *= inv;
        for (int i = 0; i < m.rows(); ++i) {
            if (i == r) continue;
            F f = m.at(i, c);
            if (f == F(0)) continue;
            for (int j = c; j < m.cols(); ++j) m.at(i, j) -= f * m.at(r, j);
        }
        ++r;
    }
    return r;
}

template int rank_gauss<Rational>(MatrixF<Rational>);
template int rank_gauss<GaussianRational>(MatrixF<GaussianRational>);

int rank_bareiss(const QMatrix& m) {
    const int rows = m.rows(), cols = m.cols();
    if (rows == 0 || cols == 0) return 0;

    // Clear denominators row by row; row scaling preserves rank.
    std::vector<std::vector<BigInt>> a(rows, std::vector<BigInt>(cols));
    for (int i = 0; i < rows; ++i) {
        BigInt l = 1;
        for (int j = 0; j < cols; ++j) {
            BigInt d = denominator(m.at(i, j));
            l = l / boost::multiprecision::gcd(l, d) * d;
        }
        for (int j = 0; j < cols; ++j) {
            Rational v = m.at(i, j) * Rational(l);
            a[i][j] = numerator(v);
        }
    }

    BigInt prev = 1;
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        int piv = -1;
        for (int i = r; i < rows; ++i)
            if (a[i][c] != 0) { piv = i; break; }
        if (piv < 0) continue;
        if (piv != r) std::swap(a[piv], a[r]);
        for (int i = r + 1; i < rows; ++i) {
            for (int j = c + 1; j < cols; ++j)
                a[i][j] = (a[r][c] * a[i][j] - a[i][c] * a[r][j]) / prev;
            a[i][c] = 0;
        }
        prev = a[r][c];
        ++r;
    }
    return r;
}

template <typename F>
bool solve_linear(MatrixF<F> a, std::vector<F> b, std::vector<F>& x) {
    const int rows = a.rows(), cols = a.cols();
    if ((int)b.size() != rows) throw DimensionMismatch("rhs size mismatch");
    std::vector<int> pivot_col;
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        int piv = -1;
        for (int i = r; i < rows; ++i)
            if (!(a.at(i, c) == F(0))) { piv = i; break; }
        if (piv < 0) continue;
        if (piv != r) {
            for (int j = 0; j < cols; ++j) std::swap(a.at(piv, j), a.at(r, j));
            std::swap(b[piv], b[r]);
        }
        F inv = F(1) / a.at(r, c);
        for (int j = c; j < cols; ++j) a.at(r, j) *= inv;
        b[r] *= inv;
        for (int i = 0; i < rows; ++i) {
            if (i == r) continue;
            F f = a.at(i, c);
            if (f == F(0)) continue;
            for (int j = c; j < cols; ++j) a.at(i, j) -= f * a.at(r, j);
            b[i] -= f * b[r];
        }
        pivot_col.push_back(c);
        ++r;
    }
    for (int i = r; i < rows; ++i)
        if (!(b[i] == F(0))) return false;
    x.assign(cols, F(0));
    for (int i = 0; i < r; ++i) x[pivot_col[i]] = b[i];
    return true;
}

template bool solve_linear<Rational>(MatrixF<Rational>, std::vector<Rational>, std::vector<Rational>&);
template bool solve_linear<GaussianRational>(MatrixF<GaussianRational>, std::vector<GaussianRational>,
                                             std::vector<GaussianRational>&);

template <typename F>
MatrixF<F> inverse(const MatrixF<F>& a) {
    if (a.rows() != a.cols()) throw DimensionMismatch("inverse of non-square matrix");
    const int n = a.rows();
    MatrixF<F> m = a, inv = MatrixF<F>::identity(n);
    for (int c = 0; c < n; ++c) {
        int piv = -1;
        for (int i = c; i < n; ++i)
            if (!(m.at(i, c) == F(0))) { piv = i; break; }
        if (piv < 0) throw Error("singular matrix");
        if (piv != c)
            for (int j = 0; j < n; ++j) {
                std::swap(m.at(piv, j), m.at(c, j));
                std::swap(inv.at(piv, j), inv.at(c, j));
            }
        F s = F(1) / m.at(c, c);
        for (int j = 0; j < n; ++j) { m.at(c, j) *= s; inv.at(c, j) *= s; }
        for (int i = 0; i < n; ++i) {
            if (i == c) continue;
            F f = m.at(i, c);
            if (f == F(0)) continue;
            for (int j = 0; j < n; ++j) {
                m.at(i, j) -= f * m.at(c, j);
                inv.at(i, j) -= f * inv.at(c, j);
            }
        }
    }
    return inv;
}

template MatrixF<Rational> inverse<Rational>(const MatrixF<Rational>&);
template MatrixF<GaussianRational> inverse<GaussianRational>(const MatrixF<GaussianRational>&);

} // namespace xp
