#ifndef XP_TEST_ORACLE_SNF_HPP
#define XP_TEST_ORACLE_SNF_HPP

#include "xp/chain.hpp"

// Test-only rank oracle: clears denominators and computes the Smith normal
// form over Z by gcd row/column reduction. Independent of the elimination
// used by the library.
namespace xp::testing {

inline int snf_rank(const QMatrix& m) {
    const int rows = m.rows(), cols = m.cols();
    if (rows == 0 || cols == 0) return 0;
    BigInt lcm = 1;
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) {
            BigInt d = denominator(m.at(i, j));
            lcm = lcm / boost::multiprecision::gcd(lcm, d) * d;
        }
    std::vector<std::vector<BigInt>> a(rows, std::vector<BigInt>(cols));
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) a[i][j] = numerator(m.at(i, j) * Rational(lcm));

    int rank = 0;
    int r = 0, c = 0;
    while (r < rows && c < cols) {
        // find a pivot with minimal absolute value
        int pi = -1, pj = -1;
        BigInt best = 0;
        for (int i = r; i < rows; ++i)
            for (int j = c; j < cols; ++j) {
                if (a[i][j] == 0) continue;
                BigInt v = boost::multiprecision::abs(a[i][j]);
                if (pi < 0 || v < best) { pi = i; pj = j; best = v; }
            }
        if (pi < 0) break;
        std::swap(a[pi], a[r]);
        for (int i = 0; i < rows; ++i) std::swap(a[i][pj], a[i][c]);
        bool clean = false;
        while (!clean) {
            clean = true;
            for (int i = r + 1; i < rows; ++i) {
                if (a[i][c] == 0) continue;
                BigInt q = a[i][c] / a[r][c];
                for (int j = c; j < cols; ++j) a[i][j] -= q * a[r][j];
                if (a[i][c] != 0) {
                    std::swap(a[i], a[r]);
                    clean = false;
                }
            }
            for (int j = c + 1; j < cols; ++j) {
                if (a[r][j] == 0) continue;
                BigInt q = a[r][j] / a[r][c];
                for (int i = r; i < rows; ++i) a[i][j] -= q * a[i][c];
                if (a[r][j] != 0) {
                    for (int i = 0; i < rows; ++i) std::swap(a[i][j], a[i][c]);
                    clean = false;
                }
            }
        }
        ++rank;
        ++r;
        ++c;
    }
    return rank;
}

inline std::vector<int> snf_homology_ranks(const ChainComplexQ& cc) {
    std::vector<int> ranks(cc.top_degree() + 1, 0);
    std::vector<int> rk(cc.top_degree() + 2, 0);
    for (int n = 0; n <= cc.top_degree(); ++n) rk[n] = snf_rank(cc.d(n));
    for (int n = 0; n <= cc.top_degree(); ++n)
        ranks[n] = cc.dim(n) - rk[n] - rk[n + 1];
    return ranks;
}

// Random chain complex with exactly d^2 = 0: conjugate a canonical direct
// sum of spheres (one generator, zero boundary) and disks (two generators,
// identity boundary) by random invertible matrices.
struct RandomComplexSpec {
    std::vector<int> spheres; // count per degree
    std::vector<int> disks;   // disk in degrees (n, n-1), count per top degree n >= 1
};

inline QMatrix random_invertible(std::mt19937_64& rng, int n) {
    // unit upper triangular times unit lower triangular with small entries
    std::uniform_int_distribution<long> e(-2, 2);
    QMatrix u = QMatrix::identity(n), l = QMatrix::identity(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            u.at(i, j) = Rational(e(rng));
            l.at(j, i) = Rational(e(rng));
        }
    return u * l;
}

struct ConjugatedComplex {
    ChainComplexQ canonical;
    ChainComplexQ twisted;
    std::vector<QMatrix> p;     // change of basis per degree: twisted = p * canonical
    std::vector<QMatrix> p_inv;
};

inline ConjugatedComplex random_chain_complex(std::mt19937_64& rng, int top, int max_per_degree) {
    std::uniform_int_distribution<int> cnt(0, max_per_degree);
    RandomComplexSpec spec;
    spec.spheres.resize(top + 1);
    spec.disks.resize(top + 1);
    for (int n = 0; n <= top; ++n) {
        spec.spheres[n] = cnt(rng);
        spec.disks[n] = n >= 1 ? cnt(rng) : 0;
    }
    // canonical dims: degree n holds spheres[n] + disks[n] (tops) + disks[n+1] (bottoms)
    ChainComplexQ c;
    c.basis.resize(top + 1);
    c.boundary.resize(top + 1);
    auto dim = [&](int n) {
        int d = spec.spheres[n] + spec.disks[n];
        if (n + 1 <= top) d += spec.disks[n + 1];
        return d;
    };
    for (int n = 0; n <= top; ++n)
        for (int i = 0; i < dim(n); ++i)
            c.basis[n].push_back("g" + std::to_string(n) + "_" + std::to_string(i));
    for (int n = 0; n <= top; ++n) {
        QMatrix m(n == 0 ? 0 : dim(n - 1), dim(n));
        if (n >= 1) {
            // disk tops in degree n map to disk bottoms in degree n-1
            int top_off = spec.spheres[n];
            int bot_off = spec.spheres[n - 1] + spec.disks[n - 1];
            for (int i = 0; i < spec.disks[n]; ++i) m.at(bot_off + i, top_off + i) = 1;
        }
        c.boundary[n] = std::move(m);
    }
    ConjugatedComplex out;
    out.canonical = c;
    out.twisted = c;
    out.p.resize(top + 1);
    out.p_inv.resize(top + 1);
    for (int n = 0; n <= top; ++n) {
        out.p[n] = random_invertible(rng, dim(n));
        out.p_inv[n] = inverse(out.p[n]);
    }
    for (int n = 1; n <= top; ++n)
        out.twisted.boundary[n] = out.p[n - 1] * c.boundary[n] * out.p_inv[n];
    return out;
}

} // namespace xp::testing

#endif
