#ifndef XP_QMATRIX_HPP
#define XP_QMATRIX_HPP

#include <vector>

#include "xp/gaussian.hpp"

namespace xp {

// Dense exact matrix over a field F (Rational or GaussianRational).
template <typename F>
class MatrixF {
public:
    MatrixF() : rows_(0), cols_(0) {}
    MatrixF(int rows, int cols) : rows_(rows), cols_(cols), data_(size_t(rows) * cols, F(0)) {}

    static MatrixF identity(int n) {
        MatrixF m(n, n);
        for (int i = 0; i < n; ++i) m.at(i, i) = F(1);
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    F& at(int i, int j) { return data_[size_t(i) * cols_ + j]; }
    const F& at(int i, int j) const { return data_[size_t(i) * cols_ + j]; }

    MatrixF operator*(const MatrixF& o) const {
        if (cols_ != o.rows_) throw DimensionMismatch("matrix product shape mismatch");
        MatrixF r(rows_, o.cols_);
        for (int i = 0; i < rows_; ++i)
            for (int k = 0; k < cols_; ++k) {
                const F& a = at(i, k);
                if (a == F(0)) continue;
                for (int j = 0; j < o.cols_; ++j) r.at(i, j) += a * o.at(k, j);
            }
        return r;
    }

    MatrixF operator+(const MatrixF& o) const {
        if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionMismatch("matrix sum shape mismatch");
        MatrixF r = *this;
        for (size_t k = 0; k < data_.size(); ++k) r.data_[k] += o.data_[k];
        return r;
    }

    MatrixF operator-() const {
        MatrixF r = *this;
        for (auto& v : r.data_) v = -v;
        return r;
    }

    bool is_zero() const {
        for (const auto& v : data_)
            if (!(v == F(0))) return false;
        return true;
    }

    friend bool operator==(const MatrixF& a, const MatrixF& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

private:
    int rows_, cols_;
    std::vector<F> data_;
};

using QMatrix = MatrixF<Rational>;
using GMatrix = MatrixF<GaussianRational>;

// Exact rank via plain Gaussian elimination over the field.
template <typename F>
int rank_gauss(MatrixF<F> m);

// Exact rank of a rational matrix by fraction-free (Bareiss) elimination
// on the denominator-cleared integer matrix. Used by the chain module.
int rank_bareiss(const QMatrix& m);

// Solves A x = b exactly; returns false when the system is inconsistent.
// If underdetermined, one solution is produced (free variables set to 0).
template <typename F>
bool solve_linear(MatrixF<F> a, std::vector<F> b, std::vector<F>& x);

// Invert a small square matrix; throws on singular input.
template <typename F>
MatrixF<F> inverse(const MatrixF<F>& a);

} // namespace xp

#endif
