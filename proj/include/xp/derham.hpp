#ifndef XP_DERHAM_HPP
#define XP_DERHAM_HPP

#include "xp/curve.hpp"
#include "xp/form.hpp"
#include "xp/qmatrix.hpp"

namespace xp {

// Twisted differential  d_f w = dw - df ^ w  on rational forms.
RatForm d_f_apply(const RatForm& w, const RatFunc& f);

// Finite-dimensional model of the twisted relative de Rham complex of the
// affine line with a polynomial twist and marked points Y:
//   span(1..z^N)  ->  span(dz..z^{N+deg f-1} dz) + Q(i)^Y
//   P |-> (P' - f'P, -P(y) for y in Y).
// Cohomology in degree one is the cokernel; ranks are reported only when
// they are stable under enlarging the truncation by deg f.
struct TruncatedComplex {
    Polynomial f;                      // univariate over Q(i), deg >= 1
    std::vector<GaussianRational> marked;
    int truncation;                    // N
    GMatrix matrix;                    // (N + deg f + |Y|) x (N + 1)

    int target_dim() const { return matrix.rows(); }
    int source_dim() const { return matrix.cols(); }
};

TruncatedComplex build_truncated_complex(const Polynomial& f,
                                         const std::vector<GaussianRational>& marked,
                                         int truncation);

// Rank of H^1; throws NotStabilized when truncations N and N + deg f differ.
int h1_rank(const Polynomial& f, const std::vector<GaussianRational>& marked, int truncation);

// Cocycle representative (Q dz, a_y values) of a basis class.
struct CocycleRep {
    RatForm form;                          // Q dz
    std::vector<GaussianRational> values;  // one per marked point
};

std::vector<CocycleRep> h1_basis(const Polynomial& f, const std::vector<GaussianRational>& marked,
                                 int truncation);

} // namespace xp

#endif
