#include "xp/derham.hpp"

namespace xp {

RatForm d_f_apply(const RatForm& w, const RatFunc& f) {
    if (w.nvars() != f.nvars()) throw DimensionMismatch("form and twist variable count mismatch");
    RatForm df(f.nvars(), 1);
    for (int v = 0; v < f.nvars(); ++v) df.add_term({v}, f.derivative(v));
    if (w.degree() >= w.nvars()) {
        // top degree: both dw and df^w vanish
        return RatForm::zero(w.nvars(), w.degree());
    }
    return w.d() - wedge(df, w);
}

TruncatedComplex build_truncated_complex(const Polynomial& f,
                                         const std::vector<GaussianRational>& marked,
                                         int truncation) {
    if (f.nvars() != 1) throw DimensionMismatch("twist must be univariate");
    int degf = f.degree_in(0);
    if (degf < 1) throw Error("twist must have degree at least one");
    if (truncation < 1) throw Error("truncation too small");

    TruncatedComplex tc;
    tc.f = f;
    tc.marked = marked;
    tc.truncation = truncation;

    Polynomial fp = f.derivative(0);
    const int n = truncation;
    const int rows_forms = n + degf; // dz коэффициент degrees 0 .. n+degf-1
    const int rows = rows_forms + (int)marked.size();
    GMatrix m(rows, n + 1);

    for (int k = 0; k <= n; ++k) {
        // image of z^k: (k z^{k-1} - f' z^k) dz, then the evaluations
        Polynomial zk(1);
        zk.add_term({k}, GaussianRational(1));
        Polynomial img = zk.derivative(0) - fp * zk;
        for (const auto& [e, c] : img.terms()) {
            if (e[0] >= rows_forms) throw Error("truncated image escapes the window");
            m.at(e[0], k) = c;
        }
        for (size_t yi = 0; yi < marked.size(); ++yi)
            m.at(rows_forms + (int)yi, k) = -zk.eval_exact({marked[yi]});
    }
    tc.matrix = std::move(m);
    return tc;
}

namespace {

int coker_rank(const TruncatedComplex& tc) {
    GMatrix m = tc.matrix;
    return tc.target_dim() - rank_gauss(m);
}

} // namespace

int h1_rank(const Polynomial& f, const std::vector<GaussianRational>& marked, int truncation) {
    int degf = f.degree_in(0);
    if (truncation < 2 * degf) throw Error("truncation below the stabilisation threshold");
    int r1 = coker_rank(build_truncated_complex(f, marked, truncation));
    int r2 = coker_rank(build_truncated_complex(f, marked, truncation + degf));
    if (r1 != r2)
        throw NotStabilized("cohomology rank did not stabilise between truncations " +
                            std::to_string(truncation) + " and " + std::to_string(truncation + degf));
    return r1;
}

std::vector<CocycleRep> h1_basis(const Polynomial& f, const std::vector<GaussianRational>& marked,
                                 int truncation) {
    int rank = h1_rank(f, marked, truncation); // includes the stabilisation gate
    TruncatedComplex tc = build_truncated_complex(f, marked, truncation);

    // Greedily pick standard target vectors (z^j dz first, then the marked
    // evaluations) that grow the span of im(d) until the cokernel is full.
    const int rows = tc.target_dim();
    const int cols = tc.source_dim();
    GMatrix work(rows, cols + rank);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) work.at(i, j) = tc.matrix.at(i, j);
    int base_rank = rank_gauss(tc.matrix);

    std::vector<CocycleRep> out;
    int added = 0;
    for (int r = 0; r < rows && added < rank; ++r) {
        work.at(r, cols + added) = GaussianRational(1);
        GMatrix probe(rows, cols + added + 1);
        for (int i = 0; i < rows; ++i)
            for (int j = 0; j < cols + added + 1; ++j) probe.at(i, j) = work.at(i, j);
        if (rank_gauss(probe) == base_rank + added + 1) {
            ++added;
            CocycleRep rep;
            rep.form = RatForm(1, 1);
            int rows_forms = rows - (int)marked.size();
            if (r < rows_forms) {
                Polynomial q(1);
                q.add_term({r}, GaussianRational(1));
                rep.form.add_term({0}, RatFunc(q));
                rep.values.assign(marked.size(), GaussianRational(0));
            } else {
                rep.values.assign(marked.size(), GaussianRational(0));
                rep.values[r - rows_forms] = GaussianRational(1);
            }
            out.push_back(std::move(rep));
        } else {
            work.at(r, cols + added) = GaussianRational(0);
        }
    }
    if (added != rank) throw Error("failed to complete a cokernel basis");
    return out;
}

} // namespace xp
