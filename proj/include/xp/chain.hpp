#ifndef XP_CHAIN_HPP
#define XP_CHAIN_HPP

#include <string>

#include "xp/qmatrix.hpp"
#include "xp/simplex.hpp"

namespace xp {

// Bounded chain complex of Q-vector spaces, degrees 0..top.
// boundary[n] maps degree n to degree n-1 (boundary[0] has zero rows).
struct ChainComplexQ {
    std::vector<std::vector<std::string>> basis;
    std::vector<QMatrix> boundary;

    int top_degree() const { return (int)basis.size() - 1; }
    int dim(int n) const {
        return n >= 0 && n <= top_degree() ? (int)basis[n].size() : 0;
    }
    const QMatrix& d(int n) const;

    void check_shapes() const;
    bool d_squared_zero() const;

    static ChainComplexQ zero();
};

// Ranks of H_n for n = 0..top; requires d^2 = 0.
std::vector<int> homology_ranks(const ChainComplexQ& c);

long euler_characteristic(const ChainComplexQ& c);

// Degreewise map of complexes commuting with the boundaries.
struct ChainMapQ {
    const ChainComplexQ* from = nullptr;
    const ChainComplexQ* to = nullptr;
    std::vector<QMatrix> mats; // mats[n]: from.C_n -> to.C_n

    void check() const; // shapes + commutation, throws on failure
};

// Relative simplicial chain complex of the pair (K, L): basis in degree n
// is the n-simplices of K not in L, the boundary is the alternating face
// sum with faces in L dropped. Faces in neither K nor L are an error.
ChainComplexQ simplicial_chain_complex(const GeomComplex& K, const GeomComplex& L);
ChainComplexQ simplicial_chain_complex(const GeomComplex& K);

// Chain map of the inclusion L -> K of absolute simplicial complexes.
// Holds borrowed pointers into `store`, which receives the two complexes.
struct InclusionData {
    ChainComplexQ sub;
    ChainComplexQ whole;
    ChainMapQ map;
};
InclusionData inclusion_chain_map(const GeomComplex& K, const GeomComplex& L);

// Mapping cone: Cone_n = X_n + Y_{n-1} with d(x,y) = (dx + f(y), -dy).
ChainComplexQ cone(const ChainMapQ& f);

// Double complex with commuting differentials
//   horiz[p][q]: D_{p,q} -> D_{p-1,q},  vert[p][q]: D_{p,q} -> D_{p,q-1}.
struct DoubleComplexQ {
    std::vector<std::vector<std::vector<std::string>>> basis; // [p][q]
    std::vector<std::vector<QMatrix>> horiz;
    std::vector<std::vector<QMatrix>> vert;

    int pmax() const { return (int)basis.size() - 1; }
    int qmax() const { return pmax() >= 0 ? (int)basis[0].size() - 1 : -1; }
    int dim(int p, int q) const;

    void check() const; // shapes, rows/columns complexes, commutation
};

// Total complex with differential d = d_h + (-1)^p d_v; verifies d^2 = 0.
ChainComplexQ total_complex(const DoubleComplexQ& d);

// Cover data for a nerve of m sets: one complex per nonempty subset of
// {0..m-1} and, for each one-element deletion T -> T\{i}, the per-degree
// matrices of the inclusion chain map C_T -> C_{T\{i}}.
struct CoverData {
    int m = 0;
    std::map<std::vector<int>, ChainComplexQ> piece; // key: sorted subset
    std::map<std::pair<std::vector<int>, int>, std::vector<QMatrix>> step;
};

struct NerveResult {
    std::vector<std::vector<std::vector<int>>> tuples; // per level: tuples over {0..m-1}
    DoubleComplexQ dc;
    // Total-complex homology is exact in degrees <= valid_up_to; higher
    // degrees carry truncation artifacts.
    int valid_up_to = 0;
};

// Nerve rows use index tuples with repetitions, truncated at `levels`
// (defaults to m+2). Throws MissingIntersection on absent cover data.
NerveResult cech_nerve(const CoverData& data, int levels = -1);

nlohmann::json matrix_to_json(const QMatrix& m);
QMatrix matrix_from_json(const nlohmann::json& j);

} // namespace xp

#endif
