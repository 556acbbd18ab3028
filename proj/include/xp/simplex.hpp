#ifndef XP_SIMPLEX_HPP
#define XP_SIMPLEX_HPP

#include <map>
#include <optional>
#include <set>

#include "xp/qmatrix.hpp"
#include "vendor_json_fwd.hpp"

namespace xp {

// Point with exact rational coordinates in a fixed ambient dimension.
using Point = std::vector<Rational>;

// An open simplex, stored as indices into the vertex pool of its complex.
// The vertex set determines the simplex; orientation is the given order.
using VertexSet = std::vector<int>; // strictly increasing

// Finite set of open simplices with rational vertices. The complex
// condition (closures meet in closures of common faces) is checked by
// validate(), not enforced on construction.
class GeomComplex {
public:
    GeomComplex() : ambient_(0) {}
    explicit GeomComplex(int ambient) : ambient_(ambient) {}

    int ambient() const { return ambient_; }
    const std::vector<Point>& vertices() const { return vertices_; }
    const std::set<VertexSet>& simplices() const { return simplices_; }

    int add_vertex(const Point& p);               // dedupes exact coordinates
    void add_simplex(const std::vector<int>& vertex_ids); // sorts, checks independence
    int find_vertex(const Point& p) const;        // -1 when absent

    bool has_simplex(const VertexSet& s) const { return simplices_.count(s) > 0; }
    int dim_of(const VertexSet& s) const { return (int)s.size() - 1; }
    int dim() const; // max simplex dimension, -1 if empty
    bool empty() const { return simplices_.empty(); }

    Point barycenter(const VertexSet& s) const;

    // All nonempty subsets of the vertex set, as vertex sets (includes s).
    static std::vector<VertexSet> faces(const VertexSet& s);

    // Complex condition report: nullopt when valid, else the offending pair.
    std::optional<std::pair<VertexSet, VertexSet>> validate() const;

    GeomComplex closure() const;      // add all faces
    GeomComplex closed_core() const;  // maximal face-closed subcomplex
    GeomComplex barycentric_subdivision() const;

    // Subcomplex test (simplices of other, with identical coordinates).
    bool contains_subcomplex(const GeomComplex& other) const;

    // Unique open simplex containing x; throws NotInPolyhedron.
    VertexSet carrier(const Point& x) const;
    bool member(const Point& x) const;

    // Exact barycentric coordinates of x in the closed simplex s, if any.
    std::optional<std::vector<Rational>> barycentric_coords(const VertexSet& s, const Point& x) const;

    nlohmann::json to_json() const;
    static GeomComplex from_json(const nlohmann::json& j);

private:
    int ambient_;
    std::vector<Point> vertices_;
    std::map<Point, int> vertex_ids_;
    std::set<VertexSet> simplices_;

    bool affinely_independent(const std::vector<int>& ids) const;
};

// Retraction data bundles the subdivision and its closed core so that
// repeated retract/homotopy calls reuse them.
class Retraction {
public:
    explicit Retraction(const GeomComplex& k);

    const GeomComplex& complex() const { return k_; }
    const GeomComplex& subdivision() const { return beta_; }
    const GeomComplex& core() const { return core_; }

    // r(x) = sum_{s in K} lambda_s(x) b(s) / Lambda(x), evaluated exactly
    // through the carrier simplex of x in the subdivision.
    Point retract(const Point& x) const;

    // H(x,t) = (1-t) x + t r(x)
    Point homotopy(const Point& x, const Rational& t) const;

private:
    GeomComplex k_;
    GeomComplex beta_;
    GeomComplex core_;
    // For each subdivision vertex: the K-simplex whose barycenter it is,
    // and whether that simplex belongs to K (as opposed to only closure(K)).
    std::vector<char> vertex_in_k_;
};

} // namespace xp

#endif
