#ifndef XP_CURVE_HPP
#define XP_CURVE_HPP

#include <optional>

#include "xp/chain.hpp"
#include "xp/ratfunc.hpp"

namespace xp {

// A point of the projective line over Q(i), finite or infinite.
struct P1Point {
    bool infinite = false;
    GaussianRational value; // meaningful when finite

    static P1Point inf() { return {true, GaussianRational(0)}; }
    static P1Point at(GaussianRational v) { return {false, std::move(v)}; }

    friend bool operator==(const P1Point& a, const P1Point& b) {
        return a.infinite == b.infinite && (a.infinite || a.value == b.value);
    }
    friend bool operator<(const P1Point& a, const P1Point& b) {
        if (a.infinite != b.infinite) return b.infinite;
        if (a.value.re != b.value.re) return a.value.re < b.value.re;
        return a.value.im < b.value.im;
    }
};

std::string p1_to_string(const P1Point& p);
P1Point p1_from_string(const std::string& s);

// Genus-0 curve: the projective line minus a finite puncture set, with
// marked points and a rational function regular away from the punctures.
struct CurveSpec {
    std::vector<P1Point> punctures;
    std::vector<P1Point> marked;
    RatFunc f; // univariate

    void validate() const; // marked/puncture disjointness, pole locations

    nlohmann::json to_json() const;
    static CurveSpec from_json(const nlohmann::json& j);
};

struct PoleDatum {
    P1Point location;
    int order; // >= 1 on the polar set, 0 means f is regular there
};

struct PunctureClassification {
    std::vector<P1Point> regular;   // punctures where f stays finite
    std::vector<PoleDatum> polar;   // punctures where f has a pole
};

// Exact pole orders at every puncture via valuation arithmetic.
PunctureClassification classify_punctures(const CurveSpec& spec);

// Combinatorial boundary structure of the real blow-up along the punctures:
// each polar puncture contributes d_z boundary arcs (sector model) or d_z
// boundary points (ray model).
enum class BoundaryModel { Arcs, Points };

struct CurveRdModel {
    CurveSpec spec;
    PunctureClassification punctures;
    int total_boundary_pieces; // sum of pole orders over the polar set
    ChainComplexQ arcs_complex;   // CW pair model with arc boundary cells
    ChainComplexQ points_complex; // CW pair model with point boundary cells
};

CurveRdModel build_rd_model(const CurveSpec& spec);

// Rank of H_n of the CW pair model; both models must agree (checked).
int rd_rank(const CurveSpec& spec, int degree);
std::vector<int> rd_ranks(const CurveSpec& spec);

// Euler characteristic of the absolute arc model (equals 2 - #punctures).
long rd_model_euler(const CurveRdModel& model);

// Generator rays for the monomial case f = z^n with marked point {0}:
// directions are the n-th roots of unity.
struct RayDirection {
    int index;  // m in 0..n-1
    int order;  // n
    std::complex<double> value;
};
std::vector<RayDirection> rd_generators(const CurveSpec& spec);

// Polar-coordinate chart for a product of coordinate half-planes: the
// first m coordinates are written z_j = r_j w_j with r_j >= 0, |w_j| = 1.
struct BlowupChart {
    std::vector<double> radii;
    std::vector<std::complex<double>> directions;
    std::vector<std::complex<double>> rest;
};

BlowupChart blowup_chart(const std::vector<std::complex<double>>& z, int divisor_count,
                         const std::vector<std::complex<double>>& boundary_directions = {});
std::vector<std::complex<double>> blowup_chart_inverse(const BlowupChart& chart);

} // namespace xp

#endif
