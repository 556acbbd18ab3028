#ifndef XP_SA_DOMAIN_HPP
#define XP_SA_DOMAIN_HPP

#include <optional>

#include "xp/poly.hpp"
#include "vendor_json_fwd.hpp"

namespace xp {

// Horizontal strip S_{r,s} = { Re(z) > r, |Im(z)| < s }.
struct StripSpec {
    double r;
    double s; // must be > 0

    bool contains(std::complex<double> z) const {
        return z.real() > r && std::abs(z.imag()) < s;
    }
};

// Point of the compactification of C by a circle of directions at infinity.
// Directions are unnormalised and compared up to positive real scaling.
struct PTildePoint {
    enum class Kind { Finite, AtInfinity } kind;
    GaussianRational value; // finite point or direction

    static PTildePoint finite(GaussianRational z) {
        return {Kind::Finite, std::move(z)};
    }
    static PTildePoint at_infinity(GaussianRational dir) {
        return {Kind::AtInfinity, std::move(dir)};
    }
};

enum class PTildeClass {
    Finite,
    OneInfinity,                 // direction positively proportional to 1
    PositiveInfinityDirection,   // Re > 0 but not the real-positive ray
    NonpositiveInfinityDirection // Re <= 0
};

PTildeClass classify_ptilde(const PTildePoint& p);

// Membership in C ∪ {directions with Re > 0} resp. C ∪ {positive real ray}.
bool in_positive_sector_model(const PTildePoint& p); // "B°"-style membership
bool in_single_ray_model(const PTildePoint& p);      // "B#"-style membership

// Same direction up to positive real scaling, decided by a cross/dot test.
bool same_direction(const GaussianRational& a, const GaussianRational& b);

// Finite union of conjunctions {p_i = 0, q_j > 0} of polynomial conditions
// with rational (real) coefficients.
struct SignClause {
    std::vector<Polynomial> eq;
    std::vector<Polynomial> gt;
};

struct SignConditionRegion {
    int dim = 0;
    std::vector<SignClause> clauses;

    bool contains_exact(const std::vector<Rational>& x) const;
    // Float membership with an equality tolerance band (default 1e-12).
    bool contains(const std::vector<double>& x, double tol = 1e-12) const;
};

SignConditionRegion region_from_json(const nlohmann::json& j);
nlohmann::json region_to_json(const SignConditionRegion& r);

// Region helpers used by tests and the volume module.
SignConditionRegion box_region(const std::vector<std::pair<Rational, Rational>>& bounds);

// A declarative pseudo-orientation: signed parameter intervals of a
// 1-dimensional domain. Pieces are pairwise disjoint by invariant; the
// complement of their union in the underlying domain has lower dimension
// by construction.
struct OrientedPiece {
    Rational lo;
    Rational hi;   // lo < hi
    int sign;      // +1 or -1
};

struct PseudoOrientation {
    std::vector<OrientedPiece> pieces;

    static PseudoOrientation whole(Rational lo, Rational hi, int sign = 1);

    // Restricts to a sub-collection of parameter intervals. Signs are
    // inherited; pieces are clipped to the given intervals.
    PseudoOrientation restrict(const std::vector<std::pair<Rational, Rational>>& sub) const;

    // Restriction that removes a finite point set: pieces are split at the
    // removed points, signs inherited; the integral contract is unchanged.
    PseudoOrientation remove_points(const std::vector<Rational>& pts) const;

    void check_disjoint() const;
};

} // namespace xp

#endif
