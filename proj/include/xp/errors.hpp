#ifndef XP_ERRORS_HPP
#define XP_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace xp {

// Base class for all domain errors raised by the library. The CLI maps
// these to exit code 2 (bad input / hypothesis violation); numerical
// failures derive from NumericalError and map to exit code 3.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

struct PoleError : Error {
    explicit PoleError(const std::string& msg) : Error(msg) {}
};

struct ZeroDirectionError : Error {
    explicit ZeroDirectionError(const std::string& msg) : Error(msg) {}
};

struct DimensionMismatch : Error {
    explicit DimensionMismatch(const std::string& msg) : Error(msg) {}
};

struct NotInPolyhedron : Error {
    explicit NotInPolyhedron(const std::string& msg) : Error(msg) {}
};

struct NotSubcomplex : Error {
    explicit NotSubcomplex(const std::string& msg) : Error(msg) {}
};

struct BoundaryNotSquareZero : Error {
    explicit BoundaryNotSquareZero(const std::string& msg) : Error(msg) {}
};

struct SignConventionViolation : Error {
    explicit SignConventionViolation(const std::string& msg) : Error(msg) {}
};

struct MissingIntersection : Error {
    explicit MissingIntersection(const std::string& msg) : Error(msg) {}
};

struct UnsupportedShape : Error {
    explicit UnsupportedShape(const std::string& msg) : Error(msg) {}
};

struct MissingDirection : Error {
    explicit MissingDirection(const std::string& msg) : Error(msg) {}
};

struct NotStabilized : Error {
    explicit NotStabilized(const std::string& msg) : Error(msg) {}
};

struct EndpointNotMarked : Error {
    explicit EndpointNotMarked(const std::string& msg) : Error(msg) {}
};

struct PoleOnSimplex : Error {
    explicit PoleOnSimplex(const std::string& msg) : Error(msg) {}
};

struct UnboundedDomain : Error {
    explicit UnboundedDomain(const std::string& msg) : Error(msg) {}
};

struct DensityUndefined : Error {
    explicit DensityUndefined(const std::string& msg) : Error(msg) {}
};

struct ParseError : Error {
    explicit ParseError(const std::string& msg) : Error(msg) {}
};

struct NumericalError : Error {
    explicit NumericalError(const std::string& msg) : Error(msg) {}
};

struct QuadratureFailure : NumericalError {
    explicit QuadratureFailure(const std::string& msg) : NumericalError(msg) {}
};

struct RejectedPath : Error {
    explicit RejectedPath(const std::string& msg) : Error(msg) {}
};

} // namespace xp

#endif
