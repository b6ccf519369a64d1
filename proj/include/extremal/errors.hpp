#ifndef EXTREMAL_ERRORS_HPP
#define EXTREMAL_ERRORS_HPP

#include <stdexcept>
#include <string>

#include "extremal/numeric.hpp"

namespace extremal {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Rejected input: seed hypotheses, preconditions on operands.
struct ValidationError : Error {
    using Error::Error;
};

struct NotCoplanar : ValidationError {
    Int det;
    explicit NotCoplanar(Int d)
        : ValidationError("bracket requires det(x,y,z)=0, got " + d.get_str()), det(std::move(d)) {}
};

struct DependentRows : ValidationError {
    DependentRows() : ValidationError("rows are linearly dependent (all 2x2 minors vanish)") {}
};

struct NotSymmetric : ValidationError {
    explicit NotSymmetric(const std::string& which)
        : ValidationError("NotSymmetric: matrix " + which + " is not symmetric") {}
};

struct NotUnimodular : ValidationError {
    Int det;
    NotUnimodular(const std::string& which, Int d)
        : ValidationError("NotUnimodular: matrix " + which + " has det " + d.get_str()),
          det(std::move(d)) {}
};

struct Commuting : ValidationError {
    Commuting() : ValidationError("Commuting: trace(JAB) = 0, seed matrices commute") {}
};

struct PositivityFailure : ValidationError {
    explicit PositivityFailure(const std::string& what_failed)
        : ValidationError("PositivityFailure: " + what_failed) {}
};

// A certified decision could not be reached under the refinement cap.
struct PrecisionExhausted : Error {
    explicit PrecisionExhausted(const std::string& context)
        : Error("PrecisionExhausted: " + context) {}
};

struct NoRealRoot : Error {
    Int discriminant;
    explicit NoRealRoot(Int disc)
        : Error("NoRealRoot: discriminant " + disc.get_str()), discriminant(std::move(disc)) {}
};

struct DegenerateHeight : Error {
    DegenerateHeight() : Error("DegenerateHeight: H(alpha) = 1") {}
};

struct IdentityFailure : Error {
    explicit IdentityFailure(const std::string& detail) : Error("IdentityFailure: " + detail) {}
};

} // namespace extremal

#endif
