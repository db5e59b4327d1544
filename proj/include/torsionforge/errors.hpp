#pragma once

#include <stdexcept>
#include <string>

namespace torsionforge {

// Base class for every error thrown by this library.
struct Error : std::runtime_error {
    explicit Error(const std::string& what_arg) : std::runtime_error(what_arg) {}
};

// --- algebra ---------------------------------------------------------------
struct FieldMismatch : Error { using Error::Error; };          // mixed coefficient fields
struct DivisionByZero : Error { using Error::Error; };         // scalar division by zero
struct ZeroPolynomial : Error { using Error::Error; };         // zero input where nonzero required
struct NonExactDivision : Error { using Error::Error; };       // polynomial division left a remainder

// --- families --------------------------------------------------------------
struct InvalidParams : Error { using Error::Error; };          // parameter invariants violated
struct DegenerateCurve : Error { using Error::Error; };        // wrong degree / repeated roots
struct MarkedPointOnBranch : Error { using Error::Error; };    // A(0) = 0 or A(1) = 0
struct UnsupportedFamily : Error { using Error::Error; };      // operation undefined for this family

// --- jacobian --------------------------------------------------------------
struct PointNotOnCurve : Error { using Error::Error; };
struct PointAtInfinity : Error { using Error::Error; };        // use the explicit zero element instead
struct CurveMismatch : Error { using Error::Error; };          // divisors from different curves

// --- torsion / mod-p oracle ------------------------------------------------
struct NotAMultiple : Error { using Error::Error; };           // claimed multiple does not kill the class
struct BadReduction : Error { using Error::Error; };           // reduction invariants violated

// --- serialization ---------------------------------------------------------
struct ParseError : Error { using Error::Error; };

}  // namespace torsionforge
