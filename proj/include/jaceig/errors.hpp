#ifndef JACEIG_ERRORS_HPP
#define JACEIG_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace jaceig {

// Base class for all library errors.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Two equal entries on the main diagonal; the branch recentring is undefined.
struct DuplicateDiagonal : Error {
    explicit DuplicateDiagonal(const std::string& msg) : Error(msg) {}
};

// Branch index outside 1..d.
struct BadIndex : Error {
    explicit BadIndex(const std::string& msg) : Error(msg) {}
};

// Series truncation caps disagree with the requested degree.
struct DegreeMismatch : Error {
    explicit DegreeMismatch(const std::string& msg) : Error(msg) {}
};

// Series operands live in different variable spaces.
struct DimensionMismatch : Error {
    explicit DimensionMismatch(const std::string& msg) : Error(msg) {}
};

// Reciprocal of a series with zero constant term.
struct ZeroConstantTerm : Error {
    explicit ZeroConstantTerm(const std::string& msg) : Error(msg) {}
};

// Negative component in a multi-index where only q >= 0 is meaningful.
struct NegativeIndex : Error {
    explicit NegativeIndex(const std::string& msg) : Error(msg) {}
};

// A map denominator 1+s+t or 1+w vanished.
struct DenominatorZero : Error {
    explicit DenominatorZero(const std::string& msg) : Error(msg) {}
};

// Pivot collapse in the finite-difference determinant.
struct SingularElimination : Error {
    explicit SingularElimination(const std::string& msg) : Error(msg) {}
};

// A required exact ratio is undefined (zero divisor).
struct DivisionByZero : Error {
    explicit DivisionByZero(const std::string& msg) : Error(msg) {}
};

// Numeric eigensolver failed to certify the residual target.
struct ConvergenceFailure : Error {
    explicit ConvergenceFailure(const std::string& msg) : Error(msg) {}
};

// Two numeric eigenvalues are equidistant from the branch center.
struct BranchAmbiguity : Error {
    explicit BranchAmbiguity(const std::string& msg) : Error(msg) {}
};

// Input file could not be parsed.
struct ParseError : Error {
    explicit ParseError(const std::string& msg) : Error(msg) {}
};

// Requested degree or matrix size above the supported desk scale.
struct LimitExceeded : Error {
    explicit LimitExceeded(const std::string& msg) : Error(msg) {}
};

} // namespace jaceig

#endif
