#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace poisinv {

struct PoisError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/* scalar / linear algebra */

struct DivisionByZero : PoisError {
    DivisionByZero() : PoisError("division by zero") {}
};

struct DimensionMismatch : PoisError {
    explicit DimensionMismatch(const std::string& what) : PoisError("dimension mismatch: " + what) {}
};

struct IndexOutOfRange : PoisError {
    explicit IndexOutOfRange(const std::string& what) : PoisError("index out of range: " + what) {}
};

struct NotSquare : PoisError {
    NotSquare() : PoisError("matrix is not square") {}
};

struct SingularMatrix : PoisError {
    SingularMatrix() : PoisError("matrix is singular") {}
};

struct VariableCountMismatch : PoisError {
    explicit VariableCountMismatch(const std::string& what)
        : PoisError("variable count mismatch: " + what) {}
};

struct PoleAtZero : PoisError {
    PoleAtZero() : PoisError("series expansion at a pole: denominator vanishes at 0") {}
};

/* parsing */

struct SyntaxError : PoisError {
    std::size_t pos;
    SyntaxError(const std::string& what, std::size_t at)
        : PoisError(what + " (at position " + std::to_string(at) + ")"), pos(at) {}
};

struct UnknownVariable : SyntaxError {
    UnknownVariable(const std::string& name, std::size_t at)
        : SyntaxError("unknown variable '" + name + "'", at) {}
};

struct ExponentNotInteger : SyntaxError {
    explicit ExponentNotInteger(std::size_t at)
        : SyntaxError("exponent must be a nonnegative integer", at) {}
};

/* structure files */

struct FileFormatError : PoisError {
    std::size_t line;
    FileFormatError(const std::string& what, std::size_t at)
        : PoisError(what + " (line " + std::to_string(at) + ")"), line(at) {}
};

struct UnknownName : PoisError {
    explicit UnknownName(const std::string& what) : PoisError("unknown name: " + what) {}
};

/* poisson structures */

struct WrongVariableCount : PoisError {
    explicit WrongVariableCount(const std::string& what)
        : PoisError("wrong variable count: " + what) {}
};

struct NotHomogeneousDegree3 : PoisError {
    NotHomogeneousDegree3() : PoisError("superpotential must be homogeneous of degree 3") {}
};

struct NotQuadratic : PoisError {
    NotQuadratic() : PoisError("bracket table must be homogeneous quadratic") {}
};

/* groups and envelopes */

struct ClosureCapExceeded : PoisError {
    unsigned cap;
    explicit ClosureCapExceeded(unsigned c)
        : PoisError("group closure exceeded cap of " + std::to_string(c) + " elements"), cap(c) {}
};

struct NotClosedUnderBracket : PoisError {
    unsigned i, j;
    NotClosedUnderBracket(unsigned gi, unsigned gj)
        : PoisError("bracket of generators " + std::to_string(gi + 1) + " and " +
                    std::to_string(gj + 1) + " leaves the generated subalgebra"),
          i(gi), j(gj) {}
};

struct InfiniteOrder : PoisError {
    InfiniteOrder() : PoisError("matrix has no finite order within the bound") {}
};

}  // namespace poisinv
