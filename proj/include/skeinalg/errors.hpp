#pragma once

#include <stdexcept>
#include <string>

namespace skein {

/// Base class for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DivisionByZero : Error {
    DivisionByZero() : Error("division by zero") {}
    explicit DivisionByZero(const std::string& what) : Error(what) {}
};

struct RingMismatch : Error {
    RingMismatch() : Error("operands belong to different rings") {}
    explicit RingMismatch(const std::string& what) : Error(what) {}
};

struct ZeroPolynomial : Error {
    ZeroPolynomial() : Error("degree of the zero polynomial is undefined") {}
};

struct NonTerminating : Error {
    explicit NonTerminating(const std::string& what) : Error(what) {}
};

struct NotSL2 : Error {
    NotSL2() : Error("matrix determinant is not 1") {}
};

struct OddDegree : Error {
    OddDegree() : Error("degree through the sphere must be even") {}
};

struct NegativeDegree : Error {
    NegativeDegree() : Error("degree through the sphere must be non-negative") {}
};

struct ParamConstraintViolated : Error {
    explicit ParamConstraintViolated(const std::string& clause)
        : Error("parameter constraint violated: " + clause) {}
};

struct SchemaError : Error {
    explicit SchemaError(const std::string& path, const std::string& what)
        : Error(path + ": " + what) {}
};

} // namespace skein
