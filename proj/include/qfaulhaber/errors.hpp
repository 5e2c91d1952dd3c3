#pragma once

#include <stdexcept>
#include <string>

namespace qfaulhaber {

// Base class for every library error.
struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// --- exact_field ---
struct ZeroDenominator : Error {
    explicit ZeroDenominator(const std::string& what = "denominator is zero") : Error(what) {}
};
struct DivisionByZeroFunction : Error {
    explicit DivisionByZeroFunction(const std::string& what = "division by the zero function")
        : Error(what) {}
};
struct PoleAtPoint : Error {
    explicit PoleAtPoint(const std::string& what = "denominator vanishes at the point")
        : Error(what) {}
};
struct PoleAtOne : Error {
    explicit PoleAtOne(const std::string& what = "pole at v = 1") : Error(what) {}
};
struct SingularAtZ1 : Error {
    explicit SingularAtZ1(const std::string& what = "reduced denominator vanishes at z = 1")
        : Error(what) {}
};

// --- q_bernoulli_closed ---
struct SingularUnresolved : Error {
    explicit SingularUnresolved(const std::string& what = "regularized limit does not exist")
        : Error(what) {}
};
struct UnsupportedM : Error {
    explicit UnsupportedM(const std::string& what = "no closed form for this m") : Error(what) {}
};

// --- numeric_analytic ---
struct DomainError : Error {
    explicit DomainError(const std::string& what = "argument outside the numeric domain")
        : Error(what) {}
};
struct TruncationNotConverged : Error {
    explicit TruncationNotConverged(const std::string& what = "series truncation did not converge")
        : Error(what) {}
};
struct QuadratureNotConverged : Error {
    explicit QuadratureNotConverged(const std::string& what = "quadrature did not converge")
        : Error(what) {}
};

// --- verify_cli ---
struct UnknownSuite : Error {
    explicit UnknownSuite(const std::string& what = "unknown suite id") : Error(what) {}
};
struct InvalidRange : Error {
    explicit InvalidRange(const std::string& what = "invalid parameter range") : Error(what) {}
};
struct VersionMismatch : Error {
    explicit VersionMismatch(const std::string& what = "report format_version mismatch")
        : Error(what) {}
};
struct IoError : Error {
    explicit IoError(const std::string& what = "i/o failure") : Error(what) {}
};

}  // namespace qfaulhaber
