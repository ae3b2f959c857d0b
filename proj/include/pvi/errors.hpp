#ifndef PVI_ERRORS_HPP
#define PVI_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace pvi {

// Base class for all domain errors raised by this library.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Gamma evaluated at (or too close to) a non-positive integer.
struct PoleError : Error {
    explicit PoleError(const std::string& msg) : Error(msg) {}
};

// 2F1 argument outside the series convergence domain.
struct ConvergenceDomainError : Error {
    explicit ConvergenceDomainError(const std::string& msg) : Error(msg) {}
};

// A parameter combination sits on (or near) an excluded integer case.
struct DegenerateParameterError : Error {
    explicit DegenerateParameterError(const std::string& msg) : Error(msg) {}
};

struct RangeError : Error {
    explicit RangeError(const std::string& msg) : Error(msg) {}
};

// LU pivot underflow; the matrix is numerically singular.
struct SingularMatrixError : Error {
    explicit SingularMatrixError(const std::string& msg) : Error(msg) {}
};

// (theta, v) pair fails the trace identities required by the case maps.
struct CaseMismatchError : Error {
    explicit CaseMismatchError(const std::string& msg) : Error(msg) {}
};

// Integration path passes too close to a fixed singularity of the ODE.
struct PathSingularityError : Error {
    explicit PathSingularityError(const std::string& msg) : Error(msg) {}
};

// The sigma'' square-root branch could not be resolved by continuity.
struct BranchLossError : Error {
    explicit BranchLossError(const std::string& msg) : Error(msg) {}
};

// Series evaluated outside its trust region.
struct TrustRegionError : Error {
    explicit TrustRegionError(const std::string& msg) : Error(msg) {}
};

// Nystrom order too low: the two determinant routes disagree.
struct OrderTooLowError : Error {
    explicit OrderTooLowError(const std::string& msg) : Error(msg) {}
};

// Connection matrix C is numerically non-invertible.
struct NonInvertibleCError : Error {
    explicit NonInvertibleCError(const std::string& msg) : Error(msg) {}
};

} // namespace pvi

#endif
