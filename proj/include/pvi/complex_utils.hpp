#ifndef PVI_COMPLEX_UTILS_HPP
#define PVI_COMPLEX_UTILS_HPP

#include <cmath>
#include <complex>
#include <numbers>

#include "pvi/errors.hpp"

namespace pvi {

using cplx = std::complex<double>;
inline constexpr double PI = std::numbers::pi_v<double>;
inline constexpr cplx I{0.0, 1.0};

// Distance from z to the nearest integer on the real axis, as a point in C.
inline double dist_to_integer(cplx z) {
    double n = std::round(z.real());
    return std::abs(z - cplx(n, 0.0));
}

inline bool is_near_integer(cplx z, double eps) {
    if (eps <= 0.0) throw RangeError("is_near_integer: eps must be positive");
    return dist_to_integer(z) < eps;
}

inline bool is_near_nonpositive_integer(cplx z, double eps) {
    return z.real() < 0.5 && is_near_integer(z, eps);
}

// Guard object for the genericity constraints (mu - omega_bar not in Z, etc).
struct IntegerGuard {
    cplx value;
    double epsilon = 1e-8;

    bool triggered() const { return is_near_integer(value, epsilon); }
    void require_generic(const char* what) const {
        if (triggered())
            throw DegenerateParameterError(std::string(what) + " is within " +
                                           std::to_string(epsilon) + " of an integer");
    }
};

// Principal-branch power t^a, arg t in (-pi, pi].  std::pow uses the same
// branch but mishandles t on the negative real axis inconsistently across
// platforms for complex exponents, so spell it out.
inline cplx principal_power(cplx t, cplx a) {
    if (t == cplx(0.0, 0.0)) return (a == cplx(0.0, 0.0)) ? cplx(1.0, 0.0) : cplx(0.0, 0.0);
    return std::exp(a * std::log(t));
}

inline bool finite(cplx z) {
    return std::isfinite(z.real()) && std::isfinite(z.imag());
}

} // namespace pvi

#endif
