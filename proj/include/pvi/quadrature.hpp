#ifndef PVI_QUADRATURE_HPP
#define PVI_QUADRATURE_HPP

#include <functional>
#include <vector>

#include "pvi/complex_utils.hpp"

namespace pvi {

// Gauss-Legendre rule on [-1, 1]; nodes/weights computed once per order and
// cached behind a read-only share.
struct GaussRule {
    std::vector<double> x;
    std::vector<double> w;
};
const GaussRule& gauss_legendre(int m);

// Integrate f over [a, b] with an m-point rule mapped to the interval.
cplx gauss_integrate(const std::function<cplx(double)>& f, double a, double b, int m);

// Adaptive panel-splitting integration: each panel compares an embedded
// lower-order Gauss value against the higher-order one; panels split until
// the estimated error is below tol (absolute + relative mix).
cplx adaptive_integrate(const std::function<cplx(double)>& f, double a, double b,
                        double tol = 1e-12, int max_depth = 30);

} // namespace pvi

#endif
