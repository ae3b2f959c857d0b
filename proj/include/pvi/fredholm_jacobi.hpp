#ifndef PVI_FREDHOLM_JACOBI_HPP
#define PVI_FREDHOLM_JACOBI_HPP

#include <utility>
#include <vector>

#include "pvi/expansions.hpp"
#include "pvi/quadrature.hpp"

namespace pvi {

struct JacobiWeightParams {
    double a = 0.0;  // > -1
    double b = 0.0;  // > -1
    int N = 1;
};

// Monic polynomials orthogonal w.r.t. x^a (1-x)^b on (0,1), by the shifted
// three-term recurrence; degree j <= N is all this module ever needs but any
// j works.
double monic_jacobi(int j, const JacobiWeightParams& p, double x);
// first derivative (recurrence differentiated)
double monic_jacobi_derivative(int j, const JacobiWeightParams& p, double x);
// squared norms h_j = (p_j, p_j)
double monic_jacobi_norm(int j, const JacobiWeightParams& p);

// Christoffel-Darboux kernel with the sqrt-weight factors; diagonal by the
// confluent formula.
double cd_kernel(const JacobiWeightParams& p, double x, double y);

// int_{1-tau}^{1} K(x,x) dx  (boundary-condition trace near the right edge)
double cd_kernel_edge_integral(const JacobiWeightParams& p, double tau);
// d/dtau [ K(1-tau, 1-tau) ]
double cd_kernel_edge_derivative(const JacobiWeightParams& p, double tau);

struct FredholmValue {
    cplx nystrom{1.0, 0.0};
    cplx gram{1.0, 0.0};
    double route_gap = 0.0;  // |nystrom - gram|
};

// det(1 - xi K) on (t, 1) two ways: an m-point Nystrom rule under the edge
// substitution 1 - x = v^2, and the exact rank-N Gram determinant with
// adaptively integrated entries.  OrderTooLowError when the routes disagree
// beyond tolerance.
FredholmValue fredholm_det(const JacobiWeightParams& p, double t, cplx xi, int m,
                           double agree_tol = 1e-8);

// Gap generating functions on circle groups.  U(N) goes through the Toeplitz
// average with the flat weight; O+-(2N+1) through the Jacobi determinant at
// (a,b) = (-+1/2, +-1/2), left endpoint cos^2(x/2).
cplx circle_gap(CircleGroup g, int N, double x, double xi);

} // namespace pvi

#endif
