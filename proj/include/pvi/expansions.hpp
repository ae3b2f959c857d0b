#ifndef PVI_EXPANSIONS_HPP
#define PVI_EXPANSIONS_HPP

#include <vector>

#include "pvi/toeplitz.hpp"

namespace pvi {

// Truncated boundary expansion of A_N about one of the fixed singularities.
// In the local variable x (= t, 1-t or 1/t):
//   A_N ~ prefactor(t) * constant * (1 + sum_k analytic_coeffs[k-1] x^k
//                                      + nonanalytic_coeff * x^nonanalytic_exponent)
// prefactor(t) = t^{-N mu} (center 0), 1 (center 1), t^{+N mu} (center inf).
struct BoundarySeries {
    Center center = Center::Zero;
    cplx prefactor_exponent{0.0, 0.0};  // power of t multiplying the braces
    cplx constant{1.0, 0.0};
    std::vector<cplx> analytic_coeffs;  // orders 1..K of the local variable
    cplx nonanalytic_exponent{0.0, 0.0};
    cplx nonanalytic_coeff{0.0, 0.0};

    cplx local_variable(cplx t) const;
    cplx evaluate(cplx t) const;
    // magnitude of the estimated first dropped term at t (trust indicator)
    double next_term_estimate(cplx t) const;
};

// Prop.-2 expansions of A_N, coefficients assembled from Gamma/trig factors
// exactly as printed.  DegenerateParameterError on the per-center guard.
BoundarySeries an_boundary_series(Center center, const EnsembleParameters& p);

// C_N(a,b) = Gamma(a+b+N+1)Gamma(b+N+1) / (Gamma(N)Gamma(a+N)Gamma(b+1)Gamma(b+2)).
cplx cn_ab(int N, cplx a, cplx b);

// Gap-probability series for the Jacobi ensemble on (1-u, 1):
//   E = 1 - xi C_N/(b+1) u^{b+1} {1 - c1 u} + xi^2 D u^{2b+4}
// u small (trust region u <= 0.1).
struct GapSeriesValue {
    double value = 1.0;
    double next_term = 0.0;  // estimated magnitude of the first dropped term
};
GapSeriesValue jue_gap_series(int N, double a, double b, double xi, double u);

enum class CircleGroup { UN, OPlus, OMinus };

// Printed small-gap expansions for U(N) ((0,2x), series in x, c = xi N/pi)
// and O+-(2N+1) ((0,x), ctilde = 2 N xi / pi).
GapSeriesValue circle_gap_series(CircleGroup g, int N, double xi, double x);

// Monodromy exponents; also used by the monodromy module.
struct ThetaSet {
    cplx theta0{0.0, 0.0};
    cplx thetaT{0.0, 0.0};
    cplx theta1{0.0, 0.0};
    cplx thetaInf{0.0, 0.0};
};

// Jimbo's four printed terms of tau(t) about a fixed singularity, normalised
// to leading constant 1 (the arbitrary C is carried by the caller):
//   tau ~ C x^{prefactor_exponent} (1 + alpha x + c_plus x^{1+sigma} + c_minus x^{1-sigma})
// with x the local variable of the center.
struct JimboTauExpansion {
    Center center = Center::Zero;
    cplx sigma{0.0, 0.0};
    cplx s_hat{1.0, 0.0};
    cplx prefactor_exponent{0.0, 0.0};
    cplx alpha{0.0, 0.0};    // analytic order-1 coefficient
    cplx c_plus{0.0, 0.0};   // coefficient of x^{1+sigma}
    cplx c_minus{0.0, 0.0};  // coefficient of x^{1-sigma}
    bool validity_strip = true;  // 0 < Re sigma < 1 (Jimbo's condition b)
};

JimboTauExpansion jimbo_tau_expansion(Center center, const ThetaSet& th, cplx sigma, cplx s_hat,
                                      cplx C_unused = cplx(1.0, 0.0));

// The theta relabelling used by the t=1 / t=infinity expansions
// (theta0 <-> theta1, resp. theta0 <-> thetaInf).
ThetaSet center_theta_view(Center center, const ThetaSet& th);

// s -> s_hat through the printed Gamma ratio; centers 1 and infinity apply
// the theta0<->theta1 / theta0<->thetaInf substitutions first.
cplx s_hat_from_s(Center center, const ThetaSet& th, cplx sigma, cplx s);

// Branch coefficients (c_plus, c_minus) written fully in Gamma form so the
// 1/Gamma suppression at non-positive integer half-sums produces exact zeros.
// Combinations within snap_eps of an integer are snapped before 1/Gamma.
std::pair<cplx, cplx> jimbo_branch_coefficients_gamma(const ThetaSet& th, cplx sigma, cplx s,
                                                      double snap_eps = 1e-10);

// Result of pushing a tau expansion through A_N = C t^{p0} (1-t)^{p1} tau:
// a BoundarySeries in the same local variable, constant left symbolic (=1).
struct PviParametersFwd;  // sigma_pvi.hpp owns the full definition
BoundarySeries an_from_tau_prefactor(const EnsembleParameters& p, const ThetaSet& th,
                                     const std::vector<cplx>& v, const JimboTauExpansion& tau);

// Bridge exponents p0, p1 of A_N = C t^{p0} (1-t)^{p1} tau(t; theta).
std::pair<cplx, cplx> tau_bridge_exponents(const EnsembleParameters& p, const ThetaSet& th,
                                           cplx sigma0t, cplx sigmaT1);

} // namespace pvi

#endif
