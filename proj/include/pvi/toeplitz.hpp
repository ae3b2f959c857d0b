#ifndef PVI_TOEPLITZ_HPP
#define PVI_TOEPLITZ_HPP

#include <functional>
#include <utility>
#include <vector>

#include "pvi/hyp2f1.hpp"
#include "pvi/linalg.hpp"

namespace pvi {

// Parameters of the spectrum singularity average
//   A_N(t) = <prod z^{-i w2} |1+z|^{2 w1} |1+t z|^{2 mu}>  with weight 1-xi*
//   on the arc (pi - phi, pi), t = e^{i phi} continued off the circle.
struct EnsembleParameters {
    int N = 1;
    cplx mu{0.0, 0.0};
    cplx omega1{0.0, 0.0};
    cplx omega2{0.0, 0.0};
    cplx xi_star{0.0, 0.0};
    double guard_eps = 1e-8;

    cplx omega() const { return omega1 + I * omega2; }
    cplx omega_bar() const { return omega1 - I * omega2; }

    // The average reduces to the flat CUE weight; every Gamma/2F1 form is
    // degenerate there but the Fourier coefficients are elementary.
    bool trivial_weight() const {
        return std::abs(mu) < 1e-14 && std::abs(omega1) < 1e-14 && std::abs(omega2) < 1e-14;
    }
};

enum class Center { Zero, One, Infinity };

// One Toeplitz symbol coefficient split into its analytic / non-analytic
// parts about the chosen expansion center:
//   center 0:   t^mu w_n        = analytic + t^(n+mu-wbar) * nonanalytic
//   center 1:   t^(wbar-n) w_n  = analytic + (1-t)^(1+2mu+2w1) * nonanalytic
//   center inf: t^(-mu) w_n     = analytic + t^(n-mu+w) * nonanalytic
// (parts are functions of t, 1-t, 1/t respectively, evaluated at the given t).
struct SymbolCoefficient {
    int n = 0;
    Center center = Center::Zero;
    cplx analytic_part{0.0, 0.0};
    cplx nonanalytic_part{0.0, 0.0};
    cplx nonanalytic_exponent{0.0, 0.0};

    // Reconstructs the full Fourier coefficient w_n of the symbol (the
    // t^{-mu} of the weight included).
    cplx fourier_coefficient(cplx t, const EnsembleParameters& p) const;
};

SymbolCoefficient symbol_coefficient(Center center, int n, const EnsembleParameters& p, cplx t);

// det[w_{j-k}]_{0<=j,k<N} by pivoted LU.
cplx toeplitz_determinant(const std::function<cplx(int)>& coeff, int N);

// Full A_N(t) (the t^{-N mu} prefactor of Heine's identity is part of the
// symbol reconstruction).  Center auto-selected from |t| unless forced.
cplx eval_AN(const EnsembleParameters& p, cplx t);
cplx eval_AN(const EnsembleParameters& p, cplx t, Center center);
Center select_center(cplx t);

// Gamma-ratio determinant identity: returns {direct determinant, closed-form
// product} of det(Gamma(d+k-j)/Gamma(c+k-j))_{0<=j,k<n}.
std::pair<cplx, cplx> gamma_ratio_determinant(cplx c, cplx d, int n);

// General form det(Gamma(z_k+b-j)/Gamma(z_k-j)) with the Vandermonde product.
std::pair<cplx, cplx> gamma_ratio_determinant_general(const std::vector<cplx>& z, cplx b);

// Morris integral M_N(a,b) = prod_j Gamma(a+b+j+1)Gamma(j+2)/(Gamma(a+j+1)Gamma(b+j+1)).
cplx morris_integral(int N, cplx a, cplx b);

} // namespace pvi

#endif
