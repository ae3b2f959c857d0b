#ifndef PVI_MONODROMY_HPP
#define PVI_MONODROMY_HPP

#include <array>

#include "pvi/expansions.hpp"

namespace pvi {

// 2x2 complex matrix with the handful of operations the monodromy module needs.
struct Mat2 {
    cplx a{1.0, 0.0}, b{0.0, 0.0}, c{0.0, 0.0}, d{1.0, 0.0};

    static Mat2 identity() { return {}; }
    static Mat2 diag(cplx x, cplx y) { return {x, {0.0, 0.0}, {0.0, 0.0}, y}; }

    cplx trace() const { return a + d; }
    cplx det() const { return a * d - b * c; }
    Mat2 inverse() const;
    Mat2 operator*(const Mat2& o) const {
        return {a * o.a + b * o.c, a * o.b + b * o.d, c * o.a + d * o.c, c * o.b + d * o.d};
    }
    Mat2 operator-(const Mat2& o) const { return {a - o.a, b - o.b, c - o.c, d - o.d}; }
    double norm() const {
        return std::max(std::max(std::abs(a), std::abs(b)), std::max(std::abs(c), std::abs(d)));
    }
};

// Trace coordinates of a monodromy quadruple.
struct MonodromyData {
    cplx sigma0t{0.0, 0.0}, sigmaT1{0.0, 0.0}, sigma01{0.0, 0.0};
    cplx s0t{0.0, 0.0}, sT1{0.0, 0.0}, s01{0.0, 0.0};
    cplx r{1.0, 0.0};
    // trace invariants
    cplx p0{0.0, 0.0}, pt{0.0, 0.0}, p1{0.0, 0.0}, pInf{0.0, 0.0};
    cplx p0t{0.0, 0.0}, pt1{0.0, 0.0}, p01{0.0, 0.0};
};

struct MonodromyQuadruple {
    Mat2 M0, Mt, M1, MInf;
    Mat2 C;  // connection matrix of the Jimbo parameterisation
};

// sin(pi x / 2); the half-angle sine the Lemma's matrix entries are built from.
cplx half_sine(cplx x);

// Jimbo's explicit parameterisation.  The input s0t is the gauge-invariant
// connection coefficient (the matrices internally use s0t * r, so the trace
// invariants do not depend on r).  Set relax_conditions to bypass the
// genericity checks the Prop.-3 cases deliberately violate.
MonodromyQuadruple build_monodromy(const ThetaSet& th, cplx sigma0t, cplx s0t, cplx r,
                                   bool relax_conditions = false);

// p_mu = Tr M_mu, p_{mu nu} = Tr M_mu M_nu; sigma_{mu nu} by principal arccos.
MonodromyData invariants_from_matrices(const MonodromyQuadruple& q);

// Left minus right side of the printed connection relation, sign = +1 or -1.
cplx connection_residual(const ThetaSet& th, const MonodromyData& d, int sign);

// Monodromy manifold polynomial and its gradient in (p0t, pt1, p01).
cplx manifold_value(cplx p0, cplx pt, cplx p1, cplx pInf, cplx p0t, cplx pt1, cplx p01);
std::array<cplx, 3> manifold_gradient(cplx p0, cplx pt, cplx p1, cplx pInf, cplx p0t, cplx pt1,
                                      cplx p01);

enum class SseCase { A, B, C };

// Prop.-3 monodromy data for the spectrum singularity ensemble.
std::pair<ThetaSet, MonodromyData> sse_case_data(SseCase cs, const EnsembleParameters& p);

// Prop.-3 explicit matrices (lower triangular / one ~ identity / upper
// triangular); M_inf is completed through the cyclic relation.
MonodromyQuadruple sse_case_matrices(SseCase cs, const EnsembleParameters& p, cplx r);

// sigma01-tilde of the t=infinity substitution rule (complex arccos, flagged
// rather than rejected when |cos| > 1).
cplx sigma01_tilde(const MonodromyData& d, const ThetaSet& th);

} // namespace pvi

#endif
