#ifndef PVI_HYP2F1_HPP
#define PVI_HYP2F1_HPP

#include <vector>

#include "pvi/complex_utils.hpp"

namespace pvi {

struct Hyp2f1Options {
    double domain_delta = 0.05;  // require |z| <= 1 - delta
    double guard_eps = 1e-8;     // c-near-non-positive-integer guard
    double tol = 1e-15;          // term-ratio stopping tolerance
    int max_terms = 20000;
};

// Gauss series for 2F1(a,b;c;z), restricted to |z| <= 1 - delta.  Terminating
// cases (a or b a non-positive integer) are summed as polynomials and are
// allowed to bypass a later c-pole.  Errors: ConvergenceDomainError,
// DegenerateParameterError.
cplx hyp2f1(cplx a, cplx b, cplx c, cplx z, const Hyp2f1Options& opt = {});

// Elementary symmetric polynomial e_p of the given values; e_0 = 1.
cplx elementary_symmetric(int p, const std::vector<cplx>& values);

} // namespace pvi

#endif
