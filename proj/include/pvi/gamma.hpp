#ifndef PVI_GAMMA_HPP
#define PVI_GAMMA_HPP

#include "pvi/complex_utils.hpp"

namespace pvi {

// Gamma(z) for complex z via a 13-term Lanczos rational approximation
// (g = 6.024680040776729583740234375) plus reflection for Re z < 0.5.
// Relative error stays below ~1e-13 on the strip |Re z|, |Im z| <= 20.
// Throws PoleError within 1e-12 of a non-positive integer.
cplx gamma(cplx z);

// 1/Gamma(z), entire; returns exactly 0 at non-positive integers hit exactly
// and degrades gracefully nearby (no pole).
cplx rgamma(cplx z);

// Pochhammer (a)_n for small non-negative n.
cplx pochhammer(cplx a, int n);

} // namespace pvi

#endif
