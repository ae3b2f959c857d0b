#include "pvi/hyp2f1.hpp"

namespace pvi {

namespace {

// If a is a non-positive integer within eps, the series terminates after
// -round(Re a) terms.  Returns -1 otherwise.
int termination_order(cplx a, double eps) {
    if (!is_near_nonpositive_integer(a, eps)) return -1;
    return int(-std::round(a.real()));
}

} // namespace

cplx hyp2f1(cplx a, cplx b, cplx c, cplx z, const Hyp2f1Options& opt) {
    if (z == cplx(0.0, 0.0)) return {1.0, 0.0};

    int na = termination_order(a, opt.guard_eps);
    int nb = termination_order(b, opt.guard_eps);
    int nterm = -1;  // polynomial degree when terminating
    if (na >= 0 && nb >= 0) nterm = std::min(na, nb);
    else if (na >= 0) nterm = na;
    else if (nb >= 0) nterm = nb;

    if (nterm < 0 && std::abs(z) > 1.0 - opt.domain_delta)
        throw ConvergenceDomainError("hyp2f1: |z| exceeds series domain");

    if (nterm < 0 && is_near_nonpositive_integer(c, opt.guard_eps))
        throw DegenerateParameterError("hyp2f1: c near non-positive integer");

    cplx sum{1.0, 0.0};
    cplx term{1.0, 0.0};
    for (int k = 0; k < opt.max_terms; ++k) {
        if (nterm >= 0 && k >= nterm) break;
        cplx ck = c + cplx(double(k), 0.0);
        if (std::abs(ck) < opt.guard_eps) {
            // pole reached before the series terminated
            throw DegenerateParameterError("hyp2f1: c pole hit inside series");
        }
        term *= (a + cplx(double(k), 0.0)) * (b + cplx(double(k), 0.0)) * z /
                (ck * cplx(double(k + 1), 0.0));
        sum += term;
        if (std::abs(term) < opt.tol * (std::abs(sum) + 1e-300) && k > 2 && nterm < 0)
            return sum;
    }
    if (nterm < 0)
        throw ConvergenceDomainError("hyp2f1: series did not converge");
    return sum;
}

cplx elementary_symmetric(int p, const std::vector<cplx>& values) {
    int n = int(values.size());
    if (p < 0 || p > n) throw RangeError("elementary_symmetric: p out of range");
    // DP over e_0..e_p
    std::vector<cplx> e(size_t(p) + 1, cplx(0.0, 0.0));
    e[0] = cplx(1.0, 0.0);
    for (int i = 0; i < n; ++i)
        for (int j = std::min(p, i + 1); j >= 1; --j)
            e[size_t(j)] += e[size_t(j) - 1] * values[size_t(i)];
    return e[size_t(p)];
}

} // namespace pvi
