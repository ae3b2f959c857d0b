#include "pvi/toeplitz.hpp"

#include "pvi/gamma.hpp"

namespace pvi {

namespace {

// xi*-dependent prefactor e^{-pi i x} / (2 i sin(pi x)) appearing at center 0.
cplx half_residue_factor(cplx x) {
    return std::exp(-I * PI * x) / (2.0 * I * std::sin(PI * x));
}

SymbolCoefficient symbol_center0(int n, const EnsembleParameters& p, cplx t) {
    cplx mu = p.mu, om = p.omega(), omb = p.omega_bar(), xs = p.xi_star;
    IntegerGuard{cplx(double(n), 0.0) + mu - omb, p.guard_eps}.require_generic("n + mu - omega_bar");
    if (std::abs(t) > 0.95)
        throw ConvergenceDomainError("symbol_coefficient: |t| too large for center 0");

    SymbolCoefficient s;
    s.n = n;
    s.center = Center::Zero;
    cplx nn{double(n), 0.0};
    cplx pref = (std::abs(xs) == 0.0) ? cplx(0.0, 0.0)
                                      : xs * half_residue_factor(nn + mu - omb);
    s.analytic_part = (cplx(1.0, 0.0) + pref) * gamma(2.0 * p.omega1 + 1.0) *
                      rgamma(1.0 + nn + mu + om) * rgamma(1.0 - nn - mu + omb) *
                      hyp2f1(-2.0 * mu, -nn - mu - om, 1.0 - nn - mu + omb, t);
    s.nonanalytic_exponent = nn + mu - omb;
    s.nonanalytic_part = (std::abs(xs) == 0.0)
        ? cplx(0.0, 0.0)
        : -pref * gamma(2.0 * mu + 1.0) * rgamma(1.0 + nn + mu - omb) *
              rgamma(1.0 - nn + mu + omb) *
              hyp2f1(-2.0 * p.omega1, nn - mu - omb, 1.0 + nn + mu - omb, t);
    return s;
}

SymbolCoefficient symbol_center1(int n, const EnsembleParameters& p, cplx t) {
    cplx mu = p.mu, om = p.omega(), omb = p.omega_bar(), xs = p.xi_star;
    IntegerGuard{2.0 * mu + 2.0 * p.omega1, p.guard_eps}.require_generic("2 mu + 2 omega1");
    cplx u = cplx(1.0, 0.0) - t;
    if (std::abs(u) > 0.95)
        throw ConvergenceDomainError("symbol_coefficient: |1-t| too large for center 1");

    SymbolCoefficient s;
    s.n = n;
    s.center = Center::One;
    cplx nn{double(n), 0.0};
    s.analytic_part = gamma(2.0 * mu + 2.0 * p.omega1 + 1.0) * rgamma(1.0 + nn + mu + om) *
                      rgamma(1.0 - nn + mu + omb) *
                      hyp2f1(-2.0 * p.omega1, nn - mu - omb, -2.0 * mu - 2.0 * p.omega1, u);
    s.nonanalytic_exponent = 1.0 + 2.0 * mu + 2.0 * p.omega1;
    s.nonanalytic_part =
        (1.0 / PI) *
        (xs * std::exp(-I * PI * (nn + mu - omb)) / (2.0 * I) +
         std::sin(PI * 2.0 * mu) * std::sin(PI * (nn + mu + om)) /
             std::sin(PI * (2.0 * mu + 2.0 * p.omega1))) *
        gamma(1.0 + 2.0 * mu) * gamma(1.0 + 2.0 * p.omega1) *
        rgamma(2.0 + 2.0 * mu + 2.0 * p.omega1) *
        hyp2f1(1.0 + 2.0 * mu, nn + 1.0 + mu + om, 2.0 + 2.0 * mu + 2.0 * p.omega1, u);
    return s;
}

SymbolCoefficient symbol_centerInf(int n, const EnsembleParameters& p, cplx t) {
    cplx mu = p.mu, om = p.omega(), omb = p.omega_bar(), xs = p.xi_star;
    IntegerGuard{cplx(double(n), 0.0) - mu + om, p.guard_eps}.require_generic("n - mu + omega");
    cplx u = 1.0 / t;
    if (std::abs(u) > 0.95)
        throw ConvergenceDomainError("symbol_coefficient: |1/t| too large for center inf");

    SymbolCoefficient s;
    s.n = n;
    s.center = Center::Infinity;
    cplx nn{double(n), 0.0};
    cplx sin_nmo = std::sin(PI * (nn - mu + om));
    s.analytic_part = std::exp(-2.0 * I * PI * mu) / sin_nmo *
                      (std::sin(PI * (nn + mu + om)) +
                       xs * std::exp(-I * PI * (nn + mu + om)) / (2.0 * I)) *
                      gamma(2.0 * p.omega1 + 1.0) * rgamma(1.0 + nn - mu + om) *
                      rgamma(1.0 - nn + mu + omb) *
                      hyp2f1(-2.0 * mu, nn - mu - omb, 1.0 + nn - mu + om, u);
    s.nonanalytic_exponent = nn - mu + om;
    s.nonanalytic_part = -std::exp(-I * PI * (nn + mu + om)) / sin_nmo *
                         (std::sin(PI * 2.0 * mu) + xs * std::exp(-2.0 * I * PI * mu) / (2.0 * I)) *
                         gamma(2.0 * mu + 1.0) * rgamma(1.0 + nn + mu + om) *
                         rgamma(1.0 - nn + mu - om) *
                         hyp2f1(-2.0 * p.omega1, -nn - mu - om, 1.0 - nn + mu - om, u);
    return s;
}

// Flat-weight Fourier coefficients, t = e^{i phi} on the circle:
// w_0 = 1 - xi* phi / 2 pi, w_n = -xi* (-1)^n (e^{i n phi} - 1) / (2 pi i n).
cplx trivial_coefficient(int n, cplx xs, cplx t) {
    cplx phi = std::log(t) / I;  // principal branch
    if (n == 0) return cplx(1.0, 0.0) - xs * phi / (2.0 * PI);
    double sgn = (n % 2 == 0) ? 1.0 : -1.0;
    cplx nn{double(n), 0.0};
    return -xs * sgn * (std::exp(I * nn * phi) - 1.0) / (2.0 * PI * I * nn);
}

} // namespace

cplx SymbolCoefficient::fourier_coefficient(cplx t, const EnsembleParameters& p) const {
    cplx body = analytic_part;
    switch (center) {
        case Center::Zero:
            body += principal_power(t, nonanalytic_exponent) * nonanalytic_part;
            return principal_power(t, -p.mu) * body;
        case Center::One:
            body += principal_power(cplx(1.0, 0.0) - t, nonanalytic_exponent) * nonanalytic_part;
            // printed prefactor t^{omega_bar - n}: w_n = t^{n - omega_bar} body
            return principal_power(t, cplx(double(n), 0.0) - p.omega_bar()) * body;
        case Center::Infinity:
            body += principal_power(t, nonanalytic_exponent) * nonanalytic_part;
            return principal_power(t, p.mu) * body;
    }
    return body;
}

SymbolCoefficient symbol_coefficient(Center center, int n, const EnsembleParameters& p, cplx t) {
    switch (center) {
        case Center::Zero: return symbol_center0(n, p, t);
        case Center::One: return symbol_center1(n, p, t);
        case Center::Infinity: return symbol_centerInf(n, p, t);
    }
    throw RangeError("symbol_coefficient: bad center");
}

cplx toeplitz_determinant(const std::function<cplx(int)>& coeff, int N) {
    if (N < 1) throw RangeError("toeplitz_determinant: N must be positive");
    std::vector<cplx> w(size_t(2 * N - 1));
    for (int n = -(N - 1); n <= N - 1; ++n) w[size_t(n + N - 1)] = coeff(n);
    CMatrix m(N);
    for (int j = 0; j < N; ++j)
        for (int k = 0; k < N; ++k) m(j, k) = w[size_t(j - k + N - 1)];
    return lu_determinant(std::move(m));
}

Center select_center(cplx t) {
    if (std::abs(t) <= 0.4) return Center::Zero;
    if (std::abs(cplx(1.0, 0.0) - t) <= 0.4) return Center::One;
    if (std::abs(t) >= 2.5) return Center::Infinity;
    throw ConvergenceDomainError("eval_AN: t outside all symbol-series domains; use the ODE route");
}

cplx eval_AN(const EnsembleParameters& p, cplx t, Center center) {
    if (p.trivial_weight()) {
        return toeplitz_determinant([&](int n) { return trivial_coefficient(n, p.xi_star, t); },
                                    p.N);
    }
    return toeplitz_determinant(
        [&](int n) { return symbol_coefficient(center, n, p, t).fourier_coefficient(t, p); },
        p.N);
}

cplx eval_AN(const EnsembleParameters& p, cplx t) {
    if (p.trivial_weight()) return eval_AN(p, t, Center::One);  // center unused
    return eval_AN(p, t, select_center(t));
}

std::pair<cplx, cplx> gamma_ratio_determinant(cplx c, cplx d, int n) {
    CMatrix m(n);
    for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k) {
            cplx arg = d + cplx(double(k - j), 0.0);
            if (is_near_nonpositive_integer(arg, 1e-10))
                throw PoleError("gamma_ratio_determinant: numerator pole");
            m(j, k) = gamma(arg) * rgamma(c + cplx(double(k - j), 0.0));
        }
    cplx direct = lu_determinant(std::move(m));
    cplx prod{1.0, 0.0};
    for (int j = 0; j < n; ++j) {
        cplx jj{double(j), 0.0};
        prod *= gamma(jj + 1.0) * gamma(1.0 + d - c) * rgamma(1.0 + d - c - jj) *
                gamma(d - cplx(double(n), 0.0) + 1.0 + jj) * rgamma(c + jj);
    }
    return {direct, prod};
}

std::pair<cplx, cplx> gamma_ratio_determinant_general(const std::vector<cplx>& z, cplx b) {
    int n = int(z.size());
    CMatrix m(n);
    for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k) {
            cplx arg = z[size_t(k)] + b - cplx(double(j), 0.0);
            if (is_near_nonpositive_integer(arg, 1e-10))
                throw PoleError("gamma_ratio_determinant_general: numerator pole");
            m(j, k) = gamma(arg) * rgamma(z[size_t(k)] - cplx(double(j), 0.0));
        }
    cplx direct = lu_determinant(std::move(m));
    cplx prod{1.0, 0.0};
    for (int j = 0; j < n; ++j)
        for (int k = j + 1; k < n; ++k) prod *= (z[size_t(k)] - z[size_t(j)]);
    for (int j = 0; j < n; ++j) {
        double sgn = (j % 2 == 0) ? 1.0 : -1.0;
        prod *= sgn * pochhammer(-b, j) * gamma(z[size_t(j)] + b - cplx(double(n), 0.0) + 1.0) *
                rgamma(z[size_t(j)]);
    }
    return {direct, prod};
}

cplx morris_integral(int N, cplx a, cplx b) {
    cplx r{1.0, 0.0};
    for (int j = 0; j < N; ++j) {
        cplx jj{double(j), 0.0};
        cplx top1 = a + b + jj + 1.0;
        if (is_near_nonpositive_integer(top1, 1e-10))
            throw PoleError("morris_integral: Gamma pole");
        r *= gamma(top1) * gamma(jj + 2.0) * rgamma(a + jj + 1.0) * rgamma(b + jj + 1.0);
    }
    return r;
}

} // namespace pvi
