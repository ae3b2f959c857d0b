#include "pvi/fredholm_jacobi.hpp"

#include <cmath>

#include "pvi/gamma.hpp"
#include "pvi/linalg.hpp"

namespace pvi {

namespace {

// monic recurrence p_{k+1} = (x - alpha_k) p_k - beta_k p_{k-1} for the
// weight x^a (1-x)^b on (0,1) (shifted from the [-1,1] Jacobi coefficients)
void recurrence(int k, double a, double b, double& alpha, double& beta) {
    double A = (k == 0) ? (b - a) / (a + b + 2.0)
                        : (b * b - a * a) / ((2.0 * k + a + b) * (2.0 * k + a + b + 2.0));
    alpha = (1.0 - A) / 2.0;
    if (k == 0) {
        beta = 0.0;
    } else {
        double num = 4.0 * k * (k + a) * (k + b) * (k + a + b);
        double den = std::pow(2.0 * k + a + b, 2.0) * (2.0 * k + a + b + 1.0) *
                     (2.0 * k + a + b - 1.0);
        beta = num / den / 4.0;
    }
}

double weight(const JacobiWeightParams& p, double x) {
    return std::pow(x, p.a) * std::pow(1.0 - x, p.b);
}

} // namespace

double monic_jacobi(int j, const JacobiWeightParams& p, double x) {
    double pm1 = 0.0, pk = 1.0;
    for (int k = 0; k < j; ++k) {
        double al, be;
        recurrence(k, p.a, p.b, al, be);
        double pn = (x - al) * pk - be * pm1;
        pm1 = pk;
        pk = pn;
    }
    return pk;
}

double monic_jacobi_derivative(int j, const JacobiWeightParams& p, double x) {
    double pm1 = 0.0, pk = 1.0;    // values
    double dm1 = 0.0, dk = 0.0;    // derivatives
    for (int k = 0; k < j; ++k) {
        double al, be;
        recurrence(k, p.a, p.b, al, be);
        double pn = (x - al) * pk - be * pm1;
        double dn = pk + (x - al) * dk - be * dm1;
        pm1 = pk; pk = pn;
        dm1 = dk; dk = dn;
    }
    return dk;
}

double monic_jacobi_norm(int j, const JacobiWeightParams& p) {
    // h_0 = B(a+1, b+1); h_k = beta_k h_{k-1}
    double h = (gamma(cplx(p.a + 1.0, 0.0)) * gamma(cplx(p.b + 1.0, 0.0)) *
                rgamma(cplx(p.a + p.b + 2.0, 0.0)))
                   .real();
    for (int k = 1; k <= j; ++k) {
        double al, be;
        recurrence(k, p.a, p.b, al, be);
        h *= be;
    }
    return h;
}

double cd_kernel(const JacobiWeightParams& p, double x, double y) {
    double hN1 = monic_jacobi_norm(p.N - 1, p);
    double sw = std::sqrt(weight(p, x) * weight(p, y));
    if (std::abs(x - y) < 1e-9) {
        double pN = monic_jacobi(p.N, p, x), pN1 = monic_jacobi(p.N - 1, p, x);
        double dN = monic_jacobi_derivative(p.N, p, x), dN1 = monic_jacobi_derivative(p.N - 1, p, x);
        return sw / hN1 * (dN * pN1 - dN1 * pN);
    }
    double num = monic_jacobi(p.N, p, x) * monic_jacobi(p.N - 1, p, y) -
                 monic_jacobi(p.N - 1, p, x) * monic_jacobi(p.N, p, y);
    return sw / hN1 * num / (x - y);
}

double cd_kernel_edge_integral(const JacobiWeightParams& p, double tau) {
    // substitute 1 - x = v^2: dx = 2 v dv, integrand smooth for b >= -1/2
    cplx r = adaptive_integrate(
        [&](double v) {
            double x = 1.0 - v * v;
            return cplx(cd_kernel(p, x, x) * 2.0 * v, 0.0);
        },
        0.0, std::sqrt(tau), 1e-13);
    return r.real();
}

double cd_kernel_edge_derivative(const JacobiWeightParams& p, double tau) {
    double h = tau * 0.01;
    return (cd_kernel(p, 1.0 - tau - h, 1.0 - tau - h) -
            cd_kernel(p, 1.0 - tau + h, 1.0 - tau + h)) /
           (2.0 * h);
}

FredholmValue fredholm_det(const JacobiWeightParams& p, double t, cplx xi, int m,
                           double agree_tol) {
    if (!(t > 0.0 && t < 1.0)) throw RangeError("fredholm_det: t must lie in (0,1)");
    if (m < 2 * p.N + 8) throw RangeError("fredholm_det: quadrature order below 2N+8");

    FredholmValue out;
    // ----- Nystrom on (t, 1), edge substitution 1 - x = v^2 -----
    {
        const GaussRule& r = gauss_legendre(m);
        double vmax = std::sqrt(1.0 - t);
        std::vector<double> x(size_t(m)), sw(size_t(m));
        for (int i = 0; i < m; ++i) {
            double v = 0.5 * vmax * (r.x[size_t(i)] + 1.0);
            double wq = 0.5 * vmax * r.w[size_t(i)] * 2.0 * v;
            x[size_t(i)] = 1.0 - v * v;
            sw[size_t(i)] = std::sqrt(wq);
        }
        CMatrix A(m);
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < m; ++j) {
                cplx kij = cplx(cd_kernel(p, x[size_t(i)], x[size_t(j)]), 0.0);
                A(i, j) = ((i == j) ? cplx(1.0, 0.0) : cplx(0.0, 0.0)) -
                          xi * sw[size_t(i)] * kij * sw[size_t(j)];
            }
        out.nystrom = lu_determinant(std::move(A));
    }
    // ----- exact rank-N Gram route, adaptive entry integration -----
    {
        int N = p.N;
        std::vector<double> hh(size_t(N));
        for (int k = 0; k < N; ++k) hh[size_t(k)] = monic_jacobi_norm(k, p);
        CMatrix G(N);
        double vmax = std::sqrt(1.0 - t);
        for (int k = 0; k < N; ++k)
            for (int l = k; l < N; ++l) {
                cplx g = adaptive_integrate(
                    [&](double v) {
                        double xx = 1.0 - v * v;
                        double w = weight(p, xx);
                        double val = monic_jacobi(k, p, xx) * monic_jacobi(l, p, xx) * w /
                                     std::sqrt(hh[size_t(k)] * hh[size_t(l)]);
                        return cplx(val * 2.0 * v, 0.0);
                    },
                    0.0, vmax, 1e-13);
                G(k, l) = g;
                G(l, k) = g;
            }
        CMatrix A(N);
        for (int k = 0; k < N; ++k)
            for (int l = 0; l < N; ++l)
                A(k, l) = ((k == l) ? cplx(1.0, 0.0) : cplx(0.0, 0.0)) - xi * G(k, l);
        out.gram = lu_determinant(std::move(A));
    }
    out.route_gap = std::abs(out.nystrom - out.gram);
    if (out.route_gap > agree_tol * (1.0 + std::abs(out.gram)))
        throw OrderTooLowError("fredholm_det: Nystrom and Gram routes disagree");
    return out;
}

cplx circle_gap(CircleGroup g, int N, double x, double xi) {
    if (x == 0.0) return {1.0, 0.0};
    switch (g) {
        case CircleGroup::UN: {
            EnsembleParameters p;
            p.N = N;
            p.xi_star = cplx(xi, 0.0);  // xi* = 1 - (1 - xi) e^{-pi i mu} = xi at mu = 0
            cplx t = std::exp(I * cplx(2.0 * x, 0.0));  // interval (0, 2x)
            return eval_AN(p, t);
        }
        case CircleGroup::OMinus: {
            double tq = std::pow(std::cos(x / 2.0), 2.0);
            return fredholm_det({0.5, -0.5, N}, tq, cplx(xi, 0.0), 2 * N + 24).gram;
        }
        case CircleGroup::OPlus: {
            double tq = std::pow(std::cos(x / 2.0), 2.0);
            return fredholm_det({-0.5, 0.5, N}, tq, cplx(xi, 0.0), 2 * N + 24).gram;
        }
    }
    throw RangeError("circle_gap: bad group");
}

} // namespace pvi
