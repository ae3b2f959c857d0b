#include "pvi/expansions.hpp"

#include "pvi/gamma.hpp"

namespace pvi {

cplx BoundarySeries::local_variable(cplx t) const {
    switch (center) {
        case Center::Zero: return t;
        case Center::One: return cplx(1.0, 0.0) - t;
        case Center::Infinity: return 1.0 / t;
    }
    return t;
}

cplx BoundarySeries::evaluate(cplx t) const {
    cplx x = local_variable(t);
    cplx braces{1.0, 0.0};
    cplx xk{1.0, 0.0};
    for (const cplx& a : analytic_coeffs) {
        xk *= x;
        braces += a * xk;
    }
    braces += nonanalytic_coeff * principal_power(x, nonanalytic_exponent);
    return principal_power(t, prefactor_exponent) * constant * braces;
}

double BoundarySeries::next_term_estimate(cplx t) const {
    cplx x = local_variable(t);
    double ax = std::abs(x);
    // first dropped analytic order, coefficient guessed at the last known size
    double last = analytic_coeffs.empty() ? 1.0 : std::abs(analytic_coeffs.back());
    double est = last * std::pow(ax, double(analytic_coeffs.size()) + 1.0);
    // first dropped correction of the non-analytic branch
    est = std::max(est, std::abs(nonanalytic_coeff) *
                            std::abs(principal_power(x, nonanalytic_exponent)) * ax);
    return est;
}

BoundarySeries an_boundary_series(Center center, const EnsembleParameters& p) {
    cplx mu = p.mu, om = p.omega(), omb = p.omega_bar(), xs = p.xi_star;
    cplx N{double(p.N), 0.0};
    BoundarySeries s;
    s.center = center;

    switch (center) {
        case Center::Zero: {
            IntegerGuard{mu - omb, p.guard_eps}.require_generic("mu - omega_bar");
            s.prefactor_exponent = -N * mu;
            cplx pref = (std::abs(xs) == 0.0)
                            ? cplx(0.0, 0.0)
                            : xs * std::exp(-I * PI * (mu - omb)) / (2.0 * I * std::sin(PI * (mu - omb)));
            s.constant = principal_power(cplx(1.0, 0.0) + pref, N);
            for (int k = 0; k < p.N; ++k) {
                cplx kk{double(k), 0.0};
                s.constant *= gamma(kk + 1.0) * gamma(2.0 * p.omega1 + kk + 1.0) *
                              rgamma(1.0 + kk + mu + om) * rgamma(1.0 + kk - mu + omb);
            }
            s.analytic_coeffs = {2.0 * N * mu * (mu + om) / (N - mu + omb)};
            s.nonanalytic_exponent = 1.0 - N + mu - omb;
            if (std::abs(xs) != 0.0) {
                s.nonanalytic_coeff =
                    -(xs * std::exp(-I * PI * (mu - omb)) /
                      (2.0 * I * std::sin(PI * (mu - omb)) + xs * std::exp(-I * PI * (mu - omb)))) *
                    gamma(1.0 + mu + om) * gamma(1.0 + mu - omb) * gamma(1.0 + 2.0 * mu) *
                    gamma(N - mu + omb) * rgamma(N) * rgamma(N + mu + omb) *
                    rgamma(N + 2.0 * p.omega1) * rgamma(2.0 - N + mu - omb) *
                    rgamma(2.0 - N + mu - omb);
            }
            break;
        }
        case Center::One: {
            IntegerGuard{2.0 * mu + 2.0 * p.omega1, p.guard_eps}.require_generic("2 mu + 2 omega1");
            s.prefactor_exponent = cplx(0.0, 0.0);
            s.constant = cplx(1.0, 0.0);
            for (int k = 0; k < p.N; ++k) {
                cplx kk{double(k), 0.0};
                s.constant *= gamma(kk + 1.0) * gamma(2.0 * mu + 2.0 * p.omega1 + kk + 1.0) *
                              rgamma(1.0 + kk + mu + om) * rgamma(1.0 + kk + mu + omb);
            }
            s.analytic_coeffs = {N * mu * (omb - om) / (2.0 * mu + 2.0 * p.omega1)};
            s.nonanalytic_exponent = 1.0 + 2.0 * mu + 2.0 * p.omega1;
            double par = (p.N % 2 == 0) ? -1.0 : 1.0;  // (-1)^{N+1}
            s.nonanalytic_coeff =
                par / std::sin(PI * (2.0 * mu + 2.0 * p.omega1)) *
                (xs * std::exp(-I * PI * (mu - omb)) / (2.0 * I) +
                 std::sin(PI * 2.0 * mu) * std::sin(PI * (mu + om)) /
                     std::sin(PI * (2.0 * mu + 2.0 * p.omega1))) *
                gamma(1.0 + 2.0 * mu) * gamma(1.0 + 2.0 * p.omega1) * gamma(1.0 + mu + om) *
                gamma(1.0 + mu + omb) * rgamma(2.0 * mu + 2.0 * p.omega1 + 2.0) *
                rgamma(2.0 * mu + 2.0 * p.omega1 + 2.0) * rgamma(2.0 * mu + 2.0 * p.omega1 + 1.0) *
                rgamma(N) * rgamma(-N - 2.0 * mu - 2.0 * p.omega1);
            break;
        }
        case Center::Infinity: {
            IntegerGuard{mu - om, p.guard_eps}.require_generic("mu - omega");
            s.prefactor_exponent = N * mu;
            s.constant = principal_power(
                -std::exp(-2.0 * I * PI * mu) / std::sin(PI * (mu - om)) *
                    (std::sin(PI * (mu + om)) + xs * std::exp(-I * PI * (mu + om)) / (2.0 * I)),
                N);
            for (int k = 0; k < p.N; ++k) {
                cplx kk{double(k), 0.0};
                s.constant *= gamma(kk + 1.0) * gamma(2.0 * p.omega1 + kk + 1.0) *
                              rgamma(1.0 + kk + mu + omb) * rgamma(1.0 + kk - mu + om);
            }
            s.analytic_coeffs = {2.0 * mu * N * (mu + omb) / (N - mu + om)};
            // printed power t^{-1+N-mu+omega} = x^{1-N+mu-omega} in x = 1/t
            s.nonanalytic_exponent = 1.0 - N + mu - om;
            s.nonanalytic_coeff =
                std::exp(I * PI * (mu - om)) *
                (2.0 * I * std::sin(PI * 2.0 * mu) + xs * std::exp(-2.0 * I * PI * mu)) /
                (2.0 * I * std::sin(PI * (mu + om)) + xs * std::exp(-I * PI * (mu + om))) *
                gamma(1.0 + 2.0 * mu) * gamma(1.0 + mu + omb) * gamma(1.0 + mu - om) *
                gamma(N - mu + om) * rgamma(N) * rgamma(N + mu + om) *
                rgamma(N + 2.0 * p.omega1) * rgamma(2.0 - N + mu - om) * rgamma(2.0 - N + mu - om);
            break;
        }
    }
    return s;
}

cplx cn_ab(int N, cplx a, cplx b) {
    cplx NN{double(N), 0.0};
    cplx top = a + b + NN + 1.0;
    if (is_near_nonpositive_integer(top, 1e-10) ||
        is_near_nonpositive_integer(b + NN + 1.0, 1e-10))
        throw PoleError("cn_ab: Gamma pole");
    return gamma(top) * gamma(b + NN + 1.0) * rgamma(NN) * rgamma(a + NN) * rgamma(b + 1.0) *
           rgamma(b + 2.0);
}

GapSeriesValue jue_gap_series(int N, double a, double b, double xi, double u) {
    if (u < 0.0 || u > 0.1) throw TrustRegionError("jue_gap_series: u outside trust region");
    if (is_near_integer(cplx(b, 0.0), 1e-8) && b < 0.0)
        throw DegenerateParameterError("jue_gap_series: b near negative integer");
    // exponent collision with the analytic ladder (logarithmic cases excluded)
    if (is_near_integer(cplx(b, 0.0), 1e-8) || is_near_integer(cplx(2.0 * b, 0.0), 1e-8))
        throw DegenerateParameterError("jue_gap_series: exponent collision (b or 2b integer)");

    double CN = cn_ab(N, cplx(a, 0.0), cplx(b, 0.0)).real();
    double c1 = (b + 1.0) * (2.0 * N * N + 2.0 * (a + b) * N - 2.0 - 2.0 * b + a * b) /
                ((b + 2.0) * (b + 2.0));
    double t1 = -xi * CN / (b + 1.0) * std::pow(u, b + 1.0) * (1.0 - c1 * u);
    double D = CN * CN * (N - 1.0) * (N + b + 1.0) * (N + a - 1.0) * (N + a + b + 1.0) /
               ((b + 2.0) * (b + 2.0) * std::pow(b * b + 4.0 * b + 3.0, 2.0));
    double t2 = xi * xi * D * std::pow(u, 2.0 * b + 4.0);

    GapSeriesValue out;
    out.value = 1.0 + t1 + t2;
    out.next_term = std::abs(xi * CN / (b + 1.0) * std::pow(u, b + 1.0) * c1 * u * u) +
                    std::abs(t2 * u);
    return out;
}

GapSeriesValue circle_gap_series(CircleGroup g, int N, double xi, double x) {
    GapSeriesValue out;
    double N2 = double(N) * N;
    switch (g) {
        case CircleGroup::UN: {
            double c = xi * N / PI;
            out.value = 1.0 - c * x + (N2 - 1.0) / 36.0 * c * c * std::pow(x, 4.0) -
                        (N2 - 1.0) * (2.0 * N2 - 3.0) / 1350.0 * c * c * std::pow(x, 6.0) +
                        (N2 - 1.0) * (N2 - 2.0) * (3.0 * N2 - 5.0) / 52920.0 * c * c *
                            std::pow(x, 8.0) -
                        (N2 - 4.0) * (N2 - 1.0) * (N2 - 1.0) / 291600.0 * c * c * c *
                            std::pow(x, 9.0);
            out.next_term = (N2 - 1.0) / 36.0 * c * c * std::pow(x, 10.0);
            break;
        }
        case CircleGroup::OMinus: {
            double ct = 2.0 * N * xi / PI;
            out.value = 1.0 - ct * x + (4.0 * N2 - 1.0) / 36.0 * ct * std::pow(x, 3.0) -
                        (48.0 * N2 * N2 - 40.0 * N2 + 7.0) / 3600.0 * ct * std::pow(x, 5.0) +
                        (4.0 * N2 * N2 - 5.0 * N2 + 1.0) / 2025.0 * ct * ct * std::pow(x, 6.0) +
                        (192.0 * N2 * N2 * N2 - 336.0 * N2 * N2 + 196.0 * N2 - 31.0) / 211680.0 *
                            ct * std::pow(x, 7.0) -
                        (48.0 * N2 * N2 * N2 - 112.0 * N2 * N2 + 77.0 * N2 - 13.0) / 198450.0 *
                            ct * ct * std::pow(x, 8.0);
            out.next_term = (192.0 * N2 * N2 * N2) / 211680.0 * ct * std::pow(x, 9.0);
            break;
        }
        case CircleGroup::OPlus: {
            double ct = 2.0 * N * xi / PI;
            out.value = 1.0 - (4.0 * N2 - 1.0) / 36.0 * ct * std::pow(x, 3.0) +
                        (4.0 * N2 - 1.0) * (12.0 * N2 - 7.0) / 3600.0 * ct * std::pow(x, 5.0) -
                        (4.0 * N2 - 1.0) * (48.0 * N2 * N2 - 72.0 * N2 + 31.0) / 211680.0 * ct *
                            std::pow(x, 7.0);
            out.next_term = (4.0 * N2 - 1.0) * 48.0 * N2 * N2 / 211680.0 * ct * std::pow(x, 9.0);
            break;
        }
    }
    return out;
}

ThetaSet center_theta_view(Center center, const ThetaSet& th) {
    ThetaSet v = th;
    if (center == Center::One) std::swap(v.theta0, v.theta1);
    if (center == Center::Infinity) std::swap(v.theta0, v.thetaInf);
    return v;
}

JimboTauExpansion jimbo_tau_expansion(Center center, const ThetaSet& th, cplx sigma, cplx s_hat,
                                      cplx) {
    if (std::abs(sigma) < 1e-12 || std::abs(sigma - 1.0) < 1e-12 || std::abs(sigma + 1.0) < 1e-12)
        throw DegenerateParameterError("jimbo_tau_expansion: sigma near 0 or +-1");
    ThetaSet v = center_theta_view(center, th);
    cplx t0 = v.theta0, tt = v.thetaT, t1 = v.theta1, ti = v.thetaInf;

    JimboTauExpansion e;
    e.center = center;
    e.sigma = sigma;
    e.s_hat = s_hat;
    // exponent of the local variable x (x = t, 1-t, 1/t)
    e.prefactor_exponent = (center == Center::Infinity)
                               ? (sigma * sigma - th.thetaInf * th.thetaInf + th.thetaT * th.thetaT) / 4.0
                               : (sigma * sigma - t0 * t0 - tt * tt) / 4.0;
    e.alpha = (t0 * t0 - tt * tt - sigma * sigma) * (ti * ti - t1 * t1 - sigma * sigma) /
              (8.0 * sigma * sigma);
    e.c_plus = -s_hat * (t0 * t0 - (tt - sigma) * (tt - sigma)) *
               (ti * ti - (t1 - sigma) * (t1 - sigma)) /
               (16.0 * sigma * sigma * (1.0 + sigma) * (1.0 + sigma));
    e.c_minus = -(1.0 / s_hat) * (t0 * t0 - (tt + sigma) * (tt + sigma)) *
                (ti * ti - (t1 + sigma) * (t1 + sigma)) /
                (16.0 * sigma * sigma * (1.0 - sigma) * (1.0 - sigma));
    e.validity_strip = (sigma.real() > 0.0 && sigma.real() < 1.0);
    return e;
}

cplx s_hat_from_s(Center center, const ThetaSet& th, cplx sigma, cplx s) {
    ThetaSet v = center_theta_view(center, th);
    cplx t0 = v.theta0, tt = v.thetaT, t1 = v.theta1, ti = v.thetaInf;
    auto G = [](cplx z) {
        if (is_near_nonpositive_integer(z, 1e-10)) throw PoleError("s_hat_from_s: Gamma pole");
        return gamma(z);
    };
    return s * G(1.0 - sigma) * G(1.0 - sigma) * G(1.0 + (t0 + tt + sigma) / 2.0) *
           G(1.0 + (-t0 + tt + sigma) / 2.0) * G(1.0 + (ti + t1 + sigma) / 2.0) *
           G(1.0 + (-ti + t1 + sigma) / 2.0) * rgamma(1.0 + sigma) * rgamma(1.0 + sigma) *
           rgamma(1.0 + (t0 + tt - sigma) / 2.0) * rgamma(1.0 + (-t0 + tt - sigma) / 2.0) *
           rgamma(1.0 + (ti + t1 - sigma) / 2.0) * rgamma(1.0 + (-ti + t1 - sigma) / 2.0);
}

std::pair<cplx, cplx> jimbo_branch_coefficients_gamma(const ThetaSet& th, cplx sigma, cplx s,
                                                      double snap_eps) {
    cplx t0 = th.theta0, tt = th.thetaT, t1 = th.theta1, ti = th.thetaInf;
    auto snap = [&](cplx z) {
        return is_near_integer(z, snap_eps) ? cplx(std::round(z.real()), 0.0) : z;
    };
    cplx g[4] = {snap((t0 + tt - sigma) / 2.0), snap((-t0 + tt - sigma) / 2.0),
                 snap((ti + t1 - sigma) / 2.0), snap((-ti + t1 - sigma) / 2.0)};
    cplx gh[4] = {snap((t0 + tt + sigma) / 2.0), snap((-t0 + tt + sigma) / 2.0),
                  snap((ti + t1 + sigma) / 2.0), snap((-ti + t1 + sigma) / 2.0)};
    cplx cp = -s * gamma(1.0 - sigma) * gamma(1.0 - sigma) * rgamma(1.0 + sigma) *
              rgamma(1.0 + sigma) / (sigma * sigma * (1.0 + sigma) * (1.0 + sigma));
    cplx cm = -(1.0 / s) * gamma(1.0 + sigma) * gamma(1.0 + sigma) * rgamma(1.0 - sigma) *
              rgamma(1.0 - sigma) / (sigma * sigma * (1.0 - sigma) * (1.0 - sigma));
    for (int i = 0; i < 4; ++i) {
        cp *= gamma(1.0 + gh[i]) * rgamma(g[i]);
        cm *= gamma(1.0 + g[i]) * rgamma(gh[i]);
    }
    return {cp, cm};
}

std::pair<cplx, cplx> tau_bridge_exponents(const EnsembleParameters& p, const ThetaSet& th,
                                           cplx sigma0t, cplx sigmaT1) {
    cplx N{double(p.N), 0.0};
    cplx p0 = -N * p.mu - (sigma0t * sigma0t - th.theta0 * th.theta0 - th.thetaT * th.thetaT) / 4.0;
    cplx p1 = -(sigmaT1 * sigmaT1 - th.thetaT * th.thetaT - th.theta1 * th.theta1) / 4.0;
    return {p0, p1};
}

BoundarySeries an_from_tau_prefactor(const EnsembleParameters& p, const ThetaSet& th,
                                     const std::vector<cplx>& v, const JimboTauExpansion& tau) {
    if (v.size() != 4) throw RangeError("an_from_tau_prefactor: v must have 4 entries");
    // verify (theta, v) consistency through the trace identities
    cplx sum_v2 = v[0] * v[0] + v[1] * v[1] + v[2] * v[2] + v[3] * v[3];
    cplx sum_th2 = th.theta0 * th.theta0 + th.thetaT * th.thetaT + th.theta1 * th.theta1 +
                   th.thetaInf * th.thetaInf;
    cplx prod_v = v[0] * v[1] * v[2] * v[3];
    cplx prod_th = (th.theta0 * th.theta0 - th.theta1 * th.theta1) *
                   (th.thetaT * th.thetaT - th.thetaInf * th.thetaInf) / 16.0;
    if (std::abs(sum_v2 - sum_th2 / 2.0) > 1e-9 || std::abs(prod_v - prod_th) > 1e-9)
        throw CaseMismatchError("an_from_tau_prefactor: (theta, v) fail the trace identities");

    cplx sigma0t = v[0] + v[1] + v[2] + v[3];          // sigma_{0t}^2 = (sum v)^2
    cplx sigmaT1 = v[1] - v[0] - v[2] - v[3];          // = 2 mu + 2 omega1 on the case maps
    auto [p0, p1] = tau_bridge_exponents(p, th, sigma0t, sigmaT1);

    BoundarySeries out;
    out.center = tau.center;
    out.constant = cplx(1.0, 0.0);  // C-tilde stays symbolic
    switch (tau.center) {
        case Center::Zero:
            out.prefactor_exponent = p0 + tau.prefactor_exponent;  // should equal -N mu
            out.analytic_coeffs = {tau.alpha - p1};
            out.nonanalytic_exponent = 1.0 - tau.sigma;
            out.nonanalytic_coeff = tau.c_minus;  // t^{1+sigma} branch suppressed by the cases
            break;
        case Center::One:
            out.prefactor_exponent = cplx(0.0, 0.0);
            out.analytic_coeffs = {tau.alpha - p0};
            out.nonanalytic_exponent = 1.0 + tau.sigma;
            out.nonanalytic_coeff = tau.c_plus;
            break;
        case Center::Infinity:
            // tau carries x^{pre} with x = 1/t, i.e. t^{-pre}
            out.prefactor_exponent = p0 + p1 - tau.prefactor_exponent;  // should equal +N mu
            out.analytic_coeffs = {tau.alpha - p1};
            out.nonanalytic_exponent = 1.0 - tau.sigma;
            out.nonanalytic_coeff = tau.c_minus;
            break;
    }
    return out;
}

} // namespace pvi
