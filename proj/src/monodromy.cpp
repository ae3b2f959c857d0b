#include "pvi/monodromy.hpp"

namespace pvi {

Mat2 Mat2::inverse() const {
    cplx dt = det();
    if (std::abs(dt) < 1e-300) throw NonInvertibleCError("Mat2: determinant underflow");
    return {d / dt, -b / dt, -c / dt, a / dt};
}

cplx half_sine(cplx x) { return std::sin(PI * x / 2.0); }

MonodromyQuadruple build_monodromy(const ThetaSet& th, cplx sigma, cplx s0t, cplx r,
                                   bool relax_conditions) {
    cplx t0 = th.theta0, tt = th.thetaT, t1 = th.theta1, ti = th.thetaInf;
    if (!relax_conditions) {
        for (cplx x : {t0, tt, t1, ti})
            if (is_near_integer(x, 1e-8))
                throw DegenerateParameterError("build_monodromy: theta in Z (condition a)");
        for (cplx x : {t0 + tt + sigma, t0 + tt - sigma, t0 - tt + sigma, t0 - tt - sigma,
                       ti + t1 + sigma, ti + t1 - sigma, ti - t1 + sigma, ti - t1 - sigma})
            if (is_near_integer(x / 2.0, 1e-8))
                throw DegenerateParameterError("build_monodromy: theta+-theta+-sigma in 2Z (condition c)");
    }
    cplx sInf = std::sin(PI * ti), sSig = std::sin(PI * sigma);
    if (std::abs(sInf) < 1e-12 || std::abs(sSig) < 1e-12)
        throw DegenerateParameterError("build_monodromy: sin(pi thetaInf) or sin(pi sigma) ~ 0");
    if (std::abs(r) < 1e-300) throw RangeError("build_monodromy: r must be non-zero");

    // the Lemma's internal parameter; with it the trace invariants depend on
    // the invariant combination s0t only
    cplx s = s0t * r;

    MonodromyQuadruple q;
    q.MInf = Mat2::diag(std::exp(I * PI * ti), std::exp(-I * PI * ti));
    cplx iSi = 1.0 / (I * sInf);
    q.M1 = {iSi * (std::cos(PI * sigma) - std::exp(-I * PI * ti) * std::cos(PI * t1)),
            iSi * (-2.0 * r * std::exp(-I * PI * ti) * half_sine(ti + t1 + sigma) *
                   half_sine(ti + t1 - sigma)),
            iSi * (2.0 / r * std::exp(I * PI * ti) * half_sine(ti - t1 + sigma) *
                   half_sine(ti - t1 - sigma)),
            iSi * (-std::cos(PI * sigma) + std::exp(I * PI * ti) * std::cos(PI * t1))};
    cplx iSs = 1.0 / (I * sSig);
    Mat2 CMtC = {iSs * (std::exp(I * PI * sigma) * std::cos(PI * tt) - std::cos(PI * t0)),
                 iSs * (-2.0 * s * std::exp(I * PI * sigma) * half_sine(t0 + tt - sigma) *
                        half_sine(t0 - tt + sigma)),
                 iSs * (2.0 / s * std::exp(-I * PI * sigma) * half_sine(t0 + tt + sigma) *
                        half_sine(t0 - tt - sigma)),
                 iSs * (-std::exp(-I * PI * sigma) * std::cos(PI * tt) + std::cos(PI * t0))};
    Mat2 CM0C = {iSs * (std::exp(I * PI * sigma) * std::cos(PI * t0) - std::cos(PI * tt)),
                 iSs * (2.0 * s * half_sine(t0 + tt - sigma) * half_sine(t0 - tt + sigma)),
                 iSs * (-2.0 / s * half_sine(t0 - tt - sigma) * half_sine(t0 + tt + sigma)),
                 iSs * (-std::exp(-I * PI * sigma) * std::cos(PI * t0) + std::cos(PI * tt))};
    q.C = {half_sine(ti - t1 - sigma), r * half_sine(ti + t1 + sigma),
           (1.0 / r) * half_sine(ti - t1 + sigma), half_sine(ti + t1 - sigma)};
    // det C = -sin(pi thetaInf) sin(pi sigma); refuse when it underflows
    if (std::abs(q.C.det()) < 1e-14)
        throw NonInvertibleCError("build_monodromy: connection matrix C is singular");
    Mat2 Cinv = q.C.inverse();
    q.M0 = Cinv * CM0C * q.C;
    q.Mt = Cinv * CMtC * q.C;
    return q;
}

namespace {

cplx principal_sigma_from_p(cplx p) {
    return std::acos(p / 2.0) / PI;  // Re in [0,1]
}

} // namespace

MonodromyData invariants_from_matrices(const MonodromyQuadruple& q) {
    MonodromyData d;
    d.p0 = q.M0.trace();
    d.pt = q.Mt.trace();
    d.p1 = q.M1.trace();
    d.pInf = q.MInf.trace();
    d.p0t = (q.M0 * q.Mt).trace();
    d.pt1 = (q.Mt * q.M1).trace();
    d.p01 = (q.M0 * q.M1).trace();
    d.sigma0t = principal_sigma_from_p(d.p0t);
    d.sigmaT1 = principal_sigma_from_p(d.pt1);
    d.sigma01 = principal_sigma_from_p(d.p01);
    return d;
}

cplx connection_residual(const ThetaSet& th, const MonodromyData& d, int sign) {
    cplx t0 = th.theta0, tt = th.thetaT, t1 = th.theta1, ti = th.thetaInf;
    cplx sig = d.sigma0t;
    double pm = (sign >= 0) ? 1.0 : -1.0;
    cplx lhs = 4.0 * principal_power(d.s0t, cplx(pm, 0.0)) * half_sine(t0 + tt - pm * sig) *
               half_sine(t0 - tt + pm * sig) * half_sine(ti + t1 - pm * sig) *
               half_sine(ti - t1 + pm * sig);
    // cos(pi sigma_{t1}) and cos(pi sigma_{01}) reduce to p/2
    cplx ct1 = d.pt1 / 2.0, c01 = d.p01 / 2.0;
    cplx rhs = std::exp(pm * I * PI * sig) *
                   (pm * I * std::sin(PI * sig) * ct1 - std::cos(PI * tt) * std::cos(PI * ti) -
                    std::cos(PI * t0) * std::cos(PI * t1)) +
               pm * I * std::sin(PI * sig) * c01 + std::cos(PI * tt) * std::cos(PI * t1) +
               std::cos(PI * ti) * std::cos(PI * t0);
    return lhs - rhs;
}

cplx manifold_value(cplx p0, cplx pt, cplx p1, cplx pInf, cplx p0t, cplx pt1, cplx p01) {
    return p0t * pt1 * p01 + p0t * p0t + pt1 * pt1 + p01 * p01 -
           (p0 * pt + p1 * pInf) * p0t - (pt * p1 + p0 * pInf) * pt1 -
           (p0 * p1 + pt * pInf) * p01 + p0 * p0 + pt * pt + p1 * p1 + pInf * pInf +
           p0 * pt * p1 * pInf - 4.0;
}

std::array<cplx, 3> manifold_gradient(cplx p0, cplx pt, cplx p1, cplx pInf, cplx p0t, cplx pt1,
                                      cplx p01) {
    return {pt1 * p01 + 2.0 * p0t - p0 * pt - p1 * pInf,
            p0t * p01 + 2.0 * pt1 - pt * p1 - p0 * pInf,
            p0t * pt1 + 2.0 * p01 - p0 * p1 - pt * pInf};
}

std::pair<ThetaSet, MonodromyData> sse_case_data(SseCase cs, const EnsembleParameters& p) {
    cplx mu = p.mu, om = p.omega(), omb = p.omega_bar(), xs = p.xi_star;
    cplx N{double(p.N), 0.0};
    IntegerGuard{mu - omb, p.guard_eps}.require_generic("mu - omega_bar");
    IntegerGuard{mu - om, p.guard_eps}.require_generic("mu - omega");
    IntegerGuard{2.0 * mu + 2.0 * p.omega1, p.guard_eps}.require_generic("2 mu + 2 omega1");

    ThetaSet th;
    switch (cs) {
        case SseCase::A:
            th = {-mu - om, N + 2.0 * p.omega1, N + 2.0 * mu, -mu - omb};
            break;
        case SseCase::B:
            th = {mu - omb, N, N + 2.0 * mu + 2.0 * p.omega1, mu - om};
            break;
        case SseCase::C:
            th = {-2.0 * p.omega1, N + mu + om, N + mu + omb, 2.0 * mu};
            break;
    }
    MonodromyData d;
    d.sigma0t = N - mu + omb;
    d.sigmaT1 = 2.0 * mu + 2.0 * p.omega1;
    d.sigma01 = N - mu + om;
    if (std::abs(xs) == 0.0)
        throw DegenerateParameterError("sse_case_data: s0t undefined at xi* = 0");
    d.s0t = 1.0 + 2.0 * I * std::sin(PI * (mu - omb)) / (xs * std::exp(-I * PI * (mu - omb)));
    if (cs == SseCase::A) {
        d.sT1 = 1.0 + xs * std::exp(-I * PI * (mu - omb)) / (2.0 * I) *
                          std::sin(PI * (2.0 * mu + 2.0 * p.omega1)) /
                          (std::sin(PI * 2.0 * mu) * std::sin(PI * (mu + om)));
    } else {
        // cases B and C print s_{t1} through the same linear relation
        d.sT1 = (std::sin(PI * 2.0 * mu) * std::sin(PI * (mu + om)) /
                     std::sin(PI * (2.0 * mu + 2.0 * p.omega1)) +
                 xs * std::exp(-I * PI * (mu - omb)) / (2.0 * I)) *
                std::sin(PI * (2.0 * mu + 2.0 * p.omega1)) /
                (std::sin(PI * 2.0 * p.omega1) * std::sin(PI * (mu + omb)));
    }
    d.s01 = -(xs - 1.0 + std::exp(2.0 * I * PI * (mu + om))) /
            (xs - 1.0 + std::exp(4.0 * I * PI * mu));
    d.p0 = 2.0 * std::cos(PI * th.theta0);
    d.pt = 2.0 * std::cos(PI * th.thetaT);
    d.p1 = 2.0 * std::cos(PI * th.theta1);
    d.pInf = 2.0 * std::cos(PI * th.thetaInf);
    d.p0t = 2.0 * std::cos(PI * d.sigma0t);
    d.pt1 = 2.0 * std::cos(PI * d.sigmaT1);
    d.p01 = 2.0 * std::cos(PI * d.sigma01);
    return {th, d};
}

MonodromyQuadruple sse_case_matrices(SseCase cs, const EnsembleParameters& p, cplx r) {
    auto [th, d] = sse_case_data(cs, p);
    cplx mu = p.mu, om = p.omega(), omb = p.omega_bar();
    cplx N{double(p.N), 0.0};
    double parity = (p.N % 2 == 0) ? 1.0 : -1.0;  // (-1)^N
    cplx s0t = d.s0t;
    MonodromyQuadruple q;

    auto ex = [](cplx z) { return std::exp(I * PI * z); };

    switch (cs) {
        case SseCase::A: {
            cplx m0 = 2.0 * I / std::sin(PI * (mu - omb)) *
                      (std::sin(PI * 2.0 * p.omega1) * std::sin(PI * (mu + omb)) / s0t -
                       std::sin(PI * 2.0 * mu) * std::sin(PI * (mu + om)) / r);
            cplx mt = 2.0 * I * parity * std::sin(PI * 2.0 * p.omega1) / std::sin(PI * (mu - omb)) *
                      (-std::sin(PI * (mu + omb)) / s0t * ex(mu - omb) +
                       std::sin(PI * 2.0 * mu) / r);
            cplx m1 = -2.0 * I * parity * std::sin(PI * 2.0 * mu) / r * ex(-(mu + omb));
            q.M0 = {ex(-(mu + om)), {0.0, 0.0}, m0, ex(mu + om)};
            q.Mt = {ex(th.thetaT), {0.0, 0.0}, mt, ex(-th.thetaT)};
            q.M1 = {ex(th.theta1), {0.0, 0.0}, m1, ex(-th.theta1)};
            break;
        }
        case SseCase::B: {
            cplx X = mu - om;
            cplx c1 = std::cos(PI * (mu - omb)), c2 = std::cos(PI * (2.0 * mu + 2.0 * p.omega1));
            cplx iS = I / std::sin(PI * X);
            q.M0 = {iS * (ex(-X) * c1 - c2),
                    iS * (2.0 * r * std::sin(PI * (mu + omb)) * std::sin(PI * 2.0 * mu)),
                    iS * (-2.0 / r * std::sin(PI * (mu + om)) * std::sin(PI * 2.0 * p.omega1)),
                    iS * (-ex(X) * c1 + c2)};
            q.Mt = Mat2::diag(cplx(parity, 0.0), cplx(parity, 0.0));
            cplx iSp = I * parity / std::sin(PI * X);
            // upper-right sign corrected relative to the printed matrix: the
            // cyclic relation and det M1 = 1 force the minus
            q.M1 = {iSp * (ex(-X) * c2 - c1),
                    iSp * (-2.0 * r * ex(-X) * std::sin(PI * (mu + omb)) * std::sin(PI * 2.0 * mu)),
                    iSp * (2.0 / r * ex(X) * std::sin(PI * (mu + om)) * std::sin(PI * 2.0 * p.omega1)),
                    iSp * (c1 - ex(X) * c2)};
            break;
        }
        case SseCase::C: {
            cplx m0 = 2.0 * I / std::sin(PI * (mu - omb)) *
                      (-std::sin(PI * 2.0 * mu) * std::sin(PI * (mu + om)) * s0t +
                       std::sin(PI * 2.0 * p.omega1) * std::sin(PI * (mu + omb)) * r);
            cplx mt = 2.0 * I * parity * std::sin(PI * (mu + om)) / std::sin(PI * (mu - omb)) *
                      (std::sin(PI * 2.0 * mu) * ex(-(mu - omb)) * s0t -
                       std::sin(PI * (mu + omb)) * r);
            cplx m1 = 2.0 * I * std::sin(PI * (mu + omb)) * ex(-(N + 2.0 * mu)) * r;
            q.M0 = {ex(2.0 * p.omega1), m0, {0.0, 0.0}, ex(-2.0 * p.omega1)};
            q.Mt = {ex(-th.thetaT), mt, {0.0, 0.0}, ex(th.thetaT)};
            q.M1 = {ex(-th.theta1), m1, {0.0, 0.0}, ex(th.theta1)};
            break;
        }
    }
    q.MInf = (q.M1 * q.Mt * q.M0).inverse();
    q.C = Mat2::identity();  // no Jimbo C in the degenerate cases
    return q;
}

cplx sigma01_tilde(const MonodromyData& d, const ThetaSet& th) {
    cplx c = -std::cos(PI * d.sigma0t) - 2.0 * std::cos(PI * d.sigma01) * std::cos(PI * d.sigmaT1) +
             2.0 * (std::cos(PI * th.theta0) * std::cos(PI * th.thetaT) +
                    std::cos(PI * th.thetaInf) * std::cos(PI * th.theta1));
    return std::acos(c) / PI;  // complex arccos handles |c| > 1
}

} // namespace pvi
