#include "pvi/checks.hpp"

#include <algorithm>
#include <chrono>
#include <future>
#include <random>

#include "pvi/fredholm_jacobi.hpp"
#include "pvi/gamma.hpp"
#include "pvi/monodromy.hpp"
#include "pvi/sigma_pvi.hpp"

namespace pvi {

namespace {

EnsembleParameters reference_params() {
    EnsembleParameters p;
    p.N = 2;
    p.mu = {0.3, 0.0};
    p.omega1 = {0.25, 0.0};
    p.omega2 = {0.1, 0.0};
    p.xi_star = {0.4, 0.0};
    return p;
}

double rel_err(cplx got, cplx want) {
    return std::abs(got - want) / std::max(1e-300, std::abs(want));
}

// ---- criterion 1: Prop. 2 series vs Toeplitz determinant per center ----

CheckResult check_series_vs_toeplitz(Center ctr, const char* name) {
    CheckResult r;
    r.name = name;
    r.threshold = 1e-4;
    EnsembleParameters p = reference_params();
    BoundarySeries s = an_boundary_series(ctr, p);
    auto point = [&](double scale) {
        switch (ctr) {
            case Center::Zero: return cplx(scale, 0.0);
            case Center::One: return cplx(1.0 - scale, 0.0);
            case Center::Infinity: return cplx(1.0 / scale, 0.0);
        }
        return cplx(scale, 0.0);
    };
    cplx t1 = point(1e-3), t2 = point(1e-4);
    double e1 = rel_err(s.evaluate(t1), eval_AN(p, t1, ctr));
    double e2 = rel_err(s.evaluate(t2), eval_AN(p, t2, ctr));
    r.measured = e1;
    r.pass = (e1 < r.threshold) && (e2 <= e1 / 10.0);
    r.detail = "rel err " + std::to_string(e1) + " at |x|=1e-3, " + std::to_string(e2) +
               " at 1e-4 (needs <1e-4 and 10x drop)";
    return r;
}

// ---- criterion 2: U(N) series vs flat-weight Toeplitz ----

CheckResult check_un_series() {
    CheckResult r;
    r.name = "c2_un_series_vs_toeplitz";
    r.threshold = 1e-9;
    double worst = 0.0;
    for (int N : {2, 3}) {
        cplx det = circle_gap(CircleGroup::UN, N, 0.05, 1.0);
        GapSeriesValue ser = circle_gap_series(CircleGroup::UN, N, 1.0, 0.05);
        worst = std::max(worst, std::abs(det - cplx(ser.value, 0.0)));
    }
    r.measured = worst;
    r.pass = worst < r.threshold;
    r.detail = "max |toeplitz - degree-9 series| over N=2,3 at xi=1, x=0.05";
    return r;
}

// ---- criterion 3: JUE boundary series vs both Fredholm routes ----

CheckResult check_jue_series() {
    CheckResult r;
    r.name = "c3_jue_series_vs_fredholm";
    r.threshold = 1e-5;
    double u = 1e-2;
    FredholmValue f = fredholm_det({0.5, 0.5, 2}, 1.0 - u, cplx(1.0, 0.0), 28);
    GapSeriesValue s = jue_gap_series(2, 0.5, 0.5, 1.0, u);
    double series_err = rel_err(cplx(s.value, 0.0), f.gram);
    r.measured = series_err;
    r.pass = series_err < 1e-5 && f.route_gap < 1e-9;
    r.detail = "series rel err " + std::to_string(series_err) + ", route gap " +
               std::to_string(f.route_gap) + " (needs <1e-5 and <1e-9)";
    return r;
}

// ---- criterion 4: O+- series vs Fredholm ----

CheckResult check_opm_series() {
    CheckResult r;
    r.name = "c4_opm_series_vs_fredholm";
    r.threshold = 1e-6;
    double x = 0.1, xi = 0.5;
    int N = 2;
    double worst = 0.0;
    for (CircleGroup g : {CircleGroup::OMinus, CircleGroup::OPlus}) {
        cplx det = circle_gap(g, N, x, xi);
        GapSeriesValue s = circle_gap_series(g, N, xi, x);
        worst = std::max(worst, std::abs(det - cplx(s.value, 0.0)));
    }
    r.measured = worst;
    r.pass = worst < r.threshold;
    r.detail = "max |fredholm - printed truncation| over O+/O- at N=2, xi=0.5, x=0.1";
    return r;
}

// ---- criterion 5: ODE closures ----

CheckResult check_ode_sse() {
    CheckResult r;
    r.name = "c5_ode_closure_sse";
    r.threshold = 1e-5;
    EnsembleParameters p = reference_params();
    p.xi_star = {0.0, 0.0};  // branch-free boundary data
    PVIParameters v = v_from_jue(p);
    cplx t0{1e-3, 0.0}, t1{0.3, 0.0};
    SigmaState seed = sigma_seed_from_toeplitz(p, t0);
    IntegrateOptions io;
    io.tol = 1e-11;
    SigmaState end = integrate_sigma(v, seed, t1, io);
    cplx ode_val = sse_dlog_from_sigma(p, end);
    // Toeplitz side: centered log-derivative of A_N at t1
    double h = 1e-5;
    cplx toe = t1 * (t1 - 1.0) *
               (std::log(eval_AN(p, t1 + h, Center::Zero)) -
                std::log(eval_AN(p, t1 - h, Center::Zero))) /
               (2.0 * h);
    r.measured = std::abs(ode_val - toe);
    r.pass = r.measured < r.threshold;
    r.detail = "|t(t-1)dlogA mismatch| after integrating 1e-3 -> 0.3";
    return r;
}

CheckResult check_ode_jue() {
    CheckResult r;
    r.name = "c5_ode_closure_jue";
    r.threshold = 1e-5;
    int N = 2;
    double a = 0.5, b = 0.5, xi = 1.0;
    PVIParameters v = v_from_jacobi(N, a, b);
    double tau0 = 1e-3, tau1 = 0.2;
    SigmaState seed = jue_seed(N, a, b, xi, tau0);
    IntegrateOptions io;
    io.tol = 1e-11;
    SigmaState end = integrate_sigma(v, seed, cplx(tau1, 0.0), io);
    cplx ode_val = end.t * (end.t - 1.0) * jue_dlog_from_sigma(N, a, b, end);
    double h = 1e-4;
    double fp = std::log(fredholm_det({a, b, N}, 1.0 - (tau1 + h), cplx(xi, 0.0), 28).gram.real());
    double fm = std::log(fredholm_det({a, b, N}, 1.0 - (tau1 - h), cplx(xi, 0.0), 28).gram.real());
    cplx fred = cplx(tau1 * (tau1 - 1.0) * (fp - fm) / (2.0 * h), 0.0);
    r.measured = std::abs(ode_val - fred);
    r.pass = r.measured < r.threshold;
    r.detail = "|t(t-1)dlogE mismatch| after integrating 1e-3 -> 0.2";
    return r;
}

// ---- criterion 6: Proposition-1 Hamiltonian bridge ----

CheckResult check_hamiltonian_bridge() {
    CheckResult r;
    r.name = "c6_hamiltonian_bridge";
    r.threshold = 1e-6;
    PVIParameters v{{0.31, 0.02}, {0.57, -0.05}, {0.43, 0.11}, {0.29, -0.07}};
    HamiltonianState init{{0.2, 0.0}, {0.4, 0.1}, {0.3, -0.2}};
    int M = 60000;
    auto traj = integrate_hamiltonian(v, init, cplx(0.8, 0.0), M);
    std::vector<cplx> hv(traj.size());
    for (size_t i = 0; i < traj.size(); ++i) hv[i] = aux_hamiltonian(v, traj[i]);
    double hstep = 0.6 / M;
    double worst = 0.0;
    for (double frac : {0.25, 0.5, 0.75}) {
        int i = int(M * frac);
        int sp = 100;  // step-controlled stencil spacing
        double d = sp * hstep;
        cplx s1 = (-hv[size_t(i + 2 * sp)] + 8.0 * hv[size_t(i + sp)] - 8.0 * hv[size_t(i - sp)] +
                   hv[size_t(i - 2 * sp)]) /
                  (12.0 * d);
        cplx s2 = (-hv[size_t(i + 2 * sp)] + 16.0 * hv[size_t(i + sp)] - 30.0 * hv[size_t(i)] +
                   16.0 * hv[size_t(i - sp)] - hv[size_t(i - 2 * sp)]) /
                  (12.0 * d * d);
        SigmaState st{traj[size_t(i)].t, hv[size_t(i)], s1, s2};
        worst = std::max(worst, std::abs(sigma_form_residual(v, st)));
    }
    r.measured = worst;
    r.pass = worst < r.threshold;
    r.detail = "max sigma-form residual of h_VI along a generic (q,p) trajectory";
    return r;
}

// ---- criterion 7: monodromy suite ----

CheckResult check_monodromy_generic(const CheckOptions& opt) {
    CheckResult r;
    r.name = "c7a_monodromy_generic_draws";
    r.threshold = 1e-10;
    std::mt19937 rng(opt.seed);
    std::uniform_real_distribution<double> U(0.15, 0.85);
    int draws = opt.full ? 50 : 10;
    double worst_cyc = 0.0, worst_conn = 0.0, worst_man = 0.0;
    for (int i = 0; i < draws; ++i) {
        ThetaSet th{cplx(U(rng), 0.1 * U(rng)), cplx(U(rng), 0.0), cplx(U(rng), -0.05 * U(rng)),
                    cplx(U(rng), 0.0)};
        cplx sigma{U(rng), 0.02 * U(rng)};
        cplx s0t{0.5 + U(rng), 0.3 * U(rng)};
        cplx rr{0.5 + U(rng), 0.2 * U(rng)};
        MonodromyQuadruple q;
        try {
            q = build_monodromy(th, sigma, s0t, rr);
        } catch (const DegenerateParameterError&) {
            continue;
        }
        Mat2 cyc = q.MInf * q.M1 * q.Mt * q.M0 - Mat2::identity();
        worst_cyc = std::max(worst_cyc, cyc.norm());
        MonodromyData d = invariants_from_matrices(q);
        d.s0t = s0t;
        d.sigma0t = sigma;  // use the construction value (acos branch may fold)
        worst_conn = std::max(worst_conn, std::abs(connection_residual(th, d, +1)));
        worst_conn = std::max(worst_conn, std::abs(connection_residual(th, d, -1)));
        worst_man = std::max(worst_man, std::abs(manifold_value(d.p0, d.pt, d.p1, d.pInf, d.p0t,
                                                                d.pt1, d.p01)));
    }
    r.measured = std::max({worst_conn, worst_man, worst_cyc});
    r.pass = worst_cyc < 1e-12 && worst_conn < 1e-10 && worst_man < 1e-10;
    r.detail = "cyclic " + std::to_string(worst_cyc) + ", connection " +
               std::to_string(worst_conn) + ", manifold " + std::to_string(worst_man);
    return r;
}

CheckResult check_monodromy_cases() {
    CheckResult r;
    r.name = "c7b_monodromy_sse_cases";
    r.threshold = 1e-10;
    EnsembleParameters p = reference_params();
    double worst_struct = 0.0, worst_grad = 0.0;
    for (SseCase cs : {SseCase::A, SseCase::B, SseCase::C}) {
        MonodromyQuadruple q = sse_case_matrices(cs, p, cplx(1.3, -0.4));
        // structural claims
        if (cs == SseCase::A) {
            worst_struct = std::max({worst_struct, std::abs(q.M0.b), std::abs(q.Mt.b),
                                     std::abs(q.M1.b)});
        } else if (cs == SseCase::C) {
            worst_struct = std::max({worst_struct, std::abs(q.M0.c), std::abs(q.Mt.c),
                                     std::abs(q.M1.c)});
        } else {
            double par = (p.N % 2 == 0) ? 1.0 : -1.0;
            Mat2 d = q.Mt - Mat2::diag(cplx(par, 0.0), cplx(par, 0.0));
            worst_struct = std::max(worst_struct, d.norm());
        }
        Mat2 cyc = q.MInf * q.M1 * q.Mt * q.M0 - Mat2::identity();
        worst_struct = std::max(worst_struct, cyc.norm());
        for (const Mat2& M : {q.M0, q.Mt, q.M1, q.MInf})
            worst_struct = std::max(worst_struct, std::abs(M.det() - 1.0));
        MonodromyData d = invariants_from_matrices(q);
        worst_grad = std::max(worst_grad, std::abs(manifold_value(d.p0, d.pt, d.p1, d.pInf, d.p0t,
                                                                  d.pt1, d.p01)));
        for (cplx gcomp : manifold_gradient(d.p0, d.pt, d.p1, d.pInf, d.p0t, d.pt1, d.p01))
            worst_grad = std::max(worst_grad, std::abs(gcomp));
    }
    r.measured = std::max(worst_struct, worst_grad);
    r.pass = worst_struct < 1e-12 && worst_grad < 1e-10;
    r.detail = "structure " + std::to_string(worst_struct) + ", manifold+gradient " +
               std::to_string(worst_grad);
    return r;
}

CheckResult check_branch_suppression() {
    CheckResult r;
    r.name = "c7c_branch_suppression_bridge";
    r.threshold = 1e-10;
    EnsembleParameters p = reference_params();
    double worst_surv = 0.0, worst_supp = 0.0;
    for (SseCase cs : {SseCase::A, SseCase::B, SseCase::C}) {
        auto [th, d] = sse_case_data(cs, p);
        struct Leg { Center ctr; cplx sigma; cplx s; };
        for (const Leg& leg : {Leg{Center::Zero, d.sigma0t, d.s0t},
                               Leg{Center::One, d.sigmaT1, d.sT1},
                               Leg{Center::Infinity, d.sigma01, d.s01}}) {
            ThetaSet view = center_theta_view(leg.ctr, th);
            auto [cp, cm] = jimbo_branch_coefficients_gamma(view, leg.sigma, leg.s);
            BoundarySeries b = an_boundary_series(leg.ctr, p);
            cplx surviving = (leg.ctr == Center::One) ? cp : cm;
            cplx suppressed = (leg.ctr == Center::One) ? cm : cp;
            worst_supp = std::max(worst_supp, std::abs(suppressed));
            worst_surv = std::max(worst_surv, std::abs(surviving - b.nonanalytic_coeff));
        }
    }
    r.measured = std::max(worst_surv, worst_supp);
    r.pass = worst_supp == 0.0 && worst_surv < 1e-10;
    r.detail = "suppressed branch max |coeff| " + std::to_string(worst_supp) +
               " (exact zero required), surviving vs Prop.2 " + std::to_string(worst_surv);
    return r;
}

// ---- criterion 8: determinant identities ----

CheckResult check_gamma_identities(const CheckOptions& opt) {
    CheckResult r;
    r.name = "c8_gamma_ratio_identities";
    r.threshold = 1e-10;
    std::mt19937 rng(opt.seed + 1);
    std::uniform_real_distribution<double> U(-0.5, 2.5);
    int draws = opt.full ? 100 : 20;
    double worst = 0.0;
    for (int i = 0; i < draws; ++i) {
        int n = 1 + int(i % 6);
        cplx c{U(rng) + 0.6, 0.3 * U(rng)};
        cplx dd{U(rng) + 1.2, 0.3 * U(rng)};
        try {
            auto [direct, closed] = gamma_ratio_determinant(c, dd, n);
            worst = std::max(worst, std::abs(direct - closed) / std::max(1.0, std::abs(closed)));
        } catch (const PoleError&) {}
        std::vector<cplx> z;
        for (int k = 0; k < n; ++k) z.push_back({U(rng) + 1.5 + 0.9 * k, 0.2 * U(rng)});
        try {
            auto [direct, closed] = gamma_ratio_determinant_general(z, {U(rng) * 0.4 + 0.4, 0.1});
            worst = std::max(worst, std::abs(direct - closed) / std::max(1.0, std::abs(closed)));
        } catch (const PoleError&) {}
    }
    // Morris integral vs 2-D quadrature of the defining double integral
    cplx morris = morris_integral(2, {0.5, 0.0}, {0.25, 0.0});
    auto w1d = [&](double x1, double x2) {
        cplx z1 = std::exp(I * cplx(2.0 * PI * x1, 0.0));
        cplx z2 = std::exp(I * cplx(2.0 * PI * x2, 0.0));
        double ab = 0.75, amb = 0.125;  // a+b, (a-b)/2
        cplx w1 = principal_power(z1, cplx(amb, 0.0)) * std::pow(std::abs(1.0 + z1), ab);
        cplx w2 = principal_power(z2, cplx(amb, 0.0)) * std::pow(std::abs(1.0 + z2), ab);
        return w1 * w2 * std::norm(z1 - z2);
    };
    cplx quad = adaptive_integrate(
        [&](double x1) {
            return adaptive_integrate([&](double x2) { return w1d(x1, x2); }, -0.5, 0.5, 1e-9);
        },
        -0.5, 0.5, 1e-9);
    double morris_err = std::abs(morris - quad) / std::abs(morris);
    r.measured = std::max(worst, morris_err);
    r.pass = worst < 1e-10 && morris_err < 1e-6;
    r.detail = "identities max rel " + std::to_string(worst) + ", Morris vs 2D quad " +
               std::to_string(morris_err);
    return r;
}

// ---- criterion 9: JUE convention audit ----

CheckResult check_convention_audit() {
    CheckResult r;
    r.name = "c9_convention_audit_jue";
    r.threshold = 1e-4;
    int N = 2;
    double a = 0.5, b = 0.5, xi = 0.7;
    PVIParameters v = v_from_jacobi(N, a, b);
    v.v4 = cplx((a - b) / 2.0, 0.0);  // audit the printed v4; the sign is an audited convention
    // memoized Nystrom data
    auto cache = std::make_shared<std::vector<std::pair<double, double>>>();
    auto E = [=](double s) {
        for (auto& kv : *cache)
            if (std::abs(kv.first - s) < 1e-15) return kv.second;
        double val = fredholm_det({a, b, N}, s, cplx(xi, 0.0), 24).gram.real();
        cache->push_back({s, val});
        return val;
    };
    double CN = cn_ab(N, cplx(a, 0.0), cplx(b, 0.0)).real();
    ConventionReport rep =
        convention_audit(E, v, {0.35, 0.45, 0.55, 0.65}, xi * CN, b);
    r.measured = rep.winner.max_residual;
    r.pass = rep.winner.max_residual < 1e-4 && rep.runner_up_residual > 1e-1 &&
             rep.winner.boundary_consistent;
    r.detail = "winner residual " + std::to_string(rep.winner.max_residual) +
               ", best rival " + std::to_string(rep.runner_up_residual) + " (signs eL=" +
               std::to_string(rep.winner.eL) + " e1=" + std::to_string(rep.winner.e1) +
               " e2=" + std::to_string(rep.winner.e2) + " e4=" + std::to_string(rep.winner.e4) +
               (rep.winner.compose_one_minus_t ? ", E(1-t)" : ", E(t)") + ")";
    return r;
}

} // namespace

std::vector<CheckResult> run_acceptance_checks(const CheckOptions& opt) {
    using Job = std::function<CheckResult()>;
    std::vector<Job> jobs = {
        [&] { return check_series_vs_toeplitz(Center::Zero, "c1a_series_vs_toeplitz_center0"); },
        [&] { return check_series_vs_toeplitz(Center::One, "c1b_series_vs_toeplitz_center1"); },
        [&] { return check_series_vs_toeplitz(Center::Infinity, "c1c_series_vs_toeplitz_centerInf"); },
        [&] { return check_un_series(); },
        [&] { return check_jue_series(); },
        [&] { return check_opm_series(); },
        [&] { return check_ode_sse(); },
        [&] { return check_ode_jue(); },
        [&] { return check_hamiltonian_bridge(); },
        [&] { return check_monodromy_generic(opt); },
        [&] { return check_monodromy_cases(); },
        [&] { return check_branch_suppression(); },
        [&] { return check_gamma_identities(opt); },
        [&] { return check_convention_audit(); },
    };

    std::vector<CheckResult> results(jobs.size());
    auto run_one = [&](size_t i) {
        auto start = std::chrono::steady_clock::now();
        CheckResult r;
        try {
            r = jobs[i]();
        } catch (const std::exception& e) {
            r.name = "check_" + std::to_string(i);
            r.pass = false;
            r.detail = std::string("exception: ") + e.what();
            r.measured = std::numeric_limits<double>::infinity();
        }
        r.elapsed_ms = std::chrono::duration<double, std::milli>(
                           std::chrono::steady_clock::now() - start)
                           .count();
        results[i] = r;
    };

    if (opt.concurrent) {
        std::vector<std::future<void>> fut;
        for (size_t i = 0; i < jobs.size(); ++i)
            fut.push_back(std::async(std::launch::async, run_one, i));
        for (auto& f : fut) f.get();
    } else {
        for (size_t i = 0; i < jobs.size(); ++i) run_one(i);
    }

    if (opt.inject_perturbation && !results.empty()) {
        results[0].pass = false;
        results[0].detail += " [injected perturbation]";
    }
    std::sort(results.begin(), results.end(),
              [](const CheckResult& a, const CheckResult& b) { return a.name < b.name; });
    return results;
}

} // namespace pvi
