#include "pvi/quadrature.hpp"

#include <cmath>
#include <map>
#include <mutex>

namespace pvi {

namespace {

GaussRule build_rule(int m) {
    // Newton on Legendre P_m; standard Golub-free construction.
    GaussRule r;
    r.x.resize(size_t(m));
    r.w.resize(size_t(m));
    for (int i = 0; i < (m + 1) / 2; ++i) {
        double x = std::cos(PI * (i + 0.75) / (m + 0.5));
        double pp = 0.0;
        for (int it = 0; it < 100; ++it) {
            double p0 = 1.0, p1 = 0.0;
            for (int j = 0; j < m; ++j) {
                double p2 = p1;
                p1 = p0;
                p0 = ((2.0 * j + 1.0) * x * p1 - j * p2) / (j + 1.0);
            }
            pp = m * (x * p0 - p1) / (x * x - 1.0);
            double dx = p0 / pp;
            x -= dx;
            if (std::abs(dx) < 1e-16) break;
        }
        r.x[size_t(i)] = -x;
        r.x[size_t(m - 1 - i)] = x;
        double w = 2.0 / ((1.0 - x * x) * pp * pp);
        r.w[size_t(i)] = w;
        r.w[size_t(m - 1 - i)] = w;
    }
    return r;
}

std::map<int, GaussRule> rule_cache;
std::mutex rule_mutex;

} // namespace

const GaussRule& gauss_legendre(int m) {
    std::lock_guard<std::mutex> lock(rule_mutex);
    auto it = rule_cache.find(m);
    if (it == rule_cache.end()) it = rule_cache.emplace(m, build_rule(m)).first;
    return it->second;
}

cplx gauss_integrate(const std::function<cplx(double)>& f, double a, double b, int m) {
    const GaussRule& r = gauss_legendre(m);
    double c = 0.5 * (a + b), h = 0.5 * (b - a);
    cplx s{0.0, 0.0};
    for (int i = 0; i < m; ++i) s += r.w[size_t(i)] * f(c + h * r.x[size_t(i)]);
    return h * s;
}

namespace {

cplx adapt(const std::function<cplx(double)>& f, double a, double b, double tol,
           int depth, int max_depth) {
    cplx lo = gauss_integrate(f, a, b, 7);
    cplx hi = gauss_integrate(f, a, b, 15);
    double err = std::abs(hi - lo);
    if (err <= tol * (1.0 + std::abs(hi)) || depth >= max_depth) return hi;
    double m = 0.5 * (a + b);
    return adapt(f, a, m, tol * 0.6, depth + 1, max_depth) +
           adapt(f, m, b, tol * 0.6, depth + 1, max_depth);
}

} // namespace

cplx adaptive_integrate(const std::function<cplx(double)>& f, double a, double b,
                        double tol, int max_depth) {
    return adapt(f, a, b, tol, 0, max_depth);
}

} // namespace pvi
