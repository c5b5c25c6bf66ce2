#include "y00/quadrature.hpp"

#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>
#include <string>

namespace y00 {

namespace {

double simpson_step(const std::function<double(double)>& f, double a, double fa, double b,
                    double fb, double m, double fm, double whole, double tol, int depth,
                    int max_depth) {
    const double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
    const double flm = f(lm), frm = f(rm);
    const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
    const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
    const double delta = left + right - whole;
    if (std::abs(delta) <= 15.0 * tol) return left + right + delta / 15.0;
    if (depth >= max_depth)
        throw QuadratureError("adaptive Simpson depth limit on [" + std::to_string(a) + ", " +
                              std::to_string(b) + "], residual " + std::to_string(delta));
    return simpson_step(f, a, fa, m, fm, lm, flm, left, 0.5 * tol, depth + 1, max_depth) +
           simpson_step(f, m, fm, b, fb, rm, frm, right, 0.5 * tol, depth + 1, max_depth);
}

}  // namespace

double adaptive_simpson(const std::function<double(double)>& f, double a, double b,
                        double abs_tol, int max_depth) {
    if (a == b) return 0.0;
    const double m = 0.5 * (a + b);
    const double fa = f(a), fb = f(b), fm = f(m);
    const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
    return simpson_step(f, a, fa, b, fb, m, fm, whole, abs_tol, 0, max_depth);
}

namespace {

// Orthonormal Hermite recurrence evaluated at x: returns (h_n, h_{n-1}).
std::pair<double, double> hermite_pair(int n, double x) {
    double p0 = std::pow(std::numbers::pi, -0.25);
    double p1 = std::sqrt(2.0) * x * p0;
    if (n == 0) return {p0, 0.0};
    for (int j = 1; j < n; ++j) {
        const double p2 = x * std::sqrt(2.0 / double(j + 1)) * p1 -
                          std::sqrt(double(j) / double(j + 1)) * p0;
        p0 = p1;
        p1 = p2;
    }
    return {p1, p0};
}

GaussHermite compute_gauss_hermite(int n) {
    if (n < 2) throw QuadratureError("Gauss-Hermite order must be >= 2");
    GaussHermite rule;
    rule.x.resize(static_cast<std::size_t>(n));
    rule.w.resize(static_cast<std::size_t>(n));
    const int half = (n + 1) / 2;
    std::vector<double> roots(static_cast<std::size_t>(half));
    double z = 0.0;
    for (int i = 0; i < half; ++i) {
        // standard initial guesses, largest root first; z carries the
        // previously converged root into each extrapolation
        if (i == 0) {
            z = std::sqrt(2.0 * n + 1.0) - 1.85575 * std::pow(2.0 * n + 1.0, -1.0 / 6.0);
        } else if (i == 1) {
            z -= 1.14 * std::pow(double(n), 0.426) / z;
        } else if (i == 2) {
            z = 1.86 * z - 0.86 * roots[0];
        } else if (i == 3) {
            z = 1.91 * z - 0.91 * roots[1];
        } else {
            z = 2.0 * z - roots[std::size_t(i - 2)];
        }
        double pp = 0.0;
        bool converged = false;
        for (int it = 0; it < 100; ++it) {
            const auto [pn, pnm1] = hermite_pair(n, z);
            pp = std::sqrt(2.0 * n) * pnm1;  // derivative of the orthonormal h_n
            const double dz = pn / pp;
            z -= dz;
            if (std::abs(dz) < 1e-15 * std::max(1.0, std::abs(z))) {
                converged = true;
                break;
            }
        }
        if (!converged)
            throw QuadratureError("Gauss-Hermite Newton iteration failed at order " +
                                  std::to_string(n));
        roots[std::size_t(i)] = z;
        rule.x[std::size_t(i)] = z;
        rule.x[std::size_t(n - 1 - i)] = -z;
        const double w = 2.0 / (pp * pp);
        rule.w[std::size_t(i)] = w;
        rule.w[std::size_t(n - 1 - i)] = w;
    }
    if (n % 2 == 1) rule.x[std::size_t(half - 1)] = 0.0;
    return rule;
}

}  // namespace

const GaussHermite& gauss_hermite(int n) {
    static std::mutex mu;
    static std::map<int, std::unique_ptr<GaussHermite>> cache;
    std::scoped_lock lock(mu);
    auto it = cache.find(n);
    if (it == cache.end())
        it = cache.emplace(n, std::make_unique<GaussHermite>(compute_gauss_hermite(n))).first;
    return *it->second;
}

}  // namespace y00
