#pragma once

#include <functional>
#include <stdexcept>
#include <vector>

namespace y00 {

struct QuadratureError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Adaptive Simpson on [a, b] to absolute tolerance. Throws QuadratureError
/// if the recursion depth limit is hit before the tolerance is met.
double adaptive_simpson(const std::function<double(double)>& f, double a, double b,
                        double abs_tol, int max_depth = 48);

/// Nodes and weights for integrating f against exp(-x^2) over the real line:
/// integral ~= sum_i w[i] * f(x[i]).
struct GaussHermite {
    std::vector<double> x;
    std::vector<double> w;
};

/// Cached rule of order n (computed once, thread-safe).
const GaussHermite& gauss_hermite(int n);

}  // namespace y00
