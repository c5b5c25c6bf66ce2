#include "y00/measurement.hpp"

#include <cmath>
#include <stdexcept>

namespace y00 {

namespace {
void check_s(double s) {
    if (!(s >= 0.0) || !std::isfinite(s))
        throw std::domain_error("mean photon number must be finite and nonnegative");
}
}  // namespace

double q_function(double x) { return 0.5 * std::erfc(x / std::sqrt(2.0)); }

double helstrom_error(double s, Form form) {
    check_s(s);
    const double overlap = std::exp(-4.0 * s);  // |<alpha|-alpha>|^2
    if (form == Form::asymptotic) return 0.25 * overlap;
    // (1 - sqrt(1-q))/2 written without the cancellation at small q
    return 0.5 * overlap / (1.0 + std::sqrt(1.0 - overlap));
}

double heterodyne_error(double s, Form form) {
    check_s(s);
    if (form == Form::asymptotic) return 0.5 * std::exp(-s);
    return q_function(std::sqrt(2.0 * s));
}

double phase_error(double s) {
    check_s(s);
    return 0.5 * std::exp(-2.0 * s);
}

Complex heterodyne_sample(const Complex& amp, RngStream& rng) {
    return amp + rng.quadrature_noise();
}

Complex heterodyne_sample_at(const Complex& amp, const RngStream& rng, std::uint64_t draw) {
    return amp + rng.quadrature_noise_at(draw);
}

int bob_decide(int bit, double s, RngStream& rng) {
    return (rng.uniform() < helstrom_error(s, Form::exact)) ? (bit ^ 1) : bit;
}

int bob_decide_at(int bit, double s, const RngStream& rng, std::uint64_t draw) {
    return (rng.uniform_at(draw) < helstrom_error(s, Form::exact)) ? (bit ^ 1) : bit;
}

}  // namespace y00
