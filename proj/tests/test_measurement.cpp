#include <doctest.h>

#include <cmath>

#include "y00/experiments.hpp"
#include "y00/measurement.hpp"
#include "y00/parallel.hpp"
#include "y00/rng.hpp"

using namespace y00;

namespace {
// relative closeness; doctest's Approx drifts toward absolute for tiny values
bool rel_close(double a, double b, double tol) {
    return std::abs(a - b) <= tol * std::max(std::abs(a), std::abs(b));
}
}  // namespace

TEST_CASE("q function anchors") {
    CHECK(q_function(0.0) == doctest::Approx(0.5));
    CHECK(rel_close(q_function(std::sqrt(2.0)), 7.86496035251425668e-2, 1e-12));
    CHECK(rel_close(q_function(std::sqrt(14.0)), 9.14053164909176712e-5, 1e-9));
}

TEST_CASE("helstrom error rate") {
    CHECK(helstrom_error(0.0, Form::exact) == doctest::Approx(0.5));
    // S = 7 sits one order below the 1e-12 landmark
    const double asym7 = helstrom_error(7.0, Form::asymptotic);
    CHECK(rel_close(asym7, 1.72860002673505075e-13, 1e-12));
    CHECK(asym7 / 1e-12 > 0.1);
    CHECK(asym7 / 1e-12 < 10.0);

    const double e2 = helstrom_error(2.0, Form::exact);
    const double a2 = helstrom_error(2.0, Form::asymptotic);
    CHECK(e2 / a2 > 1.0);
    CHECK(e2 / a2 < 1.001);
    for (double s = 0.125; s <= 32.0; s *= 2.0)
        CHECK(helstrom_error(s, Form::exact) >= helstrom_error(s, Form::asymptotic));

    CHECK_THROWS_AS(helstrom_error(-1.0, Form::exact), std::domain_error);
}

TEST_CASE("heterodyne error rate") {
    CHECK(heterodyne_error(0.0, Form::exact) == doctest::Approx(0.5));
    CHECK(rel_close(heterodyne_error(7.0, Form::asymptotic), 4.55940982777258122e-4, 1e-12));
    CHECK(rel_close(heterodyne_error(7.0, Form::exact), 9.14053164909176712e-5, 1e-9));
    // the closed form is an envelope: above the exact tail, within 10x here
    const double ratio =
        heterodyne_error(7.0, Form::asymptotic) / heterodyne_error(7.0, Form::exact);
    CHECK(ratio > 1.0);
    CHECK(ratio < 10.0);
    CHECK_THROWS_AS(heterodyne_error(-0.5, Form::exact), std::domain_error);
}

TEST_CASE("phase measurement error rate") {
    CHECK(phase_error(0.0) == doctest::Approx(0.5));
    CHECK(phase_error(7.0) == doctest::Approx(4.157643595517839e-7).epsilon(1e-12));
    // algebraic identity with the heterodyne envelope at twice the energy
    CHECK(phase_error(3.5) == heterodyne_error(7.0, Form::asymptotic));
    CHECK_THROWS_AS(phase_error(-1.0), std::domain_error);
}

TEST_CASE("receiver hierarchy in the mesoscopic regime") {
    for (double s = 1.0; s <= 50.0; s += 0.5) {
        const double hel = helstrom_error(s, Form::exact);
        const double ph = phase_error(s);
        const double het = heterodyne_error(s, Form::exact);
        CHECK(hel <= ph);
        CHECK(ph <= het);
    }
    for (double s : {0.0, 0.3, 1.0, 4.0, 100.0}) {
        for (double p : {helstrom_error(s, Form::exact), heterodyne_error(s, Form::exact),
                         phase_error(s)}) {
            CHECK(p >= 0.0);
            CHECK(p <= 0.5);
        }
    }
}

TEST_CASE("heterodyne sampler vacuum statistics") {
    RngStream rng(1, 0);
    const int n = 1'000'000;
    double sr = 0, si = 0, vr = 0, vi = 0;
    for (int i = 0; i < n; ++i) {
        const Complex y = heterodyne_sample({0.0, 0.0}, rng);
        sr += y.real();
        si += y.imag();
        vr += y.real() * y.real();
        vi += y.imag() * y.imag();
    }
    const double sigma_mean = std::sqrt(0.5 / double(n));
    CHECK(std::abs(sr / n) < 5.0 * sigma_mean);
    CHECK(std::abs(si / n) < 5.0 * sigma_mean);
    CHECK(vr / n == doctest::Approx(0.5).epsilon(0.01));
    CHECK(vi / n == doctest::Approx(0.5).epsilon(0.01));
}

TEST_CASE("heterodyne sampler sign-flip tail at alpha0 = 3") {
    // P(re < 0 | amp (3,0)) = Q(3 sqrt 2), checked over 1e8 indexed draws
    const RngStream rng(1234, 0);
    const std::uint64_t n = 100'000'000;
    const std::uint64_t count = parallel_reduce<std::uint64_t>(
        n, 1 << 16, 0,
        [&](std::uint64_t b, std::uint64_t e) {
            std::uint64_t k = 0;
            for (std::uint64_t i = b; i < e; ++i)
                k += std::uint64_t(heterodyne_sample_at({3.0, 0.0}, rng, i).real() < 0.0);
            return k;
        },
        [](std::uint64_t a, std::uint64_t b) { return a + b; }, 0);
    const double p = q_function(3.0 * std::sqrt(2.0));  // 1.1045e-5
    const double sigma = std::sqrt(p * (1.0 - p) * double(n));
    CHECK(std::abs(double(count) - p * double(n)) < 3.0 * sigma);
}

TEST_CASE("sampler determinism across instances and draw indexing") {
    RngStream a(1, 0), b(1, 0);
    const Complex amp{1.5, -2.0};
    const Complex first = heterodyne_sample(amp, a);
    CHECK(first == heterodyne_sample(amp, b));
    const RngStream c(1, 0);
    CHECK(first == heterodyne_sample_at(amp, c, 0));
}

TEST_CASE("bob_decide flip rates") {
    const std::uint64_t n = 1'000'000;

    auto flip_count = [&](double s, std::uint64_t seed) {
        const RngStream rng(seed, sub::bob);
        std::uint64_t flips = 0;
        for (std::uint64_t i = 0; i < n; ++i) flips += std::uint64_t(bob_decide_at(0, s, rng, i));
        return flips;
    };

    {
        const double p = 0.5;
        const double sigma = std::sqrt(p * (1 - p) * double(n));
        CHECK(std::abs(double(flip_count(0.0, 5)) - p * n) < 3.0 * sigma);
    }
    {
        // exact Helstrom rate at S = 1 (the asymptotic form gives 4.579e-3)
        const double p = 4.600070225309709e-3;
        CHECK(helstrom_error(1.0, Form::exact) == doctest::Approx(p).epsilon(1e-12));
        const double sigma = std::sqrt(p * (1 - p) * double(n));
        CHECK(std::abs(double(flip_count(1.0, 6)) - p * n) < 3.0 * sigma);
    }
    {
        // expected flips at S = 7 over 1e7 trials: 1.7e-6, i.e. none
        const RngStream rng(7, sub::bob);
        std::uint64_t flips = 0;
        for (std::uint64_t i = 0; i < 10'000'000; ++i)
            flips += std::uint64_t(bob_decide_at(1, 7.0, rng, i) != 1);
        CHECK(flips == 0);
    }
}

TEST_CASE("monte carlo heterodyne decision matches the exact tail") {
    for (double s : {1.0, 2.0, 4.0}) {
        const std::uint64_t trials = 1'000'000;
        const BerEstimate est = heterodyne_ber_mc(s, trials, 99, 0);
        const double p = heterodyne_error(s, Form::exact);
        const double sigma = std::sqrt(p * (1.0 - p) / double(trials));
        CHECK(std::abs(est.p_hat - p) < 3.0 * sigma);
    }
}

TEST_CASE("monte carlo results are invariant to the worker count") {
    const BerEstimate w1 = heterodyne_ber_mc(2.0, 300'000, 11, 1);
    const BerEstimate w4 = heterodyne_ber_mc(2.0, 300'000, 11, 4);
    const BerEstimate w8 = heterodyne_ber_mc(2.0, 300'000, 11, 8);
    CHECK(w1.errors == w4.errors);
    CHECK(w4.errors == w8.errors);
    CHECK(w1.p_hat == w8.p_hat);
}
