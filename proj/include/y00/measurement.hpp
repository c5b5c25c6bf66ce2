#pragma once

#include "y00/constellation.hpp"
#include "y00/rng.hpp"

namespace y00 {

enum class Form { exact, asymptotic };

/// Upper Gaussian tail Q(x) = P(N(0,1) > x).
double q_function(double x);

/// Bit error rate of the optimal quantum receiver discriminating the two
/// antipodal states of a known basis at mean photon number S.
///   exact:      (1 - sqrt(1 - exp(-4S))) / 2
///   asymptotic: exp(-4S) / 4
double helstrom_error(double s, Form form);

/// Bit error rate of a heterodyne receiver on a known basis.
///   exact:      Q(sqrt(2S))   (sign decision against variance-1/2 noise)
///   asymptotic: exp(-S) / 2
double heterodyne_error(double s, Form form);

/// Bit error rate of the optimal phase measurement, exp(-2S) / 2.
/// Analytic only; no outcome sampler exists for this receiver.
double phase_error(double s);

/// Heterodyne outcome: amp plus circular Gaussian noise of variance 1/2
/// per quadrature (outcome density exp(-|y-amp|^2) / pi).
Complex heterodyne_sample(const Complex& amp, RngStream& rng);
Complex heterodyne_sample_at(const Complex& amp, const RngStream& rng, std::uint64_t draw);

/// Bob's keyed optimal receiver, modelled as a Bernoulli flip of the true
/// bit at the exact Helstrom rate. (An optimal quantum measurement has no
/// classical outcome-space simulation; only the decision statistics matter.)
int bob_decide(int bit, double s, RngStream& rng);
int bob_decide_at(int bit, double s, const RngStream& rng, std::uint64_t draw);

}  // namespace y00
