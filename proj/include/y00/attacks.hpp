#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "y00/constellation.hpp"
#include "y00/keystream.hpp"
#include "y00/transcript.hpp"

namespace y00 {

/// Monte Carlo error count with the normal-approximation 95% interval.
struct BerEstimate {
    std::uint64_t errors = 0;
    std::uint64_t trials = 0;
    double p_hat = 0.0;
    double ci95 = 0.0;

    static BerEstimate from_counts(std::uint64_t errors, std::uint64_t trials);
};

/// Half-plane bit of a heterodyne outcome: 0 on or above the horizontal
/// axis, 1 below. The tie at im == 0 goes to 0 (measure zero under noise).
inline int binarize(const Complex& y) noexcept { return y.imag() < 0.0 ? 1 : 0; }

/// The fixed running-key function entering the binarized stream-cipher view:
/// without noise the half-plane bit is data XOR basis_parity(basis) for every
/// off-axis basis.
int basis_parity(int basis);

/// Basis 0 lies on the decision axis itself; its binarized bit is pure noise.
constexpr bool on_axis_basis(int basis) noexcept { return basis == 0; }

/// Counts positions where the half-plane bit of Eve's outcome disagrees with
/// data XOR basis_parity -- the rate at which the stream-cipher reduction of
/// this cipher is broken by measurement noise.
BerEstimate binarization_attack(const Transcript& t);

/// Phase-uncertainty estimate of that error rate, 2 / (pi * alpha0).
double binarization_ber_estimate(double alpha0);

/// Decode Eve's heterodyne outcomes. With the key: minimum-distance decision
/// between the two known basis states, bit error rate. Without: nearest
/// constellation state, state-identification error rate.
BerEstimate heterodyne_keyed_decode(const Transcript& t, const Constellation& c,
                                    bool key_known);

struct SeedScore {
    std::uint32_t seed;
    std::uint32_t agreement;
};

/// Known-plaintext brute force over every nonzero seed: predict the
/// binarized bit per position and score Hamming agreement against l.
/// Sorted by agreement descending, ties by seed ascending. klen <= 24.
std::vector<SeedScore> seed_recovery_bruteforce(std::span<const std::uint8_t> l,
                                                std::span<const std::uint8_t> x,
                                                const LfsrSpec& spec, const Constellation& c,
                                                int workers = 1);

/// Rank (1-based) of `true_seed` in the brute-force ranking, without
/// materialising the full list.
std::uint64_t seed_recovery_rank(std::span<const std::uint8_t> l,
                                 std::span<const std::uint8_t> x, const LfsrSpec& spec,
                                 const Constellation& c, std::uint64_t true_seed,
                                 int workers = 1);

struct SearchComplexity {
    double log2_c = 0.0;
    /// Set when the per-basis candidate count is <= 1 and the estimate
    /// is not meaningful.
    bool degenerate = false;
};

/// Brute-force running-key search complexity under the full heterodyne
/// attack: log2 C = (klen / log2(M/2)) * log2(lambda * M / (sqrt(2) pi alpha0)),
/// lambda = 1 for known-plaintext, 2 for ciphertext-only.
SearchComplexity search_complexity(int m, double alpha0, int klen, int lambda);

}  // namespace y00
