#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "y00/constellation.hpp"
#include "y00/keystream.hpp"

namespace y00 {

/// Exact conditional entropies of a finite cipher instance, in bits.
struct EntropyReport {
    double h_x_given_y = 0.0;   // H(X|Y): data security against ciphertext-only attack
    double h_k_given_y = 0.0;   // H(K|Y): key security
    double h_y_given_xk = 0.0;  // H(Y|X,K): nonzero iff the cipher is randomized
    double h_k = 0.0;           // H(K) = klen for a uniform seed
};

enum class OutcomeModel {
    /// Y is the angular sector of the transmitted state itself; the cipher
    /// is a deterministic function of (X, K).
    noiseless,
    /// Y is the angular sector of a heterodyne outcome; sector likelihoods
    /// come from quadrature of the outcome density.
    quantized_heterodyne,
};

enum class EncBox {
    /// Running key bits = seed bits repeated cyclically. Uses every seed
    /// value including zero, so H(K) = klen holds exactly; positions i <
    /// klen consume fresh key material (one-time-pad regime when
    /// n * log2(M/2) <= klen).
    cyclic_seed,
    /// LFSR expansion. The all-zero seed is admitted here and yields the
    /// all-zero running key: enumeration requires a total map from seeds.
    lfsr,
};

/// A cipher instance small enough for exact joint enumeration over
/// (K, X, Y). Budget: 2^klen * 2^n * sectors^n <= 1e8.
struct TinyCipherSpec {
    int m = 4;
    int klen = 1;
    int n = 1;
    int sectors = 2;
    OutcomeModel noise = OutcomeModel::noiseless;
    double alpha0 = 1.0;  // used by quantized_heterodyne
    EncBox enc = EncBox::cyclic_seed;
    LfsrSpec lfsr;                    // used when enc == lfsr
    std::vector<double> prior;        // size 2^n over data words; empty = uniform

    void validate() const;
    double budget() const;
};

EntropyReport exact_cipher_entropies(const TinyCipherSpec& spec);

/// Probability that a heterodyne outcome of state ell lands in each angular
/// wedge [2*pi*s/sectors, 2*pi*(s+1)/sectors). Absolute tolerance 1e-6.
std::vector<double> sector_probabilities(const Constellation& c, int sectors, int ell);

/// P(bit = 1 | outcome y) marginalised over a uniform basis (key unknown).
double bit_posterior_unknown_key(const Constellation& c, const Complex& y);

/// P(bit = 1 | outcome y) for a known basis.
double bit_posterior_known_basis(const Constellation& c, int basis, const Complex& y);

/// Per-qumode H(X|Y) of a heterodyne observer, by Gauss-Hermite quadrature
/// over the outcome plane. key_known averages the two-state mixture over
/// bases; otherwise the full M-state mixture with the basis marginalised.
double posterior_bit_entropy(const Constellation& c, bool key_known);

/// -p log2 p - (1-p) log2 (1-p), with h(0) = h(1) = 0.
double binary_entropy(double p);

enum class RateMethod {
    /// Secret bits = Eve's expected error count: rate = p_eve * raw.
    error_count,
    /// Csiszar-Korner secret key rate of the induced binary symmetric
    /// channels: rate = max(0, h(p_eve) - h(p_bob)) * raw.
    ck,
};

struct KeyRateResult {
    double bits_per_second = 0.0;
    bool advantage_ok = false;  // p_bob <= p_eve
};

KeyRateResult key_rate(double p_bob, double p_eve, double raw_rate, RateMethod method);

/// Toeplitz universal hash over GF(2): output_i = parity(row_i AND input),
/// where row_i reads hash_seed[(j - i) + out_len - 1] for column j. The seed
/// must hold in_len + out_len - 1 bits.
std::vector<std::uint8_t> privacy_amplify(std::span<const std::uint8_t> bits,
                                          std::size_t out_len,
                                          std::span<const std::uint8_t> hash_seed);

}  // namespace y00
