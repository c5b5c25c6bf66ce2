#pragma once

#include <cstdint>
#include <string>

#include "y00/attacks.hpp"
#include "y00/config.hpp"
#include "y00/infotheory.hpp"
#include "y00/report.hpp"
#include "y00/transcript.hpp"

namespace y00 {

// substream ids of the master seed; fixed so every experiment draws from
// its own independent block
namespace sub {
constexpr std::uint64_t data = 1;
constexpr std::uint64_t eve_noise = 2;
constexpr std::uint64_t bob = 3;
constexpr std::uint64_t basis = 4;
constexpr std::uint64_t pa_hash = 5;
constexpr std::uint64_t trial_base = 1000;
}  // namespace sub

/// Known-basis heterodyne BER by Monte Carlo: random bit, antipodal
/// amplitude +-sqrt(S), sign decision. Result is identical for every
/// worker count (trial i is a pure function of the seed and i).
BerEstimate heterodyne_ber_mc(double s, std::uint64_t trials, std::uint64_t master_seed,
                              int workers);

/// Binarization-attack BER by Monte Carlo with (bit, basis) drawn uniformly
/// per symbol, as the running key delivers in the mean. Same determinism
/// contract as above; a common master_seed couples the noise draws across
/// alpha0 values.
BerEstimate binarization_mc(int m, double alpha0, std::uint64_t n, std::uint64_t master_seed,
                            int workers);

/// Analytic prediction of the binarization BER: average over the uniform
/// bases of the axis-crossing probability Q(sqrt(2) alpha0 |sin theta_r|),
/// with the on-axis basis contributing 1/2.
double binarization_attack_prediction(const Constellation& c);

/// One keyed-transcript run per the config: data and noise from the master
/// seed's substreams, bases from the LFSR.
Transcript make_transcript(const ExperimentConfig& cfg);

/// One known-plaintext seed-recovery trial: draw a true seed and plaintext,
/// form the binarized sequence (flipping each bit with probability noise_p),
/// and return the true seed's rank under brute-force scoring.
std::uint64_t seed_recovery_trial(const LfsrSpec& spec, const Constellation& c,
                                  std::uint64_t n, double noise_p, std::uint64_t master_seed,
                                  std::uint64_t trial, int workers);

struct KeygenParams {
    double s = 7.0;
    std::uint64_t raw_bits = 10'000'000;
    double raw_rate = 1e9;
    RateMethod method = RateMethod::error_count;
    int m = 32;  // constellation backing the advantage check
    bool analytic = false;
    double p_eve = -1.0;  // analytic mode inputs
    double p_bob = -1.0;
    std::uint64_t master_seed = 1;
    int workers = 0;
};

/// Raw-bit simulation (or analytic evaluation), advantage check, rate
/// selection, and Toeplitz compression. Refuses with an explanation row
/// when Eve's channel is not worse than Bob's.
Report run_keygen(const KeygenParams& p);

}  // namespace y00
