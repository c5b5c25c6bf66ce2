#include "y00/reproduce.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

#include "y00/attacks.hpp"
#include "y00/experiments.hpp"
#include "y00/infotheory.hpp"
#include "y00/measurement.hpp"
#include "y00/parallel.hpp"

namespace y00 {

namespace {

bool within_factor(double value, double reference, double factor) {
    if (value <= 0.0 || reference <= 0.0) return false;
    const double r = value / reference;
    return r <= factor && r >= 1.0 / factor;
}

// deterministic list of noiseless tiny-cipher instances for the Shannon
// limit sweep
std::vector<TinyCipherSpec> random_noiseless_instances(std::uint64_t master_seed, int count) {
    RngStream rng(master_seed, sub::trial_base - 1);
    std::vector<TinyCipherSpec> out;
    out.reserve(static_cast<std::size_t>(count));
    while (int(out.size()) < count) {
        TinyCipherSpec ts;
        ts.m = (rng.words().first & 1) ? 4 : 8;
        ts.klen = 1 + int(rng.words().first % 12);
        ts.n = 1 + int(rng.words().first % 4);
        ts.sectors = 2 + int(rng.words().first % 7);
        ts.noise = OutcomeModel::noiseless;
        const bool use_lfsr = ts.klen >= 3 && (rng.words().first & 1);
        if (use_lfsr && ts.klen <= 24) {
            ts.enc = EncBox::lfsr;
            ts.lfsr = LfsrSpec::primitive_default(ts.klen);
        } else {
            ts.enc = EncBox::cyclic_seed;
        }
        if (rng.words().first & 1) {
            // random nonuniform prior
            const std::size_t nx = std::size_t(1) << ts.n;
            ts.prior.resize(nx);
            double sum = 0.0;
            for (auto& p : ts.prior) {
                p = rng.uniform() + 1e-3;
                sum += p;
            }
            for (auto& p : ts.prior) p /= sum;
            // renormalise exactly enough for the validator
            double s2 = 0.0;
            for (double p : ts.prior) s2 += p;
            ts.prior.back() += 1.0 - s2;
        }
        if (ts.budget() > 1e8) continue;  // redraw instead of tripping the validator
        out.push_back(std::move(ts));
    }
    return out;
}

}  // namespace

Report reproduce_paper(std::uint64_t master_seed, int workers) {
    Report rep;
    auto row = [&](const std::string& name, double value, const std::string& units,
                   Provenance prov, const std::string& target, bool pass) {
        rep.rows.push_back({name, value, units, prov, target, pass});
    };
    auto info = [&](const std::string& name, double value, const std::string& units,
                    Provenance prov) {
        rep.rows.push_back({name, value, units, prov, "", std::nullopt});
    };

    rep.config_echo_json = "{\"master_seed\":" + std::to_string(master_seed) + "}";

    // --- criterion 1: receiver error rates at the mesoscopic point S = 7 ---
    {
        const double pb = helstrom_error(7.0, Form::asymptotic);
        const double ph = heterodyne_error(7.0, Form::asymptotic);
        const double pp = phase_error(7.0);
        row("c1-bob-optimal-ber-S7", pb, "probability", Provenance::formula,
            "within 10x of 1e-12", within_factor(pb, 1e-12, 10.0));
        row("c1-heterodyne-ber-S7", ph, "probability", Provenance::formula,
            "within 10x of 1e-3", within_factor(ph, 1e-3, 10.0));
        row("c1-phase-ber-S7", pp, "probability", Provenance::formula,
            "within 10x of 1e-6", within_factor(pp, 1e-6, 10.0));
    }

    // --- criterion 2: heterodyne Monte Carlo against the exact tail ---
    for (double s : {1.0, 2.0, 4.0}) {
        const std::uint64_t trials = 10'000'000;
        const BerEstimate est = heterodyne_ber_mc(s, trials, master_seed, workers);
        const double expect = heterodyne_error(s, Form::exact);
        const double sigma = std::sqrt(expect * (1.0 - expect) / double(trials));
        row("c2-heterodyne-mc-S" + std::to_string(int(s)), est.p_hat, "probability",
            Provenance::monte_carlo, "within 3 sigma of Q(sqrt(2S))",
            std::abs(est.p_hat - expect) <= 3.0 * sigma);
    }
    {
        double worst = 1.0;
        for (double s = 1.0; s <= 10.0 + 1e-9; s += 0.5) {
            const double r =
                heterodyne_error(s, Form::asymptotic) / heterodyne_error(s, Form::exact);
            worst = std::max(worst, r);
            if (r < 1.0) worst = 1e9;  // envelope must upper-bound the exact tail
        }
        row("c2-heterodyne-envelope-max-ratio", worst, "ratio", Provenance::formula,
            "asymptotic/exact in [1, 10] for S in [1, 10]", worst <= 10.0);
    }

    // --- criterion 3: binarization attack ---
    {
        std::uint64_t failures = 0;
        for (int m = 4; m <= 4096; m *= 2) {
            const Constellation c(m, 50.0);
            for (int r = 1; r < m / 2; ++r)
                for (int bit = 0; bit < 2; ++bit) {
                    const int ell = c.encode(bit, r);
                    failures += std::uint64_t(binarize(c.state_amplitude(ell)) !=
                                              (bit ^ basis_parity(r)));
                }
        }
        row("c3-noise-free-exact-failures", double(failures), "count",
            Provenance::enumeration, "0 over all off-axis states, M <= 4096", failures == 0);
    }
    for (double alpha0 : {10.0, 50.0, 200.0}) {
        const int m = 128;
        const std::uint64_t n = 10'000'000;
        const Constellation c(m, alpha0);
        const BerEstimate est = binarization_mc(m, alpha0, n, master_seed, workers);
        const double predicted = binarization_attack_prediction(c);
        const double sigma = std::sqrt(predicted * (1.0 - predicted) / double(n));
        const std::string tag = std::to_string(int(alpha0));
        row("c3-binarization-mc-alpha" + tag, est.p_hat, "probability",
            Provenance::monte_carlo, "within 3 sigma of the quadrature prediction",
            std::abs(est.p_hat - predicted) <= 3.0 * sigma);
        row("c3-binarization-vs-phase-estimate-alpha" + tag,
            est.p_hat / binarization_ber_estimate(alpha0), "ratio", Provenance::monte_carlo,
            "within factor 5 of 2/(pi alpha0)",
            within_factor(est.p_hat, binarization_ber_estimate(alpha0), 5.0));
    }
    {
        const double v = binarization_ber_estimate(63.7);
        row("c3-phase-estimate-1pct", v, "probability", Provenance::formula,
            "= 0.01 +- 1e-4 at alpha0 = 63.7", std::abs(v - 0.01) <= 1e-4);
    }

    // --- criterion 4: brute-force key-search complexity ---
    {
        const auto c1 = search_complexity(4096, 200.0, 4400, 1);
        const auto c2 = search_complexity(4096, 200.0, 4400, 2);
        row("c4-keysearch-log2-known-plaintext", c1.log2_c, "bits", Provenance::formula,
            "= 881.8 +- 0.1 and >= 480",
            std::abs(c1.log2_c - 881.8) <= 0.1 && c1.log2_c >= 480.0 && !c1.degenerate);
        row("c4-keysearch-log2-ciphertext-only-delta", c2.log2_c - c1.log2_c, "bits",
            Provenance::formula, "lambda=2 adds exactly |K|/log2(M/2) = 400",
            std::abs((c2.log2_c - c1.log2_c) - 400.0) <= 1e-9);
    }

    // --- criterion 5: key generation rates ---
    {
        const double r1 = key_rate(0.0, 0.01, 1e9, RateMethod::error_count).bits_per_second;
        row("c5-error-count-rate-1pct", r1, "bits/s", Provenance::formula,
            "= 1e7 (10 Mbps at 1 Gbps raw)", std::abs(r1 - 1e7) <= 1.0);
        const double r2 =
            key_rate(0.0, 0.5 * std::exp(-7.0), 1e9, RateMethod::error_count).bits_per_second;
        row("c5-error-count-rate-S7-heterodyne", r2, "bits/s", Provenance::formula,
            "within 3x of 1e6", within_factor(r2, 1e6, 3.0));
        const double r3 =
            key_rate(0.0, 0.5 * std::exp(-14.0), 1e9, RateMethod::error_count).bits_per_second;
        row("c5-error-count-rate-S7-phase", r3, "bits/s", Provenance::formula,
            "within 3x of 1e3", within_factor(r3, 1e3, 3.0));
        const double rck = key_rate(0.0, 0.01, 1e9, RateMethod::ck).bits_per_second;
        row("c5-ck-rate-1pct", rck / 1e6, "Mbits/s", Provenance::formula,
            "= 80.8 +- 0.5 (exceeds the conservative error-count figure)",
            std::abs(rck / 1e6 - 80.8) <= 0.5);
    }

    // --- criteria 6 and 7: Shannon limit and the random-cipher signature ---
    {
        const auto instances = random_noiseless_instances(master_seed, 100);
        double worst_excess = -1e9;
        double worst_randomisation = 0.0;
        for (const auto& ts : instances) {
            const EntropyReport er = exact_cipher_entropies(ts);
            worst_excess = std::max(worst_excess, er.h_x_given_y - er.h_k);
            worst_randomisation = std::max(worst_randomisation, er.h_y_given_xk);
        }
        row("c6-shannon-limit-max-excess", worst_excess, "bits", Provenance::enumeration,
            "H(X|Y) - H(K) <= 1e-9 over 100 noiseless instances", worst_excess <= 1e-9);

        TinyCipherSpec otp;  // M=4, klen=1, n=1, sectors=2: the one-time pad
        const EntropyReport er = exact_cipher_entropies(otp);
        row("c6-one-time-pad-h-x-given-y", er.h_x_given_y, "bits", Provenance::enumeration,
            "= H(K) = 1 exactly (perfect secrecy)",
            std::abs(er.h_x_given_y - 1.0) <= 1e-9 && std::abs(er.h_k - 1.0) <= 1e-12);

        row("c7-noiseless-max-h-y-given-xk", worst_randomisation, "bits",
            Provenance::enumeration, "exactly 0 for every noiseless instance",
            worst_randomisation == 0.0);

        TinyCipherSpec noisy;
        noisy.m = 4;
        noisy.klen = 2;
        noisy.n = 2;
        noisy.sectors = 4;
        noisy.noise = OutcomeModel::quantized_heterodyne;
        noisy.alpha0 = 1.0;
        const EntropyReport ern = exact_cipher_entropies(noisy);
        row("c7-quantized-heterodyne-h-y-given-xk", ern.h_y_given_xk, "bits",
            Provenance::enumeration, "> 0.1 bits (randomised encryption)",
            ern.h_y_given_xk > 0.1);
    }

    // --- criterion 8: keyless observer keeps entropy the keyed one lacks ---
    {
        const Constellation strong(32, 200.0);
        const double h200 = posterior_bit_entropy(strong, true);
        row("c8-posterior-entropy-key-known-alpha200", h200, "bits", Provenance::formula,
            "< 1e-6 bits per symbol", h200 < 1e-6);

        struct Gap {
            double min_gap = 1e300;
        };
        const Gap g = parallel_reduce<Gap>(
            50, 1, {},
            [&](std::uint64_t b, std::uint64_t) {
                const double s = double(b + 1);
                const Constellation c(32, std::sqrt(s));
                Gap out;
                out.min_gap =
                    posterior_bit_entropy(c, false) - posterior_bit_entropy(c, true);
                return out;
            },
            [](Gap acc, Gap part) {
                acc.min_gap = std::min(acc.min_gap, part.min_gap);
                return acc;
            },
            workers);
        row("c8-advantage-min-gap-S1-50", g.min_gap, "bits", Provenance::formula,
            "key-unknown minus key-known entropy > 0 for all S in [1, 50], M = 32",
            g.min_gap > 0.0);
    }

    // --- criterion 9: seed recovery from binarized known plaintext ---
    {
        const LfsrSpec spec = LfsrSpec::primitive_default(16);
        const Constellation c4(4, 200.0);
        int clean_rank1 = 0, noisy_rank1 = 0;
        for (std::uint64_t t = 0; t < 100; ++t) {
            if (seed_recovery_trial(spec, c4, 64, 0.0, master_seed, t, workers) == 1)
                ++clean_rank1;
            if (seed_recovery_trial(spec, c4, 64, 0.3, master_seed, t, workers) == 1)
                ++noisy_rank1;
        }
        row("c9-seed-recovery-noise-free-rank1", double(clean_rank1), "count",
            Provenance::monte_carlo, "100 of 100 trials rank the true seed first",
            clean_rank1 == 100);
        row("c9-seed-recovery-30pct-noise-rank1", double(noisy_rank1), "count",
            Provenance::monte_carlo, "strictly below the noise-free rate",
            noisy_rank1 < clean_rank1);
    }

    // --- criterion 11: Toeplitz privacy amplification ---
    {
        const std::uint8_t in[3] = {1, 0, 1};
        const std::uint8_t seed[4] = {1, 1, 0, 1};
        const auto out = privacy_amplify(std::span(in, 3), 2, std::span(seed, 4));
        const bool match = out.size() == 2 && out[0] == 0 && out[1] == 1;
        row("c11-toeplitz-worked-example", match ? 1.0 : 0.0, "flag", Provenance::enumeration,
            "seed 1101 on input 101 gives 01", match);

        RngStream rng(master_seed, sub::pa_hash);
        const std::size_t in_len = 96, out_len = 32;
        std::vector<std::uint8_t> hs(in_len + out_len - 1);
        for (auto& b : hs) b = std::uint8_t(rng.uniform() < 0.5);
        bool linear = true;
        for (int trial = 0; trial < 200 && linear; ++trial) {
            std::vector<std::uint8_t> a(in_len), b(in_len), ab(in_len);
            for (std::size_t i = 0; i < in_len; ++i) {
                a[i] = std::uint8_t(rng.uniform() < 0.5);
                b[i] = std::uint8_t(rng.uniform() < 0.5);
                ab[i] = a[i] ^ b[i];
            }
            const auto ta = privacy_amplify(a, out_len, hs);
            const auto tb = privacy_amplify(b, out_len, hs);
            const auto tab = privacy_amplify(ab, out_len, hs);
            for (std::size_t i = 0; i < out_len; ++i)
                if (tab[i] != (ta[i] ^ tb[i])) linear = false;
        }
        row("c11-toeplitz-linearity", linear ? 1.0 : 0.0, "flag", Provenance::monte_carlo,
            "T(a xor b) = T(a) xor T(b) over 200 random pairs", linear);

        const std::size_t trials = 100'000;
        const std::size_t in2 = 64, out2 = 16;
        std::vector<std::uint8_t> hs2(in2 + out2 - 1);
        for (auto& v : hs2) v = std::uint8_t(rng.uniform() < 0.5);
        std::vector<std::uint64_t> ones(out2, 0);
        std::vector<std::uint8_t> buf(in2);
        for (std::size_t tr = 0; tr < trials; ++tr) {
            const std::uint64_t w = rng.words().first;
            for (std::size_t i = 0; i < in2; ++i) buf[i] = std::uint8_t((w >> i) & 1);
            const auto o = privacy_amplify(buf, out2, hs2);
            for (std::size_t i = 0; i < out2; ++i) ones[i] += o[i];
        }
        double worst_dev = 0.0;
        for (auto c : ones)
            worst_dev = std::max(worst_dev, std::abs(double(c) / double(trials) - 0.5));
        const double five_sigma = 5.0 * 0.5 / std::sqrt(double(trials));
        row("c11-toeplitz-output-bias", worst_dev, "deviation", Provenance::monte_carlo,
            "every output bit unbiased within 5 sigma over 1e5 inputs",
            worst_dev <= five_sigma);
    }

    info("meta-determinism-note", 0.0, "", Provenance::formula);
    rep.rows.back().target =
        "byte-identity across worker counts is checked externally by rerunning this command";

    return rep;
}

}  // namespace y00
