#include "y00/experiments.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "y00/measurement.hpp"
#include "y00/parallel.hpp"

namespace y00 {

namespace {
constexpr std::uint64_t kChunk = 1 << 16;
}

BerEstimate heterodyne_ber_mc(double s, std::uint64_t trials, std::uint64_t master_seed,
                              int workers) {
    if (trials == 0) throw std::domain_error("trial count must be positive");
    const double a = std::sqrt(s);
    const RngStream data(master_seed, sub::data);
    const RngStream noise(master_seed, sub::eve_noise);
    const std::uint64_t errors = parallel_reduce<std::uint64_t>(
        trials, kChunk, 0,
        [&](std::uint64_t b, std::uint64_t e) {
            std::uint64_t cnt = 0;
            for (std::uint64_t i = b; i < e; ++i) {
                const int bit = int(data.words_at(i).first >> 63);
                const double amp = bit ? -a : a;
                const double y = amp + noise.quadrature_noise_at(i).real();
                const int decided = y < 0.0 ? 1 : 0;
                cnt += std::uint64_t(decided != bit);
            }
            return cnt;
        },
        [](std::uint64_t x, std::uint64_t y) { return x + y; }, workers);
    return BerEstimate::from_counts(errors, trials);
}

BerEstimate binarization_mc(int m, double alpha0, std::uint64_t n, std::uint64_t master_seed,
                            int workers) {
    const Constellation c(m, alpha0);
    if (n == 0) throw std::domain_error("symbol count must be positive");
    const int kbits = c.bits_per_basis();
    const RngStream src(master_seed, sub::basis);
    const RngStream noise(master_seed, sub::eve_noise);

    std::vector<Complex> amps(static_cast<std::size_t>(m));
    for (int ell = 0; ell < m; ++ell) amps[std::size_t(ell)] = c.state_amplitude(ell);

    const std::uint64_t errors = parallel_reduce<std::uint64_t>(
        n, kChunk, 0,
        [&](std::uint64_t b, std::uint64_t e) {
            std::uint64_t cnt = 0;
            for (std::uint64_t i = b; i < e; ++i) {
                const std::uint64_t w = src.words_at(i).first;
                const int basis = int(w >> (64 - kbits));
                const int bit = int((w >> (63 - kbits)) & 1);
                const Complex y =
                    amps[std::size_t(c.encode(bit, basis))] + noise.quadrature_noise_at(i);
                cnt += std::uint64_t(binarize(y) != (bit ^ basis_parity(basis)));
            }
            return cnt;
        },
        [](std::uint64_t x, std::uint64_t y) { return x + y; }, workers);
    return BerEstimate::from_counts(errors, n);
}

double binarization_attack_prediction(const Constellation& c) {
    const int half = c.num_bases();
    double total = 0.5;  // on-axis basis: the half-plane bit is a coin flip
    for (int r = 1; r < half; ++r) {
        const double s = std::sin(2.0 * std::numbers::pi * double(r) / double(c.M()));
        total += q_function(std::sqrt(2.0) * c.alpha0() * std::abs(s));
    }
    return total / double(half);
}

Transcript make_transcript(const ExperimentConfig& cfg) {
    cfg.validate();
    const Constellation c(cfg.m, cfg.alpha0);
    const double s = c.mean_photon_number();
    const std::uint64_t n = cfg.n;

    Transcript t;
    t.x.resize(n);
    t.basis.resize(n);
    t.sent.resize(n);
    t.y_eve.resize(n);
    t.b_bob.resize(n);

    // the running key is inherently serial; everything after it is indexed
    {
        LfsrStream stream(cfg.lfsr_spec(), cfg.lfsr_seed());
        for (std::uint64_t i = 0; i < n; ++i) t.basis[i] = next_basis(stream, c);
    }

    const RngStream data(cfg.master_seed, sub::data);
    const RngStream eve(cfg.master_seed, sub::eve_noise);
    const RngStream bob(cfg.master_seed, sub::bob);
    parallel_for(
        n, kChunk,
        [&](std::uint64_t b, std::uint64_t e) {
            for (std::uint64_t i = b; i < e; ++i) {
                const int bit = int(data.words_at(i).first >> 63);
                t.x[i] = std::uint8_t(bit);
                t.sent[i] = c.encode(bit, t.basis[i]);
                t.y_eve[i] = c.state_amplitude(t.sent[i]) + eve.quadrature_noise_at(i);
                t.b_bob[i] = std::uint8_t(bob_decide_at(bit, s, bob, i));
            }
        },
        cfg.workers);
    return t;
}

std::uint64_t seed_recovery_trial(const LfsrSpec& spec, const Constellation& c,
                                  std::uint64_t n, double noise_p, std::uint64_t master_seed,
                                  std::uint64_t trial, int workers) {
    if (!(noise_p >= 0.0 && noise_p < 1.0))
        throw std::domain_error("noise probability must lie in [0, 1)");
    RngStream rng(master_seed, sub::trial_base + trial);
    const std::uint64_t nseeds = (std::uint64_t(1) << spec.degree) - 1;
    // rejection-free: map a uniform word onto [1, 2^degree - 1]
    const std::uint64_t true_seed = 1 + rng.words().first % nseeds;

    std::vector<std::uint8_t> x(n), l(n);
    {
        LfsrStream stream(spec, SeedKey::from_uint(true_seed, spec.degree));
        for (std::uint64_t i = 0; i < n; ++i) {
            const int r = next_basis(stream, c);
            x[i] = std::uint8_t(rng.uniform() < 0.5);
            int bit = x[i] ^ basis_parity(r);
            if (noise_p > 0.0 && rng.uniform() < noise_p) bit ^= 1;
            l[i] = std::uint8_t(bit);
        }
    }
    return seed_recovery_rank(l, x, spec, c, true_seed, workers);
}

Report run_keygen(const KeygenParams& p) {
    Report rep;
    rep.rows.reserve(16);
    auto row = [&](const std::string& name, double value, const std::string& units,
                   Provenance prov, const std::string& target = "",
                   std::optional<bool> pass = std::nullopt) {
        rep.rows.push_back({name, value, units, prov, target, pass});
    };

    double p_bob, p_eve;
    if (p.analytic) {
        if (!(p.p_eve >= 0.0 && p.p_eve <= 1.0) || !(p.p_bob >= 0.0 && p.p_bob <= 1.0))
            throw std::invalid_argument("analytic keygen needs --pe and --pb in [0, 1]");
        p_bob = p.p_bob;
        p_eve = p.p_eve;
        row("p-bob-injected", p_bob, "probability", Provenance::formula);
        row("p-eve-injected", p_eve, "probability", Provenance::formula);
    } else {
        if (!(p.s >= 0.0)) throw std::invalid_argument("keygen needs S >= 0");
        // rate accounting uses the closed-form receiver error rates; the
        // sampled counts below are reported for comparison
        p_bob = helstrom_error(p.s, Form::exact);
        p_eve = heterodyne_error(p.s, Form::asymptotic);
        row("p-bob-helstrom", p_bob, "probability", Provenance::formula);
        row("p-eve-heterodyne-envelope", p_eve, "probability", Provenance::formula);

        // advantage in the information-theoretic sense: the keyed observer's
        // per-symbol posterior entropy must be strictly below the keyless one
        const Constellation adv(p.m, std::sqrt(p.s));
        const double h_known = posterior_bit_entropy(adv, true);
        const double h_unknown = posterior_bit_entropy(adv, false);
        row("posterior-entropy-key-known", h_known, "bits", Provenance::formula);
        row("posterior-entropy-key-unknown", h_unknown, "bits", Provenance::formula);
        if (!(h_unknown > h_known + 1e-9)) {
            row("advantage-holds", 0.0, "flag", Provenance::formula,
                "key-unknown entropy must exceed key-known", false);
            return rep;  // refusal: no advantage to distil
        }
        row("advantage-holds", 1.0, "flag", Provenance::formula,
            "key-unknown entropy must exceed key-known", true);
    }

    const KeyRateResult kr = key_rate(p_bob, p_eve, p.raw_rate, p.method);
    if (!kr.advantage_ok) {
        row("advantage-holds", 0.0, "flag", Provenance::formula, "p_bob <= p_eve required",
            false);
        return rep;
    }

    row("raw-rate", p.raw_rate, "bits/s", Provenance::formula);
    row("secret-rate", kr.bits_per_second, "bits/s", Provenance::formula);

    if (!p.analytic) {
        const std::uint64_t n = p.raw_bits;
        if (n == 0) throw std::invalid_argument("keygen needs raw_bits > 0");
        const double a = std::sqrt(p.s);
        const RngStream data(p.master_seed, sub::data);
        const RngStream eve(p.master_seed, sub::eve_noise);
        const RngStream bob(p.master_seed, sub::bob);

        struct Counts {
            std::uint64_t bob = 0, eve = 0;
        };
        const Counts counts = parallel_reduce<Counts>(
            n, kChunk, {},
            [&](std::uint64_t b, std::uint64_t e) {
                Counts cnt;
                for (std::uint64_t i = b; i < e; ++i) {
                    const int bit = int(data.words_at(i).first >> 63);
                    cnt.bob += std::uint64_t(bob_decide_at(bit, p.s, bob, i) != bit);
                    const double y = (bit ? -a : a) + eve.quadrature_noise_at(i).real();
                    cnt.eve += std::uint64_t((y < 0.0 ? 1 : 0) != bit);
                }
                return cnt;
            },
            [](Counts acc, Counts part) {
                return Counts{acc.bob + part.bob, acc.eve + part.eve};
            },
            p.workers);

        row("raw-bits", double(n), "bits", Provenance::monte_carlo);
        row("bob-errors-observed", double(counts.bob), "count", Provenance::monte_carlo);
        row("eve-errors-observed", double(counts.eve), "count", Provenance::monte_carlo);

        const double secret_frac = kr.bits_per_second / p.raw_rate;
        const std::uint64_t out_len =
            std::min<std::uint64_t>(n, std::uint64_t(std::llround(secret_frac * double(n))));
        row("secret-bits", double(out_len), "bits", Provenance::formula);

        if (out_len > 0) {
            // compress the (ideally reconciled) raw bits with a seeded
            // Toeplitz hash; only the output length matters for the report
            std::vector<std::uint8_t> raw(n);
            parallel_for(
                n, kChunk,
                [&](std::uint64_t b, std::uint64_t e) {
                    for (std::uint64_t i = b; i < e; ++i)
                        raw[i] = std::uint8_t(data.words_at(i).first >> 63);
                },
                p.workers);
            const std::size_t seed_bits = n + out_len - 1;
            std::vector<std::uint8_t> hash_seed(seed_bits);
            const RngStream hs(p.master_seed, sub::pa_hash);
            parallel_for(
                seed_bits, kChunk,
                [&](std::uint64_t b, std::uint64_t e) {
                    for (std::uint64_t i = b; i < e; ++i)
                        hash_seed[i] = std::uint8_t(hs.words_at(i / 64).first >> (i % 64)) & 1;
                },
                p.workers);
            const auto key = privacy_amplify(raw, out_len, hash_seed);
            row("privacy-amplified-bits", double(key.size()), "bits",
                Provenance::enumeration);
        }
    }
    return rep;
}

}  // namespace y00
