#include "y00/attacks.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "y00/errors.hpp"
#include "y00/parallel.hpp"

namespace y00 {

BerEstimate BerEstimate::from_counts(std::uint64_t errors, std::uint64_t trials) {
    if (trials == 0) throw std::domain_error("BER estimate needs at least one trial");
    if (errors > trials) throw std::domain_error("error count exceeds trial count");
    BerEstimate e;
    e.errors = errors;
    e.trials = trials;
    e.p_hat = double(errors) / double(trials);
    e.ci95 = 1.959963984540054 * std::sqrt(e.p_hat * (1.0 - e.p_hat) / double(trials));
    return e;
}

int basis_parity(int basis) {
    if (basis < 0) throw std::domain_error("negative basis index");
    return basis & 1;
}

BerEstimate binarization_attack(const Transcript& t) {
    if (t.size() == 0) throw std::domain_error("binarization attack on empty transcript");
    std::uint64_t errors = 0;
    for (std::size_t i = 0; i < t.size(); ++i) {
        const int predicted = t.x[i] ^ basis_parity(t.basis[i]);
        errors += std::uint64_t(binarize(t.y_eve[i]) != predicted);
    }
    return BerEstimate::from_counts(errors, t.size());
}

double binarization_ber_estimate(double alpha0) {
    if (!(alpha0 > 0.0) || !std::isfinite(alpha0))
        throw std::domain_error("alpha0 must be finite and positive");
    return 2.0 / (std::numbers::pi * alpha0);
}

BerEstimate heterodyne_keyed_decode(const Transcript& t, const Constellation& c,
                                    bool key_known) {
    if (t.size() == 0) throw std::domain_error("keyed decode on empty transcript");
    const int m = c.M();
    std::uint64_t errors = 0;
    for (std::size_t i = 0; i < t.size(); ++i) {
        const Complex y = t.y_eve[i];
        if (key_known) {
            // two antipodal candidates: the sign of the projection decides
            const Complex ref = c.state_amplitude(c.encode(0, t.basis[i]));
            const double proj = y.real() * ref.real() + y.imag() * ref.imag();
            const int bit = proj >= 0.0 ? 0 : 1;
            errors += std::uint64_t(bit != t.x[i]);
        } else {
            // all states share the radius, so nearest state == nearest angle
            double ang = std::atan2(y.imag(), y.real());
            if (ang < 0) ang += 2.0 * std::numbers::pi;
            const int ell =
                int(std::lround(ang * double(m) / (2.0 * std::numbers::pi))) % m;
            errors += std::uint64_t(ell != t.sent[i]);
        }
    }
    return BerEstimate::from_counts(errors, t.size());
}

namespace {

// Agreement score of one seed: run the keystream, predict the binarized bit,
// count matches against l.
std::uint32_t score_seed(std::uint64_t seed_value, std::span<const std::uint8_t> l,
                         std::span<const std::uint8_t> x, const LfsrSpec& spec,
                         const Constellation& c) {
    LfsrStream stream(spec, SeedKey::from_uint(seed_value, spec.degree));
    std::uint32_t agree = 0;
    for (std::size_t i = 0; i < l.size(); ++i) {
        const int r = next_basis(stream, c);
        const int predicted = x[i] ^ basis_parity(r);
        agree += std::uint32_t(predicted == l[i]);
    }
    return agree;
}

void check_bruteforce_args(std::span<const std::uint8_t> l, std::span<const std::uint8_t> x,
                           const LfsrSpec& spec) {
    spec.validate();
    if (spec.degree > 24)
        throw ResourceLimitError("brute-force key search capped at 24-bit seeds, got " +
                                 std::to_string(spec.degree));
    if (l.size() != x.size())
        throw std::invalid_argument("binarized sequence and plaintext lengths differ");
    if (l.empty()) throw std::domain_error("empty attack transcript");
}

}  // namespace

std::vector<SeedScore> seed_recovery_bruteforce(std::span<const std::uint8_t> l,
                                                std::span<const std::uint8_t> x,
                                                const LfsrSpec& spec, const Constellation& c,
                                                int workers) {
    check_bruteforce_args(l, x, spec);
    const std::uint64_t nseeds = (std::uint64_t(1) << spec.degree) - 1;
    std::vector<SeedScore> scores(nseeds);
    parallel_for(
        nseeds, 4096,
        [&](std::uint64_t b, std::uint64_t e) {
            for (std::uint64_t s = b; s < e; ++s)
                scores[s] = {std::uint32_t(s + 1), score_seed(s + 1, l, x, spec, c)};
        },
        workers);
    std::sort(scores.begin(), scores.end(), [](const SeedScore& a, const SeedScore& b) {
        if (a.agreement != b.agreement) return a.agreement > b.agreement;
        return a.seed < b.seed;
    });
    return scores;
}

std::uint64_t seed_recovery_rank(std::span<const std::uint8_t> l,
                                 std::span<const std::uint8_t> x, const LfsrSpec& spec,
                                 const Constellation& c, std::uint64_t true_seed,
                                 int workers) {
    check_bruteforce_args(l, x, spec);
    const std::uint64_t nseeds = (std::uint64_t(1) << spec.degree) - 1;
    if (true_seed < 1 || true_seed > nseeds) throw std::domain_error("true seed out of range");
    const std::uint32_t target = score_seed(true_seed, l, x, spec, c);
    // rank = 1 + #{seeds ranked strictly ahead of the true one}
    const std::uint64_t ahead = parallel_reduce<std::uint64_t>(
        nseeds, 4096, 0,
        [&](std::uint64_t b, std::uint64_t e) {
            std::uint64_t count = 0;
            for (std::uint64_t s = b; s < e; ++s) {
                const std::uint64_t seed = s + 1;
                if (seed == true_seed) continue;
                const std::uint32_t sc = score_seed(seed, l, x, spec, c);
                count += std::uint64_t(sc > target || (sc == target && seed < true_seed));
            }
            return count;
        },
        [](std::uint64_t a, std::uint64_t b) { return a + b; }, workers);
    return ahead + 1;
}

SearchComplexity search_complexity(int m, double alpha0, int klen, int lambda) {
    if (m < 4 || (m & (m - 1)) != 0) throw std::domain_error("M must be a power of two >= 4");
    if (!(alpha0 > 0.0)) throw std::domain_error("alpha0 must be positive");
    if (lambda != 1 && lambda != 2) throw std::domain_error("lambda must be 1 or 2");
    const double bases_log2 = std::log2(double(m) / 2.0);
    if (double(klen) < bases_log2)
        throw std::domain_error("seed key shorter than log2(M/2) bits");
    const double base = double(lambda) * double(m) / (std::sqrt(2.0) * std::numbers::pi * alpha0);
    SearchComplexity out;
    out.log2_c = double(klen) / bases_log2 * std::log2(base);
    out.degenerate = !(base > 1.0);
    return out;
}

}  // namespace y00
