#include "y00/infotheory.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "y00/errors.hpp"
#include "y00/quadrature.hpp"

namespace y00 {

namespace {

constexpr double kLn2 = 0.6931471805599453;

// entropy accumulator term; probabilities below 1e-300 contribute nothing
inline double xlog2x(double p) {
    if (p < 1e-300) return 0.0;
    return p * std::log2(p);
}

double entropy_bits(std::span<const double> dist) {
    double h = 0.0;
    for (double p : dist) h -= xlog2x(p);
    return h;
}

}  // namespace

double binary_entropy(double p) {
    if (!(p >= 0.0 && p <= 1.0)) throw std::domain_error("probability outside [0, 1]");
    return -xlog2x(p) - xlog2x(1.0 - p);
}

// ---------------------------------------------------------------------------
// sector probabilities
// ---------------------------------------------------------------------------

// Radial part of the outcome density integrated out analytically: the
// heterodyne outcome angle psi (relative to the state direction) has density
//   f(psi) = (1/pi) * [ exp(-a^2)/2
//                       + (sqrt(pi)/2) c exp(-a^2 sin^2 psi) erfc(-c)/ ... ]
// with c = a cos psi; written with erfc so no term cancels at large a.
namespace {

double angle_density(double a, double psi) {
    const double c = a * std::cos(psi);
    const double s = a * std::sin(psi);
    const double t1 = 0.5 * std::exp(-a * a);
    const double t2 = 0.5 * std::sqrt(std::numbers::pi) * c * std::exp(-s * s) * std::erfc(-c);
    return (t1 + t2) / std::numbers::pi;
}

}  // namespace

std::vector<double> sector_probabilities(const Constellation& c, int sectors, int ell) {
    if (sectors < 2 || sectors > 4096) throw std::domain_error("sector count outside [2, 4096]");
    const double a = c.alpha0();
    const double theta = c.state_angle(ell);
    const double width = 2.0 * std::numbers::pi / double(sectors);

    std::vector<double> out(static_cast<std::size_t>(sectors));
    double sum = 0.0;
    for (int s = 0; s < sectors; ++s) {
        const double lo = double(s) * width - theta;
        const double hi = lo + width;
        // pre-split so narrow peaks (width ~ 1/a) cannot hide from the
        // adaptive refinement's first coarse samples
        const int panels = std::max(16, std::min(512, int(std::ceil((hi - lo) * (a + 1.0)))));
        double p = 0.0;
        for (int k = 0; k < panels; ++k) {
            const double pa = lo + (hi - lo) * double(k) / double(panels);
            const double pb = lo + (hi - lo) * double(k + 1) / double(panels);
            p += adaptive_simpson([&](double psi) { return angle_density(a, psi); }, pa, pb,
                                  1e-9 / double(panels));
        }
        out[std::size_t(s)] = p;
        sum += p;
    }
    if (std::abs(sum - 1.0) > 1e-6)
        throw QuadratureError("sector probabilities sum to " + std::to_string(sum));
    return out;
}

// ---------------------------------------------------------------------------
// posterior bit entropy under heterodyne observation
// ---------------------------------------------------------------------------

namespace {

// log-domain mixture posterior: weights exp(-|y - amp_j|^2) over a candidate set
double posterior_from_logweights(std::span<const double> logw, std::span<const int> bits) {
    double mx = logw[0];
    for (double v : logw) mx = std::max(mx, v);
    double num = 0.0, den = 0.0;
    for (std::size_t j = 0; j < logw.size(); ++j) {
        const double w = std::exp(logw[j] - mx);
        den += w;
        if (bits[j]) num += w;
    }
    return num / den;
}

}  // namespace

double bit_posterior_unknown_key(const Constellation& c, const Complex& y) {
    const int m = c.M();
    std::vector<double> logw(static_cast<std::size_t>(m));
    std::vector<int> bits(static_cast<std::size_t>(m));
    for (int ell = 0; ell < m; ++ell) {
        const Complex d = y - c.state_amplitude(ell);
        logw[std::size_t(ell)] = -std::norm(d);
        bits[std::size_t(ell)] = c.decode(ell).bit;
    }
    return posterior_from_logweights(logw, bits);
}

double bit_posterior_known_basis(const Constellation& c, int basis, const Complex& y) {
    const Complex a0 = c.state_amplitude(c.encode(0, basis));
    const Complex a1 = c.state_amplitude(c.encode(1, basis));
    const double lw[2] = {-std::norm(y - a0), -std::norm(y - a1)};
    const int bb[2] = {0, 1};
    return posterior_from_logweights(std::span<const double>(lw, 2),
                                     std::span<const int>(bb, 2));
}

namespace {

// E[h(posterior)] with the outcome drawn from the known-basis two-state
// mixture. Rotation-invariant, so basis 0 stands for all of them; the
// posterior depends only on the in-phase coordinate, leaving a 1D rule.
double known_key_entropy(double a, int order) {
    const auto& gh = gauss_hermite(order);
    const double inv_sqrt_pi = 1.0 / std::sqrt(std::numbers::pi);
    double acc = 0.0;
    for (std::size_t i = 0; i < gh.x.size(); ++i) {
        const double t = a + gh.x[i];  // outcome in-phase component, sent bit 0
        // log-likelihood gap between the two antipodal candidates is 4*a*t
        const double gap = 4.0 * a * t;
        const double p1 = gap > 0 ? std::exp(-gap) / (1.0 + std::exp(-gap))
                                  : 1.0 / (1.0 + std::exp(gap));
        acc += gh.w[i] * binary_entropy(p1);
    }
    return acc * inv_sqrt_pi;
}

// E[h(posterior)] with the outcome drawn from the full M-state mixture:
// one Gauss-Hermite patch per state, averaged with uniform state weights.
double unknown_key_entropy(const Constellation& c, int order) {
    const auto& gh = gauss_hermite(order);
    const int m = c.M();
    std::vector<Complex> amps(static_cast<std::size_t>(m));
    std::vector<int> bits(static_cast<std::size_t>(m));
    for (int ell = 0; ell < m; ++ell) {
        amps[std::size_t(ell)] = c.state_amplitude(ell);
        bits[std::size_t(ell)] = c.decode(ell).bit;
    }
    const double inv_pi = 1.0 / std::numbers::pi;
    std::vector<double> logw(static_cast<std::size_t>(m));
    double total = 0.0;
    for (int ell = 0; ell < m; ++ell) {
        const Complex center = amps[std::size_t(ell)];
        double patch = 0.0;
        for (std::size_t iu = 0; iu < gh.x.size(); ++iu) {
            for (std::size_t iv = 0; iv < gh.x.size(); ++iv) {
                const Complex y(center.real() + gh.x[iu], center.imag() + gh.x[iv]);
                for (int j = 0; j < m; ++j)
                    logw[std::size_t(j)] = -std::norm(y - amps[std::size_t(j)]);
                const double p1 = posterior_from_logweights(logw, bits);
                patch += gh.w[iu] * gh.w[iv] * binary_entropy(p1);
            }
        }
        total += patch * inv_pi;
    }
    return total / double(m);
}

}  // namespace

double posterior_bit_entropy(const Constellation& c, bool key_known) {
    const double a = c.alpha0();
    if (key_known) {
        const double h1 = known_key_entropy(a, 96);
        const double h2 = known_key_entropy(a, 128);
        if (std::abs(h1 - h2) > 1e-6)
            throw QuadratureError("known-key posterior entropy not converged: " +
                                  std::to_string(h1) + " vs " + std::to_string(h2));
        return h2;
    }
    const double h1 = unknown_key_entropy(c, 96);
    const double h2 = unknown_key_entropy(c, 128);
    if (std::abs(h1 - h2) > 1e-6)
        throw QuadratureError("unknown-key posterior entropy not converged: " +
                              std::to_string(h1) + " vs " + std::to_string(h2));
    return h2;
}

// ---------------------------------------------------------------------------
// exact tiny-cipher enumeration
// ---------------------------------------------------------------------------

void TinyCipherSpec::validate() const {
    if (m != 4 && m != 8) throw std::domain_error("tiny cipher M must be 4 or 8");
    if (klen < 1 || klen > 12) throw std::domain_error("tiny cipher klen outside [1, 12]");
    if (n < 1 || n > 4) throw std::domain_error("tiny cipher n outside [1, 4]");
    if (sectors < 2 || sectors > 8) throw std::domain_error("tiny cipher sectors outside [2, 8]");
    if (noise == OutcomeModel::quantized_heterodyne && !(alpha0 > 0.0))
        throw std::domain_error("quantized-heterodyne model needs alpha0 > 0");
    if (enc == EncBox::lfsr) {
        lfsr.validate();
        if (lfsr.degree != klen)
            throw std::domain_error("tiny cipher LFSR degree must equal klen");
    }
    if (!prior.empty()) {
        if (prior.size() != (std::size_t(1) << n))
            throw std::domain_error("prior must have 2^n entries");
        double sum = 0.0;
        for (double p : prior) {
            if (!(p >= 0.0)) throw std::domain_error("prior entries must be nonnegative");
            sum += p;
        }
        if (std::abs(sum - 1.0) > 1e-9) throw std::domain_error("prior must sum to 1");
    }
    if (budget() > 1e8)
        throw ResourceLimitError("tiny cipher enumeration budget exceeded: " +
                                 std::to_string(budget()) + " > 1e8 joint states");
}

double TinyCipherSpec::budget() const {
    return std::pow(2.0, double(klen)) * std::pow(2.0, double(n)) *
           std::pow(double(sectors), double(n));
}

namespace {

// running key bits for one seed value under the chosen ENC box
std::vector<int> tiny_bases(const TinyCipherSpec& spec, const Constellation& c,
                            std::uint64_t seed_value) {
    const int bits_needed = c.bits_per_basis() * spec.n;
    std::vector<int> stream_bits(static_cast<std::size_t>(bits_needed));
    if (spec.enc == EncBox::cyclic_seed) {
        for (int j = 0; j < bits_needed; ++j)
            stream_bits[std::size_t(j)] =
                int((seed_value >> (spec.klen - 1 - (j % spec.klen))) & 1);
    } else {
        if (seed_value == 0) {
            std::fill(stream_bits.begin(), stream_bits.end(), 0);
        } else {
            LfsrStream s(spec.lfsr, SeedKey::from_uint(seed_value, spec.klen));
            for (int j = 0; j < bits_needed; ++j) stream_bits[std::size_t(j)] = s.next_bit();
        }
    }
    std::vector<int> bases(static_cast<std::size_t>(spec.n));
    int pos = 0;
    for (int i = 0; i < spec.n; ++i) {
        int r = 0;
        for (int b = 0; b < c.bits_per_basis(); ++b) r = (r << 1) | stream_bits[std::size_t(pos++)];
        bases[std::size_t(i)] = r;
    }
    return bases;
}

// noiseless observation: the sector holding the state's own angle,
// computed exactly in integers since both grids are uniform
inline int state_sector(int ell, int m, int sectors) { return (ell * sectors) / m; }

}  // namespace

EntropyReport exact_cipher_entropies(const TinyCipherSpec& spec) {
    spec.validate();
    const Constellation c(spec.m, spec.alpha0);
    const std::uint64_t nk = std::uint64_t(1) << spec.klen;
    const std::uint64_t nx = std::uint64_t(1) << spec.n;
    std::uint64_t ny = 1;
    for (int i = 0; i < spec.n; ++i) ny *= std::uint64_t(spec.sectors);

    const bool noisy = spec.noise == OutcomeModel::quantized_heterodyne;

    // per-state sector channel (cached once) and its entropy
    std::vector<std::vector<double>> channel(static_cast<std::size_t>(spec.m));
    std::vector<double> channel_entropy(std::size_t(spec.m), 0.0);
    if (noisy) {
        for (int ell = 0; ell < spec.m; ++ell) {
            channel[std::size_t(ell)] = sector_probabilities(c, spec.sectors, ell);
            channel_entropy[std::size_t(ell)] = entropy_bits(channel[std::size_t(ell)]);
        }
    }

    const double pk = 1.0 / double(nk);
    auto px = [&](std::uint64_t xw) {
        return spec.prior.empty() ? 1.0 / double(nx) : spec.prior[xw];
    };

    std::vector<double> p_y(ny, 0.0);
    std::vector<double> p_xy(nx * ny, 0.0);  // indexed x * ny + y
    std::vector<double> q_k(ny);
    double h_y_given_k = 0.0;
    double h_y_given_xk = 0.0;

    std::vector<int> state_seq(static_cast<std::size_t>(spec.n));
    for (std::uint64_t k = 0; k < nk; ++k) {
        std::fill(q_k.begin(), q_k.end(), 0.0);
        const auto bases = tiny_bases(spec, c, k);
        for (std::uint64_t xw = 0; xw < nx; ++xw) {
            const double pxw = px(xw);
            if (pxw == 0.0) continue;
            for (int i = 0; i < spec.n; ++i) {
                const int bit = int((xw >> (spec.n - 1 - i)) & 1);
                state_seq[std::size_t(i)] = c.encode(bit, bases[std::size_t(i)]);
            }
            if (!noisy) {
                std::uint64_t y = 0;
                for (int i = 0; i < spec.n; ++i)
                    y = y * std::uint64_t(spec.sectors) +
                        std::uint64_t(state_sector(state_seq[std::size_t(i)], spec.m, spec.sectors));
                q_k[y] += pxw;
                p_xy[xw * ny + y] += pk * pxw;
            } else {
                // outcome symbols are independent given (k, x); walk the
                // product distribution over sector words
                for (std::uint64_t y = 0; y < ny; ++y) {
                    double pyx = 1.0;
                    std::uint64_t rem = y;
                    for (int i = spec.n - 1; i >= 0; --i) {
                        const int sec = int(rem % std::uint64_t(spec.sectors));
                        rem /= std::uint64_t(spec.sectors);
                        pyx *= channel[std::size_t(state_seq[std::size_t(i)])][std::size_t(sec)];
                    }
                    q_k[y] += pxw * pyx;
                    p_xy[xw * ny + y] += pk * pxw * pyx;
                }
                double hx = 0.0;
                for (int i = 0; i < spec.n; ++i)
                    hx += channel_entropy[std::size_t(state_seq[std::size_t(i)])];
                h_y_given_xk += pk * pxw * hx;
            }
        }
        h_y_given_k += pk * entropy_bits(q_k);
        for (std::uint64_t y = 0; y < ny; ++y) p_y[y] += pk * q_k[y];
    }

    const double h_y = entropy_bits(p_y);
    const double h_xy = entropy_bits(p_xy);

    EntropyReport rep;
    rep.h_k = double(spec.klen);
    rep.h_x_given_y = h_xy - h_y;
    rep.h_k_given_y = rep.h_k + h_y_given_k - h_y;
    rep.h_y_given_xk = h_y_given_xk;
    // exact enumeration can leave tiny negative residues from cancellation
    rep.h_x_given_y = std::max(0.0, rep.h_x_given_y);
    rep.h_k_given_y = std::max(0.0, rep.h_k_given_y);
    return rep;
}

// ---------------------------------------------------------------------------
// key rate and privacy amplification
// ---------------------------------------------------------------------------

KeyRateResult key_rate(double p_bob, double p_eve, double raw_rate, RateMethod method) {
    if (!(p_bob >= 0.0 && p_bob <= 1.0) || !(p_eve >= 0.0 && p_eve <= 1.0))
        throw std::domain_error("error probabilities must lie in [0, 1]");
    if (!(raw_rate > 0.0)) throw std::domain_error("raw rate must be positive");
    KeyRateResult out;
    out.advantage_ok = p_bob <= p_eve;
    if (!out.advantage_ok) return out;  // rate 0, flagged
    if (method == RateMethod::error_count) {
        out.bits_per_second = p_eve * raw_rate;
    } else {
        out.bits_per_second =
            std::max(0.0, binary_entropy(p_eve) - binary_entropy(p_bob)) * raw_rate;
    }
    return out;
}

namespace {

// pack a 0/1 byte sequence into 64-bit words, bit i of the sequence at
// word i/64, position i%64
std::vector<std::uint64_t> pack_bits(std::span<const std::uint8_t> bits) {
    std::vector<std::uint64_t> words((bits.size() + 63) / 64, 0);
    for (std::size_t i = 0; i < bits.size(); ++i)
        if (bits[i]) words[i / 64] |= std::uint64_t(1) << (i % 64);
    return words;
}

// word w of the seed window starting at bit offset `start`
inline std::uint64_t window_word(const std::vector<std::uint64_t>& seed, std::size_t start,
                                 std::size_t w) {
    const std::size_t bit = start + w * 64;
    const std::size_t iw = bit / 64, off = bit % 64;
    std::uint64_t v = seed[iw] >> off;
    if (off != 0 && iw + 1 < seed.size()) v |= seed[iw + 1] << (64 - off);
    return v;
}

}  // namespace

std::vector<std::uint8_t> privacy_amplify(std::span<const std::uint8_t> bits,
                                          std::size_t out_len,
                                          std::span<const std::uint8_t> hash_seed) {
    for (auto b : bits)
        if (b > 1) throw std::domain_error("input is not a bit sequence");
    for (auto b : hash_seed)
        if (b > 1) throw std::domain_error("hash seed is not a bit sequence");
    if (out_len == 0) return {};
    const std::size_t in_len = bits.size();
    if (out_len > in_len)
        throw std::domain_error("privacy amplification cannot expand: out_len > input length");
    if (hash_seed.size() != in_len + out_len - 1)
        throw std::domain_error("hash seed must hold in_len + out_len - 1 = " +
                                std::to_string(in_len + out_len - 1) + " bits, got " +
                                std::to_string(hash_seed.size()));

    const auto x = pack_bits(bits);
    const auto s = pack_bits(hash_seed);
    const std::size_t words = x.size();
    const std::uint64_t tail_mask =
        (in_len % 64) ? ((std::uint64_t(1) << (in_len % 64)) - 1) : ~std::uint64_t(0);

    std::vector<std::uint8_t> out(out_len);
    for (std::size_t i = 0; i < out_len; ++i) {
        // row i of the Toeplitz matrix is the seed window starting at
        // bit (out_len - 1 - i)
        const std::size_t start = out_len - 1 - i;
        std::uint64_t parity = 0;
        for (std::size_t w = 0; w < words; ++w) {
            std::uint64_t v = window_word(s, start, w) & x[w];
            if (w + 1 == words) v &= tail_mask;
            parity ^= v;
        }
        out[i] = std::uint8_t(std::popcount(parity) & 1);
    }
    return out;
}

}  // namespace y00
