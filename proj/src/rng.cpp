#include "y00/rng.hpp"

#include <cmath>
#include <numbers>

namespace y00 {

namespace {

constexpr std::uint32_t kMul0 = 0xD2511F53u;
constexpr std::uint32_t kMul1 = 0xCD9E8D57u;
constexpr std::uint32_t kWeyl0 = 0x9E3779B9u;
constexpr std::uint32_t kWeyl1 = 0xBB67AE85u;

inline void philox_round(std::uint32_t (&c)[4], std::uint32_t k0, std::uint32_t k1) noexcept {
    const std::uint64_t p0 = std::uint64_t(kMul0) * c[0];
    const std::uint64_t p1 = std::uint64_t(kMul1) * c[2];
    const std::uint32_t hi0 = std::uint32_t(p0 >> 32), lo0 = std::uint32_t(p0);
    const std::uint32_t hi1 = std::uint32_t(p1 >> 32), lo1 = std::uint32_t(p1);
    const std::uint32_t n0 = hi1 ^ c[1] ^ k0;
    const std::uint32_t n2 = hi0 ^ c[3] ^ k1;
    c[0] = n0;
    c[1] = lo1;
    c[2] = n2;
    c[3] = lo0;
}

}  // namespace

std::array<std::uint32_t, 4> philox4x32(std::uint64_t key,
                                        std::uint64_t substream,
                                        std::uint64_t counter) {
    std::uint32_t c[4] = {std::uint32_t(counter), std::uint32_t(counter >> 32),
                          std::uint32_t(substream), std::uint32_t(substream >> 32)};
    std::uint32_t k0 = std::uint32_t(key);
    std::uint32_t k1 = std::uint32_t(key >> 32);
    for (int r = 0; r < 10; ++r) {
        philox_round(c, k0, k1);
        k0 += kWeyl0;
        k1 += kWeyl1;
    }
    return {c[0], c[1], c[2], c[3]};
}

std::pair<std::uint64_t, std::uint64_t> RngStream::words_at(std::uint64_t i) const noexcept {
    const auto b = philox4x32(seed_, substream_, i);
    return {(std::uint64_t(b[1]) << 32) | b[0], (std::uint64_t(b[3]) << 32) | b[2]};
}

double RngStream::uniform_at(std::uint64_t i) const noexcept {
    return double(words_at(i).first >> 11) * 0x1.0p-53;
}

std::pair<double, double> RngStream::normal_pair_at(std::uint64_t i) const noexcept {
    const auto [a, b] = words_at(i);
    // u1 in (0,1] so the log is finite; u2 in [0,1)
    const double u1 = double((a >> 11) + 1) * 0x1.0p-53;
    const double u2 = double(b >> 11) * 0x1.0p-53;
    const double rad = std::sqrt(-2.0 * std::log(u1));
    const double ang = 2.0 * std::numbers::pi * u2;
    return {rad * std::cos(ang), rad * std::sin(ang)};
}

std::complex<double> RngStream::quadrature_noise_at(std::uint64_t i) const noexcept {
    const auto [z0, z1] = normal_pair_at(i);
    constexpr double sigma = 0.70710678118654752440;  // sqrt(1/2)
    return {sigma * z0, sigma * z1};
}

}  // namespace y00
