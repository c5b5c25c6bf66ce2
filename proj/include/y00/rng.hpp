#pragma once

#include <array>
#include <complex>
#include <cstdint>
#include <utility>

namespace y00 {

/// One Philox4x32-10 block: 128 pseudorandom bits addressed by
/// (key, substream, counter). Pure function; no state.
std::array<std::uint32_t, 4> philox4x32(std::uint64_t key,
                                        std::uint64_t substream,
                                        std::uint64_t counter);

/// Counter-based random stream.
///
/// Draw i is a pure function of (master_seed, substream_id, i), so
/// Monte Carlo loops may hand out disjoint index ranges to any number
/// of workers and still produce the exact same values. Substreams with
/// distinct ids are independent. The sequential interface (`uniform`,
/// `normal_pair`, ...) just advances an internal draw index.
class RngStream {
public:
    RngStream(std::uint64_t master_seed, std::uint64_t substream_id) noexcept
        : seed_(master_seed), substream_(substream_id) {}

    std::uint64_t master_seed() const noexcept { return seed_; }
    std::uint64_t substream() const noexcept { return substream_; }
    std::uint64_t position() const noexcept { return pos_; }

    /// Raw 2x64 bits of draw i.
    std::pair<std::uint64_t, std::uint64_t> words_at(std::uint64_t i) const noexcept;

    /// Uniform double in [0, 1) from draw i.
    double uniform_at(std::uint64_t i) const noexcept;

    /// Two independent standard normal deviates from draw i (Box-Muller).
    std::pair<double, double> normal_pair_at(std::uint64_t i) const noexcept;

    /// Complex Gaussian with variance 1/2 per quadrature, from draw i.
    std::complex<double> quadrature_noise_at(std::uint64_t i) const noexcept;

    // sequential convenience; one draw index each
    double uniform() noexcept { return uniform_at(pos_++); }
    std::pair<std::uint64_t, std::uint64_t> words() noexcept { return words_at(pos_++); }
    std::pair<double, double> normal_pair() noexcept { return normal_pair_at(pos_++); }
    std::complex<double> quadrature_noise() noexcept { return quadrature_noise_at(pos_++); }

    void skip_to(std::uint64_t i) noexcept { pos_ = i; }

private:
    std::uint64_t seed_;
    std::uint64_t substream_;
    std::uint64_t pos_ = 0;
};

}  // namespace y00
