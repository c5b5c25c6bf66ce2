#pragma once

#include <cstdint>
#include <memory>
#include <string_view>
#include <vector>

#include "y00/constellation.hpp"

namespace y00 {

/// Feedback structure of a Fibonacci LFSR, given as the exponents of the
/// feedback polynomial (constant term implied). taps = {4, 1} means
/// x^4 + x + 1. The highest tap equals the register degree.
struct LfsrSpec {
    int degree = 0;
    std::vector<int> taps;

    /// A maximal-length polynomial for 3 <= degree <= 24.
    static LfsrSpec primitive_default(int degree);

    void validate() const;

    /// Feedback mask over the packed register: tap t contributes bit (degree - t).
    std::uint64_t tap_mask() const;
};

/// Seed key bits, most significant first ("0001" has value 1).
struct SeedKey {
    std::vector<std::uint8_t> bits;

    static SeedKey from_uint(std::uint64_t value, int klen);
    /// Strict hex parse: the string must supply exactly ceil(klen/4) digits
    /// and any excess high bits of the leading digit must be zero.
    static SeedKey from_hex(std::string_view hex, int klen);

    int klen() const noexcept { return int(bits.size()); }
    bool all_zero() const noexcept;
    std::uint64_t to_uint() const;
};

/// Abstract ENC box: anything that expands a seed into a bit stream.
class KeyBitStream {
public:
    virtual ~KeyBitStream() = default;
    virtual int next_bit() = 0;
    virtual std::uint64_t emitted() const = 0;
    /// Snapshot for parallel replay.
    virtual std::unique_ptr<KeyBitStream> clone() const = 0;
};

/// Default ENC box: Fibonacci LFSR. Output is the register's low bit;
/// the register shifts right with the feedback parity entering at the top.
/// An all-zero seed is rejected (the stream would be constant).
class LfsrStream final : public KeyBitStream {
public:
    LfsrStream(const LfsrSpec& spec, const SeedKey& seed);

    int next_bit() override;
    std::uint64_t emitted() const override { return emitted_; }
    std::unique_ptr<KeyBitStream> clone() const override;

    std::uint64_t state() const noexcept { return state_; }
    const LfsrSpec& spec() const noexcept { return spec_; }

private:
    LfsrSpec spec_;
    std::uint64_t mask_;
    std::uint64_t state_;
    std::uint64_t emitted_ = 0;
};

/// Next basis index: consumes log2(M/2) bits, most significant first.
int next_basis(KeyBitStream& stream, const Constellation& c);

/// n basis indices from a fresh LFSR stream.
std::vector<int> running_key_sequence(const SeedKey& seed, const LfsrSpec& spec,
                                      std::size_t n, const Constellation& c);

}  // namespace y00
