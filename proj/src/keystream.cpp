#include "y00/keystream.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <string>

namespace y00 {

namespace {

// Maximal-length taps per degree (feedback polynomial exponents).
// Every entry is verified primitive by the period test in the unit suite.
constexpr int kMaxDefaultDegree = 24;
const std::vector<int> kDefaultTaps[] = {
    /* 3*/ {3, 2},  /* 4*/ {4, 3},        /* 5*/ {5, 3},         /* 6*/ {6, 5},
    /* 7*/ {7, 6},  /* 8*/ {8, 6, 5, 4},  /* 9*/ {9, 5},         /*10*/ {10, 7},
    /*11*/ {11, 9}, /*12*/ {12, 6, 4, 1}, /*13*/ {13, 4, 3, 1},  /*14*/ {14, 5, 3, 1},
    /*15*/ {15, 14},/*16*/ {16, 15, 13, 4},/*17*/ {17, 14},      /*18*/ {18, 11},
    /*19*/ {19, 6, 2, 1}, /*20*/ {20, 17},/*21*/ {21, 19},       /*22*/ {22, 21},
    /*23*/ {23, 18},/*24*/ {24, 23, 22, 17}};

int hex_digit(char ch) {
    if (ch >= '0' && ch <= '9') return ch - '0';
    if (ch >= 'a' && ch <= 'f') return ch - 'a' + 10;
    if (ch >= 'A' && ch <= 'F') return ch - 'A' + 10;
    throw std::invalid_argument(std::string("bad hex digit '") + ch + "'");
}

}  // namespace

LfsrSpec LfsrSpec::primitive_default(int degree) {
    if (degree < 3 || degree > kMaxDefaultDegree)
        throw std::invalid_argument("no default polynomial for degree " +
                                    std::to_string(degree) + "; specify taps explicitly");
    return {degree, kDefaultTaps[degree - 3]};
}

void LfsrSpec::validate() const {
    if (degree < 3 || degree > 63)
        throw std::invalid_argument("LFSR degree must be in [3, 63], got " +
                                    std::to_string(degree));
    if (taps.empty()) throw std::invalid_argument("LFSR tap set is empty");
    bool has_degree = false;
    std::vector<int> seen;
    for (int t : taps) {
        if (t < 1 || t > degree)
            throw std::invalid_argument("tap " + std::to_string(t) + " outside [1, degree]");
        if (std::find(seen.begin(), seen.end(), t) != seen.end())
            throw std::invalid_argument("duplicate tap " + std::to_string(t));
        seen.push_back(t);
        has_degree |= (t == degree);
    }
    if (!has_degree)
        throw std::invalid_argument("highest tap must equal the degree");
}

std::uint64_t LfsrSpec::tap_mask() const {
    std::uint64_t m = 0;
    for (int t : taps) m |= std::uint64_t(1) << (degree - t);
    return m;
}

SeedKey SeedKey::from_uint(std::uint64_t value, int klen) {
    if (klen < 1 || klen > 63) throw std::invalid_argument("seed length must be in [1, 63]");
    if (klen < 64 && (value >> klen) != 0)
        throw std::invalid_argument("seed value does not fit in " + std::to_string(klen) +
                                    " bits");
    SeedKey k;
    k.bits.resize(static_cast<std::size_t>(klen));
    for (int i = 0; i < klen; ++i)
        k.bits[std::size_t(i)] = std::uint8_t((value >> (klen - 1 - i)) & 1);
    return k;
}

SeedKey SeedKey::from_hex(std::string_view hex, int klen) {
    if (klen < 1 || klen > 63) throw std::invalid_argument("seed length must be in [1, 63]");
    const int want = (klen + 3) / 4;
    if (int(hex.size()) != want)
        throw std::invalid_argument("seed hex must have exactly " + std::to_string(want) +
                                    " digits for a " + std::to_string(klen) + "-bit key");
    std::uint64_t v = 0;
    for (char ch : hex) v = (v << 4) | std::uint64_t(hex_digit(ch));
    if ((v >> klen) != 0)
        throw std::invalid_argument("seed hex has nonzero bits above bit " +
                                    std::to_string(klen - 1));
    return from_uint(v, klen);
}

bool SeedKey::all_zero() const noexcept {
    for (auto b : bits)
        if (b) return false;
    return true;
}

std::uint64_t SeedKey::to_uint() const {
    std::uint64_t v = 0;
    for (auto b : bits) v = (v << 1) | b;
    return v;
}

LfsrStream::LfsrStream(const LfsrSpec& spec, const SeedKey& seed) : spec_(spec) {
    spec_.validate();
    if (seed.klen() != spec_.degree)
        throw std::invalid_argument("seed length " + std::to_string(seed.klen()) +
                                    " does not match register degree " +
                                    std::to_string(spec_.degree));
    if (seed.all_zero())
        throw std::invalid_argument("all-zero LFSR seed produces a constant stream");
    mask_ = spec_.tap_mask();
    state_ = seed.to_uint();
}

int LfsrStream::next_bit() {
    const int out = int(state_ & 1);
    const std::uint64_t fb = std::uint64_t(std::popcount(state_ & mask_) & 1);
    state_ = (state_ >> 1) | (fb << (spec_.degree - 1));
    ++emitted_;
    return out;
}

std::unique_ptr<KeyBitStream> LfsrStream::clone() const {
    return std::make_unique<LfsrStream>(*this);
}

int next_basis(KeyBitStream& stream, const Constellation& c) {
    int r = 0;
    for (int i = 0; i < c.bits_per_basis(); ++i) r = (r << 1) | stream.next_bit();
    return r;
}

std::vector<int> running_key_sequence(const SeedKey& seed, const LfsrSpec& spec,
                                      std::size_t n, const Constellation& c) {
    if (spec.degree < c.bits_per_basis())
        throw std::invalid_argument("seed key shorter than log2(M/2) bits");
    LfsrStream stream(spec, seed);
    std::vector<int> out;
    out.reserve(n);
    for (std::size_t i = 0; i < n; ++i) out.push_back(next_basis(stream, c));
    return out;
}

}  // namespace y00
