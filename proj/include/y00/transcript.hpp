#pragma once

#include <cstdint>
#include <vector>

#include "y00/constellation.hpp"

namespace y00 {

/// Per-qumode record of one encode/measure run: Alice's data bit and basis,
/// the transmitted state index, Eve's heterodyne outcome, Bob's decision.
struct Transcript {
    std::vector<std::uint8_t> x;
    std::vector<std::int32_t> basis;
    std::vector<std::int32_t> sent;
    std::vector<Complex> y_eve;
    std::vector<std::uint8_t> b_bob;

    std::size_t size() const noexcept { return x.size(); }

    /// All sequences same length; sent[i] == encode(x[i], basis[i]).
    void validate(const Constellation& c) const;
};

}  // namespace y00
