#include "y00/transcript.hpp"

#include <stdexcept>
#include <string>

namespace y00 {

void Transcript::validate(const Constellation& c) const {
    const std::size_t n = x.size();
    if (basis.size() != n || sent.size() != n || y_eve.size() != n || b_bob.size() != n)
        throw std::invalid_argument("transcript sequences have mismatched lengths");
    for (std::size_t i = 0; i < n; ++i) {
        if (sent[i] != c.encode(x[i], basis[i]))
            throw std::invalid_argument("transcript state at position " + std::to_string(i) +
                                        " is not encode(x, basis)");
    }
}

}  // namespace y00
