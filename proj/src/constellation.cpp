#include "y00/constellation.hpp"

#include <bit>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace y00 {

Constellation::Constellation(int m, double alpha0) : m_(m), alpha0_(alpha0) {
    if (m < 4 || !std::has_single_bit(unsigned(m)))
        throw std::domain_error("constellation size must be a power of two >= 4, got " +
                                std::to_string(m));
    if (!(alpha0 >= 0.0) || !std::isfinite(alpha0))
        throw std::domain_error("alpha0 must be finite and nonnegative");
    bits_per_basis_ = std::bit_width(unsigned(m / 2)) - 1;
}

void Constellation::check_state(int ell) const {
    if (ell < 0 || ell >= m_)
        throw std::domain_error("state index " + std::to_string(ell) + " outside [0," +
                                std::to_string(m_) + ")");
}

double Constellation::state_angle(int ell) const {
    check_state(ell);
    return 2.0 * std::numbers::pi * double(ell) / double(m_);
}

Complex Constellation::state_amplitude(int ell) const {
    const double th = state_angle(ell);
    return {alpha0_ * std::cos(th), alpha0_ * std::sin(th)};
}

int Constellation::encode(int bit, int basis) const {
    if (bit != 0 && bit != 1) throw std::domain_error("bit must be 0 or 1");
    if (basis < 0 || basis >= m_ / 2)
        throw std::domain_error("basis index " + std::to_string(basis) + " outside [0," +
                                std::to_string(m_ / 2) + ")");
    return basis + ((bit ^ (basis & 1)) ? m_ / 2 : 0);
}

Constellation::BitBasis Constellation::decode(int ell) const {
    check_state(ell);
    const int basis = ell % (m_ / 2);
    const int half = ell / (m_ / 2);
    return {half ^ (basis & 1), basis};
}

}  // namespace y00
