#pragma once

#include <complex>

namespace y00 {

using Complex = std::complex<double>;

/// M coherent states of common amplitude alpha0 spaced uniformly on a ring,
/// grouped into M/2 antipodal basis pairs. Bit labels are interleaved so
/// that neighbouring states on the ring carry opposite logical bits:
///
///     state(bit, basis) = basis + (bit XOR (basis mod 2)) * M/2
///
/// M must be a power of two >= 4 so a basis index consumes exactly
/// log2(M/2) keystream bits.
class Constellation {
public:
    Constellation(int m, double alpha0);

    int M() const noexcept { return m_; }
    double alpha0() const noexcept { return alpha0_; }
    /// Mean photon number S = alpha0^2.
    double mean_photon_number() const noexcept { return alpha0_ * alpha0_; }
    int num_bases() const noexcept { return m_ / 2; }
    int bits_per_basis() const noexcept { return bits_per_basis_; }

    /// Ring angle of state ell, 2*pi*ell/M.
    double state_angle(int ell) const;

    /// Quadrature amplitude alpha0 * (cos theta, sin theta) of state ell.
    Complex state_amplitude(int ell) const;

    /// State index carrying `bit` in basis `basis`.
    int encode(int bit, int basis) const;

    struct BitBasis {
        int bit;
        int basis;
    };

    /// Inverse of encode.
    BitBasis decode(int ell) const;

private:
    void check_state(int ell) const;

    int m_;
    double alpha0_;
    int bits_per_basis_;
};

}  // namespace y00
