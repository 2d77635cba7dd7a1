#pragma once

#include <complex>
#include <span>
#include <vector>

#include "triwalk/lattice.hpp"

namespace triwalk {

using Complex = std::complex<double>;

/// Pure state of the joint coin-position system. Amplitudes are stored
/// coin-major: the amplitude of coin c at site j lives at offset
/// c * (2N+1) + (j + N), so each coin outcome owns one contiguous block of
/// sites. Value type; copies are deep and states never share buffers.
class WalkState {
public:
    /// Takes ownership of the amplitude vector; its length must be
    /// 8 * (2N+1).
    WalkState(LatticeSpec lattice, std::vector<Complex> amplitudes);

    static WalkState zero(LatticeSpec lattice);

    const LatticeSpec& lattice() const { return lattice_; }

    std::span<const Complex> amplitudes() const { return amps_; }
    std::span<Complex> amplitudes() { return amps_; }

    Complex amplitude(CoinIndex coin, int site) const {
        return amps_[global_offset(coin, site, lattice_)];
    }

private:
    LatticeSpec lattice_;
    std::vector<Complex> amps_;
};

/// Places an 8-component coin vector at one site, zeros elsewhere.
/// The coin vector must have squared norm 1 within 1e-9; it is renormalized
/// exactly on placement.
WalkState make_state(std::span<const Complex> coin_amplitudes, int site,
                     const LatticeSpec& lattice);

/// Sum of squared amplitude magnitudes.
double norm_squared(const WalkState& state);

/// Largest |j| carrying any nonzero amplitude (0 for the zero state).
int support_extent(const WalkState& state);

/// The 8 x (2N+1) coefficient matrix A with A[c, j+N] = amplitude of coin c
/// at site j. Same memory layout as WalkState, so the reshape is lossless.
struct CoefficientMatrix {
    LatticeSpec lattice;
    std::vector<Complex> entries;  // row-major, 8 rows by (2N+1) columns

    Complex at(int coin_row, int site) const {
        return entries[static_cast<std::size_t>(coin_row) * lattice.site_count() +
                       lattice.site_offset(site)];
    }

    /// Inverse reshape; bit-identical round trip with as_coefficient_matrix.
    WalkState to_state() const;
};

CoefficientMatrix as_coefficient_matrix(const WalkState& state);

double frobenius_norm_squared(const CoefficientMatrix& matrix);

}  // namespace triwalk
