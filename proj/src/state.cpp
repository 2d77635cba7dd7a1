#include "triwalk/state.hpp"

#include <cmath>
#include <cstdlib>
#include <string>
#include <utility>

namespace triwalk {

LatticeSpec::LatticeSpec(int half_width) : half_width_(half_width) {
    if (half_width < 1) {
        throw DomainError("lattice half-width must be at least 1, got " +
                          std::to_string(half_width));
    }
}

int LatticeSpec::site_offset(int site) const {
    if (!contains(site)) {
        throw DomainError("site " + std::to_string(site) +
                          " outside lattice [-" + std::to_string(half_width_) +
                          ", " + std::to_string(half_width_) + "]");
    }
    return site + half_width_;
}

CoinIndex::CoinIndex(int value) : value_(value) {
    if (value < 0 || value >= kCoinDim) {
        throw DomainError("coin index must be in [0, 7], got " +
                          std::to_string(value));
    }
}

std::size_t global_offset(CoinIndex coin, int site, const LatticeSpec& lattice) {
    return static_cast<std::size_t>(coin.value()) * lattice.site_count() +
           lattice.site_offset(site);
}

WalkState::WalkState(LatticeSpec lattice, std::vector<Complex> amplitudes)
    : lattice_(lattice), amps_(std::move(amplitudes)) {
    const std::size_t expected =
        static_cast<std::size_t>(kCoinDim) * lattice_.site_count();
    if (amps_.size() != expected) {
        throw DomainError("amplitude vector has length " +
                          std::to_string(amps_.size()) + ", expected " +
                          std::to_string(expected));
    }
}

WalkState WalkState::zero(LatticeSpec lattice) {
    return WalkState(lattice, std::vector<Complex>(
                                  static_cast<std::size_t>(kCoinDim) *
                                  lattice.site_count()));
}

WalkState make_state(std::span<const Complex> coin_amplitudes, int site,
                     const LatticeSpec& lattice) {
    if (coin_amplitudes.size() != kCoinDim) {
        throw DomainError("coin amplitude vector has length " +
                          std::to_string(coin_amplitudes.size()) +
                          ", expected 8");
    }
    double norm_sq = 0.0;
    for (const Complex& a : coin_amplitudes) {
        norm_sq += std::norm(a);
    }
    if (std::abs(norm_sq - 1.0) > 1e-9) {
        throw DomainError("coin amplitude vector has norm " +
                          std::to_string(std::sqrt(norm_sq)) +
                          " (squared " + std::to_string(norm_sq) +
                          "), expected unit norm");
    }
    const int offset = lattice.site_offset(site);  // validates the site

    WalkState state = WalkState::zero(lattice);
    const double scale = 1.0 / std::sqrt(norm_sq);
    auto amps = state.amplitudes();
    for (int c = 0; c < kCoinDim; ++c) {
        amps[static_cast<std::size_t>(c) * lattice.site_count() + offset] =
            coin_amplitudes[c] * scale;
    }
    return state;
}

double norm_squared(const WalkState& state) {
    double sum = 0.0;
    for (const Complex& a : state.amplitudes()) {
        sum += std::norm(a);
    }
    return sum;
}

int support_extent(const WalkState& state) {
    const int n = state.lattice().half_width();
    const int sites = state.lattice().site_count();
    auto amps = state.amplitudes();
    int extent = 0;
    for (int c = 0; c < kCoinDim; ++c) {
        const Complex* block = amps.data() + static_cast<std::size_t>(c) * sites;
        for (int offset = 0; offset < sites; ++offset) {
            if (block[offset] != Complex{}) {
                extent = std::max(extent, std::abs(offset - n));
            }
        }
    }
    return extent;
}

WalkState CoefficientMatrix::to_state() const {
    return WalkState(lattice, entries);
}

CoefficientMatrix as_coefficient_matrix(const WalkState& state) {
    return CoefficientMatrix{
        state.lattice(),
        std::vector<Complex>(state.amplitudes().begin(),
                             state.amplitudes().end())};
}

double frobenius_norm_squared(const CoefficientMatrix& matrix) {
    double sum = 0.0;
    for (const Complex& a : matrix.entries) {
        sum += std::norm(a);
    }
    return sum;
}

}  // namespace triwalk
