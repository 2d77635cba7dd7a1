#pragma once

#include <array>
#include <string>
#include <variant>

#include "triwalk/state.hpp"

namespace triwalk {

/// Product state with the three coins in the computational pattern `bits`
/// (coin 1 most significant).
struct SeparableSpec {
    int bits = 0;
};

/// (|000> + |111>) / sqrt2.
struct GhzSpec {};

/// cos(theta)|000> + sin(theta)|111>, theta in [0, pi/2]. Interpolates from
/// the separable |000> seed (theta = 0) to the GHZ seed (theta = pi/4).
struct ThetaSpec {
    double theta = 0.0;
};

/// Arbitrary coin vector; squared norm must be 1 within 1e-9.
struct CustomSpec {
    std::array<Complex, kCoinDim> amplitudes{};
};

using CoinStateSpec = std::variant<SeparableSpec, GhzSpec, ThetaSpec, CustomSpec>;

/// Builds the 8-component coin vector for a spec. The global phase is fixed
/// so the first nonzero amplitude is real and non-negative.
std::array<Complex, kCoinDim> build_coin_state(const CoinStateSpec& spec);

/// Bipartite entanglement entropy of coin 1 against coins 2-3 for the built
/// state, in bits. 0 for any separable spec, 1 for GHZ, h2(cos^2 theta) for
/// the theta family.
double entanglement_of_spec(const CoinStateSpec& spec);

/// Canonical text form, e.g. "separable:000", "ghz", "theta:0.785398163397".
std::string describe(const CoinStateSpec& spec);

}  // namespace triwalk
