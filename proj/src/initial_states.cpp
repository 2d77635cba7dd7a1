#include "triwalk/initial_states.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>

#include <Eigen/Dense>

#include "triwalk/analytics.hpp"

namespace triwalk {

namespace {

constexpr double kInvSqrt2 = 0.70710678118654752440084436210485;

// Rotate the global phase so the first nonzero amplitude is real and
// non-negative, for reproducible serialization.
void fix_global_phase(std::array<Complex, kCoinDim>& amps) {
    for (const Complex& a : amps) {
        if (std::abs(a) > 1e-15) {
            const Complex phase = std::conj(a) / std::abs(a);
            for (Complex& b : amps) {
                b *= phase;
            }
            return;
        }
    }
}

std::string format_double(double value) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.12g", value);
    return buf;
}

}  // namespace

std::array<Complex, kCoinDim> build_coin_state(const CoinStateSpec& spec) {
    std::array<Complex, kCoinDim> amps{};
    if (const auto* sep = std::get_if<SeparableSpec>(&spec)) {
        if (sep->bits < 0 || sep->bits >= kCoinDim) {
            throw DomainError("separable pattern must be in [0, 7], got " +
                              std::to_string(sep->bits));
        }
        amps[sep->bits] = 1.0;
    } else if (std::holds_alternative<GhzSpec>(spec)) {
        amps[0] = kInvSqrt2;
        amps[7] = kInvSqrt2;
    } else if (const auto* theta = std::get_if<ThetaSpec>(&spec)) {
        if (!(theta->theta >= 0.0 && theta->theta <= std::numbers::pi / 2)) {
            throw DomainError("theta must lie in [0, pi/2], got " +
                              std::to_string(theta->theta));
        }
        amps[0] = std::cos(theta->theta);
        amps[7] = std::sin(theta->theta);
    } else {
        const auto& custom = std::get<CustomSpec>(spec);
        double norm_sq = 0.0;
        for (const Complex& a : custom.amplitudes) {
            norm_sq += std::norm(a);
        }
        if (std::abs(norm_sq - 1.0) > 1e-9) {
            throw DomainError("custom coin amplitudes have squared norm " +
                              std::to_string(norm_sq) +
                              ", expected 1 within 1e-9");
        }
        amps = custom.amplitudes;
        fix_global_phase(amps);
    }
    return amps;
}

double entanglement_of_spec(const CoinStateSpec& spec) {
    const std::array<Complex, kCoinDim> amps = build_coin_state(spec);
    // Coin 1 is the most significant bit, so its two blocks are contiguous:
    // rows of the 2x4 coefficient matrix for the coin-1 vs coins-2-3 split.
    Eigen::Matrix<Complex, 2, 4> m;
    for (int row = 0; row < 2; ++row) {
        for (int col = 0; col < 4; ++col) {
            m(row, col) = amps[row * 4 + col];
        }
    }
    const Eigen::Matrix2cd gram = m * m.adjoint();
    Eigen::SelfAdjointEigenSolver<Eigen::Matrix2cd> solver(gram);
    const auto spectrum = DensitySpectrum::from_values(
        {solver.eigenvalues()[0], solver.eigenvalues()[1]});
    return von_neumann_entropy(spectrum);
}

std::string describe(const CoinStateSpec& spec) {
    if (const auto* sep = std::get_if<SeparableSpec>(&spec)) {
        return std::string("separable:") +
               static_cast<char>('0' + ((sep->bits >> 2) & 1)) +
               static_cast<char>('0' + ((sep->bits >> 1) & 1)) +
               static_cast<char>('0' + (sep->bits & 1));
    }
    if (std::holds_alternative<GhzSpec>(spec)) {
        return "ghz";
    }
    if (const auto* theta = std::get_if<ThetaSpec>(&spec)) {
        return "theta:" + format_double(theta->theta);
    }
    const auto& custom = std::get<CustomSpec>(spec);
    std::string out = "custom:";
    for (int i = 0; i < kCoinDim; ++i) {
        if (i > 0) {
            out += ",";
        }
        const Complex& a = custom.amplitudes[i];
        out += format_double(a.real());
        if (a.imag() != 0.0) {
            out += (a.imag() > 0 ? "+" : "") + format_double(a.imag()) + "i";
        }
    }
    return out;
}

}  // namespace triwalk
