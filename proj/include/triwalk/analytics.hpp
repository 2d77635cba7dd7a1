#pragma once

#include <span>
#include <vector>

#include <Eigen/Dense>

#include "triwalk/state.hpp"

namespace triwalk {

using Matrix8cd = Eigen::Matrix<Complex, kCoinDim, kCoinDim>;

/// Probability spectrum of a reduced density operator, descending.
/// All entries lie in [0, 1] and sum to 1 within 1e-10.
class DensitySpectrum {
public:
    /// Sorts descending, clamps entries in [-1e-12, 0) to 0, renormalizes
    /// small drift. Entries below -1e-12 or a spectral-sum drift above 1e-8
    /// raise NumericalError.
    static DensitySpectrum from_values(std::vector<double> values);

    std::span<const double> probabilities() const { return probabilities_; }

private:
    DensitySpectrum() = default;
    std::vector<double> probabilities_;
};

/// Reduced coin density operator: rho_C[c][c'] = sum_j A[c,j] conj(A[c',j]).
Matrix8cd reduced_coin_density(const WalkState& state);

/// Reduced position density operator:
/// rho_P[j][j'] = sum_c A[c,j] conj(A[c,j']). Rank at most 8.
Eigen::MatrixXcd reduced_position_density(const WalkState& state);

/// Squared singular values of the 8 x (2N+1) coefficient matrix. These are
/// simultaneously the spectra of rho_C and rho_P (Schmidt spectrum of the
/// coin-position split).
DensitySpectrum schmidt_spectrum(const WalkState& state);

/// -sum p log2 p in bits, with 0 log 0 = 0; entries below 1e-15 are skipped.
double von_neumann_entropy(const DensitySpectrum& spectrum);

/// Coin-position mutual information in bits: twice the Schmidt entropy, which
/// equals S(rho_C) + S(rho_P) for a pure joint state.
double mutual_information(const WalkState& state);

/// Mutual information the long way: separate eigendecompositions of rho_C and
/// rho_P. Raises NumericalError if the result disagrees with the Schmidt
/// route by more than 1e-9.
double mutual_information_verified(const WalkState& state);

/// p(j) = sum_c |A[c,j]|^2, indexed by j + N.
std::vector<double> position_distribution(const WalkState& state);

struct PositionMoments {
    double mean;
    double variance;
};

/// First and second central moments of a distribution over [-N, N]; the
/// half-width is inferred from the vector length.
PositionMoments position_moments(std::span<const double> distribution);

/// Everything the analytics compute for one step of one walk.
struct InfoRecord {
    int t = 0;
    double coin_entropy_bits = 0.0;
    double position_entropy_bits = 0.0;
    double mutual_information_bits = 0.0;
    std::vector<double> position_distribution;  // over [-N, N]
    double position_mean = 0.0;
    double position_variance = 0.0;
};

/// Bundles all analytics for one step. The coin entropy comes from an
/// eigendecomposition of rho_C and the position entropy from the Schmidt
/// spectrum; if the two disagree by more than 1e-9 (a pure global state
/// forces them equal) a NumericalError reports both values.
InfoRecord record(int t, const WalkState& state);

struct Trajectory {
    std::vector<InfoRecord> records;  // t = 0..T, contiguous
};

}  // namespace triwalk
