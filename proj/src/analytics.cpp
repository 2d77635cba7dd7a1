#include "triwalk/analytics.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace triwalk {

namespace {

using RowMajorMap =
    Eigen::Map<const Eigen::Matrix<Complex, kCoinDim, Eigen::Dynamic,
                                   Eigen::RowMajor>>;

// The coin-major amplitude layout is already the row-major coefficient
// matrix, so analytics can view it without copying.
RowMajorMap coefficient_view(const WalkState& state) {
    return RowMajorMap(state.amplitudes().data(), kCoinDim,
                       state.lattice().site_count());
}

void require_normalized(const WalkState& state, const char* where) {
    const double norm_sq = norm_squared(state);
    if (std::abs(norm_sq - 1.0) > 1e-9) {
        throw DomainError(std::string(where) + ": state has squared norm " +
                          std::to_string(norm_sq) +
                          ", expected 1 within 1e-9");
    }
}

DensitySpectrum hermitian_spectrum(const Eigen::MatrixXcd& rho) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(
        rho, Eigen::EigenvaluesOnly);
    const Eigen::VectorXd& values = solver.eigenvalues();
    return DensitySpectrum::from_values(
        std::vector<double>(values.data(), values.data() + values.size()));
}

}  // namespace

DensitySpectrum DensitySpectrum::from_values(std::vector<double> values) {
    double sum = 0.0;
    for (double& v : values) {
        if (v < -1e-12) {
            throw NumericalError(
                "density spectrum entry " + std::to_string(v) +
                " is below the clamping floor -1e-12");
        }
        v = std::clamp(v, 0.0, 1.0);
        sum += v;
    }
    if (std::abs(sum - 1.0) > 1e-8) {
        throw NumericalError("density spectrum sums to " +
                             std::to_string(sum) +
                             "; drift exceeds 1e-8");
    }
    if (sum > 0.0) {
        for (double& v : values) {
            v /= sum;
        }
    }
    std::sort(values.begin(), values.end(), std::greater<>());
    DensitySpectrum spectrum;
    spectrum.probabilities_ = std::move(values);
    return spectrum;
}

Matrix8cd reduced_coin_density(const WalkState& state) {
    require_normalized(state, "reduced_coin_density");
    const auto a = coefficient_view(state);
    return a * a.adjoint();
}

Eigen::MatrixXcd reduced_position_density(const WalkState& state) {
    require_normalized(state, "reduced_position_density");
    const auto a = coefficient_view(state);
    // rho_P[j][j'] = sum_c A[c,j] conj(A[c,j'])
    return (a.adjoint() * a).conjugate();
}

DensitySpectrum schmidt_spectrum(const WalkState& state) {
    require_normalized(state, "schmidt_spectrum");
    const Eigen::MatrixXcd a = coefficient_view(state);
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(a);
    std::vector<double> squared(svd.singularValues().size());
    for (Eigen::Index i = 0; i < svd.singularValues().size(); ++i) {
        squared[i] = svd.singularValues()[i] * svd.singularValues()[i];
    }
    return DensitySpectrum::from_values(std::move(squared));
}

double von_neumann_entropy(const DensitySpectrum& spectrum) {
    double entropy = 0.0;
    for (double p : spectrum.probabilities()) {
        if (p < 1e-15) {
            continue;
        }
        entropy -= p * std::log2(p);
    }
    return entropy;
}

double mutual_information(const WalkState& state) {
    return 2.0 * von_neumann_entropy(schmidt_spectrum(state));
}

double mutual_information_verified(const WalkState& state) {
    const double coin = von_neumann_entropy(
        hermitian_spectrum(reduced_coin_density(state)));
    const double position = von_neumann_entropy(
        hermitian_spectrum(reduced_position_density(state)));
    const double schmidt = mutual_information(state);
    if (std::abs(coin + position - schmidt) > 1e-9) {
        throw NumericalError(
            "entropy routes disagree: eigendecomposition gives " +
            std::to_string(coin + position) + " bits, Schmidt route gives " +
            std::to_string(schmidt) + " bits");
    }
    return coin + position;
}

std::vector<double> position_distribution(const WalkState& state) {
    require_normalized(state, "position_distribution");
    const int sites = state.lattice().site_count();
    std::vector<double> dist(sites, 0.0);
    const Complex* amps = state.amplitudes().data();
    for (int c = 0; c < kCoinDim; ++c) {
        const Complex* block = amps + static_cast<std::size_t>(c) * sites;
        for (int i = 0; i < sites; ++i) {
            dist[i] += std::norm(block[i]);
        }
    }
    return dist;
}

PositionMoments position_moments(std::span<const double> distribution) {
    if (distribution.empty() || distribution.size() % 2 == 0) {
        throw DomainError(
            "position distribution must cover an odd number of sites, got " +
            std::to_string(distribution.size()));
    }
    double sum = 0.0;
    for (double p : distribution) {
        if (p < -1e-12) {
            throw DomainError("position distribution has negative entry " +
                              std::to_string(p));
        }
        sum += p;
    }
    if (std::abs(sum - 1.0) > 1e-9) {
        throw DomainError("position distribution sums to " +
                          std::to_string(sum) + ", expected 1 within 1e-9");
    }
    const int n = (static_cast<int>(distribution.size()) - 1) / 2;
    double mean = 0.0;
    for (int i = 0; i < static_cast<int>(distribution.size()); ++i) {
        mean += (i - n) * distribution[i];
    }
    double variance = 0.0;
    for (int i = 0; i < static_cast<int>(distribution.size()); ++i) {
        const double d = (i - n) - mean;
        variance += d * d * distribution[i];
    }
    return {mean, variance};
}

InfoRecord record(int t, const WalkState& state) {
    if (t < 0) {
        throw DomainError("step index must be non-negative, got " +
                          std::to_string(t));
    }
    // Two independent routes: coin entropy from the eigenvalues of rho_C,
    // position entropy from the squared singular values of the coefficient
    // matrix. A pure global state forces them equal.
    const double coin_entropy = von_neumann_entropy(
        hermitian_spectrum(reduced_coin_density(state)));
    const double position_entropy =
        von_neumann_entropy(schmidt_spectrum(state));
    if (std::abs(coin_entropy - position_entropy) > 1e-9) {
        throw NumericalError(
            "subsystem entropies disagree at t = " + std::to_string(t) +
            ": S(rho_C) = " + std::to_string(coin_entropy) +
            " bits, S(rho_P) = " + std::to_string(position_entropy) +
            " bits");
    }
    if (coin_entropy < -1e-9 || coin_entropy > 3.0 + 1e-9) {
        throw NumericalError("coin entropy " + std::to_string(coin_entropy) +
                             " bits outside [0, 3]");
    }
    const double position_bound =
        std::log2(std::min<double>(kCoinDim, 2.0 * t + 1.0));
    if (position_entropy > position_bound + 1e-9) {
        throw DomainError("position entropy " +
                          std::to_string(position_entropy) +
                          " bits exceeds the step-" + std::to_string(t) +
                          " bound " + std::to_string(position_bound));
    }

    InfoRecord rec;
    rec.t = t;
    rec.coin_entropy_bits = coin_entropy;
    rec.position_entropy_bits = position_entropy;
    rec.mutual_information_bits = coin_entropy + position_entropy;
    rec.position_distribution = position_distribution(state);
    const PositionMoments moments = position_moments(rec.position_distribution);
    rec.position_mean = moments.mean;
    rec.position_variance = moments.variance;
    return rec;
}

}  // namespace triwalk
