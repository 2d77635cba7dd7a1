#include "triwalk/oracle.hpp"

#include <string>
#include <unsupported/Eigen/KroneckerProduct>

namespace triwalk {

namespace {

constexpr double kInvSqrt2 = 0.70710678118654752440084436210485;

Eigen::MatrixXcd three_coin_hadamard() {
    Eigen::Matrix2cd h;
    h << kInvSqrt2, kInvSqrt2, kInvSqrt2, -kInvSqrt2;
    return Eigen::kroneckerProduct(Eigen::kroneckerProduct(h, h).eval(), h);
}

// Cyclic translation by d on the site axis: |j> -> |j+d>, |N> wrapping to
// |-N|.
Eigen::MatrixXcd cyclic_translation(int sites, int d) {
    Eigen::MatrixXcd t = Eigen::MatrixXcd::Zero(sites, sites);
    for (int from = 0; from < sites; ++from) {
        const int to = ((from + d) % sites + sites) % sites;
        t(to, from) = 1.0;
    }
    return t;
}

}  // namespace

DenseStepMatrix build_step_matrix(const ShiftRule& rule,
                                  const LatticeSpec& lattice) {
    const int sites = lattice.site_count();
    const int dim = kCoinDim * sites;
    const Eigen::MatrixXcd hadamard = three_coin_hadamard();

    // Shift factor, one projector term per coin outcome in the rule's
    // conditioning basis.
    Eigen::MatrixXcd shift = Eigen::MatrixXcd::Zero(dim, dim);
    for (int c = 0; c < kCoinDim; ++c) {
        Eigen::VectorXcd basis_vector;
        if (rule.condition_basis == ConditionBasis::computational) {
            basis_vector = Eigen::VectorXcd::Unit(kCoinDim, c);
        } else {
            basis_vector = hadamard.col(c);
        }
        const Eigen::MatrixXcd projector =
            basis_vector * basis_vector.adjoint();
        shift += Eigen::kroneckerProduct(
            projector, cyclic_translation(sites, rule.displacement[c]));
    }

    const Eigen::MatrixXcd layer = Eigen::kroneckerProduct(
        hadamard, Eigen::MatrixXcd::Identity(sites, sites));

    DenseStepMatrix matrix{shift * layer, lattice, rule};
    const double defect =
        (matrix.entries.adjoint() * matrix.entries -
         Eigen::MatrixXcd::Identity(dim, dim))
            .cwiseAbs()
            .maxCoeff();
    if (defect > 1e-12) {
        throw NumericalError("dense step matrix is not unitary: max defect " +
                             std::to_string(defect));
    }
    return matrix;
}

WalkState oracle_evolve(const WalkState& state, const DenseStepMatrix& matrix,
                        int steps) {
    if (steps < 0) {
        throw DomainError("steps must be non-negative, got " +
                          std::to_string(steps));
    }
    if (!(state.lattice() == matrix.lattice)) {
        throw DomainError("state and step matrix use different lattices");
    }
    if (matrix.lattice.half_width() <= steps) {
        throw LatticeError(
            "cyclic seam violation: need half-width > steps, got N = " +
            std::to_string(matrix.lattice.half_width()) + " for " +
            std::to_string(steps) + " steps");
    }
    Eigen::Map<const Eigen::VectorXcd> in(state.amplitudes().data(),
                                          state.amplitudes().size());
    Eigen::VectorXcd psi = in;
    for (int t = 0; t < steps; ++t) {
        psi = matrix.entries * psi;
    }
    return WalkState(state.lattice(),
                     std::vector<Complex>(psi.data(), psi.data() + psi.size()));
}

double density_entropy(const Eigen::MatrixXcd& rho) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(
        rho, Eigen::EigenvaluesOnly);
    const Eigen::VectorXd& values = solver.eigenvalues();
    const auto spectrum = DensitySpectrum::from_values(
        std::vector<double>(values.data(), values.data() + values.size()));
    return von_neumann_entropy(spectrum);
}

double oracle_joint_entropy(const WalkState& state) {
    Eigen::Map<const Eigen::VectorXcd> psi(state.amplitudes().data(),
                                           state.amplitudes().size());
    const Eigen::MatrixXcd rho = psi * psi.adjoint();
    return density_entropy(rho);
}

ReducedDensities oracle_reduced_densities(const WalkState& state) {
    const int sites = state.lattice().site_count();
    Eigen::Map<const Eigen::VectorXcd> psi(state.amplitudes().data(),
                                           state.amplitudes().size());
    const Eigen::MatrixXcd rho = psi * psi.adjoint();

    ReducedDensities reduced;
    reduced.coin = Matrix8cd::Zero();
    for (int c = 0; c < kCoinDim; ++c) {
        for (int cp = 0; cp < kCoinDim; ++cp) {
            for (int j = 0; j < sites; ++j) {
                reduced.coin(c, cp) += rho(c * sites + j, cp * sites + j);
            }
        }
    }
    reduced.position = Eigen::MatrixXcd::Zero(sites, sites);
    for (int j = 0; j < sites; ++j) {
        for (int jp = 0; jp < sites; ++jp) {
            for (int c = 0; c < kCoinDim; ++c) {
                reduced.position(j, jp) += rho(c * sites + j, c * sites + jp);
            }
        }
    }
    return reduced;
}

}  // namespace triwalk
