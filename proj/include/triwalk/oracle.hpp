#pragma once

#include <Eigen/Dense>

#include "triwalk/analytics.hpp"
#include "triwalk/rule.hpp"
#include "triwalk/state.hpp"

namespace triwalk {

/// Explicit dense step operator on the joint space, D = 8 * (2N+1).
/// The shift closes cyclically at the truncation boundary (|N> -> |-N>) so
/// the matrix is exactly unitary; oracle_evolve's seam guard keeps valid runs
/// away from the wrap. Brute-force reference only: O(D^2) per step.
struct DenseStepMatrix {
    Eigen::MatrixXcd entries;
    LatticeSpec lattice;
    ShiftRule rule;
};

/// Product of the dense shift matrix, built term-by-term from the rule's coin
/// projectors in its conditioning basis, with the dense Hadamard layer.
/// Verifies ||U^dag U - I||_max <= 1e-12 before returning.
DenseStepMatrix build_step_matrix(const ShiftRule& rule,
                                  const LatticeSpec& lattice);

/// Repeated dense matrix-vector products. Requires N > steps so the light
/// cone cannot reach the cyclic seam.
WalkState oracle_evolve(const WalkState& state, const DenseStepMatrix& matrix,
                        int steps);

/// Entropy in bits of a Hermitian density matrix via eigendecomposition.
double density_entropy(const Eigen::MatrixXcd& rho);

/// Builds the full |psi><psi| density matrix and returns its entropy; must be
/// 0 within 1e-9 for any pure state. Intended for small lattices.
double oracle_joint_entropy(const WalkState& state);

struct ReducedDensities {
    Matrix8cd coin;
    Eigen::MatrixXcd position;
};

/// Index-summed partial traces of the explicit joint density matrix,
/// independent of the coefficient-matrix route used by the analytics.
ReducedDensities oracle_reduced_densities(const WalkState& state);

}  // namespace triwalk
