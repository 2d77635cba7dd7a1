#pragma once

#include <functional>

#include "triwalk/rule.hpp"
#include "triwalk/state.hpp"

namespace triwalk {

struct EngineOptions {
    /// Verify unit norm on entry. Disabled only by tests that probe linearity
    /// on unnormalized vectors.
    bool check_norm = true;
};

/// Applies H (x) H (x) H to the coin factor at every site, as three in-place
/// butterfly passes (a, b) -> ((a+b)/sqrt2, (a-b)/sqrt2), one per coin qubit.
WalkState apply_coin_layer(WalkState state, const EngineOptions& options = {});

/// Coin-conditioned displacement: the amplitude block of each coin outcome is
/// translated by its rule displacement. Refuses to drop amplitude: any moving
/// outcome with magnitude above 1e-14 at a lattice edge raises BoundaryError.
WalkState apply_shift(WalkState state, const ShiftRule& rule,
                      const EngineOptions& options = {});

/// One full walk step: the coin layer followed by the conditional shift.
/// Rules conditioned in the Hadamard basis wrap the computational-basis shift
/// in an extra Hadamard pair.
WalkState step(WalkState state, const ShiftRule& rule,
               const EngineOptions& options = {});

/// Invoked with (t, state): once with the initial state at t = 0, then after
/// every step.
using StepObserver = std::function<void(int t, const WalkState& state)>;

/// Applies `step` the given number of times. Fails up front with LatticeError
/// unless N >= current support extent + steps, so the light cone can never
/// touch the boundary.
WalkState evolve(WalkState state, const ShiftRule& rule, int steps,
                 const StepObserver& observer = {});

}  // namespace triwalk
