#include "triwalk/engine.hpp"

#include <cmath>
#include <cstring>
#include <string>

namespace triwalk {

namespace {

// Correctly rounded 1/sqrt(2); (a, b) -> ((a+b)*k, (a-b)*k) keeps the norm
// within 1e-16 per pass.
constexpr double kInvSqrt2 = 0.70710678118654752440084436210485;

void require_unit_norm(const WalkState& state, const char* where) {
    const double norm_sq = norm_squared(state);
    if (std::abs(norm_sq - 1.0) > 1e-9) {
        throw DomainError(std::string(where) + ": state has squared norm " +
                          std::to_string(norm_sq) +
                          ", expected 1 within 1e-9");
    }
}

// Butterfly pass for one coin qubit: combines the two coin blocks that differ
// only in that qubit, site by site.
void hadamard_pass(Complex* amps, int sites, int qubit_mask) {
    for (int c = 0; c < kCoinDim; ++c) {
        if ((c & qubit_mask) != 0) {
            continue;
        }
        Complex* lo = amps + static_cast<std::size_t>(c) * sites;
        Complex* hi = amps + static_cast<std::size_t>(c | qubit_mask) * sites;
        for (int i = 0; i < sites; ++i) {
            const Complex a = lo[i];
            const Complex b = hi[i];
            lo[i] = (a + b) * kInvSqrt2;
            hi[i] = (a - b) * kInvSqrt2;
        }
    }
}

void coin_layer_in_place(WalkState& state) {
    Complex* amps = state.amplitudes().data();
    const int sites = state.lattice().site_count();
    hadamard_pass(amps, sites, 4);  // coin 1 (most significant)
    hadamard_pass(amps, sites, 2);  // coin 2
    hadamard_pass(amps, sites, 1);  // coin 3
}

void shift_in_place(WalkState& state, const ShiftRule& rule) {
    Complex* amps = state.amplitudes().data();
    const int sites = state.lattice().site_count();
    const int n = state.lattice().half_width();

    // Guard the whole state before touching anything: a moving outcome must
    // carry no amplitude (above 1e-14) at either lattice edge.
    for (int c = 0; c < kCoinDim; ++c) {
        if (rule.displacement[c] == 0) {
            continue;
        }
        const Complex* block = amps + static_cast<std::size_t>(c) * sites;
        for (int edge : {0, sites - 1}) {
            const double magnitude = std::abs(block[edge]);
            if (magnitude > 1e-14) {
                const int site = edge - n;
                throw BoundaryError(
                    "boundary contamination: coin outcome " +
                        std::to_string(c) + " has amplitude magnitude " +
                        std::to_string(magnitude) + " at site " +
                        std::to_string(site) +
                        "; enlarge the lattice half-width",
                    magnitude, site);
            }
        }
    }

    for (int c = 0; c < kCoinDim; ++c) {
        const int d = rule.displacement[c];
        if (d == 0) {
            continue;
        }
        Complex* block = amps + static_cast<std::size_t>(c) * sites;
        if (d > 0) {
            std::memmove(block + 1, block, (sites - 1) * sizeof(Complex));
            block[0] = Complex{};
        } else {
            std::memmove(block, block + 1, (sites - 1) * sizeof(Complex));
            block[sites - 1] = Complex{};
        }
    }
}

}  // namespace

WalkState apply_coin_layer(WalkState state, const EngineOptions& options) {
    if (options.check_norm) {
        require_unit_norm(state, "apply_coin_layer");
    }
    coin_layer_in_place(state);
    return state;
}

WalkState apply_shift(WalkState state, const ShiftRule& rule,
                      const EngineOptions& options) {
    (void)options;
    shift_in_place(state, rule);
    return state;
}

WalkState step(WalkState state, const ShiftRule& rule,
               const EngineOptions& options) {
    if (options.check_norm) {
        require_unit_norm(state, "step");
    }
    coin_layer_in_place(state);
    if (rule.condition_basis == ConditionBasis::hadamard) {
        // Conjugate the shift's coin projectors: condition on the |+/->^3
        // patterns of the post-layer state.
        coin_layer_in_place(state);
        shift_in_place(state, rule);
        coin_layer_in_place(state);
    } else {
        shift_in_place(state, rule);
    }
    return state;
}

WalkState evolve(WalkState state, const ShiftRule& rule, int steps,
                 const StepObserver& observer) {
    if (steps < 0) {
        throw DomainError("steps must be non-negative, got " +
                          std::to_string(steps));
    }
    const int extent = support_extent(state);
    const int n = state.lattice().half_width();
    if (extent + steps > n) {
        throw LatticeError(
            "lattice half-width " + std::to_string(n) +
            " is too small for " + std::to_string(steps) +
            " steps from support extent " + std::to_string(extent) +
            "; need at least " + std::to_string(extent + steps));
    }
    if (observer) {
        observer(0, state);
    }
    for (int t = 1; t <= steps; ++t) {
        state = step(std::move(state), rule);
        if (observer) {
            observer(t, state);
        }
    }
    return state;
}

}  // namespace triwalk
