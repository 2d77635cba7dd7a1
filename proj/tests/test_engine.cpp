#include <cmath>

#include <doctest.h>

#include "triwalk/analytics.hpp"
#include "triwalk/engine.hpp"
#include "test_helpers.hpp"

using namespace triwalk;

namespace {

constexpr double kInvSqrt2 = 0.70710678118654752440084436210485;
constexpr double kInvSqrt8 = 0.35355339059327373;

WalkState coin_at_origin(int bits, int half_width) {
    std::array<Complex, kCoinDim> coin{};
    coin[bits] = 1.0;
    return make_state(coin, 0, LatticeSpec(half_width));
}

WalkState ghz_at_origin(int half_width) {
    std::array<Complex, kCoinDim> coin{};
    coin[0] = kInvSqrt2;
    coin[7] = kInvSqrt2;
    return make_state(coin, 0, LatticeSpec(half_width));
}

}  // namespace

TEST_CASE("coin layer spreads |000> uniformly over the eight outcomes") {
    const WalkState state = apply_coin_layer(coin_at_origin(0, 2));
    for (int c = 0; c < kCoinDim; ++c) {
        CHECK(std::abs(state.amplitude(CoinIndex(c), 0) -
                       Complex{kInvSqrt8, 0.0}) < 1e-15);
    }
    CHECK(std::abs(norm_squared(state) - 1.0) <= 1e-13);
}

TEST_CASE("coin layer is an involution") {
    std::mt19937_64 rng(31);
    const LatticeSpec lattice(4);
    for (int trial = 0; trial < 30; ++trial) {
        const WalkState original = test::random_interior_state(rng, lattice);
        const WalkState twice =
            apply_coin_layer(apply_coin_layer(original));
        CHECK(test::max_component_delta(original, twice) <= 1e-13);
    }
}

TEST_CASE("coin layer on GHZ kills the odd-parity outcomes exactly") {
    const WalkState state = apply_coin_layer(ghz_at_origin(2));
    for (int c = 0; c < kCoinDim; ++c) {
        const Complex a = state.amplitude(CoinIndex(c), 0);
        const int parity = ((c >> 2) ^ (c >> 1) ^ c) & 1;
        if (parity == 1) {
            CHECK(a == Complex{});  // exact cancellation
        } else {
            CHECK(std::abs(std::abs(a) - 0.5) <= 1e-15);
        }
    }
}

TEST_CASE("shift moves only the unanimous outcomes") {
    const WalkState spread = apply_coin_layer(coin_at_origin(0, 2));
    const WalkState shifted = apply_shift(spread, builtin_unanimous());
    CHECK(std::abs(shifted.amplitude(CoinIndex(0), 1) -
                   Complex{kInvSqrt8, 0.0}) < 1e-15);
    CHECK(std::abs(shifted.amplitude(CoinIndex(7), -1) -
                   Complex{kInvSqrt8, 0.0}) < 1e-15);
    CHECK(shifted.amplitude(CoinIndex(0), 0) == Complex{});
    CHECK(shifted.amplitude(CoinIndex(7), 0) == Complex{});
    for (int c = 1; c < 7; ++c) {
        CHECK(std::abs(shifted.amplitude(CoinIndex(c), 0) -
                       Complex{kInvSqrt8, 0.0}) < 1e-15);
    }
    CHECK(std::abs(norm_squared(shifted) - 1.0) <= 1e-13);
}

TEST_CASE("all-stay shift leaves the state bit-exact") {
    std::mt19937_64 rng(37);
    const ShiftRule all_stay = parse_rule(
        RuleSource{"allow-trivial\ndefault stay\n"});
    const WalkState state = test::random_interior_state(rng, LatticeSpec(3));
    const WalkState after = apply_shift(state, all_stay);
    CHECK(test::max_component_delta(state, after) == 0.0);
}

TEST_CASE("boundary amplitude on a moving outcome raises BoundaryError") {
    const LatticeSpec lattice(2);
    std::array<Complex, kCoinDim> coin{};
    coin[0] = 1.0;  // outcome 000 moves +1
    const WalkState state = make_state(coin, 2, lattice);
    CHECK_THROWS_AS(apply_shift(state, builtin_unanimous()), BoundaryError);
    try {
        apply_shift(state, builtin_unanimous());
    } catch (const BoundaryError& e) {
        CHECK(e.site == 2);
        CHECK(e.magnitude == doctest::Approx(1.0));
    }
}

TEST_CASE("one step from |000> gives the 1/8, 6/8, 1/8 distribution") {
    const WalkState state = step(coin_at_origin(0, 3), builtin_unanimous());
    const std::vector<double> dist = position_distribution(state);
    CHECK(dist[2] == doctest::Approx(0.125).epsilon(1e-12));   // j = -1
    CHECK(dist[3] == doctest::Approx(0.75).epsilon(1e-12));    // j = 0
    CHECK(dist[4] == doctest::Approx(0.125).epsilon(1e-12));   // j = +1
}

TEST_CASE("one step from GHZ gives the 3/4, 1/4 distribution") {
    const WalkState state = step(ghz_at_origin(3), builtin_unanimous());
    const std::vector<double> dist = position_distribution(state);
    CHECK(dist[3] == doctest::Approx(0.75).epsilon(1e-12));   // j = 0
    CHECK(dist[4] == doctest::Approx(0.25).epsilon(1e-12));   // j = +1
    CHECK(dist[2] == 0.0);                                    // j = -1
}

TEST_CASE("|111> and |000> starts give the same mutual information") {
    const WalkState a = step(coin_at_origin(0, 3), builtin_unanimous());
    const WalkState b = step(coin_at_origin(7, 3), builtin_unanimous());
    CHECK(std::abs(mutual_information(a) - mutual_information(b)) <= 1e-12);
}

TEST_CASE("evolve with zero steps returns the input unchanged") {
    const WalkState state = ghz_at_origin(3);
    const WalkState after = evolve(state, builtin_unanimous(), 0);
    CHECK(test::max_component_delta(state, after) == 0.0);
}

TEST_CASE("evolve rejects an insufficient lattice up front") {
    CHECK_THROWS_AS(evolve(coin_at_origin(0, 2), builtin_unanimous(), 3),
                    LatticeError);
}

TEST_CASE("evolve rejects negative step counts") {
    CHECK_THROWS_AS(evolve(coin_at_origin(0, 2), builtin_unanimous(), -1),
                    DomainError);
}

TEST_CASE("ten GHZ steps on N=50 stay normalized inside the light cone") {
    WalkState state = ghz_at_origin(50);
    int observed = -1;
    state = evolve(std::move(state), builtin_unanimous(), 10,
                   [&observed](int t, const WalkState&) { observed = t; });
    CHECK(observed == 10);
    CHECK(std::abs(norm_squared(state) - 1.0) <= 1e-11);
    for (int c = 0; c < kCoinDim; ++c) {
        for (int j = -50; j <= 50; ++j) {
            if (std::abs(j) > 10) {
                CHECK(state.amplitude(CoinIndex(c), j) == Complex{});
            }
        }
    }
}

TEST_CASE("observer sees t = 0 through t = steps") {
    std::vector<int> seen;
    evolve(ghz_at_origin(5), builtin_unanimous(), 4,
           [&seen](int t, const WalkState& s) {
               seen.push_back(t);
               CHECK(std::abs(norm_squared(s) - 1.0) <= 1e-12);
           });
    CHECK(seen == std::vector<int>{0, 1, 2, 3, 4});
}

TEST_CASE("step preserves the norm for 200 random states") {
    std::mt19937_64 rng(41);
    const LatticeSpec lattice(4);
    for (int trial = 0; trial < 200; ++trial) {
        const WalkState state = test::random_interior_state(rng, lattice);
        const double before = norm_squared(state);
        const double after = norm_squared(step(state, builtin_unanimous()));
        CHECK(std::abs(after - before) <= 1e-12);
    }
}

TEST_CASE("light cone stays exact over every step") {
    std::mt19937_64 rng(43);
    for (int trial = 0; trial < 10; ++trial) {
        WalkState state =
            make_state(test::random_coin(rng), 0, LatticeSpec(8));
        evolve(std::move(state), builtin_unanimous(), 8,
               [](int t, const WalkState& s) {
                   const int n = s.lattice().half_width();
                   for (int c = 0; c < kCoinDim; ++c) {
                       for (int j = -n; j <= n; ++j) {
                           if (std::abs(j) > t) {
                               CHECK(s.amplitude(CoinIndex(c), j) ==
                                     Complex{});
                           }
                       }
                   }
               });
    }
}

TEST_CASE("step is linear on unnormalized inputs") {
    std::mt19937_64 rng(47);
    std::normal_distribution<double> gauss;
    const LatticeSpec lattice(4);
    const EngineOptions unchecked{.check_norm = false};
    for (int trial = 0; trial < 20; ++trial) {
        const WalkState psi = test::random_interior_state(rng, lattice, false);
        const WalkState phi = test::random_interior_state(rng, lattice, false);
        const Complex alpha{gauss(rng), gauss(rng)};
        const Complex beta{gauss(rng), gauss(rng)};

        WalkState combined = WalkState::zero(lattice);
        for (std::size_t i = 0; i < combined.amplitudes().size(); ++i) {
            combined.amplitudes()[i] =
                alpha * psi.amplitudes()[i] + beta * phi.amplitudes()[i];
        }
        const WalkState lhs = step(combined, builtin_unanimous(), unchecked);
        const WalkState a = step(psi, builtin_unanimous(), unchecked);
        const WalkState b = step(phi, builtin_unanimous(), unchecked);
        double max_delta = 0.0;
        for (std::size_t i = 0; i < lhs.amplitudes().size(); ++i) {
            max_delta = std::max(
                max_delta,
                std::abs(lhs.amplitudes()[i] - alpha * a.amplitudes()[i] -
                         beta * b.amplitudes()[i]));
        }
        CHECK(max_delta <= 1e-12);
    }
}

TEST_CASE("hadamard-basis conditioning changes the one-step distribution") {
    ShiftRule rule = builtin_unanimous();
    rule.condition_basis = ConditionBasis::hadamard;
    // In the Hadamard-conditioned reading, the GHZ start spreads immediately:
    // both edge projectors catch amplitude, unlike the computational reading.
    const WalkState state = step(ghz_at_origin(3), rule);
    const std::vector<double> dist = position_distribution(state);
    CHECK(std::abs(norm_squared(state) - 1.0) <= 1e-12);
    CHECK(dist[4] > 0.0);
    CHECK(dist[2] > 0.0);
    const WalkState computational =
        step(ghz_at_origin(3), builtin_unanimous());
    CHECK(std::abs(mutual_information(state) -
                   mutual_information(computational)) > 0.1);
}
