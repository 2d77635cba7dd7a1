#include <complex>
#include <cstring>
#include <set>

#include <doctest.h>

#include "triwalk/engine.hpp"
#include "triwalk/rule.hpp"
#include "triwalk/state.hpp"
#include "test_helpers.hpp"

using namespace triwalk;

namespace {
constexpr double kInvSqrt2 = 0.70710678118654752440084436210485;
}

TEST_CASE("lattice validates its half-width") {
    CHECK_THROWS_AS(LatticeSpec(0), DomainError);
    CHECK_THROWS_AS(LatticeSpec(-3), DomainError);
    const LatticeSpec lattice(4);
    CHECK(lattice.site_count() == 9);
    CHECK(lattice.site_count() % 2 == 1);
    CHECK(lattice.site_offset(-4) == 0);
    CHECK(lattice.site_offset(4) == 8);
    CHECK_THROWS_AS(lattice.site_offset(5), DomainError);
}

TEST_CASE("coin index range") {
    CHECK(CoinIndex(0).value() == 0);
    CHECK(CoinIndex(7).value() == 7);
    CHECK_THROWS_AS(CoinIndex(8), DomainError);
    CHECK_THROWS_AS(CoinIndex(-1), DomainError);
}

TEST_CASE("global_offset corner cases") {
    const LatticeSpec lattice(2);
    CHECK(global_offset(CoinIndex(0), -2, lattice) == 0);
    CHECK(global_offset(CoinIndex(7), 2, lattice) == 39);
    CHECK(global_offset(CoinIndex(3), 0, lattice) == 17);
    CHECK_THROWS_AS(global_offset(CoinIndex(0), 3, lattice), DomainError);
}

TEST_CASE("global_offset is a bijection over the joint space") {
    for (int n : {1, 2, 3, 4}) {
        const LatticeSpec lattice(n);
        std::set<std::size_t> seen;
        for (int c = 0; c < kCoinDim; ++c) {
            for (int j = -n; j <= n; ++j) {
                seen.insert(global_offset(CoinIndex(c), j, lattice));
            }
        }
        const std::size_t expected =
            static_cast<std::size_t>(kCoinDim) * lattice.site_count();
        CHECK(seen.size() == expected);
        CHECK(*seen.begin() == 0);
        CHECK(*seen.rbegin() == expected - 1);
    }
}

TEST_CASE("make_state places the coin vector at one site") {
    const LatticeSpec lattice(2);
    std::array<Complex, kCoinDim> coin{};
    coin[0] = 1.0;
    const WalkState state = make_state(coin, 0, lattice);
    CHECK(state.amplitudes()[2] == Complex{1.0, 0.0});
    int nonzero = 0;
    for (const Complex& a : state.amplitudes()) {
        nonzero += a != Complex{};
    }
    CHECK(nonzero == 1);
}

TEST_CASE("make_state accepts the GHZ coin vector") {
    const LatticeSpec lattice(2);
    std::array<Complex, kCoinDim> coin{};
    coin[0] = kInvSqrt2;
    coin[7] = kInvSqrt2;
    const WalkState state = make_state(coin, 0, lattice);
    int nonzero = 0;
    for (const Complex& a : state.amplitudes()) {
        if (a != Complex{}) {
            ++nonzero;
            CHECK(std::abs(a - Complex{kInvSqrt2, 0.0}) < 1e-15);
        }
    }
    CHECK(nonzero == 2);
    CHECK(std::abs(norm_squared(state) - 1.0) < 1e-12);
}

TEST_CASE("make_state rejects a non-normalized coin vector, reporting the norm") {
    const LatticeSpec lattice(2);
    std::array<Complex, kCoinDim> coin{};
    coin[0] = 0.5;  // norm 0.5
    try {
        make_state(coin, 0, lattice);
        FAIL("expected DomainError");
    } catch (const DomainError& e) {
        CHECK(std::string(e.what()).find("0.5") != std::string::npos);
    }
}

TEST_CASE("make_state rejects an out-of-range site") {
    std::array<Complex, kCoinDim> coin{};
    coin[0] = 1.0;
    CHECK_THROWS_AS(make_state(coin, 3, LatticeSpec(2)), DomainError);
}

TEST_CASE("norm_squared basics") {
    const LatticeSpec lattice(3);
    std::array<Complex, kCoinDim> coin{};
    coin[5] = 1.0;
    WalkState state = make_state(coin, 1, lattice);
    CHECK(norm_squared(state) == doctest::Approx(1.0).epsilon(1e-14));

    for (Complex& a : state.amplitudes()) {
        a *= 2.0;
    }
    CHECK(norm_squared(state) == doctest::Approx(4.0).epsilon(1e-14));
}

TEST_CASE("norm is preserved over ten engine steps") {
    std::array<Complex, kCoinDim> coin{};
    coin[0] = kInvSqrt2;
    coin[7] = kInvSqrt2;
    WalkState state = make_state(coin, 0, LatticeSpec(12));
    state = evolve(std::move(state), builtin_unanimous(), 10);
    CHECK(std::abs(norm_squared(state) - 1.0) <= 1e-12);
}

TEST_CASE("coefficient matrix of a basis state") {
    const LatticeSpec lattice(3);
    std::array<Complex, kCoinDim> coin{};
    coin[0] = 1.0;
    const WalkState state = make_state(coin, 0, lattice);
    const CoefficientMatrix matrix = as_coefficient_matrix(state);
    CHECK(matrix.at(0, 0) == Complex{1.0, 0.0});
    CHECK(matrix.at(1, 0) == Complex{});
    CHECK(matrix.at(0, -3) == Complex{});
}

TEST_CASE("coefficient matrix round trip is bit-identical") {
    std::mt19937_64 rng(11);
    const LatticeSpec lattice(5);
    for (int trial = 0; trial < 20; ++trial) {
        const WalkState state = test::random_interior_state(rng, lattice);
        const CoefficientMatrix matrix = as_coefficient_matrix(state);
        CHECK(std::abs(frobenius_norm_squared(matrix) - 1.0) <= 1e-12);
        const WalkState back = matrix.to_state();
        REQUIRE(back.amplitudes().size() == state.amplitudes().size());
        CHECK(std::memcmp(back.amplitudes().data(), state.amplitudes().data(),
                          state.amplitudes().size() * sizeof(Complex)) == 0);
    }
}
