#pragma once

#include <cstddef>

#include "triwalk/errors.hpp"

namespace triwalk {

/// Dimension of the three-coin space.
inline constexpr int kCoinDim = 8;

/// Symmetric one-dimensional lattice of sites j in [-N, N].
class LatticeSpec {
public:
    explicit LatticeSpec(int half_width);

    int half_width() const { return half_width_; }
    int site_count() const { return 2 * half_width_ + 1; }

    bool contains(int site) const {
        return site >= -half_width_ && site <= half_width_;
    }

    /// Maps site j to its array offset j + N; throws DomainError out of range.
    int site_offset(int site) const;

    friend bool operator==(const LatticeSpec&, const LatticeSpec&) = default;

private:
    int half_width_;
};

/// Index of a three-coin computational basis state |c1 c2 c3>, with coin 1 as
/// the most significant bit: |000> -> 0, |111> -> 7.
class CoinIndex {
public:
    explicit CoinIndex(int value);

    int value() const { return value_; }

    friend bool operator==(CoinIndex, CoinIndex) = default;

private:
    int value_;
};

/// Offset of (coin, site) in the coin-major amplitude layout:
/// c * (2N+1) + (j + N). Bijective over the joint space.
std::size_t global_offset(CoinIndex coin, int site, const LatticeSpec& lattice);

}  // namespace triwalk
