#pragma once

#include <array>
#include <string>

#include "triwalk/errors.hpp"
#include "triwalk/lattice.hpp"

namespace triwalk {

/// Basis in which the coin projectors of the conditional shift are evaluated.
/// `computational` conditions on |c1 c2 c3> after the per-step Hadamard layer;
/// `hadamard` conditions on the |+/->^3 patterns instead (the engine realizes
/// this by conjugating the shift with an extra Hadamard pair).
enum class ConditionBasis { computational, hadamard };

const char* to_string(ConditionBasis basis);

/// Total map from each of the 8 coin outcomes to a displacement in {-1,0,+1}.
struct ShiftRule {
    std::array<int, kCoinDim> displacement{};
    ConditionBasis condition_basis = ConditionBasis::computational;

    friend bool operator==(const ShiftRule&, const ShiftRule&) = default;
};

/// A rule document in the line-oriented grammar:
///
///   coins 3                       # optional, must be 3 when present
///   basis computational|hadamard  # optional, defaults to computational
///   move +1|-1 when <bitpattern>
///   stay when <bitpattern>
///   default stay|+1|-1
///   allow-trivial                 # permits a rule with no moving outcome
///
/// Comments start with '#'; blank lines are ignored. Keywords are
/// case-sensitive. A pattern is exactly 3 characters of {0,1}, coin 1 first.
struct RuleSource {
    std::string text;
};

/// Parses and validates a rule document. Outcomes not covered by a move/stay
/// line take the default clause's displacement; if outcomes remain
/// unspecified and there is no default, parsing fails. End-of-input errors
/// (missing default, degenerate rule) are reported one line past the last
/// source line.
ShiftRule parse_rule(const RuleSource& source);

/// The unanimous-outcome rule: |000> moves +1, |111> moves -1, the six mixed
/// outcomes stay; conditioned in the computational basis after the per-step
/// Hadamard layer.
ShiftRule builtin_unanimous();

struct RuleDiagnostics {
    int moving_outcomes;       ///< outcomes with nonzero displacement
    int stationary_dimension;  ///< outcomes that leave the walker in place
    int max_speed;             ///< max |displacement| = light-cone speed
    bool shift_unitary;        ///< cyclic shift is a permutation (checked)
};

RuleDiagnostics rule_diagnostics(const ShiftRule& rule);

/// Canonical text form; parse_rule(print_rule(r)) == r.
std::string print_rule(const ShiftRule& rule);

}  // namespace triwalk
