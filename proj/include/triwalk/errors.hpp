#pragma once

#include <stdexcept>
#include <string>

namespace triwalk {

/// Base class for every error thrown by this library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Precondition violation: bad site index, non-normalized amplitudes, invalid
/// configuration values, and similar caller mistakes.
class DomainError : public Error {
public:
    using Error::Error;
};

/// Nonzero amplitude sits at a lattice edge where a shift would push it off.
class BoundaryError : public Error {
public:
    BoundaryError(const std::string& msg, double magnitude, int site)
        : Error(msg), magnitude(magnitude), site(site) {}

    double magnitude;  ///< offending amplitude magnitude
    int site;          ///< offending site index
};

/// Lattice half-width too small for the requested number of steps.
class LatticeError : public Error {
public:
    using Error::Error;
};

/// A numerical invariant broke down: spectral-sum drift, eigenvalues below the
/// clamping floor, or disagreement between independent entropy routes.
class NumericalError : public Error {
public:
    using Error::Error;
};

enum class RuleErrorKind {
    syntax,                  ///< unknown keyword, malformed token, stray text
    duplicate_condition,     ///< same coin pattern (or default) specified twice
    missing_default,         ///< unspecified outcomes and no default clause
    displacement_range,      ///< displacement outside {-1, 0, +1}
    unknown_basis,           ///< basis keyword other than computational/hadamard
    bad_pattern,             ///< coin pattern not 3 characters of {0, 1}
    unsupported_coin_count,  ///< coins directive with a value other than 3
    trivial_rule,            ///< no moving outcome and no allow-trivial flag
};

const char* to_string(RuleErrorKind kind);

/// Rule DSL parse or validation failure. Carries the 1-based source location
/// and the offending token text (empty for end-of-input errors).
class RuleParseError : public Error {
public:
    RuleParseError(RuleErrorKind kind, int line, int column, std::string token,
                   const std::string& detail);

    RuleErrorKind kind;
    int line;
    int column;
    std::string token;
};

}  // namespace triwalk
