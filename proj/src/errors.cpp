#include "triwalk/errors.hpp"

namespace triwalk {

const char* to_string(RuleErrorKind kind) {
    switch (kind) {
        case RuleErrorKind::syntax: return "syntax";
        case RuleErrorKind::duplicate_condition: return "duplicate-condition";
        case RuleErrorKind::missing_default: return "missing-default";
        case RuleErrorKind::displacement_range: return "displacement-range";
        case RuleErrorKind::unknown_basis: return "unknown-basis";
        case RuleErrorKind::bad_pattern: return "bad-pattern";
        case RuleErrorKind::unsupported_coin_count: return "unsupported-coin-count";
        case RuleErrorKind::trivial_rule: return "trivial-rule";
    }
    return "unknown";
}

namespace {

std::string format_rule_error(RuleErrorKind kind, int line, int column,
                              const std::string& token,
                              const std::string& detail) {
    std::string msg = "rule:" + std::to_string(line) + ":" +
                      std::to_string(column) + ": " + to_string(kind) + ": " +
                      detail;
    if (!token.empty()) {
        msg += " (token '" + token + "')";
    }
    return msg;
}

}  // namespace

RuleParseError::RuleParseError(RuleErrorKind kind, int line, int column,
                               std::string token, const std::string& detail)
    : Error(format_rule_error(kind, line, column, token, detail)),
      kind(kind),
      line(line),
      column(column),
      token(std::move(token)) {}

}  // namespace triwalk
