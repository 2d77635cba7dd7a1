#include "triwalk/rule.hpp"

#include <cctype>
#include <optional>
#include <vector>

namespace triwalk {

const char* to_string(ConditionBasis basis) {
    return basis == ConditionBasis::computational ? "computational" : "hadamard";
}

namespace {

struct Token {
    std::string text;
    int column;  // 1-based
};

struct Line {
    int number;  // 1-based
    std::vector<Token> tokens;
};

// Splits the source into per-line whitespace-separated tokens, dropping
// comments and blank lines but keeping physical line numbers.
std::vector<Line> tokenize(const std::string& text, int& line_count) {
    std::vector<Line> lines;
    line_count = 0;
    std::size_t pos = 0;
    while (pos < text.size()) {
        const std::size_t eol = text.find('\n', pos);
        const std::size_t end = eol == std::string::npos ? text.size() : eol;
        std::string_view raw(text.data() + pos, end - pos);
        ++line_count;
        const std::size_t hash = raw.find('#');
        if (hash != std::string_view::npos) {
            raw = raw.substr(0, hash);
        }
        Line line{line_count, {}};
        std::size_t i = 0;
        while (i < raw.size()) {
            if (std::isspace(static_cast<unsigned char>(raw[i]))) {
                ++i;
                continue;
            }
            const std::size_t start = i;
            while (i < raw.size() &&
                   !std::isspace(static_cast<unsigned char>(raw[i]))) {
                ++i;
            }
            line.tokens.push_back({std::string(raw.substr(start, i - start)),
                                   static_cast<int>(start) + 1});
        }
        if (!line.tokens.empty()) {
            lines.push_back(std::move(line));
        }
        if (eol == std::string::npos) {
            break;
        }
        pos = eol + 1;
    }
    return lines;
}

bool integer_like(const std::string& s) {
    std::size_t i = (s.size() > 1 && (s[0] == '+' || s[0] == '-')) ? 1 : 0;
    if (i >= s.size()) {
        return false;
    }
    for (; i < s.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) {
            return false;
        }
    }
    return true;
}

// Accepts only "+1" / "-1"; other integers are a range error, anything else a
// syntax error.
int parse_displacement(const Token& token, int line) {
    if (token.text == "+1") {
        return +1;
    }
    if (token.text == "-1") {
        return -1;
    }
    if (integer_like(token.text)) {
        throw RuleParseError(RuleErrorKind::displacement_range, line,
                             token.column, token.text,
                             "displacement must be +1 or -1 (use 'stay' for 0)");
    }
    throw RuleParseError(RuleErrorKind::syntax, line, token.column, token.text,
                         "expected a displacement");
}

int parse_pattern(const Token& token, int line) {
    if (token.text.size() != 3 ||
        token.text.find_first_not_of("01") != std::string::npos) {
        throw RuleParseError(RuleErrorKind::bad_pattern, line, token.column,
                             token.text,
                             "coin pattern must be 3 characters of {0,1}");
    }
    return (token.text[0] - '0') * 4 + (token.text[1] - '0') * 2 +
           (token.text[2] - '0');
}

std::string pattern_of(int coin) {
    return {static_cast<char>('0' + ((coin >> 2) & 1)),
            static_cast<char>('0' + ((coin >> 1) & 1)),
            static_cast<char>('0' + (coin & 1))};
}

void require_token_count(const Line& line, std::size_t count,
                         const char* usage) {
    if (line.tokens.size() < count) {
        const Token& last = line.tokens.back();
        throw RuleParseError(RuleErrorKind::syntax, line.number,
                             last.column + static_cast<int>(last.text.size()),
                             "", std::string("incomplete clause, expected '") +
                                     usage + "'");
    }
    if (line.tokens.size() > count) {
        const Token& extra = line.tokens[count];
        throw RuleParseError(RuleErrorKind::syntax, line.number, extra.column,
                             extra.text, "unexpected trailing token");
    }
}

}  // namespace

ShiftRule parse_rule(const RuleSource& source) {
    int line_count = 0;
    const std::vector<Line> lines = tokenize(source.text, line_count);

    std::array<std::optional<int>, kCoinDim> assigned;
    std::optional<int> default_displacement;
    std::optional<ConditionBasis> basis;
    bool coins_seen = false;
    bool allow_trivial = false;

    for (const Line& line : lines) {
        const Token& keyword = line.tokens.front();
        if (keyword.text == "coins") {
            require_token_count(line, 2, "coins <int>");
            if (coins_seen) {
                throw RuleParseError(RuleErrorKind::syntax, line.number,
                                     keyword.column, keyword.text,
                                     "duplicate 'coins' directive");
            }
            coins_seen = true;
            const Token& value = line.tokens[1];
            if (!integer_like(value.text) || value.text[0] == '+' ||
                value.text[0] == '-') {
                throw RuleParseError(RuleErrorKind::syntax, line.number,
                                     value.column, value.text,
                                     "expected an unsigned integer");
            }
            if (value.text != "3") {
                throw RuleParseError(RuleErrorKind::unsupported_coin_count,
                                     line.number, value.column, value.text,
                                     "this artifact supports exactly 3 coins");
            }
        } else if (keyword.text == "basis") {
            require_token_count(line, 2, "basis computational|hadamard");
            if (basis) {
                throw RuleParseError(RuleErrorKind::syntax, line.number,
                                     keyword.column, keyword.text,
                                     "duplicate 'basis' directive");
            }
            const Token& value = line.tokens[1];
            if (value.text == "computational") {
                basis = ConditionBasis::computational;
            } else if (value.text == "hadamard") {
                basis = ConditionBasis::hadamard;
            } else {
                throw RuleParseError(RuleErrorKind::unknown_basis, line.number,
                                     value.column, value.text,
                                     "basis must be computational or hadamard");
            }
        } else if (keyword.text == "move" || keyword.text == "stay") {
            int displacement = 0;
            std::size_t when_index = 1;
            if (keyword.text == "move") {
                require_token_count(line, 4, "move +1|-1 when <pattern>");
                displacement = parse_displacement(line.tokens[1], line.number);
                when_index = 2;
            } else {
                require_token_count(line, 3, "stay when <pattern>");
            }
            const Token& when = line.tokens[when_index];
            if (when.text != "when") {
                throw RuleParseError(RuleErrorKind::syntax, line.number,
                                     when.column, when.text,
                                     "expected 'when'");
            }
            const Token& pattern = line.tokens[when_index + 1];
            const int coin = parse_pattern(pattern, line.number);
            if (assigned[coin]) {
                throw RuleParseError(RuleErrorKind::duplicate_condition,
                                     line.number, pattern.column, pattern.text,
                                     "outcome " + pattern.text +
                                         " already has a displacement");
            }
            assigned[coin] = displacement;
        } else if (keyword.text == "default") {
            require_token_count(line, 2, "default stay|+1|-1");
            if (default_displacement) {
                throw RuleParseError(RuleErrorKind::duplicate_condition,
                                     line.number, keyword.column, keyword.text,
                                     "only one default clause is permitted");
            }
            const Token& value = line.tokens[1];
            default_displacement =
                value.text == "stay" ? 0
                                     : parse_displacement(value, line.number);
        } else if (keyword.text == "allow-trivial") {
            require_token_count(line, 1, "allow-trivial");
            allow_trivial = true;
        } else {
            throw RuleParseError(RuleErrorKind::syntax, line.number,
                                 keyword.column, keyword.text,
                                 "unknown keyword");
        }
    }

    const int end_line = line_count + 1;
    ShiftRule rule;
    rule.condition_basis = basis.value_or(ConditionBasis::computational);
    for (int c = 0; c < kCoinDim; ++c) {
        if (assigned[c]) {
            rule.displacement[c] = *assigned[c];
        } else if (default_displacement) {
            rule.displacement[c] = *default_displacement;
        } else {
            throw RuleParseError(RuleErrorKind::missing_default, end_line, 1,
                                 "",
                                 "outcome " + pattern_of(c) +
                                     " is unspecified and there is no "
                                     "default clause");
        }
    }

    bool any_motion = false;
    for (int d : rule.displacement) {
        any_motion |= d != 0;
    }
    if (!any_motion && !allow_trivial) {
        throw RuleParseError(RuleErrorKind::trivial_rule, end_line, 1, "",
                             "rule moves no outcome; add 'allow-trivial' if "
                             "intended");
    }
    return rule;
}

ShiftRule builtin_unanimous() {
    ShiftRule rule;
    rule.displacement = {+1, 0, 0, 0, 0, 0, 0, -1};
    rule.condition_basis = ConditionBasis::computational;
    return rule;
}

RuleDiagnostics rule_diagnostics(const ShiftRule& rule) {
    RuleDiagnostics diag{0, 0, 0, true};
    for (int d : rule.displacement) {
        if (d != 0) {
            ++diag.moving_outcomes;
        } else {
            ++diag.stationary_dimension;
        }
        diag.max_speed = std::max(diag.max_speed, std::abs(d));
    }
    // Each coin block's cyclic translation must visit every site exactly
    // once; checked explicitly on a probe lattice rather than assumed.
    const int sites = 5;
    for (int d : rule.displacement) {
        std::vector<bool> hit(sites, false);
        for (int offset = 0; offset < sites; ++offset) {
            const int target = ((offset + d) % sites + sites) % sites;
            if (hit[target]) {
                diag.shift_unitary = false;
            }
            hit[target] = true;
        }
    }
    return diag;
}

std::string print_rule(const ShiftRule& rule) {
    std::string out = "coins 3\n";
    out += std::string("basis ") + to_string(rule.condition_basis) + "\n";
    bool any_motion = false;
    for (int d : rule.displacement) {
        any_motion |= d != 0;
    }
    if (!any_motion) {
        out += "allow-trivial\n";
    }
    for (int c = 0; c < kCoinDim; ++c) {
        const int d = rule.displacement[c];
        if (d != 0) {
            out += std::string("move ") + (d > 0 ? "+1" : "-1") + " when " +
                   pattern_of(c) + "\n";
        }
    }
    out += "default stay\n";
    return out;
}

}  // namespace triwalk
