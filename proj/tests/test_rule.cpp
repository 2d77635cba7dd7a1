#include <fstream>
#include <random>
#include <sstream>

#include <doctest.h>

#include "triwalk/rule.hpp"

using namespace triwalk;

namespace {

ShiftRule parse(const std::string& text) {
    return parse_rule(RuleSource{text});
}

RuleParseError capture(const std::string& text) {
    try {
        parse_rule(RuleSource{text});
    } catch (const RuleParseError& e) {
        return e;
    }
    throw std::logic_error("expected RuleParseError");
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE(in.good());
    std::ostringstream text;
    text << in.rdbuf();
    return text.str();
}

}  // namespace

TEST_CASE("canonical unanimous text parses to the builtin rule") {
    const ShiftRule rule = parse(
        "coins 3\n"
        "basis computational\n"
        "move +1 when 000\n"
        "move -1 when 111\n"
        "default stay\n");
    CHECK(rule == builtin_unanimous());
}

TEST_CASE("builtin unanimous matches the shipped rule file") {
    const std::string path = std::string(TRIWALK_REPO_DIR) +
                             "/rules/unanimous.rule";
    const ShiftRule from_file = parse(read_file(path));
    CHECK(from_file == builtin_unanimous());
}

TEST_CASE("builtin unanimous moves exactly two outcomes") {
    const ShiftRule rule = builtin_unanimous();
    int nonzero = 0;
    for (int d : rule.displacement) {
        nonzero += d != 0;
    }
    CHECK(nonzero == 2);
    CHECK(rule.displacement[0] == +1);
    CHECK(rule.displacement[7] == -1);
    CHECK(rule.condition_basis == ConditionBasis::computational);
}

TEST_CASE("duplicate condition names the pattern and its position") {
    const RuleParseError e = capture(
        "coins 3\n"
        "move +1 when 000\n"
        "move -1 when 000\n"
        "default stay\n");
    CHECK(e.kind == RuleErrorKind::duplicate_condition);
    CHECK(e.line == 3);
    CHECK(e.token == "000");
    CHECK(e.column == 14);
}

TEST_CASE("displacement outside the range is rejected") {
    const RuleParseError e = capture(
        "move +2 when 000\n"
        "default stay\n");
    CHECK(e.kind == RuleErrorKind::displacement_range);
    CHECK(e.line == 1);
    CHECK(e.token == "+2");
    CHECK(e.column == 6);
}

TEST_CASE("missing default is reported past the last line") {
    const RuleParseError e = capture("move +1 when 000\n");
    CHECK(e.kind == RuleErrorKind::missing_default);
    CHECK(e.line == 2);
}

TEST_CASE("unknown keyword and unknown basis") {
    CHECK(capture("hop +1 when 000\n").kind == RuleErrorKind::syntax);
    CHECK(capture("basis diagonal\ndefault +1\n").kind ==
          RuleErrorKind::unknown_basis);
}

TEST_CASE("bad coin patterns") {
    CHECK(capture("move +1 when 00\ndefault stay\n").kind ==
          RuleErrorKind::bad_pattern);
    CHECK(capture("move +1 when 0012\ndefault stay\n").kind ==
          RuleErrorKind::bad_pattern);
    CHECK(capture("move +1 when 0a1\ndefault stay\n").kind ==
          RuleErrorKind::bad_pattern);
}

TEST_CASE("coin count other than 3 is rejected") {
    const RuleParseError e = capture("coins 2\ndefault +1\n");
    CHECK(e.kind == RuleErrorKind::unsupported_coin_count);
    CHECK(e.line == 1);
}

TEST_CASE("all-stay rule needs the allow-trivial flag") {
    CHECK(capture("default stay\n").kind == RuleErrorKind::trivial_rule);
    const ShiftRule rule = parse("allow-trivial\ndefault stay\n");
    for (int d : rule.displacement) {
        CHECK(d == 0);
    }
}

TEST_CASE("second default clause is rejected") {
    const RuleParseError e = capture(
        "move +1 when 000\n"
        "default stay\n"
        "default -1\n");
    CHECK(e.kind == RuleErrorKind::duplicate_condition);
    CHECK(e.line == 3);
}

TEST_CASE("comments, blank lines and spacing are ignored") {
    const ShiftRule rule = parse(
        "# header comment\n"
        "\n"
        "  coins   3   # trailing comment\n"
        "\tmove +1  when   000\n"
        "move -1 when 111\n"
        "\n"
        "default stay # done\n");
    CHECK(rule == builtin_unanimous());
}

TEST_CASE("parsing is deterministic") {
    const std::string text =
        "basis hadamard\nmove +1 when 010\ndefault -1\n";
    CHECK(parse(text) == parse(text));
}

TEST_CASE("print and re-parse is the identity on random rules") {
    std::mt19937_64 rng(23);
    std::uniform_int_distribution<int> disp(-1, 1);
    std::uniform_int_distribution<int> basis(0, 1);
    for (int trial = 0; trial < 50; ++trial) {
        ShiftRule rule;
        for (int c = 0; c < kCoinDim; ++c) {
            rule.displacement[c] = disp(rng);
        }
        rule.condition_basis = basis(rng) == 0 ? ConditionBasis::computational
                                               : ConditionBasis::hadamard;
        CHECK(parse(print_rule(rule)) == rule);
    }
}

TEST_CASE("diagnostics of the unanimous rule") {
    const RuleDiagnostics diag = rule_diagnostics(builtin_unanimous());
    CHECK(diag.moving_outcomes == 2);
    CHECK(diag.stationary_dimension == 6);
    CHECK(diag.max_speed == 1);
    CHECK(diag.shift_unitary);
}

TEST_CASE("diagnostics of degenerate and saturated rules") {
    const ShiftRule all_stay = parse("allow-trivial\ndefault stay\n");
    RuleDiagnostics diag = rule_diagnostics(all_stay);
    CHECK(diag.moving_outcomes == 0);
    CHECK(diag.stationary_dimension == 8);
    CHECK(diag.max_speed == 0);
    CHECK(diag.shift_unitary);

    const ShiftRule all_move = parse("default +1\n");
    diag = rule_diagnostics(all_move);
    CHECK(diag.moving_outcomes == 8);
    CHECK(diag.stationary_dimension == 0);
    CHECK(diag.max_speed == 1);
    CHECK(diag.shift_unitary);
}

TEST_CASE("explicit listing of all eight outcomes needs no default") {
    const ShiftRule rule = parse(
        "move +1 when 000\n"
        "stay when 001\n"
        "stay when 010\n"
        "stay when 011\n"
        "stay when 100\n"
        "stay when 101\n"
        "stay when 110\n"
        "move -1 when 111\n");
    CHECK(rule == builtin_unanimous());
}
