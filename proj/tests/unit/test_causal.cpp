#include <array>
#include <string>
#include <variant>

#include "doctest.h"
#include "ioncoupler/causal.hpp"

using namespace ioncoupler;
using namespace ioncoupler::causal;

namespace {

relation rel(const char* text) { return parse_relation(text); }

bool composes_to(const char* p1, const char* p2, const char* expected) {
    const auto result = compose(rel(p1), rel(p2));
    const auto* r = std::get_if<relation>(&result);
    return r != nullptr && serialize(*r) == expected;
}

const char* blocked_reason(const char* p1, const char* p2) {
    static std::string reason;
    const auto result = compose(rel(p1), rel(p2));
    const auto* n = std::get_if<no_relation>(&result);
    REQUIRE(n != nullptr);
    reason = n->reason;
    return reason.c_str();
}

} // namespace

TEST_CASE("terms split numeric subscripts and keep everything else") {
    CHECK(rel("y_1 ->= f_1").left == term{"y", "1"});
    CHECK(rel("x_12 ->= a").left == term{"x", "12"});
    CHECK(rel("v_z ->= a").left == term{"v_z", ""});
    CHECK(rel("Q/C_eff ->= a").left == term{"Q/C_eff", ""});
    CHECK(rel("a_1_2 ->= b").left == term{"a_1", "2"});
}

TEST_CASE("serialization round-trips every arrow") {
    for (const char* text : {"a ->= b", "a <-= b", "a <->= b", "a ~corr= b",
                             "a ~join= b", "a ?= b", "y_1 ->= f_12"}) {
        const auto r = rel(text);
        CHECK(serialize(r) == text);
        CHECK(parse_relation(serialize(r)) == r);
    }
}

TEST_CASE("unicode arrow spellings normalize to ascii") {
    CHECK(serialize(rel("a →= b")) == "a ->= b");
    CHECK(serialize(rel("a ←= b")) == "a <-= b");
    CHECK(serialize(rel("a ↔= b")) == "a <->= b");
    CHECK(serialize(rel("a ⌒⌒= b")) == "a ~corr= b");
    CHECK(serialize(rel("a >-<= b")) == "a ~join= b");
}

TEST_CASE("parse failures carry the offending offset") {
    CHECK_THROWS_WITH_AS(parse_relation(""), "empty relation", parse_error);
    CHECK_THROWS_WITH_AS(parse_relation("   "), "empty relation", parse_error);
    CHECK_THROWS_WITH_AS(parse_relation("a ->="), "relation needs LEFT ARROW RIGHT", parse_error);
    CHECK_THROWS_WITH_AS(parse_relation("a ->= b c"), "trailing input after relation",
                         parse_error);
    CHECK_THROWS_WITH_AS(parse_relation("a => b"), "unknown arrow '=>'", parse_error);
    try {
        parse_relation("a => b");
        FAIL("expected parse_error");
    } catch (const parse_error& e) {
        CHECK(e.offset() == 2);
    }
    try {
        parse_relation("a ->= b extra");
        FAIL("expected parse_error");
    } catch (const parse_error& e) {
        CHECK(e.offset() == 8);
    }
}

TEST_CASE("the composition table") {
    // Shared cause / shared effect stay in premise order.
    CHECK(composes_to("y ->= f", "y ->= g", "f ~corr= g"));
    CHECK(composes_to("y <-= f", "y <-= g", "f ~join= g"));
    CHECK(composes_to("y <->= f", "y <->= g", "f <->= g"));
    // Chains through y are written from the second premise's expression.
    CHECK(composes_to("y ->= f", "y <-= g", "g ->= f"));
    CHECK(composes_to("y <-= f", "y ->= g", "g <-= f"));
    CHECK(composes_to("y <->= f", "y ->= g", "g <-= f"));
    CHECK(composes_to("y <->= f", "y <-= g", "g ->= f"));
    CHECK(composes_to("y ->= f", "y <->= g", "g ->= f"));
    CHECK(composes_to("y <-= f", "y <->= g", "g <-= f"));
}

TEST_CASE("compositions outside the table are rejected, not invented") {
    CHECK(std::string(blocked_reason("y_1 ->= f", "y_2 ->= g")) == "mismatched subscripts");
    CHECK(std::string(blocked_reason("y ~corr= f", "y ->= g")) == "undefined-in-table");
    CHECK(std::string(blocked_reason("y ->= f", "y ~join= g")) == "undefined-in-table");
    CHECK(std::string(blocked_reason("y ?= f", "y ?= g")) == "undefined-in-table");
    CHECK_THROWS_AS((void)compose(rel("y ->= f"), rel("z ->= g")), validation_error);
}

TEST_CASE("composition never upgrades to mutual causation") {
    constexpr std::array<arrow, 6> arrows = {arrow::forward,     arrow::backward,
                                             arrow::bidirectional, arrow::correlation,
                                             arrow::common_effect, arrow::unknown};
    const term y{"y", ""};
    const term f{"f", ""};
    const term g{"g", ""};
    for (const arrow a1 : arrows) {
        for (const arrow a2 : arrows) {
            const auto result = compose(relation{y, f, a1}, relation{y, g, a2});
            const auto* r = std::get_if<relation>(&result);
            if (r != nullptr && r->kind == arrow::bidirectional) {
                CHECK(a1 == arrow::bidirectional);
                CHECK(a2 == arrow::bidirectional);
            }
        }
    }
}

TEST_CASE("only symmetric relations can be flipped") {
    CHECK(serialize(invert(rel("a <->= b"))) == "b <->= a");
    CHECK(serialize(invert(rel("a ~corr= b"))) == "b ~corr= a");
    CHECK(serialize(invert(rel("a ~join= b"))) == "b ~join= a");
    CHECK_THROWS_AS((void)invert(rel("a ->= b")), non_invertible);
    CHECK_THROWS_AS((void)invert(rel("a <-= b")), non_invertible);
    CHECK_THROWS_AS((void)invert(rel("a ?= b")), non_invertible);
    try {
        (void)invert(rel("a ->= b"));
        FAIL("expected non_invertible");
    } catch (const non_invertible& e) {
        CHECK(e.offending() == rel("a ->= b"));
        CHECK(std::string(e.what()) ==
              "invert: 'a ->= b' is directional; swapping its sides changes its meaning");
    }
}

TEST_CASE("scripts skip comments and blank lines and report bad lines by number") {
    const auto script = parse_script("# setup\n"
                                     "\n"
                                     "given V ->= z   # drives the plate\n"
                                     "given z ->= Q\n"
                                     "\n"
                                     "claim V ->= Q\n");
    REQUIRE(script.premises.size() == 2);
    REQUIRE(script.claims.size() == 1);
    CHECK(serialize(script.premises[0]) == "V ->= z");
    CHECK(serialize(script.claims[0]) == "V ->= Q");

    CHECK_THROWS_WITH_AS(parse_script("given a ->= b\n\nassume b ->= c\n"),
                         "line 3: expected 'given' or 'claim'", parse_error);
    CHECK_THROWS_WITH_AS(parse_script("given a => b\n"), "line 1: unknown arrow '=>'",
                         parse_error);
}

TEST_CASE("claims match by meaning, not spelling") {
    const auto script = parse_script("given a ->= b\nclaim b <-= a\n");
    const auto report = check_derivation(script);
    REQUIRE(report.verdicts.size() == 1);
    CHECK(report.verdicts[0].derivable);
    CHECK(report.verdicts[0].rule == "premise");
    CHECK(report.all_derivable());
}

TEST_CASE("forward chains are reachable, mutual causation is not") {
    const auto script = parse_script("given V ->= z\n"
                                     "given z ->= Q\n"
                                     "claim V ->= Q\n"
                                     "claim V <->= Q\n");
    const auto report = check_derivation(script);
    REQUIRE(report.verdicts.size() == 2);
    CHECK(report.verdicts[0].derivable);
    CHECK(report.verdicts[0].rule ==
          "transitivity (extended): V ->= z with z ->= Q");
    CHECK_FALSE(report.verdicts[1].derivable);
    CHECK_FALSE(report.all_derivable());
}

TEST_CASE("composition fires inside derivations with a citable rule") {
    // shared cause: z drives both Q and V, so Q and V end up correlated
    const auto script = parse_script("given z ->= Q\n"
                                     "given z ->= V\n"
                                     "claim Q ~corr= V\n");
    const auto report = check_derivation(script);
    REQUIRE(report.verdicts.size() == 1);
    CHECK(report.verdicts[0].derivable);
    CHECK(report.verdicts[0].rule == "compose(->=, ->=): z ->= Q with z ->= V");

    bool found = false;
    for (const auto& d : report.derived)
        if (serialize(d.rel) == "Q ~corr= V")
            found = true;
    CHECK(found);
}

TEST_CASE("the closure explores chained compositions") {
    // x <- a and x <-> b: the table gives b <-= a, i.e. a drives b... then a
    // separate chain b -> c extends it to a -> c.
    const auto script = parse_script("given x <-= a\n"
                                     "given x <->= b\n"
                                     "given b ->= c\n"
                                     "claim b <-= a\n"
                                     "claim a ->= c\n");
    const auto report = check_derivation(script);
    REQUIRE(report.verdicts.size() == 2);
    CHECK(report.verdicts[0].derivable);
    CHECK(report.verdicts[1].derivable);
    CHECK(report.all_derivable());
}
