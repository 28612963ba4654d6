#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "ioncoupler/errors.hpp"

namespace ioncoupler::causal {

/// Arrow-annotated equalities: each relation records not just that two
/// expressions are tied together but which one drives the other.
/// Canonical ASCII arrows (Unicode forms accepted on input):
///   ->=     left causes right
///   <-=     right causes left
///   <->=    mutual causation
///   ~corr=  correlated through a shared cause
///   ~join=  either side can cause a shared effect
///   ?=      relationship unknown
enum class arrow {
    forward,
    backward,
    bidirectional,
    correlation,
    common_effect,
    unknown,
};

/// Canonical serialization token for an arrow.
std::string_view arrow_token(arrow a);

/// One side of a relation: an opaque expression label plus an optional
/// numeric subscript ("y_1" -> {"y", "1"}; non-numeric trailing parts stay in
/// the label: "v_z" -> {"v_z", ""}).
struct term {
    std::string label;
    std::string subscript;

    auto operator<=>(const term&) const = default;
};

struct relation {
    term left;
    term right;
    arrow kind = arrow::unknown;

    auto operator<=>(const relation&) const = default;
};

class parse_error : public validation_error {
public:
    parse_error(const std::string& what, std::size_t offset)
        : validation_error(what), offset_(offset) {}
    /// Byte offset of the offending token in the input.
    std::size_t offset() const { return offset_; }

private:
    std::size_t offset_;
};

/// Parse "LEFT ARROW RIGHT" (whitespace-separated, exactly three tokens).
relation parse_relation(std::string_view text);

/// Canonical form: single spaces, ASCII arrows, subscripts re-attached.
/// parse_relation(serialize(r)) == r for every valid relation.
std::string serialize(const relation& r);

/// Verdict when two premises cannot be combined into a relation.
struct no_relation {
    std::string reason; // "mismatched subscripts" or "undefined-in-table"

    bool operator==(const no_relation&) const = default;
};

using compose_result = std::variant<relation, no_relation>;

/// Combine two premises that share their left-hand variable (same label):
///   (y -> f, y -> g)   => f ~corr= g      shared cause
///   (y -> f, y <- g)   => g ->= f         chain through y
///   (y <- f, y -> g)   => g <-= f         chain through y
///   (y <- f, y <- g)   => f ~join= g      shared effect
///   (y <-> f, y -> g)  => g <-= f
///   (y <-> f, y <- g)  => g ->= f
///   (y -> f, y <-> g)  => g ->= f
///   (y <- f, y <-> g)  => g <-= f
///   (y <-> f, y <-> g) => f <->= g
/// Equal labels with different subscripts give no_relation ("mismatched
/// subscripts"); premises whose arrows are not plain causal ones give
/// no_relation ("undefined-in-table"). Distinct labels are a usage error
/// (validation_error): the calculus only combines statements about the same
/// variable.
compose_result compose(const relation& r1, const relation& r2);

class non_invertible : public validation_error {
public:
    explicit non_invertible(relation r);
    const relation& offending() const { return offending_; }

private:
    relation offending_;
};

/// Swap the two sides. Truth-preserving only for symmetric arrows
/// (bidirectional, correlation, common-effect); directional and unknown
/// arrows throw non_invertible.
relation invert(const relation& r);

// --- derivation scripts -----------------------------------------------------

/// Line-oriented script: '#' comments, blank lines, then
///   given <relation>
///   claim <relation>
struct derivation_script {
    std::vector<relation> premises;
    std::vector<relation> claims;
};

derivation_script parse_script(std::string_view text);

/// A relation reached from the premises, with the rule that produced it.
struct derived_relation {
    relation rel;
    std::string rule;
};

struct claim_verdict {
    relation claim;
    bool derivable = false;
    std::string rule; // "premise", "compose(...)", "transitivity (extended)"
};

struct derivation_report {
    std::vector<derived_relation> derived; // closure minus the premises
    std::vector<claim_verdict> verdicts;

    bool all_derivable() const;
};

/// Close the premises under pairwise composition plus one extra rule:
/// forward chains a -> b, b -> c imply a -> c (marked "extended" in rule
/// citations since it goes beyond the pairwise table). Claims are matched
/// semantically, so "a ->= b" and "b <-= a" are the same statement.
derivation_report check_derivation(const derivation_script& script);

} // namespace ioncoupler::causal
