#include "ioncoupler/causal.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <set>
#include <sstream>
#include <tuple>

namespace ioncoupler::causal {

std::string_view arrow_token(arrow a) {
    switch (a) {
    case arrow::forward: return "->=";
    case arrow::backward: return "<-=";
    case arrow::bidirectional: return "<->=";
    case arrow::correlation: return "~corr=";
    case arrow::common_effect: return "~join=";
    case arrow::unknown: return "?=";
    }
    return "?=";
}

namespace {

std::optional<arrow> lookup_arrow(std::string_view token) {
    // canonical ASCII plus accepted Unicode spellings
    static const std::pair<std::string_view, arrow> table[] = {
        {"->=", arrow::forward},       {"→=", arrow::forward},
        {"<-=", arrow::backward},      {"←=", arrow::backward},
        {"<->=", arrow::bidirectional},{"↔=", arrow::bidirectional},
        {"~corr=", arrow::correlation},{"⌒⌒=", arrow::correlation},
        {"~join=", arrow::common_effect},{">-<=", arrow::common_effect},
        {"?=", arrow::unknown},
    };
    for (const auto& [text, a] : table)
        if (token == text)
            return a;
    return std::nullopt;
}

term parse_term(std::string_view token) {
    term t;
    const auto underscore = token.rfind('_');
    if (underscore != std::string_view::npos && underscore + 1 < token.size()) {
        const auto suffix = token.substr(underscore + 1);
        const bool numeric =
            std::all_of(suffix.begin(), suffix.end(),
                        [](unsigned char ch) { return std::isdigit(ch); });
        if (numeric && underscore > 0) {
            t.label = std::string(token.substr(0, underscore));
            t.subscript = std::string(suffix);
            return t;
        }
    }
    t.label = std::string(token);
    return t;
}

struct token_span {
    std::string_view text;
    std::size_t offset;
};

std::vector<token_span> split_tokens(std::string_view text) {
    std::vector<token_span> out;
    std::size_t i = 0;
    while (i < text.size()) {
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i])))
            ++i;
        const std::size_t begin = i;
        while (i < text.size() && !std::isspace(static_cast<unsigned char>(text[i])))
            ++i;
        if (i > begin)
            out.push_back({text.substr(begin, i - begin), begin});
    }
    return out;
}

} // namespace

relation parse_relation(std::string_view text) {
    const auto tokens = split_tokens(text);
    if (tokens.empty())
        throw parse_error("empty relation", 0);
    if (tokens.size() < 3)
        throw parse_error("relation needs LEFT ARROW RIGHT",
                          tokens.back().offset + tokens.back().text.size());
    if (tokens.size() > 3)
        throw parse_error("trailing input after relation", tokens[3].offset);
    const auto kind = lookup_arrow(tokens[1].text);
    if (!kind)
        throw parse_error("unknown arrow '" + std::string(tokens[1].text) + "'",
                          tokens[1].offset);
    relation r;
    r.left = parse_term(tokens[0].text);
    r.right = parse_term(tokens[2].text);
    r.kind = *kind;
    if (r.left.label.empty())
        throw parse_error("empty left label", tokens[0].offset);
    if (r.right.label.empty())
        throw parse_error("empty right label", tokens[2].offset);
    return r;
}

namespace {

std::string term_text(const term& t) {
    return t.subscript.empty() ? t.label : t.label + "_" + t.subscript;
}

} // namespace

std::string serialize(const relation& r) {
    std::string out = term_text(r.left);
    out += ' ';
    out += arrow_token(r.kind);
    out += ' ';
    out += term_text(r.right);
    return out;
}

compose_result compose(const relation& r1, const relation& r2) {
    if (r1.left.label != r2.left.label)
        throw validation_error("compose: premises must share their left-hand variable (got '" +
                               r1.left.label + "' and '" + r2.left.label + "')");
    if (r1.left.subscript != r2.left.subscript)
        return no_relation{"mismatched subscripts"};

    const term& f = r1.right;
    const term& g = r2.right;
    using a = arrow;
    const auto pair = std::make_pair(r1.kind, r2.kind);
    // symmetric outcomes keep premise order (f, g); directional outcomes are
    // written from the second premise's expression: (g, f)
    if (pair == std::make_pair(a::forward, a::forward))
        return relation{f, g, a::correlation};
    if (pair == std::make_pair(a::forward, a::backward))
        return relation{g, f, a::forward};
    if (pair == std::make_pair(a::backward, a::forward))
        return relation{g, f, a::backward};
    if (pair == std::make_pair(a::backward, a::backward))
        return relation{f, g, a::common_effect};
    if (pair == std::make_pair(a::bidirectional, a::forward))
        return relation{g, f, a::backward};
    if (pair == std::make_pair(a::bidirectional, a::backward))
        return relation{g, f, a::forward};
    if (pair == std::make_pair(a::forward, a::bidirectional))
        return relation{g, f, a::forward};
    if (pair == std::make_pair(a::backward, a::bidirectional))
        return relation{g, f, a::backward};
    if (pair == std::make_pair(a::bidirectional, a::bidirectional))
        return relation{f, g, a::bidirectional};
    return no_relation{"undefined-in-table"};
}

non_invertible::non_invertible(relation r)
    : validation_error("invert: '" + serialize(r) +
                       "' is directional; swapping its sides changes its meaning"),
      offending_(std::move(r)) {}

relation invert(const relation& r) {
    switch (r.kind) {
    case arrow::bidirectional:
    case arrow::correlation:
    case arrow::common_effect:
        return relation{r.right, r.left, r.kind};
    case arrow::forward:
    case arrow::backward:
    case arrow::unknown:
        throw non_invertible(r);
    }
    throw non_invertible(r);
}

derivation_script parse_script(std::string_view text) {
    derivation_script script;
    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const auto eol = text.find('\n', pos);
        std::string_view line =
            text.substr(pos, eol == std::string_view::npos ? text.size() - pos : eol - pos);
        ++line_no;

        // '#' starts a comment at line start or after whitespace
        for (std::size_t i = 0; i < line.size(); ++i) {
            if (line[i] == '#' &&
                (i == 0 || std::isspace(static_cast<unsigned char>(line[i - 1])))) {
                line = line.substr(0, i);
                break;
            }
        }
        std::size_t begin = 0;
        while (begin < line.size() && std::isspace(static_cast<unsigned char>(line[begin])))
            ++begin;
        line = line.substr(begin);
        while (!line.empty() && std::isspace(static_cast<unsigned char>(line.back())))
            line.remove_suffix(1);

        if (!line.empty()) {
            const auto space = line.find_first_of(" \t");
            const std::string_view keyword = line.substr(0, space);
            const std::string_view rest =
                space == std::string_view::npos ? std::string_view{} : line.substr(space + 1);
            try {
                if (keyword == "given")
                    script.premises.push_back(parse_relation(rest));
                else if (keyword == "claim")
                    script.claims.push_back(parse_relation(rest));
                else
                    throw parse_error("expected 'given' or 'claim'", 0);
            } catch (const parse_error& e) {
                std::ostringstream msg;
                msg << "line " << line_no << ": " << e.what();
                throw parse_error(msg.str(), e.offset());
            }
        }
        if (eol == std::string_view::npos)
            break;
        pos = eol + 1;
    }
    return script;
}

bool derivation_report::all_derivable() const {
    return std::all_of(verdicts.begin(), verdicts.end(),
                       [](const claim_verdict& v) { return v.derivable; });
}

namespace {

// Semantic key: directional relations normalize to (cause, effect);
// symmetric ones to an unordered pair. Lets "a ->= b" match "b <-= a".
struct semantic_key {
    term a;
    term b;
    int tag; // 0 directional, 1 bidirectional, 2 correlation, 3 common-effect, 4 unknown

    auto operator<=>(const semantic_key&) const = default;
};

semantic_key key_of(const relation& r) {
    switch (r.kind) {
    case arrow::forward: return {r.left, r.right, 0};
    case arrow::backward: return {r.right, r.left, 0};
    case arrow::bidirectional:
    case arrow::correlation:
    case arrow::common_effect: {
        const int tag = r.kind == arrow::bidirectional ? 1
                      : r.kind == arrow::correlation   ? 2
                                                       : 3;
        if (r.right < r.left)
            return {r.right, r.left, tag};
        return {r.left, r.right, tag};
    }
    case arrow::unknown: return {r.left, r.right, 4};
    }
    return {r.left, r.right, 4};
}

std::string compose_rule_name(const relation& r1, const relation& r2) {
    std::ostringstream rule;
    rule << "compose(" << arrow_token(r1.kind) << ", " << arrow_token(r2.kind) << "): "
         << serialize(r1) << " with " << serialize(r2);
    return rule.str();
}

} // namespace

derivation_report check_derivation(const derivation_script& script) {
    derivation_report report;

    std::vector<relation> known = script.premises;
    std::vector<std::string> rules(known.size(), "premise");
    std::set<semantic_key> seen;
    for (const auto& premise : script.premises)
        seen.insert(key_of(premise));

    auto add = [&](const relation& r, std::string rule) {
        if (seen.insert(key_of(r)).second) {
            known.push_back(r);
            rules.push_back(rule);
            report.derived.push_back({r, std::move(rule)});
            return true;
        }
        return false;
    };

    // Fixpoint over pairwise composition and forward chaining. The relation
    // universe over the script's terms is finite, so this terminates; the cap
    // is a guard against pathological inputs.
    constexpr std::size_t max_derived = 10000;
    bool grew = true;
    while (grew && known.size() < max_derived) {
        grew = false;
        const std::size_t n = known.size();
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) {
                if (i == j)
                    continue;
                // by value: add() grows `known`, which would invalidate references
                const relation r1 = known[i];
                const relation r2 = known[j];
                if (r1.left.label == r2.left.label &&
                    r1.left.subscript == r2.left.subscript) {
                    const auto result = compose(r1, r2);
                    if (const auto* rel = std::get_if<relation>(&result))
                        grew |= add(*rel, compose_rule_name(r1, r2));
                }
                // extended rule: forward chains compose transitively
                if (r1.kind == arrow::forward && r2.kind == arrow::forward &&
                    r1.right == r2.left)
                    grew |= add(relation{r1.left, r2.right, arrow::forward},
                                "transitivity (extended): " + serialize(r1) + " with " +
                                    serialize(r2));
            }
        }
    }

    for (const auto& claim : script.claims) {
        claim_verdict verdict;
        verdict.claim = claim;
        const auto key = key_of(claim);
        for (std::size_t i = 0; i < known.size(); ++i) {
            if (key_of(known[i]) == key) {
                verdict.derivable = true;
                verdict.rule = rules[i];
                break;
            }
        }
        report.verdicts.push_back(std::move(verdict));
    }
    return report;
}

} // namespace ioncoupler::causal
