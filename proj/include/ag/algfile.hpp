#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ag/polynomial.hpp"
#include "ag/term_order.hpp"

namespace ag {

/// Parsed algebra presentation file. The format is a plain-text key/value
/// file, one `key: value` pair per line, `#` comments, with keys
///   vars     (required) comma-separated variable names
///   gens     (required) comma-separated polynomial expressions
///   order    (optional) grevlex | lex | weighted:w1,w2,...
///   basis    (optional) comma-separated polynomials, a custom basis
///   weights  (optional) comma-separated positive integers, grading weights
/// Unknown or duplicate keys are rejected.
struct AlgebraFile {
    std::vector<std::string> vars;
    std::vector<Polynomial> gens;
    std::optional<TermOrder> order;
    std::optional<std::vector<Polynomial>> basis;
    std::optional<std::vector<long>> weights;
};

AlgebraFile load_algebra_file(const std::string& path);

/// "grevlex" | "lex" | "weighted:3,2".
TermOrder parse_order_spec(const std::string& spec, std::size_t arity);

/// Comma-separated polynomial expressions.
std::vector<Polynomial> parse_polynomial_list(
    const std::string& text, const std::vector<std::string>& vars);

std::vector<long> parse_integer_list(const std::string& text);

/// Generic `key: value` reader used by the candidate and substitution file
/// formats; preserves order, rejects duplicates.
std::vector<std::pair<std::string, std::string>> read_key_value_file(
    const std::string& path);

}  // namespace ag
