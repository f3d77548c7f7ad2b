#include "ag/algfile.hpp"

#include <cctype>
#include <fstream>
#include <set>
#include <sstream>

#include "ag/errors.hpp"

namespace ag {

namespace {

std::string trim(const std::string& s) {
    std::size_t a = 0, b = s.size();
    while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
    while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
    return s.substr(a, b - a);
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> parts;
    std::string cur;
    for (char ch : s) {
        if (ch == sep) {
            parts.push_back(trim(cur));
            cur.clear();
        } else {
            cur += ch;
        }
    }
    parts.push_back(trim(cur));
    return parts;
}

}  // namespace

std::vector<std::pair<std::string, std::string>> read_key_value_file(
    const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputFileError("cannot open file: " + path);
    std::vector<std::pair<std::string, std::string>> pairs;
    std::set<std::string> seen;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (auto hash = line.find('#'); hash != std::string::npos)
            line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;
        auto colon = line.find(':');
        if (colon == std::string::npos)
            throw InputFileError(path + ":" + std::to_string(lineno) +
                                 ": expected 'key: value'");
        std::string key = trim(line.substr(0, colon));
        std::string value = trim(line.substr(colon + 1));
        if (key.empty())
            throw InputFileError(path + ":" + std::to_string(lineno) +
                                 ": empty key");
        if (!seen.insert(key).second)
            throw InputFileError(path + ":" + std::to_string(lineno) +
                                 ": duplicate key '" + key + "'");
        pairs.emplace_back(std::move(key), std::move(value));
    }
    return pairs;
}

TermOrder parse_order_spec(const std::string& spec, std::size_t arity) {
    if (spec == "grevlex") return TermOrder::grevlex(arity);
    if (spec == "lex") return TermOrder::lex(arity);
    const std::string prefix = "weighted:";
    if (spec.rfind(prefix, 0) == 0) {
        auto weights = parse_integer_list(spec.substr(prefix.size()));
        if (weights.size() != arity)
            throw InputFileError("weighted order needs one weight per variable");
        return TermOrder::weighted(std::move(weights));
    }
    throw InputFileError("unknown term order '" + spec +
                         "' (expected grevlex, lex, or weighted:w1,w2,...)");
}

std::vector<Polynomial> parse_polynomial_list(
    const std::string& text, const std::vector<std::string>& vars) {
    std::vector<Polynomial> polys;
    for (const auto& piece : split(text, ','))
        polys.push_back(parse_polynomial(piece, vars));
    return polys;
}

std::vector<long> parse_integer_list(const std::string& text) {
    std::vector<long> values;
    for (const auto& piece : split(text, ',')) {
        if (piece.empty() ||
            piece.find_first_not_of("-0123456789") != std::string::npos)
            throw InputFileError("expected an integer list, got '" + text + "'");
        values.push_back(std::stol(piece));
    }
    return values;
}

AlgebraFile load_algebra_file(const std::string& path) {
    AlgebraFile file;
    std::optional<std::string> gens_text, order_text, basis_text, weights_text;
    for (const auto& [key, value] : read_key_value_file(path)) {
        if (key == "vars") {
            for (const auto& v : split(value, ',')) {
                if (v.empty())
                    throw InputFileError(path + ": empty variable name");
                file.vars.push_back(v);
            }
        } else if (key == "gens") {
            gens_text = value;
        } else if (key == "order") {
            order_text = value;
        } else if (key == "basis") {
            basis_text = value;
        } else if (key == "weights") {
            weights_text = value;
        } else {
            throw InputFileError(path + ": unknown key '" + key + "'");
        }
    }
    if (file.vars.empty())
        throw InputFileError(path + ": missing 'vars' declaration");
    if (!gens_text) throw InputFileError(path + ": missing 'gens' declaration");
    file.gens = parse_polynomial_list(*gens_text, file.vars);
    if (order_text) file.order = parse_order_spec(*order_text, file.vars.size());
    if (basis_text) file.basis = parse_polynomial_list(*basis_text, file.vars);
    if (weights_text) {
        file.weights = parse_integer_list(*weights_text);
        if (file.weights->size() != file.vars.size())
            throw InputFileError(path + ": need one weight per variable");
    }
    return file;
}

}  // namespace ag
