#pragma once

#include <string>
#include <vector>

#include "ag/monomial.hpp"

namespace ag {

enum class OrderKind { Grevlex, Lex, Weighted };

/// A monomial order compatible with multiplication and with 1 minimal.
///
/// Variable precedence is a permutation of variable indices; precedence[0]
/// is the largest variable. The default precedence is the declaration order
/// (x1 > x2 > ... > xk).
///
/// Weighted orders compare the weighted degree first and break ties with the
/// grevlex rule under the same precedence.
class TermOrder {
  public:
    static TermOrder grevlex(std::size_t arity);
    static TermOrder lex(std::size_t arity);
    static TermOrder weighted(std::vector<long> weights);

    TermOrder with_precedence(std::vector<std::size_t> precedence) const;

    OrderKind kind() const { return kind_; }
    std::size_t arity() const { return arity_; }
    const std::vector<long>& weights() const { return weights_; }

    /// Negative, zero, or positive as a < b, a == b, a > b.
    int compare(const Monomial& a, const Monomial& b) const;
    bool less(const Monomial& a, const Monomial& b) const {
        return compare(a, b) < 0;
    }

    bool operator==(const TermOrder&) const = default;

    std::string to_string() const;

  private:
    TermOrder(OrderKind kind, std::size_t arity, std::vector<long> weights);

    OrderKind kind_;
    std::size_t arity_;
    std::vector<long> weights_;            // empty unless Weighted
    std::vector<std::size_t> precedence_;  // precedence_[0] = largest variable
};

}  // namespace ag
