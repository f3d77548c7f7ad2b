#include "ag/term_order.hpp"

#include <cassert>
#include <numeric>
#include <stdexcept>

namespace ag {

TermOrder::TermOrder(OrderKind kind, std::size_t arity,
                     std::vector<long> weights)
    : kind_(kind), arity_(arity), weights_(std::move(weights)) {
    precedence_.resize(arity_);
    std::iota(precedence_.begin(), precedence_.end(), std::size_t{0});
}

TermOrder TermOrder::grevlex(std::size_t arity) {
    return TermOrder(OrderKind::Grevlex, arity, {});
}

TermOrder TermOrder::lex(std::size_t arity) {
    return TermOrder(OrderKind::Lex, arity, {});
}

TermOrder TermOrder::weighted(std::vector<long> weights) {
    for (long w : weights)
        if (w <= 0)
            throw std::invalid_argument("term-order weights must be positive");
    std::size_t arity = weights.size();
    return TermOrder(OrderKind::Weighted, arity, std::move(weights));
}

TermOrder TermOrder::with_precedence(std::vector<std::size_t> precedence) const {
    if (precedence.size() != arity_)
        throw std::invalid_argument("precedence permutation has wrong size");
    TermOrder t(*this);
    t.precedence_ = std::move(precedence);
    return t;
}

namespace {

int cmp64(std::int64_t a, std::int64_t b) { return a < b ? -1 : a > b ? 1 : 0; }

}  // namespace

int TermOrder::compare(const Monomial& a, const Monomial& b) const {
    assert(a.arity() == arity_ && b.arity() == arity_);
    if (kind_ == OrderKind::Weighted) {
        if (int c = cmp64(a.weighted_degree(weights_),
                          b.weighted_degree(weights_)))
            return c;
    }
    if (kind_ == OrderKind::Lex) {
        for (std::size_t r = 0; r < arity_; ++r) {
            std::size_t v = precedence_[r];
            if (int c = cmp64(a[v], b[v])) return c;
        }
        return 0;
    }
    // Grevlex, also the tiebreak for Weighted.
    if (int c = cmp64(a.degree(), b.degree())) return c;
    for (std::size_t r = arity_; r-- > 0;) {
        std::size_t v = precedence_[r];
        // Smaller exponent in the least significant variable wins.
        if (int c = cmp64(b[v], a[v])) return c;
    }
    return 0;
}

std::string TermOrder::to_string() const {
    switch (kind_) {
        case OrderKind::Grevlex:
            return "grevlex";
        case OrderKind::Lex:
            return "lex";
        case OrderKind::Weighted: {
            std::string s = "weighted:";
            for (std::size_t i = 0; i < weights_.size(); ++i) {
                if (i) s += ",";
                s += std::to_string(weights_[i]);
            }
            return s;
        }
    }
    return "?";
}

}  // namespace ag
