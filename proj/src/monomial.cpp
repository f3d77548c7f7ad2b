#include "ag/monomial.hpp"

#include <algorithm>
#include <cassert>

namespace ag {

bool Monomial::is_constant() const {
    return std::all_of(e_.begin(), e_.end(),
                       [](std::uint32_t x) { return x == 0; });
}

std::int64_t Monomial::degree() const {
    std::int64_t d = 0;
    for (auto x : e_) d += x;
    return d;
}

std::int64_t Monomial::weighted_degree(std::span<const long> weights) const {
    assert(weights.size() == e_.size());
    std::int64_t d = 0;
    for (std::size_t i = 0; i < e_.size(); ++i)
        d += static_cast<std::int64_t>(weights[i]) * e_[i];
    return d;
}

bool Monomial::divides(const Monomial& m) const {
    assert(arity() == m.arity());
    for (std::size_t i = 0; i < e_.size(); ++i)
        if (e_[i] > m.e_[i]) return false;
    return true;
}

bool Monomial::coprime_with(const Monomial& m) const {
    assert(arity() == m.arity());
    for (std::size_t i = 0; i < e_.size(); ++i)
        if (e_[i] > 0 && m.e_[i] > 0) return false;
    return true;
}

Monomial Monomial::operator*(const Monomial& m) const {
    assert(arity() == m.arity());
    Monomial r(*this);
    for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] += m.e_[i];
    return r;
}

Monomial Monomial::operator/(const Monomial& m) const {
    assert(m.divides(*this));
    Monomial r(*this);
    for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] -= m.e_[i];
    return r;
}

Monomial lcm(const Monomial& a, const Monomial& b) {
    assert(a.arity() == b.arity());
    Monomial r(a);
    for (std::size_t i = 0; i < r.e_.size(); ++i)
        r.e_[i] = std::max(r.e_[i], b.e_[i]);
    return r;
}

std::string Monomial::to_string(std::span<const std::string> vars) const {
    assert(vars.size() == e_.size());
    std::string s;
    for (std::size_t i = 0; i < e_.size(); ++i) {
        if (e_[i] == 0) continue;
        if (!s.empty()) s += "*";
        s += vars[i];
        if (e_[i] > 1) s += "^" + std::to_string(e_[i]);
    }
    return s.empty() ? "1" : s;
}

}  // namespace ag
