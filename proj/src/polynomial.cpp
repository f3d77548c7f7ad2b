#include "ag/polynomial.hpp"

#include <algorithm>
#include <cassert>

#include "ag/errors.hpp"
#include "ag/linalg.hpp"

namespace ag {

Polynomial Polynomial::constant(std::vector<std::string> vars, Rational c) {
    Polynomial p(std::move(vars));
    if (!c.is_zero()) p.terms_.emplace(Monomial(p.arity()), std::move(c));
    return p;
}

Polynomial Polynomial::variable(std::vector<std::string> vars, std::size_t i) {
    assert(i < vars.size());
    Polynomial p(std::move(vars));
    p.terms_.emplace(Monomial::unit(p.arity(), i), Rational(1));
    return p;
}

Polynomial Polynomial::term(std::vector<std::string> vars, Monomial m,
                            Rational c) {
    assert(m.arity() == vars.size());
    Polynomial p(std::move(vars));
    if (!c.is_zero()) p.terms_.emplace(std::move(m), std::move(c));
    return p;
}

bool Polynomial::is_constant() const {
    return terms_.empty() ||
           (terms_.size() == 1 && terms_.begin()->first.is_constant());
}

std::optional<std::int64_t> Polynomial::degree() const {
    if (terms_.empty()) return std::nullopt;
    std::int64_t d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
    return d;
}

std::optional<std::int64_t> Polynomial::weighted_degree(
    std::span<const long> w) const {
    if (terms_.empty()) return std::nullopt;
    std::int64_t d = 0;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        std::int64_t wd = m.weighted_degree(w);
        d = first ? wd : std::max(d, wd);
        first = false;
    }
    return d;
}

Rational Polynomial::coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
}

Rational Polynomial::constant_term() const {
    return coefficient(Monomial(arity()));
}

void Polynomial::set_coefficient(const Monomial& m, const Rational& c) {
    assert(m.arity() == arity());
    if (c.is_zero())
        terms_.erase(m);
    else
        terms_[m] = c;
}

void Polynomial::add_term(const Monomial& m, const Rational& c) {
    assert(m.arity() == arity());
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

void Polynomial::check_same_vars(const Polynomial& o) const {
    if (vars_ != o.vars_)
        throw VariableMismatch("polynomials have different variable lists");
}

Polynomial Polynomial::operator-() const {
    Polynomial r(*this);
    for (auto& [m, c] : r.terms_) c = -c;
    return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
    check_same_vars(o);
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
    check_same_vars(o);
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

Polynomial& Polynomial::operator*=(const Rational& s) {
    if (s.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [m, c] : terms_) c *= s;
    return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    a.check_same_vars(b);
    Polynomial r(a.vars_);
    Polynomial::add_scaled_product(r, a, b, Rational(1));
    return r;
}

void Polynomial::add_scaled_product(Polynomial& acc, const Polynomial& a,
                                    const Polynomial& b, const Rational& s) {
    acc.check_same_vars(a);
    a.check_same_vars(b);
    if (s.is_zero()) return;
    for (const auto& [ma, ca] : a.terms_)
        for (const auto& [mb, cb] : b.terms_)
            acc.add_term(ma * mb, s * ca * cb);
}

Polynomial Polynomial::pow(unsigned n) const {
    Polynomial result = constant(vars_, 1);
    Polynomial base(*this);
    while (n) {
        if (n & 1) result = result * base;
        n >>= 1;
        if (n) base = base * base;
    }
    return result;
}

Polynomial Polynomial::homogeneous_component(std::int64_t m) const {
    Polynomial r(vars_);
    for (const auto& [mon, c] : terms_)
        if (mon.degree() == m) r.terms_.emplace(mon, c);
    return r;
}

std::pair<Monomial, Rational> Polynomial::leading_term(
    const TermOrder& ord) const {
    assert(!terms_.empty());
    auto best = terms_.begin();
    for (auto it = std::next(terms_.begin()); it != terms_.end(); ++it)
        if (ord.less(best->first, it->first)) best = it;
    return {best->first, best->second};
}

Monomial Polynomial::leading_monomial(const TermOrder& ord) const {
    return leading_term(ord).first;
}

Polynomial Polynomial::substituted(const RatMatrix& M) const {
    if (M.rows() != arity() || M.cols() != arity())
        throw DimensionMismatch("substitution matrix has wrong shape");
    return composed_linear(M, vars_);
}

Polynomial Polynomial::composed_linear(
    const RatMatrix& M, std::vector<std::string> new_vars) const {
    if (M.rows() != arity() || M.cols() != new_vars.size())
        throw DimensionMismatch("linear composition matrix has wrong shape");
    std::vector<Polynomial> images;
    images.reserve(arity());
    for (std::size_t i = 0; i < arity(); ++i) {
        Polynomial form(new_vars);
        for (std::size_t j = 0; j < new_vars.size(); ++j)
            form.add_term(Monomial::unit(new_vars.size(), j), M.at(i, j));
        images.push_back(std::move(form));
    }
    return composed(images);
}

Polynomial Polynomial::composed(const std::vector<Polynomial>& images) const {
    if (images.size() != arity())
        throw DimensionMismatch("composition needs one image per variable");
    for (const auto& img : images) images.front().check_same_vars(img);
    std::vector<std::string> target =
        images.empty() ? vars_ : images.front().vars();
    Polynomial result(target);
    // Per-variable power cache; exponents in our use stay small.
    std::vector<std::vector<Polynomial>> powers(arity());
    auto power_of = [&](std::size_t v, std::uint32_t e) -> const Polynomial& {
        auto& cache = powers[v];
        if (cache.empty()) cache.push_back(Polynomial::constant(target, 1));
        while (cache.size() <= e) cache.push_back(cache.back() * images[v]);
        return cache[e];
    };
    for (const auto& [m, c] : terms_) {
        Polynomial t = Polynomial::constant(target, c);
        for (std::size_t v = 0; v < arity(); ++v)
            if (m[v] > 0) t = t * power_of(v, m[v]);
        result += t;
    }
    return result;
}

Polynomial Polynomial::derivative(std::size_t i) const {
    assert(i < arity());
    Polynomial r(vars_);
    for (const auto& [m, c] : terms_) {
        if (m[i] == 0) continue;
        auto e = m.exponents();
        Rational f = c * Rational(static_cast<long>(e[i]));
        e[i] -= 1;
        r.add_term(Monomial(std::move(e)), f);
    }
    return r;
}

Rational Polynomial::evaluate(std::span<const Rational> point) const {
    if (point.size() != arity())
        throw DimensionMismatch("evaluation point has wrong arity");
    Rational total = 0;
    for (const auto& [m, c] : terms_) {
        Rational v = c;
        for (std::size_t i = 0; i < arity(); ++i)
            for (std::uint32_t e = 0; e < m[i]; ++e) v *= point[i];
        total += v;
    }
    return total;
}

std::string Polynomial::to_string() const {
    if (terms_.empty()) return "0";
    // Decreasing total degree, then decreasing structural order: fixed,
    // term-order-independent rendering.
    std::vector<const std::pair<const Monomial, Rational>*> sorted;
    sorted.reserve(terms_.size());
    for (const auto& t : terms_) sorted.push_back(&t);
    std::sort(sorted.begin(), sorted.end(), [](auto* a, auto* b) {
        if (a->first.degree() != b->first.degree())
            return a->first.degree() > b->first.degree();
        return a->first > b->first;
    });
    std::string s;
    for (std::size_t i = 0; i < sorted.size(); ++i) {
        const auto& [m, c] = *sorted[i];
        Rational a = c.abs();
        if (i == 0)
            s += c.sign() < 0 ? "-" : "";
        else
            s += c.sign() < 0 ? " - " : " + ";
        if (m.is_constant())
            s += a.to_string();
        else if (a.is_one())
            s += m.to_string(vars_);
        else
            s += a.to_string() + "*" + m.to_string(vars_);
    }
    return s;
}

Polynomial poly_mul(const Polynomial& p, const Polynomial& q) { return p * q; }

Polynomial substitute_linear(const Polynomial& p, const RatMatrix& M) {
    return p.substituted(M);
}

Polynomial apply_diff_operator(const Polynomial& f, const Polynomial& g) {
    if (f.arity() != g.arity())
        throw VariableMismatch("differential operator arity mismatch");
    Polynomial result(g.vars());
    for (const auto& [fm, fc] : f.terms()) {
        for (const auto& [gm, gc] : g.terms()) {
            if (!fm.divides(gm)) continue;
            // d^a(y^b) = prod b_i!/(b_i-a_i)! * y^(b-a)
            Rational factor = fc * gc;
            for (std::size_t i = 0; i < g.arity(); ++i)
                for (std::uint32_t e = gm[i]; e > gm[i] - fm[i]; --e)
                    factor *= Rational(static_cast<long>(e));
            result.add_term(gm / fm, factor);
        }
    }
    return result;
}

Polynomial homogeneous_component(const Polynomial& p, std::int64_t m) {
    return p.homogeneous_component(m);
}

}  // namespace ag
