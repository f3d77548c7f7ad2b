#include "ag/groebner.hpp"

#include <algorithm>
#include <cassert>
#include <set>

#include "ag/errors.hpp"

namespace ag {

bool GroebnerBasis::contains_one() const {
    return basis.size() == 1 && basis.front().is_constant() &&
           !basis.front().is_zero();
}

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g,
                        const TermOrder& ord) {
    auto [fm, fc] = f.leading_term(ord);
    auto [gm, gc] = g.leading_term(ord);
    Monomial l = lcm(fm, gm);
    Polynomial a = Polynomial::term(f.vars(), l / fm, fc.inverse());
    Polynomial b = Polynomial::term(g.vars(), l / gm, gc.inverse());
    return a * f - b * g;
}

namespace {

Polynomial reduce_full(const Polynomial& p,
                       const std::vector<Polynomial>& basis,
                       const TermOrder& ord) {
    Polynomial rest = p;
    Polynomial remainder(p.vars());
    while (!rest.is_zero()) {
        auto [m, c] = rest.leading_term(ord);
        bool reduced = false;
        for (const auto& g : basis) {
            if (g.is_zero()) continue;
            auto [gm, gc] = g.leading_term(ord);
            if (!gm.divides(m)) continue;
            Polynomial q = Polynomial::term(p.vars(), m / gm, c / gc);
            rest -= q * g;
            reduced = true;
            break;
        }
        if (!reduced) {
            remainder.add_term(m, c);
            rest.set_coefficient(m, Rational(0));
        }
    }
    return remainder;
}

struct Pair {
    std::size_t i, j;
    Monomial lcm_m;
};

// Reduced basis: minimal leading terms, tails reduced, monic, sorted.
void reduce_basis(std::vector<Polynomial>& basis, const TermOrder& ord) {
    // Drop elements whose leading term is divisible by another's.
    std::vector<Polynomial> minimal;
    for (std::size_t i = 0; i < basis.size(); ++i) {
        Monomial mi = basis[i].leading_monomial(ord);
        bool redundant = false;
        for (std::size_t j = 0; j < basis.size() && !redundant; ++j) {
            if (i == j) continue;
            Monomial mj = basis[j].leading_monomial(ord);
            if (mj.divides(mi) && (mj != mi || j < i)) redundant = true;
        }
        if (!redundant) minimal.push_back(basis[i]);
    }
    // Tail-reduce each element by the others, then normalize monic.
    std::vector<Polynomial> reduced;
    for (std::size_t i = 0; i < minimal.size(); ++i) {
        std::vector<Polynomial> others;
        for (std::size_t j = 0; j < minimal.size(); ++j)
            if (j != i) others.push_back(minimal[j]);
        Polynomial r = reduce_full(minimal[i], others, ord);
        if (r.is_zero()) continue;
        auto [m, c] = r.leading_term(ord);
        r *= c.inverse();
        reduced.push_back(std::move(r));
    }
    std::sort(reduced.begin(), reduced.end(),
              [&](const Polynomial& a, const Polynomial& b) {
                  return ord.less(a.leading_monomial(ord),
                                  b.leading_monomial(ord));
              });
    basis = std::move(reduced);
}

std::optional<GroebnerBasis> buchberger(std::vector<Polynomial> gens,
                                        TermOrder ord,
                                        const BuchbergerBudget& budget) {
    std::vector<Polynomial> work;
    for (auto& g : gens)
        if (!g.is_zero()) work.push_back(g);
    GroebnerBasis result{ord, {}, gens};
    if (work.empty()) return result;
    for (const auto& g : work) {
        if (g.arity() != ord.arity())
            throw DimensionMismatch("generator arity does not match the order");
        if (g.vars() != work.front().vars())
            throw VariableMismatch("generators over different variable lists");
    }

    std::vector<Polynomial> basis;
    std::vector<Pair> pairs;
    std::set<std::pair<std::size_t, std::size_t>> handled;

    auto add_element = [&](Polynomial p) {
        std::size_t t = basis.size();
        for (std::size_t i = 0; i < t; ++i)
            pairs.push_back(
                {i, t, lcm(basis[i].leading_monomial(ord), p.leading_monomial(ord))});
        basis.push_back(std::move(p));
    };

    for (const auto& g : work) {
        Polynomial r = reduce_full(g, basis, ord);
        if (!r.is_zero()) add_element(std::move(r));
    }

    std::size_t processed = 0;
    while (!pairs.empty()) {
        if (budget.max_pairs && processed >= budget.max_pairs)
            return std::nullopt;
        if (budget.max_basis_size && basis.size() >= budget.max_basis_size)
            return std::nullopt;
        // Normal strategy: smallest lcm, ties by insertion order.
        std::size_t best = 0;
        for (std::size_t k = 1; k < pairs.size(); ++k)
            if (ord.less(pairs[k].lcm_m, pairs[best].lcm_m)) best = k;
        Pair pr = pairs[best];
        pairs.erase(pairs.begin() + static_cast<std::ptrdiff_t>(best));
        handled.insert({pr.i, pr.j});
        ++processed;

        Monomial mi = basis[pr.i].leading_monomial(ord);
        Monomial mj = basis[pr.j].leading_monomial(ord);
        if (mi.coprime_with(mj)) continue;  // Buchberger's first criterion
        // Chain criterion: some k with LT(k) | lcm and both pairs handled.
        bool chained = false;
        for (std::size_t k = 0; k < basis.size() && !chained; ++k) {
            if (k == pr.i || k == pr.j) continue;
            if (!basis[k].leading_monomial(ord).divides(pr.lcm_m)) continue;
            auto key = [&](std::size_t a, std::size_t b) {
                return std::make_pair(std::min(a, b), std::max(a, b));
            };
            if (handled.count(key(pr.i, k)) && handled.count(key(pr.j, k)))
                chained = true;
        }
        if (chained) continue;

        Polynomial s = s_polynomial(basis[pr.i], basis[pr.j], ord);
        Polynomial r = reduce_full(s, basis, ord);
        if (r.is_zero()) continue;
        if (r.is_constant()) {  // ideal is (1); nothing more to learn
            result.basis = {Polynomial::constant(work.front().vars(), 1)};
            return result;
        }
        add_element(std::move(r));
    }
    reduce_basis(basis, ord);
    result.basis = std::move(basis);
    return result;
}

}  // namespace

GroebnerBasis groebner_basis(std::vector<Polynomial> gens, TermOrder ord) {
    auto gb = buchberger(std::move(gens), std::move(ord), {});
    assert(gb.has_value());
    return *gb;
}

std::optional<GroebnerBasis> groebner_basis_budgeted(
    std::vector<Polynomial> gens, TermOrder ord,
    const BuchbergerBudget& budget) {
    return buchberger(std::move(gens), std::move(ord), budget);
}

Polynomial normal_form(const Polynomial& p, const GroebnerBasis& gb) {
    if (!gb.basis.empty() && p.vars() != gb.basis.front().vars())
        throw VariableMismatch("normal form over a different variable list");
    return reduce_full(p, gb.basis, gb.order);
}

std::vector<Monomial> standard_monomial_basis(const GroebnerBasis& gb) {
    std::size_t arity = gb.order.arity();
    std::vector<Monomial> lts;
    for (const auto& g : gb.basis) lts.push_back(g.leading_monomial(gb.order));
    if (!gb.basis.empty() && gb.contains_one()) return {};

    // Finiteness requires a pure power of every variable among the leading
    // terms; the minimal such power bounds that variable's exponents.
    std::vector<std::uint32_t> bound(arity, 0);
    for (std::size_t v = 0; v < arity; ++v) {
        for (const auto& m : lts) {
            bool pure = m[v] > 0;
            for (std::size_t u = 0; u < arity && pure; ++u)
                if (u != v && m[u] > 0) pure = false;
            if (pure && (bound[v] == 0 || m[v] < bound[v])) bound[v] = m[v];
        }
        if (bound[v] == 0)
            throw InfiniteDimensional(
                "quotient is infinite-dimensional: no pure power of "
                "variable #" +
                std::to_string(v + 1) + " among the leading terms");
    }

    std::vector<Monomial> result;
    std::vector<std::uint32_t> e(arity, 0);
    while (true) {
        Monomial m{std::vector<std::uint32_t>(e)};
        bool standard = true;
        for (const auto& lt : lts)
            if (lt.divides(m)) {
                standard = false;
                break;
            }
        if (standard) result.push_back(std::move(m));
        std::size_t v = 0;
        while (v < arity) {
            if (++e[v] < bound[v]) break;
            e[v] = 0;
            ++v;
        }
        if (v == arity) break;
    }
    std::sort(result.begin(), result.end(),
              [&](const Monomial& a, const Monomial& b) {
                  return gb.order.less(a, b);
              });
    return result;
}

}  // namespace ag
