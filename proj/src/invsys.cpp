#include "ag/invsys.hpp"

#include <algorithm>
#include <cassert>
#include <map>

#include "ag/errors.hpp"
#include "ag/linalg.hpp"

namespace ag {

Polynomial restrict_nil_polynomial(
    const NilPolynomial& np, const std::vector<std::vector<Rational>>& L) {
    const AdmissibleProjection& pi = *np.projection;
    const QuotientAlgebra& A = pi.algebra();

    for (const auto& e : L)
        if (!pi.in_kernel_k(e))
            throw NotInsideKernel(
                "complement element does not lie in ker(pi) inside m");

    StructureReport rep = structure_report(A);
    if (L.size() != rep.emb_dim)
        throw NotAComplement("complement has " + std::to_string(L.size()) +
                             " elements, embedding dimension is " +
                             std::to_string(rep.emb_dim));
    // Rank of L modulo m^2 must be |L|.
    auto m2 = power_ideal_basis(A, 2);
    RatMatrix stack;
    for (const auto& v : m2) stack.append_row(v);
    std::size_t base_rank = stack.rows() ? rank(stack) : 0;
    for (const auto& e : L) stack.append_row(e);
    if (rank(stack) != base_rank + L.size())
        throw NotAComplement(
            "complement elements are dependent modulo m^2");

    // alpha = M y, column j = K-coordinates of L[j].
    std::size_t n = pi.n();
    RatMatrix M(n, L.size());
    for (std::size_t j = 0; j < L.size(); ++j) {
        auto [alpha, beta] = pi.decompose(L[j]);
        assert(beta.is_zero());
        for (std::size_t i = 0; i < n; ++i) M.at(i, j) = alpha[i];
    }
    std::vector<std::string> yvars;
    for (std::size_t j = 1; j <= L.size(); ++j)
        yvars.push_back("y" + std::to_string(j));
    // Q = omega(exp(.)) restricted = -P(M y).
    return -(np.P.composed_linear(M, std::move(yvars)));
}

bool annihilator_member(const Polynomial& f, const Polynomial& g) {
    return apply_diff_operator(f, g).is_zero();
}

std::size_t derivative_span_dimension(const Polynomial& g) {
    if (g.is_zero())
        throw ZeroPolynomial("derivative span of the zero polynomial");
    std::size_t k = g.arity();
    // All iterated partials, indexed by the differentiation multi-index.
    std::map<Monomial, Polynomial> derivs;
    derivs.emplace(Monomial(k), g);
    std::vector<Monomial> frontier{Monomial(k)};
    while (!frontier.empty()) {
        std::vector<Monomial> next;
        for (const auto& idx : frontier) {
            const Polynomial& p = derivs.at(idx);
            for (std::size_t v = 0; v < k; ++v) {
                Polynomial dp = p.derivative(v);
                if (dp.is_zero()) continue;
                Monomial nidx = idx * Monomial::unit(k, v);
                if (derivs.emplace(nidx, std::move(dp)).second)
                    next.push_back(nidx);
            }
        }
        frontier = std::move(next);
    }
    // Rank over the monomial support.
    std::map<Monomial, std::size_t> columns;
    for (const auto& [idx, p] : derivs)
        for (const auto& [m, c] : p.terms())
            columns.emplace(m, columns.size());
    RatMatrix mat(derivs.size(), columns.size());
    std::size_t r = 0;
    for (const auto& [idx, p] : derivs) {
        for (const auto& [m, c] : p.terms()) mat.at(r, columns.at(m)) = c;
        ++r;
    }
    return rank(std::move(mat));
}

InverseSystemVerdict verify_inverse_system(const QuotientAlgebra& A,
                                           const Polynomial& g) {
    if (g.arity() != A.vars().size())
        throw VariableMismatch(
            "inverse-system candidate has wrong arity for the algebra");
    InverseSystemVerdict v;
    v.algebra_dimension = A.dim();
    const auto& gens = A.gb().generators;
    for (std::size_t i = 0; i < gens.size(); ++i)
        if (!annihilator_member(gens[i], g)) v.failing_generators.push_back(i);
    v.all_generators_annihilate = v.failing_generators.empty();
    v.span_dimension = derivative_span_dimension(g);
    v.ok = v.all_generators_annihilate && v.span_dimension == v.algebra_dimension;
    return v;
}

std::vector<std::vector<Rational>> default_complement(
    const QuotientAlgebra& A, const AdmissibleProjection& pi) {
    StructureReport rep = structure_report(A);
    auto m2 = power_ideal_basis(A, 2);
    RatMatrix stack;
    for (const auto& v : m2) stack.append_row(v);
    std::size_t current_rank = stack.rows() ? rank(stack) : 0;

    std::vector<std::vector<Rational>> L;
    // Standard monomials come pre-sorted in increasing term order; walk them
    // and greedily keep those in K that grow the rank modulo m^2.
    for (const auto& m : A.standard_monomials()) {
        if (L.size() == rep.emb_dim) break;
        if (m.is_constant()) continue;
        auto coords = A.coordinates(Polynomial::term(A.vars(), m, Rational(1)));
        if (!pi.in_kernel_k(coords)) continue;
        RatMatrix trial = stack;
        trial.append_row(coords);
        std::size_t r = rank(std::move(trial));
        if (r > current_rank) {
            stack.append_row(coords);
            current_rank = r;
            L.push_back(std::move(coords));
        }
    }
    if (L.size() != rep.emb_dim)
        throw NotAComplement(
            "no complement to m^2 inside K can be chosen from standard "
            "monomials (algebra too small?)");
    return L;
}

}  // namespace ag
