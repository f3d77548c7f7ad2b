#pragma once

#include <optional>
#include <vector>

#include "ag/polynomial.hpp"
#include "ag/term_order.hpp"

namespace ag {

/// Reduced Groebner basis: elements are monic, fully inter-reduced, and
/// sorted by increasing leading monomial, so equal ideals under equal
/// orders give equal objects.
struct GroebnerBasis {
    TermOrder order;
    std::vector<Polynomial> basis;
    std::vector<Polynomial> generators;

    bool contains_one() const;
};

struct BuchbergerBudget {
    std::size_t max_pairs = 0;       // 0 = unlimited
    std::size_t max_basis_size = 0;  // 0 = unlimited
};

/// Buchberger with the normal selection strategy (smallest lcm in the term
/// order, ties by insertion index) and the coprimality and chain criteria.
/// Always terminates; deterministic for fixed input order.
GroebnerBasis groebner_basis(std::vector<Polynomial> gens, TermOrder ord);

/// As above but gives up (returns nullopt) when the budget is exhausted.
/// Exception: if 1 enters the basis the result {1} is always returned.
std::optional<GroebnerBasis> groebner_basis_budgeted(
    std::vector<Polynomial> gens, TermOrder ord, const BuchbergerBudget& budget);

/// Remainder of full multivariate division by gb.basis; no term of the
/// result is divisible by a leading term of the basis. Idempotent, linear.
Polynomial normal_form(const Polynomial& p, const GroebnerBasis& gb);

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g,
                        const TermOrder& ord);

/// Monomials outside the leading-term ideal, in increasing term order.
/// Throws InfiniteDimensional when some variable has no pure power among
/// the leading terms.
std::vector<Monomial> standard_monomial_basis(const GroebnerBasis& gb);

}  // namespace ag
