#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ag/nilpoly.hpp"
#include "ag/quotient.hpp"

namespace ag {

/// Cheap isomorphism invariants plus the per-degree term counts of the
/// graph polynomial. Only the invariant fields (dimension, nil-index,
/// embedding dimension, filtration) participate in the necessary-condition
/// test; the term counts depend on the chosen basis and are informational.
struct Fingerprint {
    std::size_t dim = 0;
    std::size_t nil_index = 0;
    std::size_t emb_dim = 0;
    std::vector<std::size_t> filtration;
    std::map<std::int64_t, std::size_t> p_term_counts;

    bool operator==(const Fingerprint&) const = default;
};

/// Equality of the invariant fields; necessary for isomorphism.
bool fingerprint_necessary_match(const Fingerprint& a, const Fingerprint& b);

Fingerprint invariant_fingerprint(const QuotientAlgebra& A,
                                  const AdmissibleProjection& pi,
                                  const NilPolynomial& P);
Fingerprint invariant_fingerprint(const QuotientAlgebra& A,
                                  const AdmissibleProjection& pi);

/// A block-diagonal linear-equivalence candidate: alpha~ = C alpha on the
/// K-coordinates and a nonzero scalar c on the socle coordinate.
struct EquivalenceCandidate {
    RatMatrix C;
    Rational c;
    /// Optional provenance: variable -> image, when the candidate came from
    /// a variable substitution.
    std::vector<std::pair<std::string, std::string>> substitution;
};

/// True iff c * P = P~ composed with C, exactly. Throws DimensionMismatch
/// or SingularC on malformed candidates.
bool verify_linear_equivalence(const NilPolynomial& P,
                               const NilPolynomial& Pt,
                               const EquivalenceCandidate& cand);

/// True iff the substitution maps every generator of A's ideal into A~'s
/// ideal and the induced linear map on the quotients is bijective.
/// images[i] is the image of A's i-th variable, over A~'s variables.
bool verify_algebra_morphism(const QuotientAlgebra& A,
                             const QuotientAlgebra& At,
                             const std::vector<Polynomial>& images);

/// Builds the block candidate induced by an algebra morphism, when the
/// induced map respects both splittings (K -> K~, socle -> socle).
std::optional<EquivalenceCandidate> lift_morphism_candidate(
    const AdmissibleProjection& pi, const AdmissibleProjection& pit,
    const std::vector<Polynomial>& images);

/// Polynomial system in the unknown entries of C (restricted by the power
/// filtration), the socle scalar c, and its inverse witness w. Equations
/// match the coefficients of c*P^[m](alpha) against P~^[m](C alpha) for
/// every m in `degrees`, plus c*w = 1. Forced constant values discovered
/// during construction are recorded in `bindings` and substituted into the
/// stored equations.
struct ConstraintSystem {
    const QuotientAlgebra* A = nullptr;
    const QuotientAlgebra* At = nullptr;
    const AdmissibleProjection* pi = nullptr;
    const AdmissibleProjection* pit = nullptr;
    const NilPolynomial* P = nullptr;
    const NilPolynomial* Pt = nullptr;

    std::vector<std::size_t> degrees;
    bool both_graded = false;
    std::optional<std::vector<long>> weights_a, weights_b;

    struct UnknownInfo {
        enum Kind { CEntry, TParam, Scalar, Witness } kind;
        std::size_t i = 0, j = 0;
    };

    std::vector<std::string> unknowns;
    std::vector<UnknownInfo> unknown_info;
    std::vector<Polynomial> equations;
    std::map<std::string, Rational> bindings;
    /// C(i,j) as a linear polynomial in the unknowns.
    std::vector<std::vector<Polynomial>> entry_expr;
    std::size_t masked_entries = 0;  // filtration-forbidden entries
    bool expansion_overflow = false;
    bool contradiction = false;  // a nonzero constant equation appeared
};

/// Throws FingerprintMismatch when the invariant fingerprints differ (the
/// refutation is then already established). Degrees must lie in [2, nu].
ConstraintSystem equivalence_constraint_system(
    const QuotientAlgebra& A, const AdmissibleProjection& pi,
    const NilPolynomial& P, const QuotientAlgebra& At,
    const AdmissibleProjection& pit, const NilPolynomial& Pt,
    std::vector<std::size_t> degrees,
    std::optional<std::vector<long>> weights_a = std::nullopt,
    std::optional<std::vector<long>> weights_b = std::nullopt);

enum class SatKind { Infeasible, Witness, Unknown };

struct Decision {
    SatKind kind = SatKind::Unknown;
    std::optional<EquivalenceCandidate> witness;
    std::vector<std::size_t> refuting_degrees;
    std::string note;
};

/// Infeasible iff the equation ideal is (1) (only reported when both sides
/// are certified graded, otherwise degrades to Unknown); Witness carries a
/// candidate that passed verify_linear_equivalence; Unknown when the solver
/// budget is exhausted or no rational point was found.
Decision decide_constraint_satisfiability(const ConstraintSystem& sys);

/// Whole-pipeline decision used by the CLI: fingerprint gate, constraint
/// system over `degrees` (default nu, nu-1, nu-2), satisfiability.
struct IsoOutcome {
    enum class Verdict { Isomorphic, NotIsomorphic, Unknown };
    Verdict verdict = Verdict::Unknown;
    std::optional<EquivalenceCandidate> witness;
    std::string certificate;
    std::vector<std::size_t> degrees_used;
    Fingerprint fingerprint_a, fingerprint_b;
};

IsoOutcome decide_isomorphism(
    const QuotientAlgebra& A, const QuotientAlgebra& At,
    std::optional<std::vector<std::size_t>> degrees = std::nullopt,
    std::optional<std::vector<long>> weights_a = std::nullopt,
    std::optional<std::vector<long>> weights_b = std::nullopt);

/// Rational solutions of a polynomial system, found by constant
/// propagation, budgeted lex Groebner triangularization, rational root
/// extraction, and bounded branching on candidate values. Sound but
/// incomplete: an empty result does not certify infeasibility.
struct SolveBudget {
    std::size_t branches = 500;
    std::size_t gb_pairs = 4000;
    std::size_t max_solutions = 4;
};
std::vector<std::map<std::string, Rational>> rational_solutions(
    const std::vector<Polynomial>& equations, SolveBudget budget = {});

/// Rational roots of a univariate polynomial (exact, via the rational root
/// theorem); nullopt when coefficient factorization exceeds the trial
/// bound.
std::optional<std::vector<Rational>> univariate_rational_roots(
    const Polynomial& p, std::size_t var);

}  // namespace ag
