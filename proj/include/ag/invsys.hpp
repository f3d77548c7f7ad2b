#pragma once

#include <vector>

#include "ag/nilpoly.hpp"
#include "ag/polynomial.hpp"
#include "ag/quotient.hpp"

namespace ag {

/// Restriction of the graph polynomial to the span of L written in fresh
/// variables y1..yk, with the sign convention Q = omega(exp(.)), i.e.
/// Q = -P restricted. L must consist of elements of K forming a complement
/// to m^2 inside m (so |L| = embedding dimension). Errors: NotInsideKernel,
/// NotAComplement.
Polynomial restrict_nil_polynomial(const NilPolynomial& np,
                                   const std::vector<std::vector<Rational>>& L);

/// True iff f(d/dy)(g) = 0.
bool annihilator_member(const Polynomial& f, const Polynomial& g);

/// Dimension of the linear span of g and all of its iterated partial
/// derivatives. Throws ZeroPolynomial.
std::size_t derivative_span_dimension(const Polynomial& g);

struct InverseSystemVerdict {
    bool all_generators_annihilate = false;
    std::vector<std::size_t> failing_generators;  // indices into gens
    std::size_t span_dimension = 0;
    std::size_t algebra_dimension = 0;
    bool ok = false;  // generators annihilate and span dim == algebra dim
};

/// Checks that g is a Macaulay inverse system for A: every ideal generator
/// annihilates g under the differential-operator action, and the span of
/// g's derivatives has dimension dim A.
InverseSystemVerdict verify_inverse_system(const QuotientAlgebra& A,
                                           const Polynomial& g);

/// The default complement: term-order-smallest standard monomials of K
/// whose images span m/m^2. Deterministic.
std::vector<std::vector<Rational>> default_complement(
    const QuotientAlgebra& A, const AdmissibleProjection& pi);

}  // namespace ag
