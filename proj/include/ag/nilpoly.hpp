#pragma once

#include <span>
#include <vector>

#include "ag/linalg.hpp"
#include "ag/polynomial.hpp"
#include "ag/projection.hpp"

namespace ag {

/// The polynomial P(alpha) = -omega(exp(sum alpha_i k_i))/omega(sigma) in
/// coordinates alpha_1..alpha_n on K. Its graph over K is the hypersurface
/// attached to the projection; deg P equals the nil-index and P has no
/// constant or linear terms.
struct NilPolynomial {
    const AdmissibleProjection* projection;
    Polynomial P;        // in variables a1..an
    std::size_t degree;  // = nil-index of the algebra
};

NilPolynomial nil_polynomial(const QuotientAlgebra& A,
                             const AdmissibleProjection& pi);

/// Names used for the K-coordinates of an n-variable graph polynomial.
std::vector<std::string> alpha_variable_names(std::size_t n);

/// omega_m(u_1,...,u_m) = pi(u_1...u_m) as a scalar. All u_i must lie in K;
/// 2 <= m <= nil-index. Symmetric and multilinear.
Rational omega_form(const QuotientAlgebra& A, const AdmissibleProjection& pi,
                    const std::vector<std::vector<Rational>>& elements);

/// Quadratic and cubic data of a graph equation in Blaschke terms: the
/// symmetric matrix g of the degree-2 part, the symmetric tensor h of the
/// degree-3 part (zero when deg P = 2), the inverse of g, and the traces
/// T_l = sum_ij g^ij h_ijl. The graph equation is in Blaschke normal form
/// iff every T_l vanishes.
struct BlaschkeData {
    RatMatrix g;
    RatMatrix g_inverse;
    std::vector<std::vector<std::vector<Rational>>> h;  // dense n^3, symmetric
    std::vector<Rational> trace;
    bool trace_zero;
};

/// Throws DegenerateQuadraticForm when g is singular (which contradicts the
/// nondegeneracy of the underlying bilinear form and signals bad input).
BlaschkeData blaschke_data(const NilPolynomial& np);

/// The K-valued product defined by omega_2(u*v, w) = omega_3(u, v, w) for
/// all w in K; equals the K-component of the algebra product uv.
std::vector<Rational> star_product(const QuotientAlgebra& A,
                                   const AdmissibleProjection& pi,
                                   std::span<const Rational> u,
                                   std::span<const Rational> v);

}  // namespace ag
