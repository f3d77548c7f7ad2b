#pragma once

#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ag/groebner.hpp"
#include "ag/linalg.hpp"
#include "ag/polynomial.hpp"

namespace ag {

/// A finite-dimensional commutative quotient F[x1..xk]/I presented by a
/// Groebner basis, a vector-space basis b0 = 1, b1, ..., b_{d-1} (standard
/// monomials by default, or a user-supplied basis of full rank), and the
/// structure-constant tensor b_i b_j = sum_l c_ij^l b_l.
///
/// Immutable after construction; all operations on it are pure.
class QuotientAlgebra {
  public:
    struct TensorEntry {
        std::size_t i, j, l;  // i <= j
        Rational c;
    };

    const GroebnerBasis& gb() const { return gb_; }
    const std::vector<std::string>& vars() const { return vars_; }
    std::size_t dim() const { return basis_.size(); }
    const std::vector<Polynomial>& basis() const { return basis_; }
    const std::vector<Monomial>& standard_monomials() const {
        return std_monomials_;
    }
    bool has_custom_basis() const { return custom_basis_; }
    const std::vector<TensorEntry>& structure_tensor() const {
        return tensor_;
    }

    /// Coordinates of p's residue class in the algebra basis.
    std::vector<Rational> coordinates(const Polynomial& p) const;
    /// Normal-form polynomial represented by a coordinate vector.
    Polynomial element_polynomial(std::span<const Rational> coords) const;

    std::vector<Rational> multiply(std::span<const Rational> u,
                                   std::span<const Rational> v) const;
    /// Product of elements whose coordinates are polynomials (in some
    /// common coefficient ring F[alpha...]).
    std::vector<Polynomial> multiply_symbolic(
        const std::vector<Polynomial>& u,
        const std::vector<Polynomial>& v) const;

    std::vector<Rational> power(std::span<const Rational> u, unsigned n) const;
    bool is_nilpotent(std::span<const Rational> u) const;

    friend QuotientAlgebra build_quotient_algebra(
        std::vector<Polynomial> gens, TermOrder ord,
        std::optional<std::vector<Polynomial>> custom_basis);

  private:
    GroebnerBasis gb_{TermOrder::grevlex(0), {}, {}};
    std::vector<std::string> vars_;
    std::vector<Monomial> std_monomials_;
    std::vector<Polynomial> basis_;
    bool custom_basis_ = false;
    RatMatrix basis_to_std_;  // columns: basis elements over std monomials
    RatMatrix std_to_basis_;
    std::vector<TensorEntry> tensor_;

    std::vector<Rational> std_coordinates(const Polynomial& nf) const;
};

/// Errors: ImproperIdeal (1 in I), InfiniteDimensional, SingularBasis.
QuotientAlgebra build_quotient_algebra(
    std::vector<Polynomial> gens, TermOrder ord,
    std::optional<std::vector<Polynomial>> custom_basis = std::nullopt);

struct StructureReport {
    std::size_t dim = 0;
    bool is_local = false;
    bool is_gorenstein = false;
    std::size_t nil_index = 0;
    std::size_t emb_dim = 0;
    std::vector<std::size_t> filtration;  // dim m^1, dim m^2, ..., dim m^nu
    std::vector<std::vector<Rational>> socle_basis;  // coordinate vectors
    std::vector<std::vector<Rational>> max_ideal_basis;
};

/// Throws NotLocal when some variable image is not nilpotent.
StructureReport structure_report(const QuotientAlgebra& A);

/// Dimensions of m^1 > m^2 > ... > m^nu. Throws NotLocal.
std::vector<std::size_t> power_filtration(const QuotientAlgebra& A);

/// Basis vectors of m^k (k >= 1) as echelon rows; m^0 is not represented.
std::vector<std::vector<Rational>> power_ideal_basis(const QuotientAlgebra& A,
                                                     std::size_t k);

struct GradingData {
    std::vector<long> weights;
    std::map<std::int64_t, std::size_t> dims;  // weight -> dim A^weight
};

/// Succeeds iff every ideal generator is weighted-homogeneous; reports the
/// induced per-weight dimensions. Throws NotHomogeneous naming the first
/// offending generator.
GradingData check_grading(const QuotientAlgebra& A, std::vector<long> weights);

/// Searches for positive integer weights making every generator
/// weighted-homogeneous. Deterministic; returns nullopt when none is found
/// by the search (which is complete for a 1-dimensional weight space and
/// otherwise tries the all-ones vector).
std::optional<std::vector<long>> detect_grading_weights(
    const std::vector<Polynomial>& gens);

}  // namespace ag
