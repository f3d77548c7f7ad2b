#pragma once

#include <span>
#include <vector>

#include "ag/linalg.hpp"
#include "ag/quotient.hpp"

namespace ag {

/// An admissible projection on a Gorenstein algebra: a linear functional
/// omega with omega(1) = 0 and omega nonzero on the socle, together with
/// the induced splitting m = K + <socle>, K = ker(omega) intersect m, and
/// a distinguished socle generator sigma with omega-normalization fixed at
/// construction. The projection itself is pi(a) = omega(a)/omega(sigma) *
/// sigma; the scalar value omega(a)/omega(sigma) is exposed directly.
class AdmissibleProjection {
  public:
    const QuotientAlgebra& algebra() const { return *A_; }
    std::size_t n() const { return kbasis_.size(); }  // dim K = dim m - 1
    std::size_t nil_index() const { return nil_index_; }

    const std::vector<Rational>& omega_row() const { return omega_; }
    const std::vector<std::vector<Rational>>& k_basis() const {
        return kbasis_;
    }
    const std::vector<Rational>& socle_generator() const { return socle_; }

    /// omega(elem) normalized by omega(sigma); this is the socle coordinate
    /// of pi(elem).
    Rational omega_value(std::span<const Rational> elem) const;

    /// Splits an element of m as lambda*1 + sum alpha_i k_i + beta*sigma;
    /// returns (alpha, beta). Throws ElementNotInMaxIdeal if lambda != 0.
    std::pair<std::vector<Rational>, Rational> decompose(
        std::span<const Rational> elem) const;

    /// sum alpha_i k_i as algebra coordinates.
    std::vector<Rational> k_element(std::span<const Rational> alpha) const;

    bool in_kernel_k(std::span<const Rational> elem) const;

    bool operator==(const AdmissibleProjection& o) const {
        return A_ == o.A_ && omega_ == o.omega_ && kbasis_ == o.kbasis_ &&
               socle_ == o.socle_;
    }

    friend AdmissibleProjection default_projection(const QuotientAlgebra& A);
    friend AdmissibleProjection translate_projection(
        const AdmissibleProjection& pi, std::span<const Rational> y);

  private:
    AdmissibleProjection() = default;
    void finalize();  // computes omega(sigma) and the decomposition matrix

    const QuotientAlgebra* A_ = nullptr;
    std::vector<Rational> omega_;
    std::vector<std::vector<Rational>> kbasis_;
    std::vector<Rational> socle_;
    Rational omega_socle_;
    RatMatrix decomp_;  // inverse of the column matrix [1 | k_1..k_n | sigma]
    std::size_t nil_index_ = 0;
};

/// The deterministic projection dual to the distinguished socle monomial:
/// among basis elements with nonzero coordinate in the socle generator, the
/// one with the largest leading monomial in the term order. Throws
/// NotGorenstein.
AdmissibleProjection default_projection(const QuotientAlgebra& A);

/// The projection a -> pi(exp(y) a); translates the graph hypersurface by
/// -y. Throws ElementNotInMaxIdeal. Translating by 0 returns pi itself.
AdmissibleProjection translate_projection(const AdmissibleProjection& pi,
                                          std::span<const Rational> y);

/// exp(u) = sum u^m / m! (finite since m is nilpotent); u must lie in the
/// maximal ideal. Returns coordinates of an element of 1 + m.
std::vector<Rational> exp_element(const QuotientAlgebra& A,
                                  std::span<const Rational> u);

/// log(1 + u) for v = 1 + u with u in m; exact inverse of exp_element.
/// Throws UnitPartNotOne when the coordinate of 1 in v is not 1.
std::vector<Rational> log_element(const QuotientAlgebra& A,
                                  std::span<const Rational> v);

}  // namespace ag
