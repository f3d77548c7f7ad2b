#pragma once

#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ag/monomial.hpp"
#include "ag/rational.hpp"
#include "ag/term_order.hpp"

namespace ag {

class RatMatrix;

/// Sparse multivariate polynomial with exact rational coefficients over a
/// named variable list. Zero coefficients are never stored, so two
/// polynomials are equal iff their variable lists and term maps are equal.
///
/// The internal term map is keyed by the structural monomial order and does
/// not depend on any TermOrder; leading terms with respect to a term order
/// are obtained by scanning.
class Polynomial {
  public:
    Polynomial() = default;
    explicit Polynomial(std::vector<std::string> vars)
        : vars_(std::move(vars)) {}

    static Polynomial constant(std::vector<std::string> vars, Rational c);
    static Polynomial variable(std::vector<std::string> vars, std::size_t i);
    static Polynomial term(std::vector<std::string> vars, Monomial m,
                           Rational c);

    const std::vector<std::string>& vars() const { return vars_; }
    std::size_t arity() const { return vars_.size(); }
    const std::map<Monomial, Rational>& terms() const { return terms_; }
    std::size_t term_count() const { return terms_.size(); }

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;

    /// Total degree; nullopt is the "minus infinity" of the zero polynomial.
    std::optional<std::int64_t> degree() const;
    std::optional<std::int64_t> weighted_degree(std::span<const long> w) const;

    Rational coefficient(const Monomial& m) const;
    Rational constant_term() const;
    void set_coefficient(const Monomial& m, const Rational& c);
    void add_term(const Monomial& m, const Rational& c);

    Polynomial operator-() const;
    Polynomial& operator+=(const Polynomial& o);
    Polynomial& operator-=(const Polynomial& o);
    Polynomial& operator*=(const Rational& s);
    friend Polynomial operator+(Polynomial a, const Polynomial& b) {
        return a += b;
    }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) {
        return a -= b;
    }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(Polynomial a, const Rational& s) {
        return a *= s;
    }
    friend Polynomial operator*(const Rational& s, Polynomial a) {
        return a *= s;
    }

    /// acc += s * a * b, accumulating in place.
    static void add_scaled_product(Polynomial& acc, const Polynomial& a,
                                   const Polynomial& b, const Rational& s);

    Polynomial pow(unsigned n) const;

    bool operator==(const Polynomial& o) const {
        return vars_ == o.vars_ && terms_ == o.terms_;
    }

    /// Sum of the terms of total degree m.
    Polynomial homogeneous_component(std::int64_t m) const;

    /// Largest term with respect to ord; polynomial must be nonzero.
    std::pair<Monomial, Rational> leading_term(const TermOrder& ord) const;
    Monomial leading_monomial(const TermOrder& ord) const;

    /// p(M x): variable x_i is replaced by the linear form
    /// sum_j M(i,j) * x_j. M must be square of size arity().
    Polynomial substituted(const RatMatrix& M) const;

    /// p composed with the linear map alpha = M y into fresh variables:
    /// x_i is replaced by sum_j M(i,j) * y_j, with M of size arity() x
    /// new_vars.size().
    Polynomial composed_linear(const RatMatrix& M,
                               std::vector<std::string> new_vars) const;

    /// General substitution: variable x_i is replaced by images[i]. All
    /// images must share one variable list, which becomes the result's.
    Polynomial composed(const std::vector<Polynomial>& images) const;

    /// Partial derivative with respect to variable i.
    Polynomial derivative(std::size_t i) const;

    Rational evaluate(std::span<const Rational> point) const;

    /// Renders in the parse grammar; parse(to_string()) reproduces the
    /// polynomial exactly. Terms appear by decreasing total degree.
    std::string to_string() const;

  private:
    void check_same_vars(const Polynomial& o) const;

    std::vector<std::string> vars_;
    std::map<Monomial, Rational> terms_;
};

/// Parses the polynomial grammar (see docs: rational literals `a/b`,
/// variables, + - * ^ and parentheses). Throws ParseError or
/// UnknownVariable.
Polynomial parse_polynomial(const std::string& text,
                            std::vector<std::string> vars);

Polynomial poly_mul(const Polynomial& p, const Polynomial& q);

/// p(Mx) with M square; see Polynomial::substituted.
Polynomial substitute_linear(const Polynomial& p, const RatMatrix& M);

/// f(d/dy1, ..., d/dyk) applied to g. Arities must match; variable names
/// may differ (f acts through positions).
Polynomial apply_diff_operator(const Polynomial& f, const Polynomial& g);

Polynomial homogeneous_component(const Polynomial& p, std::int64_t m);

}  // namespace ag
