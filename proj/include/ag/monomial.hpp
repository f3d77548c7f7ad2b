#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace ag {

/// Exponent vector of fixed arity. The arity is the ambient variable count
/// and must agree between monomials that are combined.
class Monomial {
  public:
    Monomial() = default;
    explicit Monomial(std::size_t arity) : e_(arity, 0) {}
    explicit Monomial(std::vector<std::uint32_t> exponents)
        : e_(std::move(exponents)) {}

    static Monomial unit(std::size_t arity, std::size_t var,
                         std::uint32_t power = 1) {
        Monomial m(arity);
        m.e_[var] = power;
        return m;
    }

    std::size_t arity() const { return e_.size(); }
    std::uint32_t operator[](std::size_t i) const { return e_[i]; }
    const std::vector<std::uint32_t>& exponents() const { return e_; }

    bool is_constant() const;
    std::int64_t degree() const;
    std::int64_t weighted_degree(std::span<const long> weights) const;

    bool divides(const Monomial& m) const;
    bool coprime_with(const Monomial& m) const;

    Monomial operator*(const Monomial& m) const;
    /// Exact quotient; requires m.divides(*this).
    Monomial operator/(const Monomial& m) const;
    friend Monomial lcm(const Monomial& a, const Monomial& b);

    /// Structural ordering (plain lexicographic on exponent vectors);
    /// used for canonical container keys, independent of any term order.
    friend auto operator<=>(const Monomial& a, const Monomial& b) = default;

    std::string to_string(std::span<const std::string> vars) const;

  private:
    std::vector<std::uint32_t> e_;
};

}  // namespace ag
