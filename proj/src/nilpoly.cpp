#include "ag/nilpoly.hpp"

#include <algorithm>
#include <cassert>

#include "ag/errors.hpp"

namespace ag {

std::vector<std::string> alpha_variable_names(std::size_t n) {
    std::vector<std::string> vars;
    vars.reserve(n);
    for (std::size_t i = 1; i <= n; ++i) vars.push_back("a" + std::to_string(i));
    return vars;
}

NilPolynomial nil_polynomial(const QuotientAlgebra& A,
                             const AdmissibleProjection& pi) {
    assert(&pi.algebra() == &A);
    std::size_t d = A.dim();
    std::size_t n = pi.n();
    auto vars = alpha_variable_names(n);

    // Generic element u = sum alpha_i k_i with symbolic coefficients.
    std::vector<Polynomial> u(d, Polynomial(vars));
    for (std::size_t i = 0; i < n; ++i) {
        const auto& k = pi.k_basis()[i];
        for (std::size_t r = 0; r < d; ++r)
            if (!k[r].is_zero())
                u[r].add_term(Monomial::unit(n, i), k[r]);
    }

    // total = sum_{m>=2} u^m / m!, computed coordinatewise; the powers die
    // out at the nil-index.
    std::vector<Polynomial> power = A.multiply_symbolic(u, u);
    std::vector<Polynomial> total(d, Polynomial(vars));
    Rational mfact = 2;
    for (unsigned m = 2;; ++m) {
        bool zero = std::all_of(power.begin(), power.end(),
                                [](const Polynomial& p) { return p.is_zero(); });
        if (zero) break;
        if (m > d) throw Error("generic element is not nilpotent");
        Rational inv = mfact.inverse();
        for (std::size_t r = 0; r < d; ++r)
            if (!power[r].is_zero()) total[r] += inv * power[r];
        power = A.multiply_symbolic(power, u);
        mfact *= Rational(static_cast<long>(m) + 1);
    }

    // P = -omega(total)/omega(sigma).
    const auto& omega = pi.omega_row();
    Rational omega_socle = 0;
    for (std::size_t r = 0; r < d; ++r)
        omega_socle += omega[r] * pi.socle_generator()[r];
    Polynomial P(vars);
    for (std::size_t r = 0; r < d; ++r)
        if (!omega[r].is_zero()) P += omega[r] * total[r];
    P *= -omega_socle.inverse();

    NilPolynomial np;
    np.projection = &pi;
    np.P = std::move(P);
    auto deg = np.P.degree();
    np.degree = deg ? static_cast<std::size_t>(*deg) : 0;
    return np;
}

Rational omega_form(const QuotientAlgebra& A, const AdmissibleProjection& pi,
                    const std::vector<std::vector<Rational>>& elements) {
    std::size_t m = elements.size();
    if (m < 2 || m > pi.nil_index())
        throw DegreeOutOfRange("omega_m needs 2 <= m <= nil-index, got m = " +
                               std::to_string(m));
    for (const auto& e : elements)
        if (!pi.in_kernel_k(e))
            throw NotInsideKernel("omega_m argument is not in K");
    std::vector<Rational> prod = elements.front();
    for (std::size_t i = 1; i < m; ++i) prod = A.multiply(prod, elements[i]);
    return pi.omega_value(prod);
}

BlaschkeData blaschke_data(const NilPolynomial& np) {
    const Polynomial& P = np.P;
    std::size_t n = P.arity();
    BlaschkeData data;
    data.g = RatMatrix(n, n);
    Polynomial p2 = P.homogeneous_component(2);
    for (const auto& [m, c] : p2.terms()) {
        std::vector<std::size_t> idx;
        for (std::size_t v = 0; v < n; ++v)
            for (std::uint32_t e = 0; e < m[v]; ++e) idx.push_back(v);
        assert(idx.size() == 2);
        if (idx[0] == idx[1]) {
            data.g.at(idx[0], idx[0]) = c;
        } else {
            data.g.at(idx[0], idx[1]) = c / Rational(2);
            data.g.at(idx[1], idx[0]) = c / Rational(2);
        }
    }
    auto inv = inverse(data.g);
    if (!inv)
        throw DegenerateQuadraticForm(
            "the quadratic part of the graph polynomial is degenerate");
    data.g_inverse = std::move(*inv);

    data.h.assign(n, std::vector<std::vector<Rational>>(
                         n, std::vector<Rational>(n, Rational(0))));
    if (np.degree >= 3) {
        Polynomial p3 = P.homogeneous_component(3);
        for (const auto& [m, c] : p3.terms()) {
            std::vector<std::size_t> idx;
            for (std::size_t v = 0; v < n; ++v)
                for (std::uint32_t e = 0; e < m[v]; ++e) idx.push_back(v);
            assert(idx.size() == 3);
            // Spread the coefficient over the distinct index arrangements so
            // that h is symmetric and sums back to the coefficient.
            std::sort(idx.begin(), idx.end());
            std::vector<std::vector<std::size_t>> perms;
            do {
                perms.push_back(idx);
            } while (std::next_permutation(idx.begin(), idx.end()));
            Rational share = c / Rational(static_cast<long>(perms.size()));
            for (const auto& p : perms) data.h[p[0]][p[1]][p[2]] = share;
        }
    }

    data.trace.assign(n, Rational(0));
    for (std::size_t l = 0; l < n; ++l)
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                data.trace[l] += data.g_inverse.at(i, j) * data.h[i][j][l];
    data.trace_zero =
        std::all_of(data.trace.begin(), data.trace.end(),
                    [](const Rational& x) { return x.is_zero(); });
    return data;
}

std::vector<Rational> star_product(const QuotientAlgebra& A,
                                   const AdmissibleProjection& pi,
                                   std::span<const Rational> u,
                                   std::span<const Rational> v) {
    std::vector<Rational> uu(u.begin(), u.end());
    std::vector<Rational> vv(v.begin(), v.end());
    if (!pi.in_kernel_k(uu) || !pi.in_kernel_k(vv))
        throw NotInsideKernel("star product arguments must lie in K");
    std::size_t n = pi.n();
    // Gram matrix of omega_2 on the K-basis.
    RatMatrix gram(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i; j < n; ++j) {
            auto prod = A.multiply(pi.k_basis()[i], pi.k_basis()[j]);
            Rational val = pi.omega_value(prod);
            gram.at(i, j) = val;
            gram.at(j, i) = val;
        }
    }
    auto uv = A.multiply(uu, vv);
    std::vector<Rational> rhs(n);
    for (std::size_t j = 0; j < n; ++j) {
        auto triple = A.multiply(uv, pi.k_basis()[j]);
        rhs[j] = pi.omega_value(triple);
    }
    auto ginv = inverse(gram);
    if (!ginv)
        throw DegenerateQuadraticForm("omega_2 is degenerate on K");
    auto alpha = ginv->apply(rhs);
    return pi.k_element(alpha);
}

}  // namespace ag
