#pragma once

#include <random>
#include <string>
#include <vector>

#include "ag/algfile.hpp"
#include "ag/invsys.hpp"
#include "ag/isocheck.hpp"
#include "ag/nilpoly.hpp"

namespace agtest {

using ag::Monomial;
using ag::Polynomial;
using ag::QuotientAlgebra;
using ag::Rational;
using ag::TermOrder;

inline Polynomial P(const std::string& text, std::vector<std::string> vars) {
    return ag::parse_polynomial(text, std::move(vars));
}

struct Rng {
    explicit Rng(std::uint64_t seed) : eng(seed) {}
    std::mt19937_64 eng;

    long int_in(long lo, long hi) {
        return std::uniform_int_distribution<long>(lo, hi)(eng);
    }
    Rational rational(long maxnum = 9, long maxden = 4) {
        return Rational(int_in(-maxnum, maxnum), int_in(1, maxden));
    }
    Rational nonzero_rational(long maxnum = 9, long maxden = 4) {
        while (true) {
            Rational r = rational(maxnum, maxden);
            if (!r.is_zero()) return r;
        }
    }
    Monomial monomial(std::size_t arity, long maxdeg = 4) {
        std::vector<std::uint32_t> e(arity);
        long total = int_in(0, maxdeg);
        for (long i = 0; i < total; ++i)
            e[static_cast<std::size_t>(int_in(0, static_cast<long>(arity) - 1))]++;
        return Monomial(std::move(e));
    }
    Polynomial polynomial(std::vector<std::string> vars, long maxdeg = 4,
                          long terms = 4) {
        Polynomial p(vars);
        long count = int_in(0, terms);
        for (long i = 0; i < count; ++i)
            p.add_term(monomial(vars.size(), maxdeg), rational());
        return p;
    }
    // Random element of the maximal ideal (unit coordinate zero).
    std::vector<Rational> element_of_m(const QuotientAlgebra& A) {
        std::vector<Rational> v(A.dim());
        for (std::size_t i = 1; i < A.dim(); ++i) v[i] = rational(4, 3);
        return v;
    }
    // Random element of K for a given projection.
    std::vector<Rational> element_of_k(const ag::AdmissibleProjection& pi) {
        std::vector<Rational> alpha(pi.n());
        for (auto& a : alpha) a = rational(4, 3);
        return pi.k_element(alpha);
    }
};

// ---- fixtures -------------------------------------------------------------

// The 15-dimensional two-generator family at parameter t.
inline std::vector<Polynomial> family15_gens(const Rational& t) {
    std::vector<std::string> vars{"x", "y"};
    std::string ts = t.to_string();
    return {P("2*x^3 + (" + ts + ")*x*y^3", vars),
            P("(" + ts + ")*x^2*y^2 + 2*y^5", vars)};
}

inline std::vector<Polynomial> family15_paper_basis() {
    std::vector<std::string> vars{"x", "y"};
    std::vector<std::string> monos{"1",     "x",      "y",     "x^2",
                                   "x*y",   "y^2",    "x^2*y", "x*y^2",
                                   "y^3",   "x*y^3",  "x^2*y^2", "y^4",
                                   "x^2*y^3", "x*y^4", "x^2*y^4"};
    std::vector<Polynomial> basis;
    for (const auto& m : monos) basis.push_back(P(m, vars));
    return basis;
}

inline QuotientAlgebra family15(const Rational& t, bool paper_basis = true) {
    auto gens = family15_gens(t);
    if (paper_basis)
        return ag::build_quotient_algebra(gens, TermOrder::grevlex(2),
                                          family15_paper_basis());
    return ag::build_quotient_algebra(gens, TermOrder::grevlex(2));
}

// F[x]/(x^d).
inline QuotientAlgebra power_ring(unsigned d) {
    std::vector<std::string> vars{"x"};
    return ag::build_quotient_algebra({P("x^" + std::to_string(d), vars)},
                                      TermOrder::grevlex(1));
}

// F[x,y]/(x^2, y^2).
inline QuotientAlgebra ring_x2_y2() {
    std::vector<std::string> vars{"x", "y"};
    return ag::build_quotient_algebra({P("x^2", vars), P("y^2", vars)},
                                      TermOrder::grevlex(2));
}

// F[x,y]/(x^2 + y^2, x*y), with the basis {1, x, y, x^2}.
inline QuotientAlgebra ring_x2py2_xy() {
    std::vector<std::string> vars{"x", "y"};
    std::vector<Polynomial> basis{P("1", vars), P("x", vars), P("y", vars),
                                  P("x^2", vars)};
    return ag::build_quotient_algebra({P("x^2 + y^2", vars), P("x*y", vars)},
                                      TermOrder::grevlex(2), basis);
}

// F[x,y]/(x^3, y^2): standard graded with nil-index 3.
inline QuotientAlgebra ring_x3_y2() {
    std::vector<std::string> vars{"x", "y"};
    return ag::build_quotient_algebra({P("x^3", vars), P("y^2", vars)},
                                      TermOrder::grevlex(2));
}

// All Gorenstein fixtures used by the property suites.
inline std::vector<QuotientAlgebra> gorenstein_fixtures() {
    std::vector<QuotientAlgebra> out;
    for (unsigned d = 2; d <= 6; ++d) out.push_back(power_ring(d));
    out.push_back(ring_x2_y2());
    out.push_back(ring_x2py2_xy());
    out.push_back(family15(Rational(1)));
    out.push_back(family15(Rational(3)));
    return out;
}

inline std::string fixture_path(const std::string& name) {
    return std::string(AG_FIXTURE_DIR) + "/" + name;
}

}  // namespace agtest
