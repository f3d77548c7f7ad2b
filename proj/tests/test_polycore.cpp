#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "ag/errors.hpp"
#include "ag/groebner.hpp"
#include "ag/linalg.hpp"
#include "ag/polynomial.hpp"
#include "support.hpp"

using namespace ag;
using agtest::P;
using agtest::Rng;

static const std::vector<std::string> XY{"x", "y"};

TEST_CASE("parsing basics") {
    Polynomial p = P("2*x^3 + 1*x*y^3", XY);
    CHECK(p.term_count() == 2);
    CHECK(p.coefficient(Monomial({3, 0})) == Rational(2));
    CHECK(p.coefficient(Monomial({1, 3})) == Rational(1));

    CHECK(P("0", XY).is_zero());
    CHECK(P("(x+y)^2", XY) == P("x^2 + 2*x*y + y^2", XY));
    CHECK(P("1/2 - 3/2", XY) == P("-1", XY));
    CHECK(P("-x", XY) == -P("x", XY));
    CHECK(P("x - (y - x)", XY) == P("2*x - y", XY));
}

TEST_CASE("parse errors carry positions") {
    CHECK_THROWS_AS(P("x + ", XY), ParseError);
    CHECK_THROWS_AS(P("x ^ y", XY), ParseError);
    CHECK_THROWS_AS(P("2x", XY), ParseError);  // juxtaposition is not a product
    CHECK_THROWS_AS(P("x + z", XY), UnknownVariable);
    CHECK_THROWS_AS(P("(x", XY), ParseError);
    try {
        P("x + @", XY);
        CHECK(false);
    } catch (const ParseError& e) {
        CHECK(e.position == 4);
    }
}

TEST_CASE("multiplication examples") {
    CHECK(P("x+y", XY) * P("x-y", XY) == P("x^2 - y^2", XY));
    Polynomial p = P("3*x^2*y - 1/7*y + 2", XY);
    CHECK(p * P("1", XY) == p);
    CHECK(P("x^2*y^2", XY) * P("y^3", XY) == P("x^2*y^5", XY));
    CHECK_THROWS_AS(P("x", XY) * P("x", {"x"}), VariableMismatch);
}

TEST_CASE("degree sentinel for the zero polynomial") {
    CHECK(!P("0", XY).degree().has_value());
    CHECK(P("5", XY).degree() == 0);
    CHECK(P("x*y^3", XY).degree() == 4);
}

TEST_CASE("substitute_linear examples") {
    // Monomial scaling: a2^7 under alpha2 -> mu*alpha2 with mu = 3/2.
    std::vector<std::string> a2{"a1", "a2"};
    RatMatrix diag = RatMatrix::identity(2);
    diag.at(1, 1) = Rational(3, 2);
    Polynomial p = P("a2^7", a2);
    Polynomial expect = Rational(2187, 128) * P("a2^7", a2);
    CHECK(substitute_linear(p, diag) == expect);

    // Identity.
    Polynomial q = P("x^2*y - 3*x + 1/5", XY);
    CHECK(substitute_linear(q, RatMatrix::identity(2)) == q);

    // Swap x <-> y.
    RatMatrix swap(2, 2);
    swap.at(0, 1) = 1;
    swap.at(1, 0) = 1;
    CHECK(substitute_linear(P("x^2*y", XY), swap) == P("x*y^2", XY));
}

TEST_CASE("substitute_linear composition law") {
    Rng rng(2024);
    for (int trial = 0; trial < 40; ++trial) {
        Polynomial p = rng.polynomial(XY, 4, 5);
        RatMatrix M(2, 2), N(2, 2);
        for (std::size_t i = 0; i < 2; ++i)
            for (std::size_t j = 0; j < 2; ++j) {
                M.at(i, j) = rng.rational(3, 2);
                N.at(i, j) = rng.rational(3, 2);
            }
        CHECK(substitute_linear(substitute_linear(p, M), N) ==
              substitute_linear(p, M * N));
        // Degree-m components transform degree by degree.
        for (std::int64_t m = 0; m <= 4; ++m)
            CHECK(homogeneous_component(substitute_linear(p, M), m) ==
                  substitute_linear(homogeneous_component(p, m), M));
    }
}

TEST_CASE("differential operator examples") {
    // The paper family's generators annihilate its inverse system at t=1.
    Polynomial f1 = P("2*x^3 + x*y^3", XY);
    Polynomial f2 = P("x^2*y^2 + 2*y^5", XY);
    Polynomial mu1 =
        P("1/10080*y^7 - 1/48*x^2*y^4 + 1/48*x^4*y", XY);
    CHECK(apply_diff_operator(f1, mu1).is_zero());
    CHECK(apply_diff_operator(f2, mu1).is_zero());

    CHECK(apply_diff_operator(P("x", XY), P("y", XY)).is_zero());
    std::vector<std::string> X{"x"};
    CHECK(apply_diff_operator(P("x^2", X), P("x^2", X)) == P("2", X));
    CHECK_THROWS_AS(apply_diff_operator(P("x", {"x"}), P("x*y", XY)),
                    VariableMismatch);
}

TEST_CASE("differential operator composition") {
    Rng rng(7);
    for (int trial = 0; trial < 100; ++trial) {
        Polynomial f1 = rng.polynomial(XY, 3, 3);
        Polynomial f2 = rng.polynomial(XY, 3, 3);
        Polynomial g = rng.polynomial(XY, 5, 5);
        CHECK(apply_diff_operator(f1 * f2, g) ==
              apply_diff_operator(f1, apply_diff_operator(f2, g)));
    }
}

TEST_CASE("homogeneous components") {
    Polynomial p = P("x^2 + x*y + y", XY);
    CHECK(homogeneous_component(p, 2) == P("x^2 + x*y", XY));
    CHECK(homogeneous_component(p, 1) == P("y", XY));
    CHECK(homogeneous_component(P("0", XY), 3).is_zero());
    // Components sum back to p.
    Polynomial sum(XY);
    for (std::int64_t m = 0; m <= 2; ++m) sum += homogeneous_component(p, m);
    CHECK(sum == p);
}

TEST_CASE("ring axioms on random triples") {
    Rng rng(12345);
    for (int trial = 0; trial < 200; ++trial) {
        Polynomial a = rng.polynomial(XY, 3, 4);
        Polynomial b = rng.polynomial(XY, 3, 4);
        Polynomial c = rng.polynomial(XY, 3, 4);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * b == b * a);
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a + b == b + a);
        CHECK((a - b) + b == a);
    }
}

TEST_CASE("parse/print round trip") {
    Rng rng(99);
    for (int trial = 0; trial < 100; ++trial) {
        Polynomial p = rng.polynomial(XY, 5, 6);
        CHECK(P(p.to_string(), XY) == p);
    }
    // Printing then parsing then printing is a fixed point.
    Polynomial q = P("(x + 1/3)^3 - x^3", XY);
    CHECK(P(q.to_string(), XY).to_string() == q.to_string());
}

TEST_CASE("term orders") {
    TermOrder grevlex = TermOrder::grevlex(2);
    // Higher total degree wins.
    CHECK(grevlex.less(Monomial({3, 0}), Monomial({1, 3})));
    // Same degree: smaller exponent in the last variable is larger.
    CHECK(grevlex.less(Monomial({0, 2}), Monomial({2, 0})));

    TermOrder lex = TermOrder::lex(2);
    CHECK(lex.less(Monomial({1, 3}), Monomial({3, 0})));

    TermOrder wt = TermOrder::weighted({3, 2});
    // x^3 and x*y^3 both have weight 9; grevlex tiebreak puts x*y^3 first.
    CHECK(wt.compare(Monomial({3, 0}), Monomial({1, 3})) < 0);
    CHECK(wt.less(Monomial({0, 2}), Monomial({2, 0})));  // weight 4 < 6

    // Precedence permutation: grevlex with y > x.
    TermOrder yx = TermOrder::grevlex(2).with_precedence({1, 0});
    CHECK(yx.less(Monomial({2, 0}), Monomial({0, 2})));

    // 1 is minimal.
    for (const TermOrder& ord : {grevlex, lex, wt})
        CHECK(ord.less(Monomial(2), Monomial({1, 0})));
}

TEST_CASE("groebner: monomial ideal is already reduced") {
    auto gb = groebner_basis({P("x^2", XY), P("y^2", XY)},
                             TermOrder::grevlex(2));
    REQUIRE(gb.basis.size() == 2);
    CHECK(gb.basis[0] == P("y^2", XY));
    CHECK(gb.basis[1] == P("x^2", XY));
    auto std_mons = standard_monomial_basis(gb);
    REQUIRE(std_mons.size() == 4);
    CHECK(std_mons[0] == Monomial({0, 0}));
    CHECK(std_mons[1] == Monomial({0, 1}));  // grevlex: y < x
    CHECK(std_mons[2] == Monomial({1, 0}));
    CHECK(std_mons[3] == Monomial({1, 1}));
}

TEST_CASE("groebner: hand-run Buchberger oracle for {y - x^2, x^3}") {
    // By hand: S(x^2-y, x^3) -> -xy, then S(x^2-y, xy) -> -y^2; x^3 becomes
    // redundant. Reduced basis: {x^2 - y, x*y, y^2}.
    auto gb = groebner_basis({P("y - x^2", XY), P("x^3", XY)},
                             TermOrder::grevlex(2));
    REQUIRE(gb.basis.size() == 3);
    CHECK(gb.basis[0] == P("x^2 - y", XY));
    CHECK(gb.basis[1] == P("x*y", XY));
    CHECK(gb.basis[2] == P("y^2", XY));
    CHECK(normal_form(P("x^3", XY), gb).is_zero());
}

TEST_CASE("groebner basis properties") {
    auto check_gb = [](const GroebnerBasis& gb) {
        for (const auto& g : gb.generators)
            CHECK(normal_form(g, gb).is_zero());
        for (const auto& g : gb.basis)
            CHECK(g.leading_term(gb.order).second.is_one());
        for (std::size_t i = 0; i < gb.basis.size(); ++i)
            for (std::size_t j = 0; j < gb.basis.size(); ++j) {
                if (i == j) continue;
                CHECK(!gb.basis[i].leading_monomial(gb.order).divides(
                    gb.basis[j].leading_monomial(gb.order)));
            }
        for (std::size_t i = 0; i < gb.basis.size(); ++i)
            for (std::size_t j = i + 1; j < gb.basis.size(); ++j) {
                Polynomial s =
                    s_polynomial(gb.basis[i], gb.basis[j], gb.order);
                CHECK(normal_form(s, gb).is_zero());
            }
    };
    check_gb(groebner_basis({P("x^2 + y^2 - 1", XY), P("x*y - 1", XY)},
                            TermOrder::grevlex(2)));
    check_gb(groebner_basis(agtest::family15_gens(Rational(1)),
                            TermOrder::grevlex(2)));
    check_gb(groebner_basis({P("x + y - 1", XY), P("x - y", XY)},
                            TermOrder::lex(2)));
}

TEST_CASE("family ideal: 15 standard monomials, weighted linear algebra oracle") {
    auto gb = groebner_basis(agtest::family15_gens(Rational(1)),
                             TermOrder::grevlex(2));
    auto std_mons = standard_monomial_basis(gb);
    CHECK(std_mons.size() == 15);

    // Oracle: the generators are weighted-homogeneous for weights (3, 2) of
    // degrees 9 and 10. For each weight w, dim A^w = #monomials of weight w
    // minus the rank of the span of the monomial multiples of the
    // generators in that weight. Weights 15..18 must vanish; every higher
    // monomial is a multiple of one there.
    auto gens = agtest::family15_gens(Rational(1));
    std::vector<long> wt{3, 2};
    auto monos_of_weight = [&](long w) {
        std::vector<Monomial> out;
        for (std::uint32_t a = 0; 3 * a <= static_cast<std::uint32_t>(w); ++a)
            if ((w - 3 * static_cast<long>(a)) % 2 == 0)
                out.push_back(Monomial(
                    {a, static_cast<std::uint32_t>((w - 3 * a) / 2)}));
        return out;
    };
    std::size_t total = 0;
    for (long w = 0; w <= 18; ++w) {
        auto cols = monos_of_weight(w);
        if (cols.empty()) continue;
        RatMatrix rows;
        for (const auto& g : gens) {
            long gw = static_cast<long>(*g.weighted_degree(wt));
            if (w < gw) continue;
            for (const auto& m : monos_of_weight(w - gw)) {
                Polynomial prod = Polynomial::term(XY, m, Rational(1)) * g;
                std::vector<Rational> row(cols.size());
                for (std::size_t cidx = 0; cidx < cols.size(); ++cidx)
                    row[cidx] = prod.coefficient(cols[cidx]);
                rows.append_row(row);
            }
        }
        std::size_t rk = rows.rows() ? rank(std::move(rows)) : 0;
        std::size_t dim_w = cols.size() - rk;
        if (w >= 15) CHECK(dim_w == 0);
        total += dim_w;
    }
    CHECK(total == 15);
}

TEST_CASE("normal form: membership, units, linearity") {
    auto gb = groebner_basis({P("x^2 + y^2 - 1", XY), P("x*y - 1", XY)},
                             TermOrder::grevlex(2));
    Rng rng(5150);
    for (int trial = 0; trial < 40; ++trial) {
        // Random ideal element reduces to zero.
        Polynomial a = rng.polynomial(XY, 2, 3);
        Polynomial b = rng.polynomial(XY, 2, 3);
        Polynomial elem = a * gb.generators[0] + b * gb.generators[1];
        CHECK(normal_form(elem, gb).is_zero());
    }
    CHECK(normal_form(P("1", XY), gb) == P("1", XY));
    // Idempotence and multiplicativity through normal forms.
    for (int trial = 0; trial < 200; ++trial) {
        Polynomial p = rng.polynomial(XY, 3, 4);
        Polynomial q = rng.polynomial(XY, 3, 4);
        Polynomial np = normal_form(p, gb);
        CHECK(normal_form(np, gb) == np);
        CHECK(normal_form(p * q, gb) ==
              normal_form(normal_form(p, gb) * normal_form(q, gb), gb));
    }
}

TEST_CASE("family ideal under lex: x^3 reduces to -1/2 x y^3") {
    auto gb = groebner_basis(agtest::family15_gens(Rational(1)),
                             TermOrder::lex(2));
    CHECK(normal_form(P("x^3", XY), gb) == P("-1/2*x*y^3", XY));
}

TEST_CASE("standard monomials: infinite-dimensional detection") {
    auto gb = groebner_basis({P("x", XY)}, TermOrder::grevlex(2));
    CHECK_THROWS_AS(standard_monomial_basis(gb), InfiniteDimensional);
}

TEST_CASE("rational matrix echelon and inverse") {
    RatMatrix m(3, 3);
    long vals[3][3] = {{2, 1, 0}, {0, 1, 1}, {1, 0, 1}};
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) m.at(i, j) = vals[i][j];
    CHECK(determinant(m) == Rational(3));
    auto inv = inverse(m);
    REQUIRE(inv.has_value());
    CHECK((m * *inv) == RatMatrix::identity(3));

    RatMatrix k(2, 3);
    k.at(0, 0) = 1;
    k.at(0, 1) = 1;
    k.at(0, 2) = 0;
    k.at(1, 0) = 0;
    k.at(1, 1) = 1;
    k.at(1, 2) = 1;
    auto kb = kernel_basis(k);
    REQUIRE(kb.size() == 1);
    CHECK(kb[0][0] == Rational(1));
    CHECK(kb[0][1] == Rational(-1));
    CHECK(kb[0][2] == Rational(1));
}
