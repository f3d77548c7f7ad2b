#include "ag/quotient.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>

#include "ag/errors.hpp"

namespace ag {

std::vector<Rational> QuotientAlgebra::std_coordinates(
    const Polynomial& nf) const {
    std::vector<Rational> c(std_monomials_.size());
    for (const auto& [m, coef] : nf.terms()) {
        auto it = std::find(std_monomials_.begin(), std_monomials_.end(), m);
        assert(it != std_monomials_.end());
        c[static_cast<std::size_t>(it - std_monomials_.begin())] = coef;
    }
    return c;
}

std::vector<Rational> QuotientAlgebra::coordinates(const Polynomial& p) const {
    Polynomial nf = normal_form(p, gb_);
    auto std_coords = std_coordinates(nf);
    return custom_basis_ ? std_to_basis_.apply(std_coords) : std_coords;
}

Polynomial QuotientAlgebra::element_polynomial(
    std::span<const Rational> coords) const {
    if (coords.size() != dim())
        throw DimensionMismatch("coordinate vector has wrong length");
    Polynomial p(vars_);
    for (std::size_t i = 0; i < coords.size(); ++i)
        if (!coords[i].is_zero()) p += coords[i] * basis_[i];
    return p;
}

std::vector<Rational> QuotientAlgebra::multiply(
    std::span<const Rational> u, std::span<const Rational> v) const {
    if (u.size() != dim() || v.size() != dim())
        throw DimensionMismatch("element coordinates have wrong length");
    std::vector<Rational> r(dim());
    for (const auto& [i, j, l, c] : tensor_) {
        Rational s = u[i] * v[j];
        if (i != j) s += u[j] * v[i];
        if (!s.is_zero()) r[l] += c * s;
    }
    return r;
}

std::vector<Polynomial> QuotientAlgebra::multiply_symbolic(
    const std::vector<Polynomial>& u, const std::vector<Polynomial>& v) const {
    assert(u.size() == dim() && v.size() == dim());
    const auto& alpha_vars = u.front().vars();
    std::vector<Polynomial> r(dim(), Polynomial(alpha_vars));
    for (const auto& [i, j, l, c] : tensor_) {
        Polynomial::add_scaled_product(r[l], u[i], v[j], c);
        if (i != j) Polynomial::add_scaled_product(r[l], u[j], v[i], c);
    }
    return r;
}

std::vector<Rational> QuotientAlgebra::power(std::span<const Rational> u,
                                             unsigned n) const {
    std::vector<Rational> r(dim());
    r[0] = 1;
    std::vector<Rational> base(u.begin(), u.end());
    while (n) {
        if (n & 1) r = multiply(r, base);
        n >>= 1;
        if (n) base = multiply(base, base);
    }
    return r;
}

bool QuotientAlgebra::is_nilpotent(std::span<const Rational> u) const {
    // u^(2^k) with 2^k >= dim vanishes iff u is nilpotent.
    std::vector<Rational> z(u.begin(), u.end());
    std::size_t reached = 1;
    while (true) {
        bool zero = std::all_of(z.begin(), z.end(),
                                [](const Rational& x) { return x.is_zero(); });
        if (zero) return true;
        if (reached >= dim()) return false;
        z = multiply(z, z);
        reached *= 2;
    }
}

QuotientAlgebra build_quotient_algebra(
    std::vector<Polynomial> gens, TermOrder ord,
    std::optional<std::vector<Polynomial>> custom_basis) {
    if (gens.empty()) throw Error("empty generator list");
    QuotientAlgebra A;
    A.vars_ = gens.front().vars();
    A.gb_ = groebner_basis(std::move(gens), std::move(ord));
    if (A.gb_.contains_one())
        throw ImproperIdeal("the ideal contains 1; the quotient is the zero ring");
    A.std_monomials_ = standard_monomial_basis(A.gb_);
    std::size_t d = A.std_monomials_.size();
    assert(d >= 1 && A.std_monomials_.front().is_constant());

    if (!custom_basis) {
        A.custom_basis_ = false;
        for (const auto& m : A.std_monomials_)
            A.basis_.push_back(Polynomial::term(A.vars_, m, Rational(1)));
        A.basis_to_std_ = RatMatrix::identity(d);
        A.std_to_basis_ = A.basis_to_std_;
    } else {
        A.custom_basis_ = true;
        if (custom_basis->size() != d)
            throw SingularBasis("custom basis has " +
                                std::to_string(custom_basis->size()) +
                                " elements, need " + std::to_string(d));
        for (auto& b : *custom_basis) A.basis_.push_back(normal_form(b, A.gb_));
        if (!(A.basis_.front() == Polynomial::constant(A.vars_, 1)))
            throw SingularBasis("custom basis must start with 1");
        for (std::size_t i = 1; i < d; ++i)
            if (!A.basis_[i].constant_term().is_zero())
                throw SingularBasis("custom basis element #" +
                                    std::to_string(i) +
                                    " has a nonzero constant term");
        RatMatrix B(d, d);
        for (std::size_t j = 0; j < d; ++j) {
            auto col = A.std_coordinates(A.basis_[j]);
            for (std::size_t i = 0; i < d; ++i) B.at(i, j) = col[i];
        }
        auto inv = inverse(B);
        if (!inv) throw SingularBasis("custom basis is not full rank");
        A.basis_to_std_ = std::move(B);
        A.std_to_basis_ = std::move(*inv);
    }

    for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t j = i; j < d; ++j) {
            auto prod = A.coordinates(A.basis_[i] * A.basis_[j]);
            for (std::size_t l = 0; l < d; ++l)
                if (!prod[l].is_zero())
                    A.tensor_.push_back({i, j, l, prod[l]});
        }
    }
    return A;
}

namespace {

std::vector<Rational> unit_coords(std::size_t d, std::size_t i) {
    std::vector<Rational> v(d);
    v[i] = 1;
    return v;
}

void require_local(const QuotientAlgebra& A) {
    for (std::size_t v = 0; v < A.vars().size(); ++v) {
        auto img = A.coordinates(Polynomial::variable(A.vars(), v));
        if (!A.is_nilpotent(img))
            throw NotLocal("variable '" + A.vars()[v] +
                           "' is not nilpotent; the algebra is not local");
    }
}

}  // namespace

std::vector<std::vector<Rational>> power_ideal_basis(const QuotientAlgebra& A,
                                                     std::size_t k) {
    assert(k >= 1);
    std::size_t d = A.dim();
    std::vector<std::vector<Rational>> current;
    for (std::size_t i = 1; i < d; ++i) current.push_back(unit_coords(d, i));
    for (std::size_t step = 1; step < k && !current.empty(); ++step) {
        RatMatrix m;
        for (const auto& v : current)
            for (std::size_t i = 1; i < d; ++i) {
                auto prod = A.multiply(unit_coords(d, i), v);
                if (std::any_of(prod.begin(), prod.end(),
                                [](const Rational& x) { return !x.is_zero(); }))
                    m.append_row(prod);
            }
        current.clear();
        if (m.rows() == 0) break;
        std::size_t r = rref_in_place(m);
        for (std::size_t i = 0; i < r; ++i) current.push_back(m.row(i));
    }
    return current;
}

std::vector<std::size_t> power_filtration(const QuotientAlgebra& A) {
    require_local(A);
    std::vector<std::size_t> dims;
    std::size_t k = 1;
    while (true) {
        auto basis = power_ideal_basis(A, k);
        if (basis.empty()) break;
        dims.push_back(basis.size());
        ++k;
        if (k > A.dim() + 1) break;  // cannot happen for local algebras
    }
    return dims;
}

StructureReport structure_report(const QuotientAlgebra& A) {
    require_local(A);
    StructureReport rep;
    rep.dim = A.dim();
    rep.is_local = true;
    std::size_t d = A.dim();

    for (std::size_t i = 1; i < d; ++i)
        rep.max_ideal_basis.push_back(unit_coords(d, i));

    // Socle: kernel of the stacked multiplication maps m -> A by each
    // variable image.
    if (d > 1) {
        RatMatrix stacked(A.vars().size() * d, d - 1);
        for (std::size_t g = 0; g < A.vars().size(); ++g) {
            auto xg = A.coordinates(Polynomial::variable(A.vars(), g));
            for (std::size_t j = 1; j < d; ++j) {
                auto prod = A.multiply(xg, unit_coords(d, j));
                for (std::size_t i = 0; i < d; ++i)
                    stacked.at(g * d + i, j - 1) = prod[i];
            }
        }
        for (const auto& v : kernel_basis(std::move(stacked))) {
            std::vector<Rational> full(d);
            for (std::size_t j = 1; j < d; ++j) full[j] = v[j - 1];
            rep.socle_basis.push_back(std::move(full));
        }
    }
    rep.is_gorenstein = (d > 1 && rep.socle_basis.size() == 1);

    rep.filtration = power_filtration(A);
    rep.nil_index = rep.filtration.size();
    std::size_t dim_m2 = rep.filtration.size() > 1 ? rep.filtration[1] : 0;
    rep.emb_dim = (d - 1) - dim_m2;
    return rep;
}

GradingData check_grading(const QuotientAlgebra& A, std::vector<long> weights) {
    if (weights.size() != A.vars().size())
        throw DimensionMismatch("weight vector length must equal the "
                                "variable count");
    for (long w : weights)
        if (w <= 0) throw Error("grading weights must be positive");
    for (std::size_t g = 0; g < A.gb().generators.size(); ++g) {
        const Polynomial& p = A.gb().generators[g];
        if (p.is_zero()) continue;
        std::optional<std::int64_t> w;
        for (const auto& [m, c] : p.terms()) {
            std::int64_t mw = m.weighted_degree(weights);
            if (!w) w = mw;
            if (*w != mw)
                throw NotHomogeneous("generator #" + std::to_string(g + 1) +
                                     " (" + p.to_string() +
                                     ") is not weighted-homogeneous");
        }
    }
    GradingData data;
    data.weights = std::move(weights);
    for (const auto& m : A.standard_monomials())
        data.dims[m.weighted_degree(data.weights)]++;
    return data;
}

std::optional<std::vector<long>> detect_grading_weights(
    const std::vector<Polynomial>& gens) {
    if (gens.empty()) return std::nullopt;
    std::size_t k = gens.front().arity();
    auto homogeneous_under = [&](std::span<const long> w) {
        for (const auto& g : gens) {
            std::optional<std::int64_t> deg;
            for (const auto& [m, c] : g.terms()) {
                std::int64_t mw = m.weighted_degree(w);
                if (!deg) deg = mw;
                if (*deg != mw) return false;
            }
        }
        return true;
    };

    std::vector<long> ones(k, 1);
    // Constraints: differences of exponent vectors within one generator.
    RatMatrix constraints(0, k);
    for (const auto& g : gens) {
        if (g.term_count() < 2) continue;
        auto first = g.terms().begin()->first;
        for (auto it = std::next(g.terms().begin()); it != g.terms().end();
             ++it) {
            std::vector<Rational> row(k);
            for (std::size_t v = 0; v < k; ++v)
                row[v] = Rational(static_cast<long>(it->first[v])) -
                         Rational(static_cast<long>(first[v]));
            constraints.append_row(row);
        }
    }
    if (constraints.rows() == 0) return ones;  // all generators are monomials

    auto kernel = kernel_basis(constraints);
    if (kernel.empty()) return std::nullopt;
    if (homogeneous_under(ones)) return ones;
    if (kernel.size() == 1) {
        // Scale the kernel line to positive integers if possible.
        auto& v = kernel.front();
        int s = 0;
        mpz_class den_lcm = 1;
        for (const auto& x : v) {
            if (x.is_zero()) return std::nullopt;
            if (s == 0) s = x.sign();
            if (x.sign() != s) return std::nullopt;
            mpz_class l;
            mpz_lcm(l.get_mpz_t(), den_lcm.get_mpz_t(),
                    x.denominator().get_mpz_t());
            den_lcm = l;
        }
        std::vector<Rational> scaled(v.size());
        mpz_class num_gcd = 0;
        for (std::size_t i = 0; i < v.size(); ++i) {
            scaled[i] = v[i] * Rational(den_lcm) * Rational(s);
            mpz_class g;
            mpz_gcd(g.get_mpz_t(), num_gcd.get_mpz_t(),
                    scaled[i].numerator().get_mpz_t());
            num_gcd = g;
        }
        std::vector<long> w(v.size());
        for (std::size_t i = 0; i < v.size(); ++i) {
            mpz_class q = scaled[i].numerator() / num_gcd;
            if (!q.fits_slong_p()) return std::nullopt;
            w[i] = q.get_si();
        }
        if (homogeneous_under(w)) return w;
        return std::nullopt;
    }
    return std::nullopt;
}

}  // namespace ag
