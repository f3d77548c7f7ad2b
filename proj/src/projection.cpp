#include "ag/projection.hpp"

#include <algorithm>
#include <cassert>

#include "ag/errors.hpp"

namespace ag {

namespace {

bool all_zero(std::span<const Rational> v) {
    return std::all_of(v.begin(), v.end(),
                       [](const Rational& x) { return x.is_zero(); });
}

void require_in_m(std::span<const Rational> u, std::size_t d) {
    if (u.size() != d)
        throw DimensionMismatch("element coordinates have wrong length");
    if (!u[0].is_zero())
        throw ElementNotInMaxIdeal(
            "element has a nonzero coordinate on 1; not in the maximal ideal");
}

}  // namespace

Rational AdmissibleProjection::omega_value(
    std::span<const Rational> elem) const {
    if (elem.size() != A_->dim())
        throw DimensionMismatch("element coordinates have wrong length");
    Rational s = 0;
    for (std::size_t i = 0; i < elem.size(); ++i)
        if (!omega_[i].is_zero() && !elem[i].is_zero())
            s += omega_[i] * elem[i];
    return s / omega_socle_;
}

std::pair<std::vector<Rational>, Rational> AdmissibleProjection::decompose(
    std::span<const Rational> elem) const {
    auto coords = decomp_.apply(elem);
    if (!coords[0].is_zero())
        throw ElementNotInMaxIdeal("element is not in the maximal ideal");
    std::vector<Rational> alpha(coords.begin() + 1, coords.end() - 1);
    return {std::move(alpha), coords.back()};
}

std::vector<Rational> AdmissibleProjection::k_element(
    std::span<const Rational> alpha) const {
    if (alpha.size() != n())
        throw DimensionMismatch("K-coordinate vector has wrong length");
    std::vector<Rational> r(A_->dim());
    for (std::size_t i = 0; i < alpha.size(); ++i) {
        if (alpha[i].is_zero()) continue;
        for (std::size_t j = 0; j < r.size(); ++j)
            r[j] += alpha[i] * kbasis_[i][j];
    }
    return r;
}

bool AdmissibleProjection::in_kernel_k(std::span<const Rational> elem) const {
    if (elem.size() != A_->dim()) return false;
    if (!elem[0].is_zero()) return false;
    Rational s = 0;
    for (std::size_t i = 0; i < elem.size(); ++i) s += omega_[i] * elem[i];
    return s.is_zero();
}

void AdmissibleProjection::finalize() {
    std::size_t d = A_->dim();
    Rational os = 0;
    for (std::size_t i = 0; i < d; ++i) os += omega_[i] * socle_[i];
    assert(!os.is_zero());
    omega_socle_ = os;
    RatMatrix cols(d, d);
    cols.at(0, 0) = 1;
    for (std::size_t i = 0; i < kbasis_.size(); ++i)
        for (std::size_t r = 0; r < d; ++r) cols.at(r, i + 1) = kbasis_[i][r];
    for (std::size_t r = 0; r < d; ++r) cols.at(r, d - 1) = socle_[r];
    auto inv = inverse(cols);
    assert(inv.has_value());
    decomp_ = std::move(*inv);
}

AdmissibleProjection default_projection(const QuotientAlgebra& A) {
    StructureReport rep = structure_report(A);
    if (!rep.is_gorenstein)
        throw NotGorenstein("socle dimension is " +
                            std::to_string(rep.socle_basis.size()) +
                            ", need 1 (and dim > 1)");
    const auto& s = rep.socle_basis.front();
    // Distinguished index: basis element with the largest leading monomial
    // among those with nonzero socle coordinate.
    std::size_t best = 0;
    bool found = false;
    for (std::size_t i = 1; i < A.dim(); ++i) {
        if (s[i].is_zero()) continue;
        if (!found) {
            best = i;
            found = true;
            continue;
        }
        const auto& ord = A.gb().order;
        Monomial mi = A.basis()[i].leading_monomial(ord);
        Monomial mb = A.basis()[best].leading_monomial(ord);
        int c = ord.compare(mi, mb);
        if (c > 0 || (c == 0 && i > best)) best = i;
    }
    assert(found);

    AdmissibleProjection pi;
    pi.A_ = &A;
    pi.omega_.assign(A.dim(), Rational(0));
    pi.omega_[best] = 1;
    for (std::size_t i = 1; i < A.dim(); ++i) {
        if (i == best) continue;
        std::vector<Rational> e(A.dim());
        e[i] = 1;
        pi.kbasis_.push_back(std::move(e));
    }
    // sigma: socle generator scaled to coordinate 1 at the distinguished
    // index.
    pi.socle_.assign(s.begin(), s.end());
    Rational scale = s[best].inverse();
    for (auto& x : pi.socle_) x *= scale;
    pi.nil_index_ = rep.nil_index;
    pi.finalize();
    return pi;
}

AdmissibleProjection translate_projection(const AdmissibleProjection& pi,
                                          std::span<const Rational> y) {
    const QuotientAlgebra& A = pi.algebra();
    require_in_m(y, A.dim());
    if (all_zero(y)) return pi;
    auto ey = exp_element(A, y);

    AdmissibleProjection out;
    out.A_ = &A;
    out.nil_index_ = pi.nil_index_;
    out.socle_ = pi.socle_;
    // omega'(b_i) = omega(exp(y) b_i)
    out.omega_.assign(A.dim(), Rational(0));
    for (std::size_t i = 0; i < A.dim(); ++i) {
        std::vector<Rational> e(A.dim());
        e[i] = 1;
        auto prod = A.multiply(ey, e);
        Rational v = 0;
        for (std::size_t j = 0; j < A.dim(); ++j) v += pi.omega_[j] * prod[j];
        out.omega_[i] = v;
    }
    // Deterministic kernel basis of omega' restricted to m: pivot on the
    // first index with nonzero omega'.
    std::size_t p = 0;
    for (std::size_t i = 1; i < A.dim(); ++i)
        if (!out.omega_[i].is_zero()) {
            p = i;
            break;
        }
    assert(p != 0);
    Rational inv_p = out.omega_[p].inverse();
    for (std::size_t j = 1; j < A.dim(); ++j) {
        if (j == p) continue;
        std::vector<Rational> v(A.dim());
        v[j] = 1;
        v[p] = -out.omega_[j] * inv_p;
        out.kbasis_.push_back(std::move(v));
    }
    out.finalize();
    return out;
}

std::vector<Rational> exp_element(const QuotientAlgebra& A,
                                  std::span<const Rational> u) {
    require_in_m(u, A.dim());
    std::vector<Rational> total(A.dim());
    total[0] = 1;
    std::vector<Rational> power(u.begin(), u.end());
    Rational mfact = 1;
    for (unsigned m = 1; !all_zero(power); ++m) {
        if (m > A.dim())
            throw ElementNotInMaxIdeal("element is not nilpotent");
        mfact *= Rational(static_cast<long>(m));
        Rational inv = mfact.inverse();
        for (std::size_t i = 0; i < total.size(); ++i)
            total[i] += inv * power[i];
        power = A.multiply(power, u);
    }
    return total;
}

std::vector<Rational> log_element(const QuotientAlgebra& A,
                                  std::span<const Rational> v) {
    if (v.size() != A.dim())
        throw DimensionMismatch("element coordinates have wrong length");
    if (!v[0].is_one())
        throw UnitPartNotOne("unit-part coordinate is " + v[0].to_string() +
                             ", need exactly 1");
    std::vector<Rational> u(v.begin(), v.end());
    u[0] = 0;
    std::vector<Rational> total(A.dim());
    std::vector<Rational> power = u;
    for (unsigned m = 1; !all_zero(power); ++m) {
        if (m > A.dim())
            throw ElementNotInMaxIdeal("element is not nilpotent");
        Rational coef = Rational(m % 2 == 1 ? 1 : -1, static_cast<long>(m));
        for (std::size_t i = 0; i < total.size(); ++i)
            total[i] += coef * power[i];
        power = A.multiply(power, u);
    }
    return total;
}

}  // namespace ag
