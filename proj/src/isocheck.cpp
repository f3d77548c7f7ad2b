#include "ag/isocheck.hpp"

#include <algorithm>
#include <cassert>
#include <functional>
#include <set>

#include "ag/errors.hpp"

namespace ag {

namespace {

// ---------- small polynomial utilities over the unknown ring ----------

Polynomial substitute_value(const Polynomial& p, std::size_t var,
                            const Rational& val) {
    Polynomial r(p.vars());
    for (const auto& [m, c] : p.terms()) {
        if (m[var] == 0) {
            r.add_term(m, c);
            continue;
        }
        Rational f = c;
        for (std::uint32_t e = 0; e < m[var]; ++e) f *= val;
        if (f.is_zero()) continue;
        auto exps = m.exponents();
        exps[var] = 0;
        r.add_term(Monomial(std::move(exps)), f);
    }
    return r;
}

Polynomial substitute_values(const Polynomial& p,
                             const std::map<std::size_t, Rational>& vals) {
    Polynomial r = p;
    for (const auto& [v, x] : vals) r = substitute_value(r, v, x);
    return r;
}

// The single variable of a one-variable monomial, if any.
std::optional<std::size_t> pure_power_var(const Monomial& m) {
    std::optional<std::size_t> var;
    for (std::size_t v = 0; v < m.arity(); ++v) {
        if (m[v] == 0) continue;
        if (var) return std::nullopt;
        var = v;
    }
    return var;
}

std::set<std::size_t> variables_of(const Polynomial& p) {
    std::set<std::size_t> vars;
    for (const auto& [m, c] : p.terms())
        for (std::size_t v = 0; v < m.arity(); ++v)
            if (m[v] > 0) vars.insert(v);
    return vars;
}

// Constant propagation: equations of the shape lambda * v^k force v = 0,
// and univariate linear equations force their value. Substitutes the
// discovered constants everywhere and repeats to a fixed point.
struct PropagateOutcome {
    bool contradiction = false;
};

PropagateOutcome propagate_constants(std::vector<Polynomial>& eqs,
                                     std::map<std::size_t, Rational>& bound) {
    PropagateOutcome out;
    bool changed = true;
    while (changed) {
        changed = false;
        std::map<std::size_t, Rational> found;
        for (auto& eq : eqs) {
            if (eq.is_zero()) continue;
            if (eq.is_constant()) {
                out.contradiction = true;
                return out;
            }
            if (eq.term_count() == 1) {
                auto& [m, c] = *eq.terms().begin();
                if (auto v = pure_power_var(m); v && !found.count(*v))
                    found.emplace(*v, Rational(0));
                continue;
            }
            auto vars = variables_of(eq);
            if (vars.size() == 1 && eq.degree() == 1) {
                std::size_t v = *vars.begin();
                Rational a = eq.coefficient(Monomial::unit(eq.arity(), v));
                Rational b = eq.constant_term();
                if (!found.count(v)) found.emplace(v, -b / a);
            }
        }
        if (found.empty()) break;
        for (auto& [v, x] : found) {
            auto [it, inserted] = bound.emplace(v, x);
            if (!inserted && it->second != x) {
                out.contradiction = true;
                return out;
            }
        }
        std::vector<Polynomial> next;
        for (auto& eq : eqs) {
            Polynomial s = substitute_values(eq, found);
            if (!s.is_zero()) next.push_back(std::move(s));
        }
        eqs = std::move(next);
        changed = true;
    }
    std::vector<Polynomial> compact;
    for (auto& eq : eqs)
        if (!eq.is_zero()) compact.push_back(std::move(eq));
    std::sort(compact.begin(), compact.end(),
              [](const Polynomial& a, const Polynomial& b) {
                  return a.terms() < b.terms();
              });
    compact.erase(std::unique(compact.begin(), compact.end()), compact.end());
    eqs = std::move(compact);
    return out;
}

// ---------- symbolic expansion: alpha-monomial -> coefficient poly ----------

using SymTerms = std::map<Monomial, Polynomial>;

void sym_add(SymTerms& acc, const Monomial& m, const Polynomial& coef) {
    if (coef.is_zero()) return;
    auto [it, inserted] = acc.emplace(m, coef);
    if (!inserted) {
        it->second += coef;
        if (it->second.is_zero()) acc.erase(it);
    }
}

bool sym_mul(const SymTerms& a, const SymTerms& b, SymTerms& out,
             std::size_t budget) {
    out.clear();
    std::size_t ops = 0;
    for (const auto& [ma, ca] : a)
        for (const auto& [mb, cb] : b) {
            if (++ops > budget) return false;
            sym_add(out, ma * mb, ca * cb);
        }
    return true;
}

// ---------- integer factorization for the rational root theorem ----------

std::optional<std::vector<mpz_class>> all_divisors(const mpz_class& n_in) {
    mpz_class n = abs(n_in);
    assert(n > 0);
    std::vector<std::pair<mpz_class, unsigned>> factors;
    mpz_class m = n;
    auto push = [&](const mpz_class& p) {
        unsigned e = 0;
        while (mpz_divisible_p(m.get_mpz_t(), p.get_mpz_t())) {
            m /= p;
            ++e;
        }
        if (e) factors.emplace_back(p, e);
    };
    push(2);
    for (mpz_class p = 3; p * p <= m && p < 1000000; p += 2) push(p);
    if (m > 1) {
        if (mpz_probab_prime_p(m.get_mpz_t(), 30) == 0 && m > 1000000)
            return std::nullopt;  // cannot factor within the trial bound
        factors.emplace_back(m, 1);
    }
    std::vector<mpz_class> divisors{1};
    for (const auto& [p, e] : factors) {
        std::size_t before = divisors.size();
        if (before * (e + 1) > 4096) return std::nullopt;
        mpz_class pk = 1;
        for (unsigned k = 1; k <= e; ++k) {
            pk *= p;
            for (std::size_t i = 0; i < before; ++i)
                divisors.push_back(divisors[i] * pk);
        }
    }
    return divisors;
}

}  // namespace

std::optional<std::vector<Rational>> univariate_rational_roots(
    const Polynomial& p, std::size_t var) {
    // Collect coefficients by exponent of `var`; reject other variables.
    std::map<std::uint32_t, Rational> coef;
    for (const auto& [m, c] : p.terms()) {
        for (std::size_t v = 0; v < m.arity(); ++v)
            if (v != var && m[v] > 0)
                throw Error("univariate root finding on a multivariate input");
        coef[m[var]] += c;
    }
    std::vector<Rational> roots;
    if (coef.empty()) throw ZeroPolynomial("roots of the zero polynomial");
    if (coef.begin()->first > 0) roots.push_back(Rational(0));
    // Clear denominators, work with the primitive integer polynomial.
    mpz_class den_lcm = 1;
    for (const auto& [e, c] : coef) {
        mpz_class l;
        mpz_lcm(l.get_mpz_t(), den_lcm.get_mpz_t(), c.denominator().get_mpz_t());
        den_lcm = l;
    }
    std::map<std::uint32_t, mpz_class> ic;
    for (const auto& [e, c] : coef)
        ic[e] = c.numerator() * (den_lcm / c.denominator());
    std::uint32_t low = ic.begin()->first, high = ic.rbegin()->first;
    if (low == high) {  // single term: only the root 0 (already recorded)
        std::sort(roots.begin(), roots.end());
        return roots;
    }
    mpz_class a0 = ic.begin()->second, ad = ic.rbegin()->second;
    auto d0 = all_divisors(a0);
    auto dd = all_divisors(ad);
    if (!d0 || !dd) return std::nullopt;
    // Straight evaluation after dividing out x^low; degrees are small.
    auto value_at = [&](const Rational& x) {
        Rational acc = 0;
        for (const auto& [e, c] : ic) {
            Rational t(c);
            for (std::uint32_t k = low; k < e; ++k) t *= x;
            acc += t;
        }
        return acc;
    };
    std::set<Rational> candidates;
    for (const auto& pnum : *d0)
        for (const auto& qden : *dd) {
            candidates.insert(Rational(mpq_class(pnum, qden)));
            candidates.insert(Rational(mpq_class(-pnum, qden)));
        }
    for (const auto& x : candidates)
        if (value_at(x).is_zero()) roots.push_back(x);
    std::sort(roots.begin(), roots.end());
    roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
    return roots;
}

namespace {

// ---------- rational solution search ----------

struct SolveState {
    std::size_t branches_left;
    SolveBudget budget;
    std::vector<std::map<std::string, Rational>> found;
};

void solve_rec(std::vector<Polynomial> eqs,
               std::map<std::size_t, Rational> bound, bool gb_done,
               SolveState& st) {
    if (st.found.size() >= st.budget.max_solutions) return;
    if (st.branches_left == 0) return;
    --st.branches_left;

    auto prop = propagate_constants(eqs, bound);
    if (prop.contradiction) return;
    if (eqs.empty()) {
        // Names are resolved by the caller through the shared ring.
        std::map<std::string, Rational> sol;
        for (const auto& [v, x] : bound) sol["#" + std::to_string(v)] = x;
        st.found.push_back(std::move(sol));
        return;
    }
    const auto& ring = eqs.front().vars();

    // A univariate equation lets us branch on exact rational roots.
    std::optional<std::size_t> best_eq;
    for (std::size_t i = 0; i < eqs.size(); ++i) {
        auto vars = variables_of(eqs[i]);
        if (vars.size() != 1) continue;
        if (!best_eq || eqs[i].degree() < eqs[*best_eq].degree()) best_eq = i;
    }
    if (best_eq) {
        std::size_t v = *variables_of(eqs[*best_eq]).begin();
        auto roots = univariate_rational_roots(eqs[*best_eq], v);
        if (!roots) return;  // factorization out of reach: give up the branch
        for (const auto& r : *roots) {
            auto b2 = bound;
            b2[v] = r;
            std::vector<Polynomial> e2;
            for (const auto& eq : eqs) {
                Polynomial s = substitute_value(eq, v, r);
                if (!s.is_zero()) e2.push_back(std::move(s));
            }
            solve_rec(std::move(e2), std::move(b2), false, st);
            if (st.found.size() >= st.budget.max_solutions) return;
        }
        return;
    }

    if (!gb_done) {
        auto gb = groebner_basis_budgeted(
            eqs, TermOrder::lex(ring.size()),
            {st.budget.gb_pairs, st.budget.gb_pairs});
        if (gb) {
            if (gb->contains_one()) return;
            solve_rec(gb->basis, std::move(bound), true, st);
            return;
        }
    }

    // Positive-dimensional or budget-bound: branch on candidate values for
    // the lex-least variable present.
    std::optional<std::size_t> branch_var;
    for (const auto& eq : eqs)
        for (std::size_t v : variables_of(eq))
            if (!branch_var || v > *branch_var) branch_var = v;
    if (!branch_var) return;
    static const long nums[] = {1, -1, 0, 2, -2, 1, -1, 3, -3};
    static const long dens[] = {1, 1, 1, 1, 1, 2, 2, 1, 1};
    for (std::size_t k = 0; k < std::size(nums); ++k) {
        Rational val(nums[k], dens[k]);
        auto b2 = bound;
        b2[*branch_var] = val;
        std::vector<Polynomial> e2;
        for (const auto& eq : eqs) {
            Polynomial s = substitute_value(eq, *branch_var, val);
            if (!s.is_zero()) e2.push_back(std::move(s));
        }
        solve_rec(std::move(e2), std::move(b2), gb_done, st);
        if (st.found.size() >= st.budget.max_solutions) return;
        if (st.branches_left == 0) return;
    }
}

}  // namespace

std::vector<std::map<std::string, Rational>> rational_solutions(
    const std::vector<Polynomial>& equations, SolveBudget budget) {
    std::vector<std::map<std::string, Rational>> out;
    std::vector<Polynomial> eqs;
    for (const auto& e : equations)
        if (!e.is_zero()) eqs.push_back(e);
    if (eqs.empty()) return {{}};
    const auto& ring = eqs.front().vars();
    SolveState st{budget.branches, budget, {}};
    solve_rec(eqs, {}, false, st);
    for (auto& raw : st.found) {
        std::map<std::string, Rational> sol;
        for (const auto& [key, val] : raw) {
            std::size_t idx = std::stoul(key.substr(1));
            sol[ring[idx]] = val;
        }
        out.push_back(std::move(sol));
    }
    return out;
}

// ---------- fingerprints ----------

bool fingerprint_necessary_match(const Fingerprint& a, const Fingerprint& b) {
    return a.dim == b.dim && a.nil_index == b.nil_index &&
           a.emb_dim == b.emb_dim && a.filtration == b.filtration;
}

Fingerprint invariant_fingerprint(const QuotientAlgebra& A,
                                  const AdmissibleProjection& pi,
                                  const NilPolynomial& P) {
    StructureReport rep = structure_report(A);
    if (!rep.is_gorenstein)
        throw NotGorenstein("fingerprint requires a Gorenstein algebra");
    Fingerprint f;
    f.dim = rep.dim;
    f.nil_index = rep.nil_index;
    f.emb_dim = rep.emb_dim;
    f.filtration = rep.filtration;
    for (const auto& [m, c] : P.P.terms()) f.p_term_counts[m.degree()]++;
    static_cast<void>(pi);
    return f;
}

Fingerprint invariant_fingerprint(const QuotientAlgebra& A,
                                  const AdmissibleProjection& pi) {
    return invariant_fingerprint(A, pi, nil_polynomial(A, pi));
}

// ---------- candidate verification ----------

bool verify_linear_equivalence(const NilPolynomial& P,
                               const NilPolynomial& Pt,
                               const EquivalenceCandidate& cand) {
    std::size_t n = P.P.arity();
    if (Pt.P.arity() != n)
        throw DimensionMismatch("graph polynomials have different dimensions");
    if (cand.C.rows() != n || cand.C.cols() != n)
        throw DimensionMismatch("candidate matrix has wrong shape");
    if (cand.c.is_zero()) throw SingularC("candidate socle scalar is zero");
    if (!inverse(cand.C)) throw SingularC("candidate matrix is singular");
    return Pt.P.substituted(cand.C) == cand.c * P.P;
}

bool verify_algebra_morphism(const QuotientAlgebra& A,
                             const QuotientAlgebra& At,
                             const std::vector<Polynomial>& images) {
    if (images.size() != A.vars().size())
        throw VariableMismatch("substitution needs one image per variable");
    for (const auto& g : A.gb().generators) {
        if (g.is_zero()) continue;
        if (!normal_form(g.composed(images), At.gb()).is_zero()) return false;
    }
    if (A.dim() != At.dim()) return false;
    RatMatrix M(At.dim(), A.dim());
    for (std::size_t j = 0; j < A.dim(); ++j) {
        auto col = At.coordinates(A.basis()[j].composed(images));
        for (std::size_t i = 0; i < At.dim(); ++i) M.at(i, j) = col[i];
    }
    return inverse(M).has_value();
}

std::optional<EquivalenceCandidate> lift_morphism_candidate(
    const AdmissibleProjection& pi, const AdmissibleProjection& pit,
    const std::vector<Polynomial>& images) {
    const QuotientAlgebra& A = pi.algebra();
    const QuotientAlgebra& At = pit.algebra();
    if (A.dim() != At.dim()) return std::nullopt;
    std::size_t n = pi.n();
    RatMatrix C(n, n);
    for (std::size_t j = 0; j < n; ++j) {
        // Image of k_j in At coordinates.
        Polynomial kp = A.element_polynomial(pi.k_basis()[j]);
        auto img = At.coordinates(kp.composed(images));
        if (!img[0].is_zero()) return std::nullopt;
        auto [alpha, beta] = pit.decompose(img);
        if (!beta.is_zero()) return std::nullopt;  // K does not map into K~
        for (std::size_t i = 0; i < n; ++i) C.at(i, j) = alpha[i];
    }
    Polynomial sp = A.element_polynomial(pi.socle_generator());
    auto simg = At.coordinates(sp.composed(images));
    if (!simg[0].is_zero()) return std::nullopt;
    auto [salpha, c] = pit.decompose(simg);
    for (const auto& x : salpha)
        if (!x.is_zero()) return std::nullopt;
    if (c.is_zero()) return std::nullopt;
    EquivalenceCandidate cand;
    cand.C = std::move(C);
    cand.c = c;
    for (std::size_t v = 0; v < images.size(); ++v)
        cand.substitution.emplace_back(A.vars()[v], images[v].to_string());
    return cand;
}

// ---------- the coefficient-matching constraint system ----------

namespace {

struct LevelData {
    // levels[j]: largest l with k_j in m^l (source side).
    std::vector<std::size_t> levels;
    // subspace[l]: K-coordinate basis of m~^l intersect K~ (target side).
    std::vector<std::vector<std::vector<Rational>>> subspace;
};

std::size_t membership_level(
    const std::vector<std::vector<std::vector<Rational>>>& power_bases,
    std::span<const Rational> v) {
    std::size_t level = 1;
    for (std::size_t l = 2; l <= power_bases.size(); ++l) {
        const auto& rows = power_bases[l - 1];
        RatMatrix m;
        for (const auto& r : rows) m.append_row(r);
        std::size_t base = m.rows() ? rank(m) : 0;
        m.append_row(v);
        if (rank(std::move(m)) != base) break;
        level = l;
    }
    return level;
}

LevelData compute_level_data(const QuotientAlgebra& A,
                             const AdmissibleProjection& pi,
                             const QuotientAlgebra& At,
                             const AdmissibleProjection& pit) {
    LevelData data;
    std::size_t nu = pi.nil_index();
    std::vector<std::vector<std::vector<Rational>>> powA, powB;
    for (std::size_t l = 1; l <= nu; ++l) {
        powA.push_back(power_ideal_basis(A, l));
        powB.push_back(power_ideal_basis(At, l));
    }
    for (const auto& k : pi.k_basis())
        data.levels.push_back(membership_level(powA, k));

    std::size_t n = pit.n();
    data.subspace.resize(nu);
    for (std::size_t l = 1; l <= nu; ++l) {
        const auto& rows = powB[l - 1];
        if (rows.empty()) continue;
        // Kernel of omega~ on m~^l, expressed in K-coordinates.
        RatMatrix omega_row(1, rows.size());
        const auto& om = pit.omega_row();
        for (std::size_t i = 0; i < rows.size(); ++i) {
            Rational s = 0;
            for (std::size_t r = 0; r < rows[i].size(); ++r)
                s += om[r] * rows[i][r];
            omega_row.at(0, i) = s;
        }
        RatMatrix sub(0, n);
        for (const auto& combo : kernel_basis(std::move(omega_row))) {
            std::vector<Rational> vec(At.dim());
            for (std::size_t i = 0; i < rows.size(); ++i)
                for (std::size_t r = 0; r < vec.size(); ++r)
                    vec[r] += combo[i] * rows[i][r];
            auto [alpha, beta] = pit.decompose(vec);
            assert(beta.is_zero());
            sub.append_row(alpha);
        }
        std::size_t rk = rref_in_place(sub);
        for (std::size_t i = 0; i < rk; ++i)
            data.subspace[l - 1].push_back(sub.row(i));
    }
    return data;
}

bool is_unit_vector(std::span<const Rational> v, std::size_t* pos) {
    std::size_t count = 0;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (v[i].is_zero()) continue;
        if (!v[i].is_one()) return false;
        *pos = i;
        ++count;
    }
    return count == 1;
}

std::optional<std::vector<long>> certified_weights(
    const QuotientAlgebra& A, std::optional<std::vector<long>> hint) {
    auto try_weights = [&](std::vector<long> w)
        -> std::optional<std::vector<long>> {
        try {
            check_grading(A, w);
            return w;
        } catch (const Error&) {
            return std::nullopt;
        }
    };
    if (hint)
        if (auto ok = try_weights(*hint)) return ok;
    if (auto detected = detect_grading_weights(A.gb().generators))
        return try_weights(*detected);
    return std::nullopt;
}

}  // namespace

ConstraintSystem equivalence_constraint_system(
    const QuotientAlgebra& A, const AdmissibleProjection& pi,
    const NilPolynomial& P, const QuotientAlgebra& At,
    const AdmissibleProjection& pit, const NilPolynomial& Pt,
    std::vector<std::size_t> degrees, std::optional<std::vector<long>> weights_a,
    std::optional<std::vector<long>> weights_b) {
    Fingerprint fa = invariant_fingerprint(A, pi, P);
    Fingerprint fb = invariant_fingerprint(At, pit, Pt);
    if (!fingerprint_necessary_match(fa, fb))
        throw FingerprintMismatch(
            "invariant fingerprints differ; the algebras are not isomorphic");

    ConstraintSystem sys;
    sys.A = &A;
    sys.At = &At;
    sys.pi = &pi;
    sys.pit = &pit;
    sys.P = &P;
    sys.Pt = &Pt;

    std::size_t nu = pi.nil_index();
    std::sort(degrees.begin(), degrees.end(), std::greater<>());
    degrees.erase(std::unique(degrees.begin(), degrees.end()), degrees.end());
    for (auto m : degrees)
        if (m < 2 || m > nu)
            throw DegreeOutOfRange("constraint degree " + std::to_string(m) +
                                   " outside [2, nu]");
    sys.degrees = degrees;

    sys.weights_a = certified_weights(A, std::move(weights_a));
    sys.weights_b = certified_weights(At, std::move(weights_b));
    sys.both_graded = sys.weights_a && sys.weights_b;

    std::size_t n = pi.n();
    LevelData lv = compute_level_data(A, pi, At, pit);

    // Unknowns: filtration-allowed entries of C column by column, then c, w.
    std::vector<std::string> names;
    std::vector<ConstraintSystem::UnknownInfo> info;
    struct ColumnPiece {
        std::size_t unknown;             // index into names
        std::vector<Rational> direction; // target K-coordinates
    };
    std::vector<std::vector<ColumnPiece>> columns(n);
    for (std::size_t j = 0; j < n; ++j) {
        const auto& sub = lv.subspace[lv.levels[j] - 1];
        for (const auto& dir : sub) {
            std::size_t pos = 0;
            std::size_t idx = names.size();
            if (is_unit_vector(dir, &pos)) {
                names.push_back("C_" + std::to_string(pos + 1) + "_" +
                                std::to_string(j + 1));
                info.push_back({ConstraintSystem::UnknownInfo::CEntry, pos, j});
            } else {
                names.push_back("T" + std::to_string(idx) + "_" +
                                std::to_string(j + 1));
                info.push_back({ConstraintSystem::UnknownInfo::TParam, idx, j});
            }
            columns[j].push_back({idx, dir});
        }
    }
    std::size_t c_idx = names.size();
    names.push_back("c");
    info.push_back({ConstraintSystem::UnknownInfo::Scalar, 0, 0});
    std::size_t w_idx = names.size();
    names.push_back("w");
    info.push_back({ConstraintSystem::UnknownInfo::Witness, 0, 0});
    sys.unknowns = names;
    sys.unknown_info = std::move(info);

    // entry_expr[i][j]: C(i,j) as a linear polynomial in the unknowns.
    sys.entry_expr.assign(n, std::vector<Polynomial>(n, Polynomial(names)));
    std::size_t allowed = 0;
    for (std::size_t j = 0; j < n; ++j)
        for (const auto& piece : columns[j])
            for (std::size_t i = 0; i < n; ++i)
                if (!piece.direction[i].is_zero()) {
                    sys.entry_expr[i][j].add_term(
                        Monomial::unit(names.size(), piece.unknown),
                        piece.direction[i]);
                }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (!sys.entry_expr[i][j].is_zero()) ++allowed;
    sys.masked_entries = n * n - allowed;

    std::map<std::size_t, Rational> bound;
    auto entry_with_bindings = [&](std::size_t i, std::size_t j) {
        return substitute_values(sys.entry_expr[i][j], bound);
    };

    std::vector<Polynomial> equations;
    {
        Polynomial cw(names);
        cw.add_term(Monomial::unit(names.size(), c_idx) *
                        Monomial::unit(names.size(), w_idx),
                    Rational(1));
        cw.add_term(Monomial(names.size()), Rational(-1));
        equations.push_back(std::move(cw));
    }

    constexpr std::size_t kExpansionBudget = 2'000'000;
    for (std::size_t m : sys.degrees) {
        Polynomial pm = P.P.homogeneous_component(static_cast<std::int64_t>(m));
        Polynomial ptm =
            Pt.P.homogeneous_component(static_cast<std::int64_t>(m));
        // Expand, harvest forced constants, re-expand until stable.
        while (true) {
            std::vector<SymTerms> row_form(n);
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j) {
                    Polynomial e = entry_with_bindings(i, j);
                    if (!e.is_zero())
                        sym_add(row_form[i], Monomial::unit(n, j), e);
                }
            SymTerms rhs;
            bool overflow = false;
            for (const auto& [mon, coef] : ptm.terms()) {
                SymTerms prod;
                prod.emplace(Monomial(n),
                             Polynomial::constant(names, coef));
                for (std::size_t v = 0; v < n && !overflow; ++v)
                    for (std::uint32_t e = 0; e < mon[v] && !overflow; ++e) {
                        SymTerms next;
                        if (!sym_mul(prod, row_form[v], next, kExpansionBudget))
                            overflow = true;
                        prod = std::move(next);
                    }
                if (overflow) break;
                for (const auto& [am, ac] : prod) sym_add(rhs, am, ac);
            }
            if (overflow) {
                sys.expansion_overflow = true;
                break;
            }
            // Equations: rhs(alpha-monomial) - c * lhs-coefficient = 0.
            std::vector<Polynomial> degree_eqs;
            std::set<Monomial> support;
            for (const auto& [am, ac] : rhs) support.insert(am);
            for (const auto& [am, ac] : pm.terms()) support.insert(am);
            for (const auto& am : support) {
                Polynomial eq(names);
                auto it = rhs.find(am);
                if (it != rhs.end()) eq += it->second;
                Rational lhs = pm.coefficient(am);
                if (!lhs.is_zero()) {
                    Polynomial cterm(names);
                    cterm.add_term(Monomial::unit(names.size(), c_idx), -lhs);
                    eq += substitute_values(cterm, bound);
                }
                if (!eq.is_zero()) degree_eqs.push_back(std::move(eq));
            }
            std::size_t before = bound.size();
            std::vector<Polynomial> trial = equations;
            trial.insert(trial.end(), degree_eqs.begin(), degree_eqs.end());
            auto prop = propagate_constants(trial, bound);
            if (prop.contradiction) {
                sys.contradiction = true;
                equations = std::move(trial);
                break;
            }
            if (bound.size() == before) {
                equations = std::move(trial);
                break;
            }
            // New constants discovered: substitute into the carried
            // equations and redo this degree's expansion with them.
            for (auto& eq : equations) eq = substitute_values(eq, bound);
        }
        if (sys.contradiction || sys.expansion_overflow) break;
    }

    for (const auto& [v, x] : bound) sys.bindings.emplace(names[v], x);
    sys.equations = std::move(equations);
    return sys;
}

// ---------- satisfiability ----------

namespace {

Rational evaluate_full(const Polynomial& p,
                       const std::map<std::string, Rational>& values) {
    Rational total = 0;
    for (const auto& [m, c] : p.terms()) {
        Rational t = c;
        for (std::size_t v = 0; v < m.arity(); ++v)
            for (std::uint32_t e = 0; e < m[v]; ++e) {
                auto it = values.find(p.vars()[v]);
                assert(it != values.end());
                t *= it->second;
            }
        total += t;
    }
    return total;
}

std::optional<EquivalenceCandidate> candidate_from_values(
    const ConstraintSystem& sys, std::map<std::string, Rational> values) {
    std::size_t n = sys.pi->n();
    // Defaults for unknowns without a forced or solved value: identity
    // pattern on C entries, 1 for c.
    for (std::size_t u = 0; u < sys.unknowns.size(); ++u) {
        const auto& name = sys.unknowns[u];
        if (values.count(name)) continue;
        auto it = sys.bindings.find(name);
        if (it != sys.bindings.end()) {
            values[name] = it->second;
            continue;
        }
        const auto& inf = sys.unknown_info[u];
        switch (inf.kind) {
            case ConstraintSystem::UnknownInfo::CEntry:
                values[name] = (inf.i == inf.j) ? Rational(1) : Rational(0);
                break;
            case ConstraintSystem::UnknownInfo::Scalar:
                values[name] = 1;
                break;
            default:
                values[name] = 0;
        }
    }
    EquivalenceCandidate cand;
    cand.C = RatMatrix(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            cand.C.at(i, j) = evaluate_full(sys.entry_expr[i][j], values);
    cand.c = values.at("c");
    if (cand.c.is_zero()) return std::nullopt;
    if (!inverse(cand.C)) return std::nullopt;
    return cand;
}

std::optional<EquivalenceCandidate> graded_morphism_witness(
    const ConstraintSystem& sys) {
    if (!sys.both_graded) return std::nullopt;
    const QuotientAlgebra& A = *sys.A;
    const QuotientAlgebra& At = *sys.At;
    const auto& wa = *sys.weights_a;
    const auto& wb = *sys.weights_b;
    std::size_t k = A.vars().size();
    if (At.vars().size() != k) return std::nullopt;

    // Unknown images: x_i -> sum over target variables of equal weight.
    std::vector<std::string> names;
    std::vector<std::pair<std::size_t, std::size_t>> entry_of;  // (i, j)
    for (std::size_t i = 0; i < k; ++i) {
        bool any = false;
        for (std::size_t j = 0; j < k; ++j)
            if (wa[i] == wb[j]) {
                names.push_back("m_" + std::to_string(i + 1) + "_" +
                                std::to_string(j + 1));
                entry_of.emplace_back(i, j);
                any = true;
            }
        if (!any) return std::nullopt;
    }
    names.push_back("dw");
    std::size_t arity = names.size();

    // Symbolic matrix entries.
    std::vector<std::vector<Polynomial>> mexpr(
        k, std::vector<Polynomial>(k, Polynomial(names)));
    for (std::size_t u = 0; u + 1 < arity; ++u) {
        auto [i, j] = entry_of[u];
        mexpr[i][j].add_term(Monomial::unit(arity, u), Rational(1));
    }

    // Membership equations: coefficients of NF(g(images)) over the target
    // standard monomials, for every source generator.
    std::vector<Polynomial> eqs;
    for (const auto& g : A.gb().generators) {
        if (g.is_zero()) continue;
        std::map<Monomial, Polynomial> nf_accum;  // target monomial -> coef
        for (const auto& [mon, coef] : g.terms()) {
            // Expand prod_i (sum_j m_ij x~_j)^mon[i] over target monomials.
            std::map<Monomial, Polynomial> prod;
            prod.emplace(Monomial(k), Polynomial::constant(names, coef));
            for (std::size_t i = 0; i < k; ++i)
                for (std::uint32_t e = 0; e < mon[i]; ++e) {
                    std::map<Monomial, Polynomial> next;
                    for (const auto& [tm, tc] : prod)
                        for (std::size_t j = 0; j < k; ++j) {
                            if (mexpr[i][j].is_zero()) continue;
                            auto key = tm * Monomial::unit(k, j);
                            auto [it, ins] =
                                next.emplace(key, tc * mexpr[i][j]);
                            if (!ins) it->second += tc * mexpr[i][j];
                        }
                    prod = std::move(next);
                }
            for (const auto& [tm, tc] : prod) {
                Polynomial tmpoly =
                    Polynomial::term(At.vars(), tm, Rational(1));
                Polynomial nf = normal_form(tmpoly, At.gb());
                for (const auto& [nm, nc] : nf.terms()) {
                    auto [it, ins] = nf_accum.emplace(nm, tc * nc);
                    if (!ins) it->second += tc * nc;
                }
            }
        }
        for (auto& [nm, cpoly] : nf_accum)
            if (!cpoly.is_zero()) eqs.push_back(cpoly);
    }
    // Invertibility: det(M) * dw = 1, via Laplace expansion.
    std::vector<std::size_t> cols(k);
    for (std::size_t j = 0; j < k; ++j) cols[j] = j;
    std::function<Polynomial(std::size_t, std::vector<std::size_t>)> det_rec =
        [&](std::size_t row, std::vector<std::size_t> cs) -> Polynomial {
        if (cs.empty()) return Polynomial::constant(names, Rational(1));
        Polynomial acc(names);
        for (std::size_t t = 0; t < cs.size(); ++t) {
            if (mexpr[row][cs[t]].is_zero()) continue;
            std::vector<std::size_t> rest;
            for (std::size_t s = 0; s < cs.size(); ++s)
                if (s != t) rest.push_back(cs[s]);
            Polynomial minor = det_rec(row + 1, rest);
            Polynomial term = mexpr[row][cs[t]] * minor;
            if (t % 2) term = -term;
            acc += term;
        }
        return acc;
    };
    Polynomial det = det_rec(0, cols);
    Polynomial dw_poly(names);
    dw_poly.add_term(Monomial::unit(arity, arity - 1), Rational(1));
    eqs.push_back(det * dw_poly -
                  Polynomial::constant(names, Rational(1)));

    auto sols = rational_solutions(eqs, {800, 4000, 6});
    for (const auto& sol : sols) {
        auto value = [&](const std::string& nm) {
            auto it = sol.find(nm);
            return it == sol.end() ? Rational(0) : it->second;
        };
        std::vector<Polynomial> images;
        for (std::size_t i = 0; i < k; ++i) {
            Polynomial img(At.vars());
            for (std::size_t u = 0; u + 1 < arity; ++u)
                if (entry_of[u].first == i)
                    img.add_term(Monomial::unit(k, entry_of[u].second),
                                 value(names[u]));
            images.push_back(std::move(img));
        }
        if (!verify_algebra_morphism(A, At, images)) continue;
        auto cand = lift_morphism_candidate(*sys.pi, *sys.pit, images);
        if (!cand) continue;
        if (verify_linear_equivalence(*sys.P, *sys.Pt, *cand)) return cand;
    }
    return std::nullopt;
}

}  // namespace

Decision decide_constraint_satisfiability(const ConstraintSystem& sys) {
    Decision dec;
    if (sys.expansion_overflow) {
        dec.kind = SatKind::Unknown;
        dec.note = "constraint expansion exceeded the size budget";
        return dec;
    }

    bool refuted = sys.contradiction;
    bool gb_exhausted = false;
    if (!refuted) {
        std::vector<Polynomial> eqs;
        for (const auto& e : sys.equations)
            if (!e.is_zero()) eqs.push_back(e);
        for (const auto& e : eqs)
            if (e.is_constant()) refuted = true;
        if (!refuted && !eqs.empty()) {
            auto gb = groebner_basis_budgeted(
                eqs, TermOrder::grevlex(sys.unknowns.size()), {60000, 2000});
            if (!gb)
                gb_exhausted = true;
            else if (gb->contains_one())
                refuted = true;
        }
    }
    if (refuted) {
        if (sys.both_graded) {
            dec.kind = SatKind::Infeasible;
            dec.refuting_degrees = sys.degrees;
            dec.note = "the coefficient-matching ideal contains 1";
        } else {
            dec.kind = SatKind::Unknown;
            dec.note =
                "the constraint system is infeasible, but gradedness of both "
                "algebras is not certified, so linear equivalence does not "
                "decide affine equivalence";
        }
        return dec;
    }

    // Witness hunt; every candidate is verified exactly before returning.
    if (sys.pi->n() == sys.pit->n()) {
        EquivalenceCandidate identity;
        identity.C = RatMatrix::identity(sys.pi->n());
        identity.c = 1;
        if (verify_linear_equivalence(*sys.P, *sys.Pt, identity)) {
            dec.kind = SatKind::Witness;
            dec.witness = std::move(identity);
            return dec;
        }
    }
    if (auto cand = graded_morphism_witness(sys)) {
        dec.kind = SatKind::Witness;
        dec.witness = std::move(*cand);
        return dec;
    }
    {
        auto sols = rational_solutions(sys.equations, {400, 4000, 6});
        for (auto& sol : sols) {
            auto cand = candidate_from_values(sys, sol);
            if (!cand) continue;
            if (verify_linear_equivalence(*sys.P, *sys.Pt, *cand)) {
                dec.kind = SatKind::Witness;
                dec.witness = std::move(*cand);
                return dec;
            }
        }
    }
    dec.kind = SatKind::Unknown;
    dec.note = gb_exhausted
                   ? "Groebner budget exhausted before deciding feasibility"
               : sys.equations.empty()
                   ? "no equations to solve and no verified candidate"
                   : "no rational witness found within the search budget";
    return dec;
}

IsoOutcome decide_isomorphism(const QuotientAlgebra& A,
                              const QuotientAlgebra& At,
                              std::optional<std::vector<std::size_t>> degrees,
                              std::optional<std::vector<long>> weights_a,
                              std::optional<std::vector<long>> weights_b) {
    IsoOutcome out;
    AdmissibleProjection pi = default_projection(A);
    AdmissibleProjection pit = default_projection(At);
    NilPolynomial P = nil_polynomial(A, pi);
    NilPolynomial Pt = nil_polynomial(At, pit);
    out.fingerprint_a = invariant_fingerprint(A, pi, P);
    out.fingerprint_b = invariant_fingerprint(At, pit, Pt);
    if (!fingerprint_necessary_match(out.fingerprint_a, out.fingerprint_b)) {
        out.verdict = IsoOutcome::Verdict::NotIsomorphic;
        out.certificate =
            "invariant fingerprints differ (dimension, nil-index, embedding "
            "dimension, or power filtration)";
        return out;
    }
    std::vector<std::size_t> D;
    if (degrees) {
        D = *degrees;
    } else {
        std::size_t nu = pi.nil_index();
        for (std::size_t m = nu; m >= 2 && m + 2 >= nu; --m) D.push_back(m);
    }
    out.degrees_used = D;
    ConstraintSystem sys = equivalence_constraint_system(
        A, pi, P, At, pit, Pt, D, std::move(weights_a), std::move(weights_b));
    Decision dec = decide_constraint_satisfiability(sys);
    switch (dec.kind) {
        case SatKind::Infeasible: {
            out.verdict = IsoOutcome::Verdict::NotIsomorphic;
            std::string ds;
            for (std::size_t i = 0; i < dec.refuting_degrees.size(); ++i)
                ds += (i ? "," : "") + std::to_string(dec.refuting_degrees[i]);
            out.certificate =
                "coefficient matching at degrees {" + ds +
                "}: the constraint ideal has Groebner basis {1}";
            break;
        }
        case SatKind::Witness:
            out.verdict = IsoOutcome::Verdict::Isomorphic;
            out.witness = dec.witness;
            break;
        case SatKind::Unknown:
            out.verdict = IsoOutcome::Verdict::Unknown;
            out.certificate = dec.note;
            break;
    }
    return out;
}

}  // namespace ag
