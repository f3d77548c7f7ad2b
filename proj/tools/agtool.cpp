#include <algorithm>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "ag/algfile.hpp"
#include "ag/errors.hpp"
#include "ag/invsys.hpp"
#include "ag/isocheck.hpp"
#include "ag/nilpoly.hpp"
#include "ag/report.hpp"

namespace {

using ag::Json;
using ag::Rational;

struct GlobalOptions {
    std::string order_spec;  // empty = per-file / default
    bool json = false;
};

struct BuiltAlgebra {
    ag::AlgebraFile file;
    ag::TermOrder order = ag::TermOrder::grevlex(0);
    ag::QuotientAlgebra A;
};

BuiltAlgebra build_from_file(const std::string& path,
                             const GlobalOptions& opts,
                             std::optional<std::vector<ag::Polynomial>>
                                 basis_override = std::nullopt) {
    BuiltAlgebra built;
    built.file = ag::load_algebra_file(path);
    if (!opts.order_spec.empty())
        built.order = ag::parse_order_spec(opts.order_spec,
                                           built.file.vars.size());
    else if (built.file.order)
        built.order = *built.file.order;
    else
        built.order = ag::TermOrder::grevlex(built.file.vars.size());
    auto basis = basis_override ? basis_override : built.file.basis;
    built.A = ag::build_quotient_algebra(built.file.gens, built.order, basis);
    return built;
}

void emit(const Json& report, const GlobalOptions& opts) {
    if (opts.json)
        std::cout << report.dump(2) << "\n";
    else
        std::cout << ag::render_report_text(report);
}

Json poly_strings(const std::vector<ag::Polynomial>& ps) {
    Json arr = Json::array();
    for (const auto& p : ps) arr.push_back(p.to_string());
    return arr;
}

std::string element_string(const ag::QuotientAlgebra& A,
                           const std::vector<Rational>& coords) {
    return A.element_polynomial(coords).to_string();
}

Json grading_json(const BuiltAlgebra& built) {
    Json g;
    std::optional<std::vector<long>> weights = built.file.weights;
    bool detected = false;
    if (!weights) {
        weights = ag::detect_grading_weights(built.A.gb().generators);
        detected = weights.has_value();
    }
    if (!weights) {
        g["status"] = "no grading weights found";
        return g;
    }
    try {
        ag::GradingData data = ag::check_grading(built.A, *weights);
        g["status"] = "graded";
        g["weights"] = data.weights;
        g["weights_detected"] = detected;
        Json dims = Json::object();
        for (const auto& [w, d] : data.dims) dims[std::to_string(w)] = d;
        g["dims_by_weight"] = dims;
    } catch (const ag::NotHomogeneous& e) {
        g["status"] = std::string("not homogeneous: ") + e.what();
    }
    return g;
}

Json fingerprint_json(const ag::Fingerprint& f) {
    Json j;
    j["dimension"] = f.dim;
    j["nil_index"] = f.nil_index;
    j["embedding_dimension"] = f.emb_dim;
    j["filtration"] = f.filtration;
    Json counts = Json::object();
    for (const auto& [deg, cnt] : f.p_term_counts)
        counts[std::to_string(deg)] = cnt;
    j["p_term_counts_by_degree"] = counts;
    return j;
}

Json coefficient_list_json(const ag::Polynomial& P) {
    // Sorted by (total degree, term order) ascending; grevlex on the
    // coordinate ring.
    ag::TermOrder ord = ag::TermOrder::grevlex(P.arity());
    std::vector<std::pair<ag::Monomial, Rational>> terms(P.terms().begin(),
                                                         P.terms().end());
    std::sort(terms.begin(), terms.end(), [&](const auto& a, const auto& b) {
        if (a.first.degree() != b.first.degree())
            return a.first.degree() < b.first.degree();
        return ord.less(a.first, b.first);
    });
    Json arr = Json::array();
    for (const auto& [m, c] : terms) {
        Json entry;
        entry["monomial"] = m.to_string(P.vars());
        entry["coefficient"] = c.to_string();
        arr.push_back(entry);
    }
    return arr;
}

Json witness_json(const ag::QuotientAlgebra&, const ag::EquivalenceCandidate& w) {
    Json j;
    j["c"] = w.c.to_string();
    Json rows = Json::array();
    for (std::size_t i = 0; i < w.C.rows(); ++i) {
        std::string row;
        for (std::size_t k = 0; k < w.C.cols(); ++k) {
            if (k) row += ", ";
            row += w.C.at(i, k).to_string();
        }
        rows.push_back(row);
    }
    j["C"] = rows;
    if (!w.substitution.empty()) {
        Json subs = Json::array();
        for (const auto& [var, img] : w.substitution)
            subs.push_back(var + " -> " + img);
        j["substitution"] = subs;
    }
    return j;
}

std::vector<std::size_t> parse_degree_list(const std::string& text) {
    std::vector<std::size_t> degrees;
    for (long v : ag::parse_integer_list(text)) {
        if (v < 2) throw ag::InputFileError("degrees must be >= 2");
        degrees.push_back(static_cast<std::size_t>(v));
    }
    if (degrees.empty()) throw ag::InputFileError("empty degree list");
    return degrees;
}

// ---------------------------------------------------------------- analyze --

int run_analyze(const std::string& path, const GlobalOptions& opts) {
    BuiltAlgebra built = build_from_file(path, opts);
    ag::StructureReport rep = ag::structure_report(built.A);
    Json j;
    j["command"] = "analyze " + path;
    j["order"] = built.order.to_string();
    j["variables"] = built.file.vars;
    j["generators"] = poly_strings(built.A.gb().generators);
    j["dimension"] = rep.dim;
    j["local"] = rep.is_local;
    j["gorenstein"] = rep.is_gorenstein;
    j["nil_index"] = rep.nil_index;
    j["embedding_dimension"] = rep.emb_dim;
    j["filtration"] = rep.filtration;
    Json socle = Json::array();
    for (const auto& v : rep.socle_basis)
        socle.push_back(element_string(built.A, v));
    j["socle"] = socle;
    j["grading"] = grading_json(built);
    emit(j, opts);
    return 0;
}

// ---------------------------------------------------------------- nilpoly --

int run_nilpoly(const std::string& path, const GlobalOptions& opts,
                const std::string& basis_file, const std::string& translate) {
    std::optional<std::vector<ag::Polynomial>> basis_override;
    if (!basis_file.empty()) {
        auto pairs = ag::read_key_value_file(basis_file);
        ag::AlgebraFile probe = ag::load_algebra_file(path);
        for (const auto& [key, value] : pairs) {
            if (key != "basis")
                throw ag::InputFileError(basis_file + ": unknown key '" + key +
                                         "' (expected 'basis')");
            basis_override = ag::parse_polynomial_list(value, probe.vars);
        }
        if (!basis_override)
            throw ag::InputFileError(basis_file + ": missing 'basis' key");
    }
    BuiltAlgebra built = build_from_file(path, opts, basis_override);
    const ag::QuotientAlgebra& A = built.A;
    ag::AdmissibleProjection pi = ag::default_projection(A);
    ag::NilPolynomial np = ag::nil_polynomial(A, pi);

    Json j;
    j["command"] = "nilpoly " + path;
    j["order"] = built.order.to_string();
    j["dimension"] = A.dim();
    j["nil_index"] = pi.nil_index();
    j["kernel_dimension"] = pi.n();
    j["socle_generator"] = element_string(A, pi.socle_generator());
    j["nil_polynomial"] = np.P.to_string();
    j["degree"] = np.degree;
    j["degree_matches_nil_index"] = np.degree == pi.nil_index();
    j["coefficients"] = coefficient_list_json(np.P);
    ag::BlaschkeData bd = ag::blaschke_data(np);
    Json blaschke;
    blaschke["trace_zero"] = bd.trace_zero;
    Json tr = Json::array();
    for (const auto& t : bd.trace) tr.push_back(t.to_string());
    blaschke["trace"] = tr;
    j["blaschke"] = blaschke;

    if (!translate.empty()) {
        ag::Polynomial yp = ag::parse_polynomial(translate, built.file.vars);
        auto y = A.coordinates(yp);
        ag::AdmissibleProjection pi2 = ag::translate_projection(pi, y);
        ag::NilPolynomial np2 = ag::nil_polynomial(A, pi2);
        // Graph translation identity: points of the graph of P, shifted by
        // -y, lie on the graph of the translated projection's polynomial.
        std::size_t n = pi.n();
        std::vector<std::vector<Rational>> samples;
        for (std::size_t i = 0; i < n; ++i) {
            std::vector<Rational> a(n);
            a[i] = 1;
            samples.push_back(a);
            if (i + 1 < n) {
                a[i + 1] = Rational(1, 2);
                samples.push_back(a);
            }
        }
        std::size_t confirmed = 0;
        for (const auto& alpha : samples) {
            Rational pval = np.P.evaluate(alpha);
            auto point = pi.k_element(alpha);
            for (std::size_t r = 0; r < point.size(); ++r) {
                point[r] += pval * pi.socle_generator()[r];
                point[r] -= y[r];
            }
            auto [alpha2, beta2] = pi2.decompose(point);
            if (beta2 == np2.P.evaluate(alpha2)) ++confirmed;
        }
        Json t;
        t["y"] = yp.to_string();
        t["nil_polynomial"] = np2.P.to_string();
        t["coefficients"] = coefficient_list_json(np2.P);
        t["graph_translation_check"] =
            confirmed == samples.size()
                ? "confirmed on " + std::to_string(confirmed) + " sample points"
                : "FAILED on " + std::to_string(samples.size() - confirmed) +
                      " of " + std::to_string(samples.size()) +
                      " sample points";
        j["translated"] = t;
    }
    emit(j, opts);
    return 0;
}

// ----------------------------------------------------------------- invsys --

int run_invsys(const std::string& path, const GlobalOptions& opts,
               const std::string& complement, const std::string& verify_file) {
    BuiltAlgebra built = build_from_file(path, opts);
    const ag::QuotientAlgebra& A = built.A;
    Json j;
    j["command"] = "invsys " + path;
    j["order"] = built.order.to_string();

    auto verdict_json = [&](const ag::InverseSystemVerdict& v) {
        Json r;
        r["generators_annihilate"] = v.all_generators_annihilate;
        if (!v.failing_generators.empty()) {
            Json fails = Json::array();
            for (auto idx : v.failing_generators)
                fails.push_back(A.gb().generators[idx].to_string());
            r["failing_generators"] = fails;
        }
        r["derivative_span_dimension"] = v.span_dimension;
        r["algebra_dimension"] = v.algebra_dimension;
        r["inverse_system"] = v.ok;
        return r;
    };

    if (!verify_file.empty()) {
        std::ifstream in(verify_file);
        if (!in) throw ag::InputFileError("cannot open file: " + verify_file);
        std::stringstream ss;
        ss << in.rdbuf();
        std::string text = ss.str();
        ag::Polynomial g = ag::parse_polynomial(text, built.file.vars);
        j["candidate"] = g.to_string();
        j["verification"] = verdict_json(ag::verify_inverse_system(A, g));
        emit(j, opts);
        return 0;
    }

    ag::AdmissibleProjection pi = ag::default_projection(A);
    ag::NilPolynomial np = ag::nil_polynomial(A, pi);
    std::vector<std::vector<Rational>> L;
    if (!complement.empty()) {
        for (const auto& p :
             ag::parse_polynomial_list(complement, built.file.vars))
            L.push_back(A.coordinates(p));
    } else {
        L = ag::default_complement(A, pi);
    }
    Json lj = Json::array();
    for (const auto& e : L) lj.push_back(element_string(A, e));
    j["complement"] = lj;
    ag::Polynomial Q = ag::restrict_nil_polynomial(np, L);
    j["Q"] = Q.to_string();
    j["minus_Q"] = (-Q).to_string();
    if (built.file.vars.size() == L.size()) {
        j["verification"] = verdict_json(ag::verify_inverse_system(A, Q));
    } else {
        j["verification"] = {{"status",
                              "presentation has more variables than the "
                              "embedding dimension; skipped"}};
    }
    emit(j, opts);
    return 0;
}

// --------------------------------------------------------------- isocheck --

int run_isocheck(const std::string& path_a, const std::string& path_b,
                 const GlobalOptions& opts, const std::string& degrees_text,
                 const std::string& candidate_file,
                 const std::string& subst_file) {
    BuiltAlgebra a = build_from_file(path_a, opts);
    BuiltAlgebra b = build_from_file(path_b, opts);
    Json j;
    j["command"] = "isocheck " + path_a + " " + path_b;

    auto finish = [&](const std::string& verdict, int code) {
        j["verdict"] = verdict;
        emit(j, opts);
        return code;
    };

    if (!candidate_file.empty()) {
        ag::AdmissibleProjection pa = ag::default_projection(a.A);
        ag::AdmissibleProjection pb = ag::default_projection(b.A);
        ag::NilPolynomial Pa = ag::nil_polynomial(a.A, pa);
        ag::NilPolynomial Pb = ag::nil_polynomial(b.A, pb);
        std::optional<Rational> cval;
        std::optional<ag::RatMatrix> C;
        for (const auto& [key, value] :
             ag::read_key_value_file(candidate_file)) {
            if (key == "c") {
                cval = Rational::from_string(value);
            } else if (key == "C") {
                ag::RatMatrix m;
                std::stringstream rows(value);
                std::string row;
                while (std::getline(rows, row, ';')) {
                    std::vector<Rational> entries;
                    std::stringstream cells(row);
                    std::string cell;
                    while (std::getline(cells, cell, ','))
                        entries.push_back(Rational::from_string(cell));
                    m.append_row(entries);
                }
                C = std::move(m);
            } else {
                throw ag::InputFileError(candidate_file + ": unknown key '" +
                                         key + "'");
            }
        }
        if (!cval || !C)
            throw ag::InputFileError(candidate_file +
                                     ": need keys 'c' and 'C'");
        ag::EquivalenceCandidate cand;
        cand.C = std::move(*C);
        cand.c = *cval;
        bool ok = ag::verify_linear_equivalence(Pa, Pb, cand);
        j["mode"] = "candidate verification";
        j["candidate"] = witness_json(a.A, cand);
        j["verified"] = ok;
        if (ok) {
            j["witness"] = witness_json(a.A, cand);
            return finish("ISOMORPHIC", 0);
        }
        j["note"] =
            "candidate rejected; a failed candidate proves nothing";
        return finish("UNKNOWN", 7);
    }

    if (!subst_file.empty()) {
        std::vector<ag::Polynomial> images(
            a.file.vars.size(), ag::Polynomial(b.file.vars));
        std::vector<bool> given(a.file.vars.size(), false);
        for (const auto& [key, value] : ag::read_key_value_file(subst_file)) {
            auto it =
                std::find(a.file.vars.begin(), a.file.vars.end(), key);
            if (it == a.file.vars.end())
                throw ag::InputFileError(subst_file + ": '" + key +
                                         "' is not a variable of " + path_a);
            std::size_t idx =
                static_cast<std::size_t>(it - a.file.vars.begin());
            images[idx] = ag::parse_polynomial(value, b.file.vars);
            given[idx] = true;
        }
        for (std::size_t i = 0; i < given.size(); ++i)
            if (!given[i])
                throw ag::InputFileError(subst_file + ": missing image for '" +
                                         a.file.vars[i] + "'");
        bool ok = ag::verify_algebra_morphism(a.A, b.A, images);
        j["mode"] = "substitution verification";
        Json subs = Json::array();
        for (std::size_t i = 0; i < images.size(); ++i)
            subs.push_back(a.file.vars[i] + " -> " + images[i].to_string());
        j["substitution"] = subs;
        j["morphism"] = ok;
        if (!ok) {
            j["note"] =
                "substitution does not define an algebra isomorphism; "
                "this proves nothing";
            return finish("UNKNOWN", 7);
        }
        ag::AdmissibleProjection pa = ag::default_projection(a.A);
        ag::AdmissibleProjection pb = ag::default_projection(b.A);
        ag::NilPolynomial Pa = ag::nil_polynomial(a.A, pa);
        ag::NilPolynomial Pb = ag::nil_polynomial(b.A, pb);
        if (auto lifted = ag::lift_morphism_candidate(pa, pb, images);
            lifted && ag::verify_linear_equivalence(Pa, Pb, *lifted))
            j["witness"] = witness_json(a.A, *lifted);
        return finish("ISOMORPHIC", 0);
    }

    std::optional<std::vector<std::size_t>> degrees;
    if (!degrees_text.empty()) degrees = parse_degree_list(degrees_text);
    ag::IsoOutcome outcome = ag::decide_isomorphism(
        a.A, b.A, degrees, a.file.weights, b.file.weights);
    j["degrees"] = outcome.degrees_used;
    j["fingerprint_a"] = fingerprint_json(outcome.fingerprint_a);
    j["fingerprint_b"] = fingerprint_json(outcome.fingerprint_b);
    switch (outcome.verdict) {
        case ag::IsoOutcome::Verdict::Isomorphic:
            j["witness"] = witness_json(a.A, *outcome.witness);
            return finish("ISOMORPHIC", 0);
        case ag::IsoOutcome::Verdict::NotIsomorphic:
            j["certificate"] = outcome.certificate;
            return finish("NOT_ISOMORPHIC", 1);
        case ag::IsoOutcome::Verdict::Unknown:
            j["note"] = outcome.certificate;
            return finish("UNKNOWN", 7);
    }
    return 7;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "Structure, graph hypersurfaces, inverse systems, and isomorphism "
        "testing for finite-dimensional local Gorenstein algebras over Q"};
    app.require_subcommand(1);
    GlobalOptions opts;
    app.add_option("--order", opts.order_spec,
                   "term order: grevlex|lex|weighted:w1,w2,...");
    app.add_flag("--json", opts.json, "emit a JSON report");

    std::string file_a, file_b, basis_file, translate, complement, verify_file,
        degrees_text, candidate_file, subst_file;

    CLI::App* analyze = app.add_subcommand("analyze", "structure report");
    analyze->add_option("file", file_a)->required();

    CLI::App* nilpoly =
        app.add_subcommand("nilpoly", "graph polynomial of the algebra");
    nilpoly->add_option("file", file_a)->required();
    nilpoly->add_option("--basis-file", basis_file,
                        "file with a 'basis:' key overriding the input basis");
    nilpoly->add_option("--translate", translate,
                        "translate the projection by this element of m");

    CLI::App* invsys =
        app.add_subcommand("invsys", "Macaulay inverse systems");
    invsys->add_option("file", file_a)->required();
    auto* copt = invsys->add_option("--complement", complement,
                                    "comma-separated complement elements");
    auto* vopt = invsys->add_option("--verify", verify_file,
                                    "verify a candidate polynomial file");
    copt->excludes(vopt);
    vopt->excludes(copt);

    CLI::App* isocheck =
        app.add_subcommand("isocheck", "decide or refute isomorphism");
    isocheck->add_option("fileA", file_a)->required();
    isocheck->add_option("fileB", file_b)->required();
    isocheck->add_option("--degrees", degrees_text,
                         "comma-separated degree subset, default nu,nu-1,nu-2");
    auto* cand_opt = isocheck->add_option("--candidate", candidate_file,
                                          "verify a (C, c) candidate file");
    auto* subst_opt = isocheck->add_option("--subst", subst_file,
                                           "verify a variable substitution file");
    cand_opt->excludes(subst_opt);
    subst_opt->excludes(cand_opt);

    CLI11_PARSE(app, argc, argv);

    try {
        if (*analyze) return run_analyze(file_a, opts);
        if (*nilpoly) return run_nilpoly(file_a, opts, basis_file, translate);
        if (*invsys) return run_invsys(file_a, opts, complement, verify_file);
        if (*isocheck)
            return run_isocheck(file_a, file_b, opts, degrees_text,
                                candidate_file, subst_file);
    } catch (const ag::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const ag::UnknownVariable& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const ag::InputFileError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const ag::SingularBasis& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const ag::ElementNotInMaxIdeal& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const ag::UnitPartNotOne& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const ag::DegreeOutOfRange& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const ag::InfiniteDimensional& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const ag::ImproperIdeal& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const ag::NotLocal& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 4;
    } catch (const ag::NotGorenstein& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 5;
    } catch (const ag::NotAComplement& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 6;
    } catch (const ag::NotInsideKernel& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 6;
    } catch (const ag::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 10;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 10;
    }
    return 0;
}
