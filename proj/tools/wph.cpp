// Command-line front end for the weighted hypersurface toolkit.
#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "wph/hodge.hpp"
#include "wph/reports.hpp"

namespace {

using wph::Json;

constexpr int kSemanticFailure = 1;
constexpr int kUsageError = 2;

struct GlobalOptions {
    bool json = false;
    std::string weights;
    long degree = 0;
    std::string poly;
    std::string poly_file;
};

wph::Weights parse_weights(const std::string& text) {
    if (text.empty()) throw wph::InvalidInput("--weights is required");
    wph::Weights out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            std::size_t used = 0;
            int v = std::stoi(item, &used);
            if (used != item.size()) throw std::invalid_argument(item);
            out.push_back(v);
        } catch (const std::logic_error&) {
            throw wph::ParseError("bad weight '" + item + "'");
        }
    }
    wph::validate_weights(out);
    return out;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw wph::InvalidInput("cannot read " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

wph::WPolynomial polynomial_from(const GlobalOptions& g, const std::string& text, const wph::Weights& w) {
    wph::WPolynomial f = wph::parse_polynomial(text, w);
    if (g.degree != 0 && wph::require_homogeneous(f) != g.degree)
        throw wph::DegreeMismatch("polynomial has degree " + std::to_string(f.degree()) + ", not " +
                                  std::to_string(g.degree));
    return f;
}

wph::WPolynomial input_polynomial(const GlobalOptions& g) {
    wph::Weights w = parse_weights(g.weights);
    if (!g.poly.empty() && !g.poly_file.empty()) throw wph::InvalidInput("give --poly or --poly-file, not both");
    if (!g.poly_file.empty()) return polynomial_from(g, read_file(g.poly_file), w);
    if (g.poly.empty()) throw wph::InvalidInput("--poly or --poly-file is required");
    return polynomial_from(g, g.poly, w);
}

wph::Lattice gram_from_file(const std::string& path) {
    Json j = Json::parse(read_file(path));
    std::vector<std::vector<long long>> rows = j.get<std::vector<std::vector<long long>>>();
    return wph::Lattice::from_rows(rows);
}

Json monomial_list(const std::vector<wph::Exponents>& ms) {
    Json out = Json::array();
    for (const auto& e : ms) out.push_back(wph::monomial_string(e));
    return out;
}

Json integers(const std::vector<wph::Integer>& v) {
    Json out = Json::array();
    for (const auto& z : v) out.push_back(wph::to_json(z));
    return out;
}

Json disc_json(const wph::DiscriminantForm& f) {
    Json bilinear = Json::array(), quadratic = Json::array();
    for (const auto& row : f.bilinear) {
        Json r = Json::array();
        for (const auto& q : row) r.push_back(wph::to_json(q));
        bilinear.push_back(r);
    }
    for (const auto& q : f.quadratic) quadratic.push_back(wph::to_json(q));
    Json out{{"invariants", integers(f.invariants)}, {"order", wph::to_json(f.order())}, {"even", f.even},
             {"bilinear", bilinear}};
    if (f.even) out["quadratic"] = quadratic;
    return out;
}

Json fingerprint_json(const wph::Lattice& l) {
    wph::GenusFingerprint fp = wph::genus_fingerprint(l);
    return Json{{"rank", fp.rank},
                {"signature", fp.signature.to_string()},
                {"even", fp.even},
                {"invariant_factors", integers(fp.invariant_factors)}};
}

// Prints JSON or a short text rendering of the same object.
void emit(const GlobalOptions& g, const Json& j, const std::string& text) {
    if (g.json) std::cout << j.dump(2) << "\n";
    else std::cout << text;
}

std::string kernel_text(const wph::MultiplicationKernel& k) {
    std::ostringstream os;
    os << "kernel dim " << k.kernel_dim() << " (" << k.source_dim << " -> " << k.target_dim << ")\n";
    for (const auto& p : k.basis) os << "  " << p.to_string() << "\n";
    return os.str();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Weighted projective hypersurfaces: quasi-smoothness, Hodge data, lattices and normal forms"};
    app.require_subcommand(1);
    app.fallthrough();
    GlobalOptions g;
    app.add_flag("--json", g.json, "Machine-readable output");
    app.add_option("--weights", g.weights, "Comma-separated weights, e.g. 1,2,3,7");
    app.add_option("--degree", g.degree, "Weighted degree (piece degree for 'jacobian')");
    app.add_option("--poly", g.poly, "Polynomial, e.g. \"x0^14 + x1^7 + x1*x2^4 + x3^2\"");
    app.add_option("--poly-file", g.poly_file, "File holding the polynomial");

    int status = 0;
    auto set_status = [&](bool ok) { status = ok ? 0 : kSemanticFailure; };

    long max_b = 101;
    auto* classify = app.add_subcommand("classify", "Amplitude-one quasi-smooth families X_{a+b+4}(1,2,a,b)");
    classify->add_option("--max-b", max_b, "Largest weight b")->check(CLI::PositiveNumber);
    classify->callback([&] {
        Json out = Json::array();
        std::ostringstream text;
        for (const auto& f : wph::enumerate_amplitude_one(max_b)) {
            out.push_back(Json{{"symbol", f.symbol.to_string()},
                               {"degree", f.symbol.degree},
                               {"weights", f.symbol.weights},
                               {"basic_polynomial", f.basic.to_string()}});
            text << f.symbol.to_string() << "  " << f.basic.to_string() << "\n";
        }
        emit(g, Json{{"families", out}}, text.str());
    });

    auto* check_qs = app.add_subcommand("check-qs", "Certify quasi-smoothness; exit 1 when not quasi-smooth");
    check_qs->callback([&] {
        wph::WPolynomial f = input_polynomial(g);
        wph::QuasiSmoothCertificate c = wph::is_quasismooth(f, true);
        Json window = Json::array();
        for (const auto& [k, dim] : c.window_dims) window.push_back(Json{{"degree", k}, {"dim", dim}});
        Json out{{"quasismooth", c.quasismooth},
                 {"top_degree", c.top_degree},
                 {"window", window},
                 {"failing_degree", c.failing_degree ? Json(*c.failing_degree) : Json()},
                 {"total_dimension", c.total_dimension ? wph::to_json(*c.total_dimension) : Json()},
                 {"expected_total", wph::to_json(c.expected_total)}};
        emit(g, out, c.quasismooth ? "quasi-smooth\n" : "not quasi-smooth\n");
        set_status(c.quasismooth);
    });

    auto symbol_output = [&](bool with_hodge) {
        if (g.degree <= 0) throw wph::InvalidInput("--degree is required");
        wph::FamilySymbol sym = wph::make_symbol(g.degree, parse_weights(g.weights));
        std::vector<wph::Integer> h = wph::hodge_numbers(sym);
        wph::Integer m = wph::moduli_count(sym);
        Json out{{"hodge", integers(h)}, {"moduli", wph::to_json(m)}, {"amplitude", sym.amplitude()}};
        std::ostringstream text;
        if (with_hodge) {
            text << "hodge";
            for (const auto& v : h) text << " " << v.get_str();
            text << "\n";
        }
        text << "moduli " << m.get_str() << "\n";
        // Surfaces: the series gives primitive h^{1,1}; the full value adds the hyperplane class.
        // Published h^{1,1} values often leave this unstated, so both are printed.
        if (with_hodge && sym.weights.size() == 4) {
            wph::Integer full = h[1] + 1;
            out["h11_primitive"] = wph::to_json(h[1]);
            out["h11_with_hyperplane"] = wph::to_json(full);
            text << "h11 primitive " << h[1].get_str() << ", with hyperplane class " << full.get_str()
                 << " (a quoted h11 may mean either)\n";
        }
        emit(g, out, text.str());
    };
    app.add_subcommand("hodge", "Primitive middle Hodge numbers from the Poincare series")->callback([&] {
        symbol_output(true);
    });
    app.add_subcommand("moduli", "Number of moduli mu_d")->callback([&] { symbol_output(false); });

    std::string kernel_times;
    auto* jacobian = app.add_subcommand("jacobian", "Graded piece of the Jacobian ring at --degree");
    jacobian->add_option("--kernel-times", kernel_times, "Multiplier g; reports the kernel of (R/J)_k -> (R/J)_{k+deg g}");
    jacobian->callback([&] {
        wph::Weights w = parse_weights(g.weights);
        std::string text = !g.poly_file.empty() ? read_file(g.poly_file) : g.poly;
        if (text.empty()) throw wph::InvalidInput("--poly or --poly-file is required");
        wph::WPolynomial f = wph::parse_polynomial(text, w);
        wph::require_homogeneous(f);
        wph::JacobianRing ring(f);
        wph::GradedPiece p = ring.piece(g.degree);
        Json out{{"degree", p.degree},           {"dim_ring", p.dim_ring},
                 {"dim_ideal", p.rank_ideal},    {"dim_quotient", p.dim_quotient()},
                 {"quotient_basis", monomial_list(p.quotient_basis)}};
        std::ostringstream os;
        os << "R_" << p.degree << " " << p.dim_ring << ", J " << p.rank_ideal << ", R/J " << p.dim_quotient() << "\n";
        if (!kernel_times.empty()) {
            wph::MultiplicationKernel k =
                wph::multiplication_kernel(ring, wph::parse_polynomial(kernel_times, w), g.degree);
            Json basis = Json::array();
            for (const auto& q : k.basis) basis.push_back(q.to_string());
            out["kernel"] = Json{{"multiplier", kernel_times},  {"target_degree", k.target_degree},
                                 {"target_dim", k.target_dim},  {"image_rank", k.image_rank},
                                 {"kernel_dim", k.kernel_dim()}, {"kernel_basis", basis}};
            os << kernel_text(k);
        }
        emit(g, out, os.str());
    });

    app.add_subcommand("resolve", "Singular points, resolution chains, e, K^2 and Noether")->callback([&] {
        wph::WPolynomial f = input_polynomial(g);
        wph::InvariantReport r = wph::invariant_report(f);
        Json points = Json::array();
        std::ostringstream os;
        for (const auto& p : r.points) {
            Json coeffs = Json::array();
            for (const auto& q : p.discrepancy.coefficients) coeffs.push_back(wph::to_json(q));
            points.push_back(Json{{"point", "P" + std::to_string(p.point.coordinate)},
                                  {"type", p.point.type.to_string()},
                                  {"chain", p.chain},
                                  {"discrepancy", coeffs},
                                  {"delta_squared", wph::to_json(p.discrepancy.self_intersection)}});
            os << "P" << p.point.coordinate << " " << p.point.type.to_string() << " chain";
            for (int c : p.chain) os << " " << c;
            os << "\n";
        }
        wph::Rational noether = r.canonical_square + wph::Rational(r.euler_resolved);
        Json out{{"points", points},
                 {"euler_singular", wph::to_json(r.euler_singular)},
                 {"euler_resolved", wph::to_json(r.euler_resolved)},
                 {"canonical_square_singular", wph::to_json(r.canonical_square_singular)},
                 {"canonical_square", wph::to_json(r.canonical_square)},
                 {"chi", wph::to_json(r.chi)},
                 {"noether", noether == wph::Rational(12 * r.chi)}};
        os << "e " << r.euler_resolved.get_str() << ", K^2 " << wph::to_string(r.canonical_square) << ", chi "
           << r.chi.get_str() << "\n";
        emit(g, out, os.str());
    });

    auto* lattice = app.add_subcommand("lattice", "Lattice invariants");
    lattice->require_subcommand(1);
    std::string gram, gram_a, gram_b, expr, expr_a, expr_b, lattice_case;
    auto* disc = lattice->add_subcommand("disc", "Discriminant form of a Gram matrix");
    disc->add_option("--gram", gram, "JSON file with the Gram matrix");
    disc->add_option("--lattice", expr, "Lattice expression, e.g. \"U + A2(-1)\"");
    disc->callback([&] {
        wph::Lattice l = !gram.empty() ? gram_from_file(gram) : wph::parse_lattice(expr);
        if (gram.empty() && expr.empty()) throw wph::InvalidInput("--gram or --lattice is required");
        wph::DiscriminantForm f = wph::discriminant_form(l);
        Json out{{"fingerprint", fingerprint_json(l)}, {"discriminant", disc_json(f)}};
        std::ostringstream os;
        os << "A(L) of order " << f.order().get_str() << ":";
        for (std::size_t i = 0; i < f.invariants.size(); ++i)
            os << " Z/" << f.invariants[i].get_str() << " q=" << wph::to_string(f.even ? f.quadratic[i] : f.bilinear[i][i]);
        os << "\n";
        emit(g, out, os.str());
    });
    auto* genus = lattice->add_subcommand("genus-equal", "Compare genus fingerprints; exit 1 when different");
    genus->add_option("--gram-a", gram_a, "JSON Gram file");
    genus->add_option("--gram-b", gram_b, "JSON Gram file");
    genus->add_option("--lattice-a", expr_a, "Lattice expression");
    genus->add_option("--lattice-b", expr_b, "Lattice expression");
    genus->callback([&] {
        auto load = [](const std::string& file, const std::string& text) {
            if (!file.empty()) return gram_from_file(file);
            if (text.empty()) throw wph::InvalidInput("each side needs a Gram file or an expression");
            return wph::parse_lattice(text);
        };
        wph::Lattice a = load(gram_a, expr_a), b = load(gram_b, expr_b);
        wph::GenusComparison c = wph::genus_equal(a, b);
        Json out{{"equal", c.equal}, {"differences", c.differences}, {"uniqueness_hypothesis", c.uniqueness_hypothesis}};
        std::string text = c.equal ? "same genus\n" : "different genus\n";
        for (const auto& d : c.differences) text += "  " + d + "\n";
        emit(g, out, text);
        set_status(c.equal);
    });
    auto* verify = lattice->add_subcommand("verify-transcendental", "Check a transcendental lattice candidate");
    verify->add_option("--case", lattice_case, "Family case a|b|c|d")->check(CLI::IsMember({"a", "b", "c", "d"}));
    verify->add_option("--picard", expr_a, "Picard lattice expression (overrides the case)");
    verify->add_option("--transcendental", expr_b, "Transcendental lattice expression (overrides the case)");
    verify->callback([&] {
        if (lattice_case.empty() && (expr_a.empty() || expr_b.empty()))
            throw wph::InvalidInput("--case or both --picard and --transcendental are required");
        wph::Lattice s = !expr_a.empty() ? wph::parse_lattice(expr_a) : wph::picard_from_configuration(lattice_case[0]);
        wph::Lattice t = !expr_b.empty() ? wph::parse_lattice(expr_b) : wph::transcendental_lattice(lattice_case[0]);
        wph::TranscendentalCheck check = wph::verify_transcendental(s, t);
        Json checks = Json::array();
        std::ostringstream os;
        for (const auto& c : check.checks) {
            checks.push_back(Json{{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
            os << (c.passed ? "pass " : "FAIL ") << c.name << ": " << c.detail << "\n";
        }
        emit(g, Json{{"checks", checks}, {"passed", check.passed()}}, os.str());
        set_status(check.passed());
    });

    std::string nf_case = "a", field = "exact";
    int precision = 50;
    auto* normalform = app.add_subcommand("normalform", "Reduce a member of a family to its normal form");
    normalform->add_option("--case", nf_case, "a|b|c|d")->check(CLI::IsMember({"a", "b", "c", "d"}));
    normalform->add_option("--field", field, "exact|float")->check(CLI::IsMember({"exact", "float"}));
    normalform->add_option("--precision", precision, "Decimal digits of the float backend")->check(CLI::Range(10, 2000));
    normalform->callback([&] {
        wph::NormalFormCase c = wph::parse_case(nf_case);
        wph::WPolynomial f = input_polynomial(g);
        if (!wph::is_quasismooth(f, false).quasismooth) throw wph::NotQuasiSmooth("input is not quasi-smooth");
        auto render = [&](const auto& r, Json extra) {
            Json transform = Json::array();
            for (const auto& t : r.transform) transform.push_back(t.to_string());
            Json out{{"case", nf_case}, {"normal_form", r.normal_form.to_string()}, {"transform", transform},
                     {"steps", r.steps}};
            out.update(extra);
            std::ostringstream os;
            os << r.normal_form.to_string() << "\n";
            for (std::size_t i = 0; i < r.transform.size(); ++i)
                os << "  x" << i << " -> " << r.transform[i].to_string() << "\n";
            emit(g, out, os.str());
        };
        if (field == "exact") {
            auto r = wph::reduce_to_normal_form(f, c, wph::ExactField{});
            render(r, Json{{"scale", wph::to_json(r.scale)}});
        } else {
            auto r = wph::reduce_to_normal_form(f, c, wph::FloatField{static_cast<unsigned>(precision)});
            render(r, Json{{"scale", r.scale.to_string(precision)}, {"discarded", r.discarded}, {"defect", r.defect}});
        }
    });

    std::string poly1, poly2, eq_case = "a";
    auto* equiv = app.add_subcommand("equiv", "Decide projective equivalence of two members; exit 1 when not equivalent");
    equiv->add_option("--case", eq_case, "a|b|c|d")->check(CLI::IsMember({"a", "b", "c", "d"}));
    equiv->add_option("--poly1", poly1)->required();
    equiv->add_option("--poly2", poly2)->required();
    equiv->callback([&] {
        wph::NormalFormCase c = wph::parse_case(eq_case);
        wph::Weights w = g.weights.empty() ? wph::normal_form_template(c).family.weights : parse_weights(g.weights);
        auto reduce = [&](const std::string& text) {
            wph::WPolynomial f = polynomial_from(g, text, w);
            return wph::reduce_to_normal_form(f, c, wph::ExactField{}).normal_form;
        };
        wph::WPolynomial n1 = reduce(poly1), n2 = reduce(poly2);
        auto eq = wph::torus_equivalent(n1, n2, c);
        Json out{{"equivalent", eq.has_value()}, {"normal_form_1", n1.to_string()}, {"normal_form_2", n2.to_string()}};
        std::string text = eq ? "equivalent\n" : "not equivalent\n";
        if (eq) {
            Json torus = Json::array();
            for (const auto& v : eq->numeric.c) torus.push_back(v.to_string(20));
            out["torus"] = torus;
            out["lambda"] = eq->numeric.lambda.to_string(20);
            if (eq->exact) {
                Json exact = Json::array();
                for (const auto& v : eq->exact->c) exact.push_back(wph::to_json(v));
                out["torus_exact"] = exact;
            }
        }
        emit(g, out, text);
        set_status(eq.has_value());
    });

    std::string report_case;
    auto* report = app.add_subcommand("report", "Full invariant report for a family");
    report->add_option("--case", report_case, "a|b|c|d")->required()->check(CLI::IsMember({"a", "b", "c", "d"}));
    report->callback([&] {
        wph::FamilyReport r = wph::report_family(wph::parse_case(report_case));
        Json j = wph::to_json(r);
        // The report is JSON either way; text mode only indents less.
        std::cout << (g.json ? j.dump(2) : j.dump(1)) << "\n";
    });

    std::string corrupt;
    bool fast = false;
    int random_cases = 100;
    auto* reproduce = app.add_subcommand("reproduce", "Run every acceptance check; exit 1 on any FAIL");
    reproduce->add_option("--corrupt", corrupt, "Alter the expected value of one check id (harness self-test)");
    reproduce->add_flag("--fast", fast, "Skip the series against Jacobian sweep");
    reproduce->add_option("--random-cases", random_cases, "Normal-form round trips per case")->check(CLI::PositiveNumber);
    reproduce->callback([&] {
        wph::ReproduceOptions o;
        if (!corrupt.empty()) o.corrupt = corrupt;
        o.include_slow = !fast;
        o.random_cases = random_cases;
        std::vector<wph::CheckRow> rows = wph::reproduce(o);
        if (o.corrupt && std::none_of(rows.begin(), rows.end(), [&](const auto& r) { return r.id == corrupt; }))
            throw wph::InvalidInput("no check with id " + corrupt);
        emit(g, wph::to_json(rows), wph::format_table(rows));
        set_status(wph::all_accepted(rows));
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kUsageError;
    } catch (const wph::InvalidInput& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsageError;
    } catch (const Json::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsageError;
    } catch (const wph::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kSemanticFailure;
    }
    return status;
}
