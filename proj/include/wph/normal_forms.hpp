#pragma once

#include <optional>
#include <random>
#include <string>
#include <vector>

#include "wph/family.hpp"
#include "wph/polynomial.hpp"
#include "wph/scalar.hpp"

namespace wph {

enum class NormalFormCase { a, b, c, d };

NormalFormCase parse_case(const std::string& tag);  // "a".."d"
char case_letter(NormalFormCase c);
std::vector<NormalFormCase> all_cases();
std::optional<NormalFormCase> case_for_family(const FamilySymbol& family);

struct PinnedMonomial {
    Exponents exponents;
    Rational value;
};

// Support of a normal form: pinned monomials plus free monomials. Every monomial has the
// family degree. `nonzero` lists free monomials whose coefficient may not vanish.
struct NormalFormTemplate {
    NormalFormCase tag;
    FamilySymbol family;
    std::vector<PinnedMonomial> pinned;
    std::vector<Exponents> free;
    std::vector<Exponents> nonzero;
    // Degree-d monomials deliberately excluded although their neighbours are free.
    std::vector<Exponents> excluded;
    // Variables left out of the torus stabilizer computation (the double-cover coordinate).
    std::vector<int> cover_variables;

    bool allows(const Exponents& e) const;
    const PinnedMonomial* pin(const Exponents& e) const;
};

const NormalFormTemplate& normal_form_template(NormalFormCase c);

struct NormalFormCheck {
    bool ok = true;
    std::vector<std::string> violations;
};

// Throws InvalidInput for the zero polynomial or a polynomial of the wrong degree or weights.
NormalFormCheck is_normal_form(const WPolynomial& f, NormalFormCase c);

// normal_form == scale * F(transform[0], ..., transform[n]).
template <class S>
struct Reduction {
    BasicPolynomial<S> normal_form;
    std::vector<BasicPolynomial<S>> transform;
    S scale;
    std::vector<std::string> steps;
    // Floating backend: largest coefficient discarded when projecting onto the template,
    // and the re-substitution defect. Both zero for the exact backend.
    double discarded = 0;
    double defect = 0;

    bool identity() const;
};

// Requires the x1^{d/2} coefficient and the case's leading coefficients to be non-zero
// (NotReducible otherwise). Quasi-smoothness is the caller's responsibility.
Reduction<Rational> reduce_to_normal_form(const WPolynomial& f, NormalFormCase c, const ExactField& field);
Reduction<ComplexMp> reduce_to_normal_form(const WPolynomial& f, NormalFormCase c, const FloatField& field);

// x_j -> c_j x_j followed by multiplication with lambda.
template <class S>
struct TorusElement {
    std::vector<S> c;
    S lambda;
};

template <class S>
BasicPolynomial<S> act(const BasicPolynomial<S>& f, const TorusElement<S>& t) {
    BasicPolynomial<S> out(f.weights());
    for (const auto& [e, coeff] : f.terms()) {
        S v = coeff * t.lambda;
        for (std::size_t i = 0; i < e.size(); ++i)
            for (int k = 0; k < e[i]; ++k) v = v * t.c[i];
        out.add_term(e, v);
    }
    return out;
}

// True when t fixes every pinned coefficient of the template.
bool satisfies_constraint(const TorusElement<Rational>& t, NormalFormCase c);

struct TorusEquivalence {
    // Element with c_0 = 1 mapping F1 to F2; rational when the construction stays in Q.
    std::optional<TorusElement<Rational>> exact;
    TorusElement<ComplexMp> numeric;
    double defect = 0;  // max |act(F1, numeric) - F2| coefficient
};

// Decides existence exactly; both inputs must pass is_normal_form (InvalidInput otherwise).
std::optional<TorusEquivalence> torus_equivalent(const WPolynomial& f1, const WPolynomial& f2, NormalFormCase c);

// Dimension of the torus acting on normal forms: weighted torus modulo the 1-subtorus,
// cut down by the pinned monomials.
int torus_dimension(NormalFormCase c);
int normal_form_moduli_dim(NormalFormCase c);

// Order of the finite torus stabilizer of F modulo the 1-subtorus, ignoring the
// double-cover involution in cases (a) and (d). Returns 0 when the stabilizer is infinite.
Integer torus_stabilizer_order(const WPolynomial& f, NormalFormCase c);

}  // namespace wph

namespace wph {

// Deterministic samplers (draws use raw engine output, so sequences are portable).
Rational sample_rational(std::mt19937& rng, bool nonzero);
// Every free coefficient drawn; non-vanishing constraints and the x1^{d/2} term respected.
WPolynomial random_normal_form(NormalFormCase c, std::mt19937& rng);
// Torus element preserving every pinned coefficient.
TorusElement<Rational> random_torus_element(NormalFormCase c, std::mt19937& rng);
// mu * F(x0, u x1 + v x0^2, x2 + h2, x3 + h3) with random forms h2 (in x0, x1) and h3 (no x3).
WPolynomial random_group_image(const WPolynomial& f, std::mt19937& rng);

}  // namespace wph
