#pragma once

#include <nlohmann/json.hpp>

#include <optional>
#include <string>
#include <vector>

#include "wph/elliptic.hpp"
#include "wph/jacobian.hpp"
#include "wph/lattice.hpp"
#include "wph/normal_forms.hpp"
#include "wph/quasismooth.hpp"
#include "wph/resolution.hpp"

namespace wph {

using Json = nlohmann::ordered_json;

// Rationals as "p/q" strings; integers as JSON numbers while they fit in 64 bits.
Json to_json(const Rational& q);
Json to_json(const Integer& z);

// Members used for the Torelli comparison: the generic member of each family.
WPolynomial generic_member(NormalFormCase c);
// Singular fibers of the elliptic fibration of a general member.
std::string fiber_configuration(NormalFormCase c);

// ---- Published quotient bases ---------------------------------------------------------

// One printed table entry. Alternatives are printed as equal modulo J; `correction` replaces
// an entry that is not a valid element of the piece.
struct PublishedEntry {
    std::vector<Exponents> alternatives;
    std::optional<Exponents> correction;
};

struct PublishedBasis {
    NormalFormCase tag;
    long degree = 0;
    std::vector<PublishedEntry> entries;
};

// Tables for the basic members at degrees d and d + 1, transcribed verbatim.
const std::vector<PublishedBasis>& published_quotient_bases();

struct BasisAudit {
    std::size_t dimension = 0;      // dim (R/J)_k
    bool printed_is_basis = false;  // first alternatives, as printed
    bool corrected_is_basis = false;
    bool alternatives_consistent = true;
    std::vector<std::string> corrections;  // "printed -> corrected: reason"
    std::vector<Exponents> only_published, only_greedy;  // corrected set vs greedy basis
};

BasisAudit audit_published_basis(const PublishedBasis& table);

// ---- Family report --------------------------------------------------------------------

struct FamilyReport {
    NormalFormCase tag;
    FamilySymbol symbol;
    std::vector<Integer> hodge;
    Integer moduli;
    int normal_form_moduli = 0;
    WPolynomial basic;
    QuasiSmoothCertificate certificate;
    InvariantReport invariants;
    Lattice picard;
    std::string picard_reference;  // lattice the Picard Gram is compared with
    GenusComparison picard_genus;
    Lattice transcendental;
    TranscendentalCheck transcendental_check;
    WPolynomial generic;
    MultiplicationKernel torelli_basic, torelli_generic;
    std::string fibers;
    int fiber_euler = 0;
};

// Runs every stage for the case; a failing stage raises Error naming the stage.
FamilyReport report_family(NormalFormCase c);
Json to_json(const FamilyReport& r);

// ---- Reproduction harness -------------------------------------------------------------

enum class CheckStatus { pass, expected_fail, fail };
std::string to_string(CheckStatus s);  // "PASS", "XFAIL", "FAIL"

struct CheckRow {
    std::string id;
    int criterion = 0;
    std::string description;
    std::string expected;                   // printed value
    std::string actual;                     // computed value
    std::optional<std::string> correction;  // documented correction of the printed value
    CheckStatus status = CheckStatus::fail;
    std::string note;
};

struct ReproduceOptions {
    std::optional<std::string> corrupt;  // check id whose expected value is deliberately altered
    bool include_slow = true;            // series against Jacobian dimensions up to the top degree
    int random_cases = 100;              // normal-form round trips per case
    unsigned seed = 20240601;
};

// Rows are ordered by check id within criterion; PASS when actual == expected, XFAIL when
// actual == correction, FAIL otherwise.
std::vector<CheckRow> reproduce(const ReproduceOptions& options = {});
bool all_accepted(const std::vector<CheckRow>& rows);  // no FAIL rows
Json to_json(const std::vector<CheckRow>& rows);
std::string format_table(const std::vector<CheckRow>& rows);

}  // namespace wph
