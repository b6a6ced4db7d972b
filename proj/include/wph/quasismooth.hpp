#pragma once

#include <optional>
#include <string>
#include <vector>

#include "wph/family.hpp"
#include "wph/jacobian.hpp"

namespace wph {

// One step d = r * beta + gamma of the divisibility lemma, for a weight beta not dividing d.
struct LemmaStep {
    int beta_index = 0;
    long beta = 0;
    long r = 0;
    int gamma_index = 0;
    long gamma = 0;
};

struct LemmaResult {
    bool holds = false;
    std::vector<LemmaStep> witness;     // remainders pairwise distinct
    std::optional<long> failing_beta;   // first weight with no admissible step at all
    std::string reason;
};

// Necessary condition for quasi-smoothness; requires d > max weight.
LemmaResult lemma_lat_check(const FamilySymbol& sym);

struct Cycle {
    std::vector<int> indices;      // k_1, ..., k_s
    std::vector<long> exponents;   // r_1, ..., r_{s-1}, d / a_{k_s}
};

// Cycles of the lemma witness; a cycle is a chain in the non-dividing weights ending
// at a dividing one. Chains come first, then the untouched dividing weights.
std::vector<Cycle> cycle_decomposition(const FamilySymbol& sym);
WPolynomial basic_polynomial(const FamilySymbol& sym);
WPolynomial basic_polynomial(const FamilySymbol& sym, const std::vector<Cycle>& cycles);

struct QuasiSmoothCertificate {
    bool quasismooth = false;
    long top_degree = 0;  // T = sum (d - 2 a_i)
    long window_begin = 0, window_end = 0;
    std::vector<std::pair<long, std::size_t>> window_dims;
    std::optional<long> failing_degree;
    std::optional<Integer> total_dimension;  // sum of dim (R/J)_k when computed
    Rational expected_total;                 // prod (d - a_i) / a_i
};

// (R/J)_k = 0 on a window of max(a) consecutive degrees above T forces R/J to be finite.
QuasiSmoothCertificate is_quasismooth(const JacobianRing& ring, bool compute_total = true);
QuasiSmoothCertificate is_quasismooth(const WPolynomial& f, bool compute_total = true);

struct ClassifiedFamily {
    FamilySymbol symbol;
    LemmaResult lemma;
    std::vector<Cycle> cycles;
    WPolynomial basic;
    QuasiSmoothCertificate certificate;
};

// Symbols X_{a+b+4}(1,2,a,b), a <= b <= max_b odd and coprime, that pass the lemma and
// whose basic polynomial is certified quasi-smooth.
std::vector<ClassifiedFamily> enumerate_amplitude_one(long max_b);

// Advisory combinatorial criterion for a general member, evaluated under two readings:
// the monomial part may use any variables of I, or must use all of them.
struct FletcherSubset {
    std::vector<int> subset;
    bool within_reading = false;
    bool all_of_reading = false;
};
struct FletcherReport {
    bool within_reading = true;
    bool all_of_reading = true;
    bool readings_disagree() const { return within_reading != all_of_reading; }
    std::vector<FletcherSubset> disagreements;
};
FletcherReport fletcher_condition(const FamilySymbol& sym);

}  // namespace wph
