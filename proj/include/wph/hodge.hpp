#pragma once

#include <vector>

#include "wph/family.hpp"

namespace wph {

// Coefficients mu_k of prod (1 - z^{d - a_i}) / (1 - z^{a_i}) for 0 <= k <= T = (n+1) d - 2N.
struct PoincareSeries {
    long top_degree = 0;
    std::vector<Integer> coefficients;
    // The product is a genuine polynomial of degree T (checked on max(a) further terms).
    bool tail_vanishes = false;
    Integer operator[](long k) const;  // zero outside [0, T]
    Integer total() const;
};

PoincareSeries poincare_series(const FamilySymbol& sym);

// Primitive middle Hodge numbers [mu_{jd - N}] for j = 1..n.
std::vector<Integer> hodge_numbers(const FamilySymbol& sym);
Integer moduli_count(const FamilySymbol& sym);  // mu_d

// Milnor number prod (1/w_i - 1) of a quasi-homogeneous isolated singularity.
Rational milnor_number(const std::vector<Rational>& weights);

}  // namespace wph
