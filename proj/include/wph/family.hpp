#pragma once

#include <string>
#include <vector>

#include "wph/polynomial.hpp"

namespace wph {

// A family X_d in P(a_0, ..., a_n).
struct FamilySymbol {
    long degree = 0;
    Weights weights;

    long weight_sum() const;
    // K_X = O(amplitude).
    long amplitude() const { return degree - weight_sum(); }
    std::string to_string() const;  // "X_14(1,2,3,7)"
    friend bool operator==(const FamilySymbol&, const FamilySymbol&) = default;
};

FamilySymbol make_symbol(long degree, Weights weights);

// Proper coordinate stratum {x_j = 0 for j not in coords} whose points have isotropy Z/index.
struct SingularStratum {
    std::vector<int> coords;
    int index = 1;
    std::string name() const;  // "P1", "P1P2", ...
};

// All proper coordinate strata with non-trivial isotropy, smallest strata first.
std::vector<SingularStratum> singular_strata(const Weights& weights);

}  // namespace wph
