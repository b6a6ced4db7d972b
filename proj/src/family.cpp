#include "wph/family.hpp"

#include <algorithm>
#include <numeric>

namespace wph {

long FamilySymbol::weight_sum() const {
    return std::accumulate(weights.begin(), weights.end(), 0L);
}

std::string FamilySymbol::to_string() const {
    std::string s = "X_" + std::to_string(degree) + "(";
    for (std::size_t i = 0; i < weights.size(); ++i) s += (i ? "," : "") + std::to_string(weights[i]);
    return s + ")";
}

FamilySymbol make_symbol(long degree, Weights weights) {
    validate_weights(weights);
    if (degree <= 0) throw InvalidInput("degree must be positive");
    return FamilySymbol{degree, std::move(weights)};
}

std::string SingularStratum::name() const {
    std::string s;
    for (int c : coords) s += "P" + std::to_string(c);
    return s;
}

std::vector<SingularStratum> singular_strata(const Weights& weights) {
    validate_weights(weights);
    const int n = static_cast<int>(weights.size());
    if (n > 20) throw CapacityExceeded("too many variables for stratum enumeration");
    std::vector<SingularStratum> out;
    for (unsigned mask = 1; mask + 1 < (1U << n); ++mask) {
        SingularStratum s;
        int g = 0;
        for (int i = 0; i < n; ++i)
            if (mask & (1U << i)) {
                s.coords.push_back(i);
                g = std::gcd(g, weights[i]);
            }
        s.index = g;
        if (g > 1) out.push_back(s);
    }
    std::stable_sort(out.begin(), out.end(), [](const SingularStratum& a, const SingularStratum& b) {
        if (a.coords.size() != b.coords.size()) return a.coords.size() < b.coords.size();
        return a.coords < b.coords;
    });
    return out;
}

}  // namespace wph
