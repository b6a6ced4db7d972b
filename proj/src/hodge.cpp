#include "wph/hodge.hpp"

#include <algorithm>

#include "wph/errors.hpp"

namespace wph {

Integer PoincareSeries::operator[](long k) const {
    if (k < 0 || k >= static_cast<long>(coefficients.size())) return 0;
    return coefficients[k];
}

Integer PoincareSeries::total() const {
    Integer t = 0;
    for (const auto& c : coefficients) t += c;
    return t;
}

PoincareSeries poincare_series(const FamilySymbol& sym) {
    const Weights& w = sym.weights;
    validate_weights(w);
    const long d = sym.degree;
    long top = 0;
    for (int a : w) {
        if (a >= d) throw InvalidInput("every weight must be below the degree");
        top += d - 2L * a;
    }
    if (top > 2000000) throw CapacityExceeded("series length beyond capacity");
    PoincareSeries s;
    s.top_degree = top;
    const long max_a = *std::max_element(w.begin(), w.end());
    const long len = std::max(top, 0L) + max_a + 1;
    std::vector<Integer> c(len, 0);
    c[0] = 1;
    for (int a : w) {
        // Multiply by 1 / (1 - z^a), then by (1 - z^{d-a}).
        for (long k = a; k < len; ++k) c[k] += c[k - a];
        for (long k = len - 1; k >= d - a; --k) c[k] -= c[k - (d - a)];
    }
    s.tail_vanishes = top >= 0 && std::all_of(c.begin() + top + 1, c.end(), [](const Integer& v) { return v == 0; });
    if (top >= 0) c.resize(top + 1);
    else c.clear();
    s.coefficients = std::move(c);
    return s;
}

std::vector<Integer> hodge_numbers(const FamilySymbol& sym) {
    PoincareSeries s = poincare_series(sym);
    const long n = static_cast<long>(sym.weights.size()) - 1;
    std::vector<Integer> out;
    for (long j = 1; j <= n; ++j) out.push_back(s[j * sym.degree - sym.weight_sum()]);
    return out;
}

Integer moduli_count(const FamilySymbol& sym) { return poincare_series(sym)[sym.degree]; }

Rational milnor_number(const std::vector<Rational>& weights) {
    if (weights.empty()) throw InvalidInput("no weights");
    Rational mu = 1;
    for (const Rational& q : weights) {
        if (q <= 0 || q >= 1) throw InvalidInput("quasi-homogeneous weights must lie in (0,1)");
        mu *= 1 / q - 1;
    }
    mu.canonicalize();
    return mu;
}

}  // namespace wph
