#pragma once

#include <random>

#include "wph/polynomial.hpp"

namespace wph::testing {

// Dense random member of degree d; coefficients in [-5, 5].
inline WPolynomial random_homogeneous(const Weights& w, long d, std::mt19937& rng, int density_percent = 100) {
    WPolynomial f(w);
    for (const auto& e : enumerate_monomials(w, d))
        if (static_cast<int>(rng() % 100) < density_percent) f.add_term(e, Rational(static_cast<long>(rng() % 11) - 5));
    return f;
}

// Number of monomials of weighted degree d, by the partition recurrence.
inline long monomial_count(const Weights& w, long d) {
    std::vector<long> c(d + 1, 0);
    c[0] = 1;
    for (int a : w)
        for (long k = a; k <= d; ++k) c[k] += c[k - a];
    return c[d];
}

}  // namespace wph::testing
