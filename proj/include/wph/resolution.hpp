#pragma once

#include <string>
#include <vector>

#include "wph/polynomial.hpp"

namespace wph {

// Cyclic quotient singularity 1/h(1, q) with gcd(h, q) = 1.
struct CyclicQuotient {
    long h = 1;
    long p_raw = 1, q_raw = 1;  // weights of the two local coordinates mod h
    long q = 1;                 // q_raw * p_raw^{-1} mod h, local coordinates in index order
    long q_reversed() const;    // q^{-1} mod h, the same singularity with coordinates swapped
    long q_canonical() const;   // min(q, q^{-1}); equal for isomorphic singularities
    std::vector<int> chain() const;
    std::string to_string() const;  // "1/7(1,5)"
};

struct SingularPoint {
    int coordinate = 0;            // the point P_i
    int eliminated = 0;            // x_j with x_i^r x_j in F, solved for near P_i
    int local_first = 0, local_second = 0;
    CyclicQuotient type;
};

// Isolated cyclic quotient points of a quasi-smooth surface X_d in P(a0..a3).
std::vector<SingularPoint> detect_singularities(const WPolynomial& f);

// Continued fraction h/q = c1 - 1/(c2 - ...), every c_i >= 2.
std::vector<int> hj_chain(long h, long q);
// Inverse of hj_chain.
std::pair<long, long> hj_fraction(const std::vector<int>& chain);

// K = pullback K_X + sum d_i E_i on a chain with E_i^2 = -c_i.
struct Discrepancy {
    std::vector<Rational> coefficients;
    Rational self_intersection;  // Delta^2
};
Discrepancy discrepancy(const std::vector<int>& chain);

struct ResolvedPoint {
    SingularPoint point;
    std::vector<int> chain;
    Discrepancy discrepancy;
};

struct InvariantReport {
    long degree = 0;
    Weights weights;
    long amplitude = 0;
    std::vector<Integer> hodge;       // [p_g, h11_prim, p_g]
    Integer b2 = 0;
    Integer euler_singular = 0;       // e(X)
    Integer euler_resolved = 0;       // e of the minimal resolution
    Rational hyperplane_square = 0;   // O(1)^2 = d / prod a_i
    Rational canonical_square_singular = 0;  // K_X^2
    Rational canonical_square = 0;           // K^2 on the resolution
    Integer chi = 0;                         // 1 + p_g
    std::vector<ResolvedPoint> points;
};

// Requires a quasi-smooth surface; a failed Noether identity raises InvariantViolation.
InvariantReport invariant_report(const WPolynomial& f);

}  // namespace wph
