#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <numeric>

#include "wph/resolution.hpp"

using namespace wph;

namespace {
const Weights kA{1, 2, 3, 7}, kB{1, 2, 3, 5}, kC{1, 2, 5, 7}, kD{1, 2, 7, 11};
WPolynomial fa() { return parse_polynomial("x0^14 + x1^7 + x1*x2^4 + x3^2", kA); }
WPolynomial fb() { return parse_polynomial("x0^12 + x1^6 + x2^4 + x1*x3^2", kB); }
WPolynomial fc() { return parse_polynomial("x0^16 + x1^8 + x0*x2^3 + x1*x3^2", kC); }
WPolynomial fd() { return parse_polynomial("x0^22 + x1^11 + x0*x2^3 + x3^2", kD); }

std::vector<std::string> types(const WPolynomial& f) {
    std::vector<std::string> out;
    for (const auto& p : detect_singularities(f))
        out.push_back("P" + std::to_string(p.coordinate) + ":" + p.type.to_string());
    return out;
}
using S = std::vector<std::string>;
}  // namespace

TEST_CASE("singular points of the basic members") {
    CHECK(types(fa()) == S{"P2:1/3(1,1)"});
    CHECK(types(fb()) == S{"P3:1/5(1,3)"});
    CHECK(types(fc()) == S{"P2:1/5(1,1)", "P3:1/7(1,5)"});
    CHECK(types(fd()) == S{"P2:1/7(1,2)"});
    auto d = detect_singularities(fd()).front();
    CHECK(d.type.p_raw == 2);
    CHECK(d.type.q_raw == 4);
}

TEST_CASE("Hirzebruch-Jung chains") {
    using C = std::vector<int>;
    CHECK(hj_chain(5, 3) == C{2, 3});
    CHECK(hj_chain(7, 5) == C{2, 2, 3});
    CHECK(hj_chain(3, 1) == C{3});
    CHECK(hj_chain(7, 2) == C{4, 2});
    CHECK(hj_chain(7, 4) == C{2, 4});
    CHECK_THROWS_AS(hj_chain(6, 2), InvalidInput);
    for (long h = 2; h <= 500; ++h)
        for (long q = 1; q < h; ++q) {
            if (std::gcd(h, q) != 1) continue;
            auto chain = hj_chain(h, q);
            for (int c : chain) REQUIRE(c >= 2);
            REQUIRE(hj_fraction(chain) == std::make_pair(h, q));
        }
}

TEST_CASE("type normalization is idempotent and orientation-consistent") {
    for (long h = 2; h <= 60; ++h)
        for (long q = 1; q < h; ++q) {
            if (std::gcd(h, q) != 1) continue;
            CyclicQuotient t{h, 1, q, q};
            CyclicQuotient swapped{h, q, 1, t.q_reversed()};
            CHECK(t.q_canonical() == swapped.q_canonical());
            auto forward = hj_chain(h, t.q), backward = hj_chain(h, t.q_reversed());
            CHECK(std::equal(forward.begin(), forward.end(), backward.rbegin(), backward.rend()));
        }
}

TEST_CASE("discrepancies solve the adjunction equations") {
    Discrepancy c = discrepancy({2, 2, 3});
    CHECK(c.coefficients == std::vector<Rational>{Rational(-1, 7), Rational(-2, 7), Rational(-3, 7)});
    CHECK(c.self_intersection == Rational(-3, 7));
    Discrepancy five = discrepancy({5});
    CHECK(five.coefficients == std::vector<Rational>{Rational(-3, 5)});
    CHECK(five.self_intersection == Rational(-9, 5));
    Discrepancy node = discrepancy({2});
    CHECK(node.coefficients == std::vector<Rational>{Rational(0)});
    CHECK(node.self_intersection == 0);

    // Delta . E_i = K . E_i = c_i - 2 on every component.
    for (long h = 2; h <= 40; ++h)
        for (long q = 1; q < h; ++q) {
            if (std::gcd(h, q) != 1) continue;
            auto chain = hj_chain(h, q);
            Discrepancy dd = discrepancy(chain);
            const std::size_t n = chain.size();
            Rational square = 0;
            for (std::size_t i = 0; i < n; ++i) {
                Rational dot = dd.coefficients[i] * Rational(-chain[i]);
                if (i > 0) dot += dd.coefficients[i - 1];
                if (i + 1 < n) dot += dd.coefficients[i + 1];
                CHECK(dot == Rational(chain[i] - 2));
                square += dd.coefficients[i] * dot;
            }
            CHECK(square == dd.self_intersection);
        }
}

TEST_CASE("invariants of the minimal resolutions") {
    InvariantReport c = invariant_report(fc());
    CHECK(c.euler_singular == 22);
    CHECK(c.euler_resolved == 26);
    CHECK(c.canonical_square_singular == Rational(8, 35));
    CHECK(c.canonical_square == -2);

    InvariantReport a = invariant_report(fa());
    CHECK(a.euler_singular == 23);
    CHECK(a.euler_resolved == 24);
    CHECK(a.canonical_square_singular == Rational(1, 3));
    CHECK(a.canonical_square == 0);

    InvariantReport d = invariant_report(fd());
    CHECK(d.euler_resolved == 25);
    CHECK(d.canonical_square_singular == Rational(1, 7));
    CHECK(d.canonical_square == -1);

    InvariantReport b = invariant_report(fb());
    CHECK(b.euler_resolved == 24);
    CHECK(b.canonical_square == 0);

    for (const auto& r : {a, b, c, d}) {
        CHECK(r.chi == 2);
        CHECK(r.canonical_square + Rational(r.euler_resolved) == Rational(12 * r.chi));
    }
}

TEST_CASE("resolution refuses singular input") {
    CHECK_THROWS_AS(invariant_report(parse_polynomial("x0^14 + x1^7 + x3^2", kA)), NotQuasiSmooth);
}
