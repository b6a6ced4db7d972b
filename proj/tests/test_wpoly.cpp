#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "support/helpers.hpp"
#include "wph/family.hpp"
#include "wph/polynomial.hpp"

using namespace wph;
using wph::testing::monomial_count;
using wph::testing::random_homogeneous;

TEST_CASE("parsing and printing") {
    auto f = parse_polynomial("x0^14 + x1^7 + x1*x2^4 + x3^2", {1, 2, 3, 7});
    CHECK(f.degree() == 14);
    CHECK(f.size() == 4);
    CHECK(f.to_string() == "x0^14 + x1^7 + x1*x2^4 + x3^2");

    auto g = parse_polynomial(" -3/6*x0^2 + x1 - x1 + 2*x0 * x0 ", {1, 2});
    CHECK(g.to_string() == "3/2*x0^2");
    CHECK(parse_polynomial(g.to_string(), {1, 2}) == g);

    CHECK(parse_polynomial("x0*x0^2*x1", {1, 1}).coefficient({3, 1}) == 1);
}

TEST_CASE("parse errors") {
    const Weights w{1, 2, 3, 7};
    CHECK_THROWS_AS(parse_polynomial("", w), ParseError);
    CHECK_THROWS_AS(parse_polynomial("x4^2", w), ParseError);
    CHECK_THROWS_AS(parse_polynomial("x0^", w), ParseError);
    CHECK_THROWS_AS(parse_polynomial("x0 ++ x1", w), ParseError);
    CHECK_THROWS_AS(parse_polynomial("1/0*x0", w), ParseError);
    CHECK_THROWS_AS(parse_polynomial("y0", w), ParseError);
    CHECK_THROWS_AS(parse_polynomial("x0", {1, 0}), InvalidInput);
    CHECK_THROWS_AS(parse_polynomial("x0", {}), InvalidInput);
}

TEST_CASE("degree and homogeneity") {
    const Weights w{1, 2, 3, 7};
    CHECK(weighted_degree({0, 4, 2, 0}, w) == 14);
    auto mixed = parse_polynomial("x0^14 + x1", w);
    CHECK_FALSE(mixed.is_homogeneous());
    CHECK_THROWS_AS(mixed.degree(), InvalidInput);
    CHECK_THROWS_AS(require_homogeneous(WPolynomial(w)), InvalidInput);
    CHECK_THROWS_AS(WPolynomial(w).degree(), InvalidInput);
}

TEST_CASE("monomial enumeration against the partition count") {
    CHECK(enumerate_monomials({1, 2, 7, 11}, 22).size() == 36);
    std::mt19937 rng(7);
    for (int trial = 0; trial < 30; ++trial) {
        Weights w;
        for (int i = 0; i < 4; ++i) w.push_back(1 + static_cast<int>(rng() % 9));
        long d = 1 + static_cast<long>(rng() % 40);
        auto ms = enumerate_monomials(w, d);
        CHECK(static_cast<long>(ms.size()) == monomial_count(w, d));
        for (const auto& e : ms) CHECK(weighted_degree(e, w) == d);
        CHECK(std::is_sorted(ms.begin(), ms.end(), MonomialOrder{&w}));
    }
}

TEST_CASE("well-formedness") {
    CHECK(well_formed({1, 2, 3, 7}));
    CHECK(well_formed({1, 2, 7, 11}));
    CHECK_FALSE(well_formed({1, 2, 4, 6}));
    CHECK(well_formed({2, 2, 3, 5}));
    CHECK_FALSE(well_formed({2, 2, 4, 5}));
}

TEST_CASE("symbols") {
    FamilySymbol s = make_symbol(14, {1, 2, 3, 7});
    CHECK(s.to_string() == "X_14(1,2,3,7)");
    CHECK(s.amplitude() == 1);
    CHECK(make_symbol(22, {1, 2, 7, 11}).amplitude() == 1);
    auto strata = singular_strata({1, 2, 3, 7});
    CHECK_FALSE(strata.empty());
    for (const auto& st : strata) CHECK(st.index > 1);
}

TEST_CASE("substitution is a ring homomorphism") {
    std::mt19937 rng(11);
    const Weights w{1, 2, 3, 5};
    for (int trial = 0; trial < 20; ++trial) {
        WPolynomial f = random_homogeneous(w, 6, rng, 40), g = random_homogeneous(w, 6, rng, 40);
        std::vector<std::optional<WPolynomial>> sigma(4);
        for (int i = 0; i < 4; ++i)
            if (rng() % 2) sigma[i] = random_homogeneous(w, w[i], rng);
        WPolynomial sf = f.substitute(sigma), sg = g.substitute(sigma);
        CHECK((f + g).substitute(sigma) == sf + sg);
        CHECK((f * g).substitute(sigma) == sf * sg);
        CHECK((f * Rational(3, 7)).substitute(sigma) == sf * Rational(3, 7));
        CHECK(f.pow(2).substitute(sigma) == sf.pow(2));
    }
    auto f = parse_polynomial("x0^2 + x1", {1, 2});
    std::vector<std::optional<WPolynomial>> bad{parse_polynomial("x1", {1, 2}), std::nullopt};
    CHECK_THROWS_AS(f.substitute(bad), DegreeMismatch);
}

TEST_CASE("Euler identity sum a_i x_i dF/dx_i = d F") {
    std::mt19937 rng(5);
    const std::vector<std::pair<Weights, long>> cases = {
        {{1, 2, 3, 7}, 14}, {{1, 2, 3, 5}, 12}, {{1, 2, 5, 7}, 16}, {{1, 2, 7, 11}, 22}, {{1, 1, 3, 4}, 9}};
    for (const auto& [w, d] : cases) {
        WPolynomial f = random_homogeneous(w, d, rng);
        WPolynomial euler(w);
        for (int i = 0; i < static_cast<int>(w.size()); ++i)
            euler += WPolynomial::variable(w, i) * f.partial(i) * Rational(w[i]);
        CHECK(euler == f * Rational(d));
    }
}

TEST_CASE("permuting variables permutes the polynomial") {
    std::mt19937 rng(3);
    const Weights w{1, 2, 3, 7};
    const std::vector<int> perm{2, 0, 3, 1};
    Weights pw(4);
    for (int i = 0; i < 4; ++i) pw[perm[i]] = w[i];
    for (int trial = 0; trial < 10; ++trial) {
        WPolynomial f = random_homogeneous(w, 14, rng, 50);
        WPolynomial g(pw);
        for (const auto& [e, c] : f.terms()) {
            Exponents pe(4);
            for (int i = 0; i < 4; ++i) pe[perm[i]] = e[i];
            g.add_term(pe, c);
        }
        CHECK(g.size() == f.size());
        if (!f.is_zero()) CHECK(g.degree() == f.degree());
        // Partial derivatives commute with the relabelling.
        for (int i = 0; i < 4; ++i) CHECK(g.partial(perm[i]).size() == f.partial(i).size());
    }
}

TEST_CASE("coefficient extraction") {
    auto f = parse_polynomial("x3^2 + x0*x2^3 + x1^4*x2^2 + x0^20*x1 + x1^11", {1, 2, 7, 11});
    CHECK(f.coefficient_of_power(2, 2).to_string() == "x1^4");
    CHECK(f.max_exponent(1) == 11);
    CHECK(f.coefficient({0, 4, 2, 0}) == 1);
    CHECK(f.coefficient({22, 0, 0, 0}) == 0);
}
