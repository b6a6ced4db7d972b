#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>

#include "wph/quasismooth.hpp"

using namespace wph;

namespace {
std::set<std::string> symbols(const std::vector<ClassifiedFamily>& fs) {
    std::set<std::string> out;
    for (const auto& f : fs) out.insert(f.symbol.to_string());
    return out;
}
const std::set<std::string> kFour = {"X_12(1,2,3,5)", "X_14(1,2,3,7)", "X_16(1,2,5,7)", "X_22(1,2,7,11)"};
}  // namespace

TEST_CASE("amplitude") {
    CHECK(make_symbol(14, {1, 2, 3, 7}).amplitude() == 1);
    CHECK(make_symbol(66, {1, 6, 22, 33}).amplitude() == 4);
    CHECK(make_symbol(4, {1, 1, 1, 1}).amplitude() == 0);
}

TEST_CASE("singular strata of the ambient spaces") {
    auto names = [](const Weights& w) {
        std::vector<std::pair<std::string, int>> out;
        for (const auto& s : singular_strata(w)) out.emplace_back(s.name(), s.index);
        return out;
    };
    using V = std::vector<std::pair<std::string, int>>;
    CHECK(names({1, 2, 3, 7}) == V{{"P1", 2}, {"P2", 3}, {"P3", 7}});
    CHECK(names({1, 2, 7, 11}) == V{{"P1", 2}, {"P2", 7}, {"P3", 11}});
    CHECK(names({1, 1, 1, 1}).empty());
}

TEST_CASE("divisibility lemma") {
    LemmaResult b = lemma_lat_check(make_symbol(12, {1, 2, 3, 5}));
    CHECK(b.holds);
    REQUIRE(b.witness.size() == 1);
    CHECK(b.witness[0].beta == 5);
    CHECK(b.witness[0].r == 2);
    CHECK(b.witness[0].gamma == 2);

    LemmaResult a = lemma_lat_check(make_symbol(14, {1, 2, 3, 7}));
    CHECK(a.holds);
    REQUIRE(a.witness.size() == 1);
    CHECK(a.witness[0].beta == 3);
    CHECK(a.witness[0].r == 4);
    CHECK(a.witness[0].gamma == 2);

    LemmaResult bad = lemma_lat_check(make_symbol(18, {1, 2, 5, 9}));
    CHECK_FALSE(bad.holds);
    REQUIRE(bad.failing_beta);
    CHECK(*bad.failing_beta == 5);
}

TEST_CASE("basic polynomials from the cycle decomposition") {
    auto basic = [](long d, Weights w) { return basic_polynomial(make_symbol(d, std::move(w))).to_string(); };
    CHECK(basic(14, {1, 2, 3, 7}) == "x0^14 + x1^7 + x1*x2^4 + x3^2");
    CHECK(basic(12, {1, 2, 3, 5}) == "x0^12 + x1^6 + x1*x3^2 + x2^4");
    CHECK(basic(22, {1, 2, 7, 11}) == "x0^22 + x0*x2^3 + x1^11 + x3^2");
    CHECK(basic(16, {1, 2, 5, 7}) == "x0^16 + x0*x2^3 + x1^8 + x1*x3^2");
}

TEST_CASE("quasi-smoothness certificates") {
    auto fa = parse_polynomial("x0^14 + x1^7 + x1*x2^4 + x3^2", {1, 2, 3, 7});
    QuasiSmoothCertificate c = is_quasismooth(fa);
    CHECK(c.quasismooth);
    REQUIRE(c.total_dimension);
    CHECK(*c.total_dimension == 286);
    CHECK(c.expected_total == 286);

    auto gd = parse_polynomial("x3^2 + x0*x2^3 + x1^4*x2^2 + x0^20*x1 + x1^11", {1, 2, 7, 11});
    CHECK(is_quasismooth(gd).quasismooth);

    auto missing = parse_polynomial("x0^14 + x1^7 + x3^2", {1, 2, 3, 7});
    QuasiSmoothCertificate m = is_quasismooth(missing);
    CHECK_FALSE(m.quasismooth);
    CHECK(m.failing_degree.has_value());

    CHECK_THROWS_AS(is_quasismooth(WPolynomial(Weights{1, 2, 3, 7})), InvalidInput);
}

TEST_CASE("every certified family has total dimension prod (d - a_i)/a_i") {
    for (const auto& f : enumerate_amplitude_one(11)) {
        QuasiSmoothCertificate c = is_quasismooth(f.basic, true);
        REQUIRE(c.total_dimension);
        CHECK(Rational(*c.total_dimension) == c.expected_total);
    }
}

TEST_CASE("classification of amplitude-one families") {
    CHECK(symbols(enumerate_amplitude_one(11)) == kFour);
    CHECK(symbols(enumerate_amplitude_one(101)) == kFour);
    CHECK(symbols(enumerate_amplitude_one(5)) == std::set<std::string>{"X_12(1,2,3,5)"});
}

TEST_CASE("Fletcher readings agree on the four families") {
    for (const auto& f : enumerate_amplitude_one(11)) {
        FletcherReport r = fletcher_condition(f.symbol);
        CHECK(r.within_reading);
    }
}
