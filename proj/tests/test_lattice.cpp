#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "wph/elliptic.hpp"
#include "wph/errors.hpp"
#include "wph/lattice.hpp"

using namespace wph;

namespace {

Lattice k3() { return copies(hyperbolic_plane(), 3) + copies(root_lattice("E8")(-1), 2); }

IntMatrix random_unimodular(std::size_t n, std::mt19937& rng) {
    IntMatrix p = identity_matrix(n);
    for (int step = 0; step < 4 * static_cast<int>(n); ++step) {
        std::size_t i = rng() % n, j = rng() % n;
        if (i == j) {
            for (auto& v : p[i]) v = -v;
            continue;
        }
        long m = static_cast<long>(rng() % 5) - 2;
        for (std::size_t c = 0; c < n; ++c) p[i][c] += m * p[j][c];
    }
    return p;
}

Rational mod(const Rational& q, long m) { return reduce_mod(q, Rational(m)); }

std::vector<Integer> diag(std::initializer_list<long> v) {
    std::vector<Integer> out;
    for (long x : v) out.emplace_back(x);
    return out;
}

}  // namespace

TEST_CASE("constructors and determinants") {
    CHECK(root_lattice("A2").determinant() == 3);
    CHECK(root_lattice("E8").determinant() == 1);
    CHECK(root_lattice("E7").determinant() == 2);
    CHECK(root_lattice("E6").determinant() == 3);
    CHECK(root_lattice("D4").determinant() == 4);
    for (int n = 1; n <= 8; ++n) CHECK(root_lattice('A', n).determinant() == n + 1);
    CHECK_THROWS_AS(root_lattice('D', 3), InvalidInput);
    CHECK_THROWS_AS(root_lattice('E', 9), InvalidInput);
    CHECK_THROWS_AS(root_lattice('A', 0), InvalidInput);

    Lattice u = hyperbolic_plane();
    CHECK(u.signature() == Signature{1, 1, 0});
    CHECK(u.is_even());
    CHECK(u.is_unimodular());
    CHECK(k3().rank() == 22);
    CHECK(k3().signature() == Signature{3, 19, 0});
    CHECK(k3().is_even());
    CHECK(k3().is_unimodular());
    CHECK(diagonal_lattice({1, -1}).signature() == Signature{1, 1, 0});
}

TEST_CASE("Smith normal form") {
    CHECK(smith_normal_form(root_lattice("A2").gram()).diagonal() == diag({1, 3}));
    CHECK(smith_normal_form(hyperbolic_plane().gram()).diagonal() == diag({1, 1}));
    CHECK(smith_normal_form(int_matrix({{0, 1, 0}, {1, -3, 1}, {0, 1, -2}})).diagonal() == diag({1, 1, 2}));

    std::mt19937 rng(37);
    for (int trial = 0; trial < 100; ++trial) {
        std::size_t r = 1 + rng() % 5, c = 1 + rng() % 5;
        IntMatrix m(r, std::vector<Integer>(c));
        for (auto& row : m)
            for (auto& x : row) x = static_cast<long>(rng() % 13) - 6;
        SmithForm s = smith_normal_form(m);
        CHECK(multiply(multiply(s.u, m), s.v) == s.d);
        CHECK(abs(bareiss_determinant(s.u)) == 1);
        CHECK(abs(bareiss_determinant(s.v)) == 1);
        auto d = s.diagonal();
        for (std::size_t i = 0; i + 1 < d.size(); ++i)
            if (d[i + 1] != 0) CHECK(d[i + 1] % d[i] == 0);
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < c; ++j)
                if (i != j) CHECK(s.d[i][j] == 0);
        if (r == c) {
            Integer prod = 1;
            for (const auto& x : d) prod *= x;
            CHECK(prod == abs(bareiss_determinant(m)));
        }
    }
}

TEST_CASE("signature laws") {
    std::mt19937 rng(41);
    for (int trial = 0; trial < 100; ++trial) {
        std::size_t n = 1 + rng() % 6;
        IntMatrix g(n, std::vector<Integer>(n));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i; j < n; ++j) g[i][j] = g[j][i] = static_cast<long>(rng() % 7) - 3;
        Lattice l(g);
        Signature s = l.signature();
        CHECK(s.positive + s.negative + s.zero == n);
        Integer det = l.determinant();
        CHECK((det == 0) == (s.zero > 0));
        if (det != 0) CHECK((det < 0) == (s.negative % 2 == 1));
    }
}

TEST_CASE("discriminant forms") {
    DiscriminantForm a2 = discriminant_form(root_lattice("A2"));
    REQUIRE(a2.invariants == diag({3}));
    // Positive definite A2: q = 2/3. The value -2/3 = 4/3 mod 2 belongs to A2(-1).
    CHECK(a2.quadratic[0] == Rational(2, 3));
    CHECK(discriminant_form(root_lattice("A2")(-1)).quadratic[0] == Rational(4, 3));

    DiscriminantForm two = discriminant_form(diagonal_lattice({2}));
    CHECK(two.invariants == diag({2}));
    CHECK(two.quadratic[0] == Rational(1, 2));
    DiscriminantForm minus_two = discriminant_form(diagonal_lattice({-2}));
    CHECK(minus_two.bilinear[0][0] == Rational(1, 2));

    CHECK(disc_form_isomorphic(a2, a2, true));
    CHECK_FALSE(disc_form_isomorphic(a2, discriminant_form(root_lattice("A2")(-1)), true));
    auto gram_b = discriminant_form(Lattice(int_matrix({{0, 1, 0}, {1, -3, 1}, {0, 1, -2}})));
    auto diag_b = discriminant_form(diagonal_lattice({1, -1, -2}));
    CHECK(disc_form_isomorphic(gram_b, diag_b, false));
    CHECK_THROWS_AS(discriminant_form(Lattice(int_matrix({{1, 1}, {1, 1}}))), InvalidInput);
    CHECK_THROWS_AS(disc_form_isomorphic(discriminant_form(diagonal_lattice({20011})),
                                         discriminant_form(diagonal_lattice({20011})), false),
                    CapacityExceeded);
}

TEST_CASE("discriminant group order and polarization identity") {
    const std::vector<std::string> lattices = {"A2", "A3(-1)", "D5", "E7(-1)", "U + A2(-1)", "<2> + <6>",
                                               "A1 + A1 + A2", "[[2,1],[1,4]]", "D4(-1) + <2>"};
    for (const auto& text : lattices) {
        Lattice l = parse_lattice(text);
        DiscriminantForm f = discriminant_form(l);
        CHECK(f.order() == abs(l.determinant()));
        const std::size_t n = f.invariants.size();
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                DiscriminantForm::Element x(n, 0), y(n, 0), s(n, 0);
                x[i] = 1;
                y[j] = 1;
                s[i] += 1;
                s[j] += 1;
                CHECK(mod(f.b(x, y) - f.b(y, x), 1) == 0);
                if (f.even) CHECK(mod(f.q(s) - f.q(x) - f.q(y) - 2 * f.b(x, y), 2) == 0);
            }
    }
}

TEST_CASE("genus comparison") {
    Lattice pa(int_matrix({{0, 1}, {1, -3}}));
    GenusComparison a = genus_equal(pa, diagonal_lattice({1, -1}));
    CHECK(a.equal);
    CHECK(a.uniqueness_hypothesis);
    Lattice pb(int_matrix({{0, 1, 0}, {1, -3, 1}, {0, 1, -2}}));
    CHECK(genus_equal(pb, diagonal_lattice({1, -1, -2})).equal);
    GenusComparison u = genus_equal(hyperbolic_plane(), diagonal_lattice({1, -1}));
    CHECK_FALSE(u.equal);
    CHECK_FALSE(u.differences.empty());
}

TEST_CASE("genus fingerprint, SNF and parity are congruence invariants") {
    std::mt19937 rng(43);
    const std::vector<std::string> lattices = {"A2", "E8(-1)", "U + A2(-1)", "<1> + <-1> + <-2>",
                                               "[[0,1,0],[1,-3,1],[0,1,-2]]", "<2> + U + E7(-1)", "D6 + <-3>"};
    for (const auto& text : lattices) {
        Lattice l = parse_lattice(text);
        GenusFingerprint base = genus_fingerprint(l);
        auto snf = smith_normal_form(l.gram()).diagonal();
        for (int trial = 0; trial < 20; ++trial) {
            Lattice m = l.congruent(random_unimodular(l.rank(), rng));
            GenusFingerprint fp = genus_fingerprint(m);
            CHECK(fp.rank == base.rank);
            CHECK(fp.signature == base.signature);
            CHECK(fp.even == base.even);
            CHECK(m.is_even() == l.is_even());
            CHECK(fp.invariant_factors == base.invariant_factors);
            CHECK(smith_normal_form(m.gram()).diagonal() == snf);
            CHECK(genus_equal(l, m).equal);
        }
    }
}

TEST_CASE("transcendental lattice candidates") {
    auto run = [](const std::string& s, const std::string& t) {
        return verify_transcendental(parse_lattice(s), parse_lattice(t));
    };
    CHECK(run("<1> + <-1>", "2U + 2E8(-1)").passed());
    CHECK(run("<1> + <-1> + <-2>", "<2> + U + 2E8(-1)").passed());
    CHECK(run("U + A2(-1)", "A2 + 2E8(-1)").passed());
    CHECK(run("U", "2U + 2E8(-1)").passed());
    TranscendentalCheck statement = run("U + A2(-1)", "2U + E8(-1) + A2(-1)");
    CHECK_FALSE(statement.passed());
    REQUIRE_FALSE(statement.checks.empty());
    CHECK(statement.checks[0].name == "rank");
    CHECK_FALSE(statement.checks[0].passed);
    for (char c : {'a', 'b', 'c', 'd'}) CHECK(verify_transcendental(picard_from_configuration(c), transcendental_lattice(c)).passed());
}

TEST_CASE("Picard lattices from the fibrations") {
    CHECK(picard_from_configuration('a') == Lattice(int_matrix({{0, 1}, {1, -3}})));
    CHECK(picard_from_configuration('b') == Lattice(int_matrix({{0, 1, 0}, {1, -3, 1}, {0, 1, -2}})));
    CHECK(genus_equal(picard_from_configuration('c'), parse_lattice("U + A2(-1)")).equal);
    CHECK(picard_from_configuration('d') == hyperbolic_plane());
    CHECK(genus_equal(picard_from_configuration('a'), diagonal_lattice({1, -1})).equal);
}

TEST_CASE("graph lattices") {
    for (int r : {7, 8, 9}) {
        Lattice l = dynkin_graph_lattice(2, 3, r);
        CHECK(l.rank() == static_cast<std::size_t>(r + 5));
        CHECK(l.is_nondegenerate());
        CHECK(dynkin_graph_labels(2, 3, r).size() == l.rank());
        for (std::size_t i = 0; i < l.rank(); ++i) CHECK(l.gram()[i][i] == -2);
    }
    CHECK_THROWS_AS(dynkin_graph_lattice(1, 3, 7), InvalidInput);
}

TEST_CASE("Kodaira fibers") {
    FiberData i3 = kodaira_fiber(parse_fiber("I3"));
    CHECK(i3.euler == 3);
    REQUIRE(i3.lattice);
    CHECK(*i3.lattice == root_lattice("A2")(-1));
    FiberData ii = kodaira_fiber(parse_fiber("II"));
    CHECK(ii.euler == 2);
    CHECK_FALSE(ii.lattice);
    FiberData e8 = kodaira_fiber(parse_fiber("II*"));
    CHECK(e8.euler == 10);
    REQUIRE(e8.lattice);
    CHECK(*e8.lattice == root_lattice("E8")(-1));
    CHECK(kodaira_fiber(parse_fiber("III")).euler == 3);
    CHECK(kodaira_fiber(parse_fiber("IV")).euler == 4);
    CHECK(kodaira_fiber(parse_fiber("I*2")).euler == 8);
    CHECK(kodaira_fiber(parse_fiber("III*")).euler == 9);
    CHECK(kodaira_fiber(parse_fiber("IV*")).euler == 8);
    CHECK(kodaira_fiber(parse_fiber("I1")).euler == 1);
    CHECK(kodaira_fiber(parse_fiber("I0")).euler == 0);
    CHECK(parse_fiber("2I0").multiplicity == 2);
    CHECK_THROWS_AS(parse_fiber("2II"), InvalidInput);
    CHECK_THROWS_AS(parse_fiber("V"), InvalidInput);

    CHECK(fiber_config_euler(parse_fiber_configuration("2I0 + 24xI1")) == 24);
    CHECK(fiber_config_euler(parse_fiber_configuration("2I0 + I2 + 22xI1")) == 24);
    CHECK(fiber_config_euler(parse_fiber_configuration("I3+II+19*I1")) == 24);
    CHECK(fiber_config_euler(parse_fiber_configuration("24xI1")) == 24);
    CHECK(fiber_config_euler({}) == 0);
}

TEST_CASE("Kodaira dimension of elliptic surfaces") {
    KodairaDimension one = kodaira_dimension(2, 0, {2});
    CHECK(one.delta == Rational(1, 2));
    CHECK_FALSE(one.minus_infinity);
    CHECK(one.kappa == 1);
    KodairaDimension zero = kodaira_dimension(2, 0, {});
    CHECK(zero.delta == 0);
    CHECK(zero.kappa == 0);
    KodairaDimension neg = kodaira_dimension(1, 0, {});
    CHECK(neg.delta == -1);
    CHECK(neg.minus_infinity);
    CHECK_THROWS_AS(kodaira_dimension(2, 0, {1}), InvalidInput);
}

TEST_CASE("lattice expressions") {
    CHECK(parse_lattice("U") == hyperbolic_plane());
    CHECK(parse_lattice("2E8(-1)") == copies(root_lattice("E8")(-1), 2));
    CHECK(parse_lattice("3U + 2E8(-1)") == k3());
    CHECK(parse_lattice("<1,-1>") == diagonal_lattice({1, -1}));
    CHECK(parse_lattice("[[2,-1],[-1,2]](-1)") == root_lattice("A2")(-1));
    CHECK(parse_lattice("2*A1") == copies(root_lattice("A1"), 2));
    CHECK_THROWS_AS(parse_lattice(""), ParseError);
    CHECK_THROWS_AS(parse_lattice("Q7"), ParseError);
    CHECK_THROWS_AS(parse_lattice("[[1,2],[3,4]]"), InvalidInput);
    CHECK_THROWS_AS(parse_lattice("U +"), ParseError);
}
