#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "support/helpers.hpp"
#include "wph/jacobian.hpp"
#include "wph/linalg.hpp"

using namespace wph;

namespace {
const Weights kA{1, 2, 3, 7}, kB{1, 2, 3, 5}, kC{1, 2, 5, 7}, kD{1, 2, 7, 11};
WPolynomial fa() { return parse_polynomial("x0^14 + x1^7 + x1*x2^4 + x3^2", kA); }
WPolynomial fb() { return parse_polynomial("x0^12 + x1^6 + x2^4 + x1*x3^2", kB); }
WPolynomial fc() { return parse_polynomial("x0^16 + x1^8 + x0*x2^3 + x1*x3^2", kC); }
WPolynomial gc() { return parse_polynomial("x0^16 + x1^8 + x0*x2^3 + x1*x3^2 + x1^3*x2^2", kC); }
WPolynomial fd() { return parse_polynomial("x0^22 + x1^11 + x0*x2^3 + x3^2", kD); }
WPolynomial gd() { return parse_polynomial("x3^2 + x0*x2^3 + x1^4*x2^2 + x0^20*x1 + x1^11", kD); }
WPolynomial x0(const Weights& w) { return WPolynomial::variable(w, 0); }

std::vector<std::string> strings(const std::vector<WPolynomial>& ps) {
    std::vector<std::string> out;
    for (const auto& p : ps) out.push_back(p.to_string());
    return out;
}
}  // namespace

TEST_CASE("partial derivatives") {
    CHECK(fa().partial(1).to_string() == "7*x1^6 + x2^4");
    CHECK(fd().partial(2).to_string() == "3*x0*x2^2");
    CHECK(parse_polynomial("x3^2", kA).partial(3).to_string() == "2*x3");
}

TEST_CASE("graded pieces of the generic (d) member") {
    GradedPiece p = graded_piece(gd(), 22);
    CHECK(p.dim_ring == 36);
    CHECK(p.rank_ideal == 18);
    CHECK(p.dim_quotient() == 18);
    GradedPiece q = graded_piece(gd(), 23);
    CHECK(q.rank_ideal == 21);
    CHECK(q.dim_quotient() == 18);
    CHECK(graded_piece(fa(), 31).dim_quotient() == 0);
}

// The table prints x0^2*x2^4 = x0^2*x1^6 modulo J; the greedy scan keeps the second form.
TEST_CASE("quotient basis of F_(a) at degree 14 is the printed table") {
    GradedPiece p = graded_piece(fa(), 14);
    std::vector<Exponents> printed = {{12, 1, 0, 0}, {11, 0, 1, 0}, {10, 2, 0, 0}, {9, 1, 1, 0}, {8, 3, 0, 0},
                                      {8, 0, 2, 0},  {7, 2, 1, 0},  {6, 4, 0, 0},  {6, 1, 2, 0}, {5, 3, 1, 0},
                                      {5, 0, 3, 0},  {4, 2, 2, 0},  {4, 5, 0, 0},  {3, 4, 1, 0}, {2, 3, 2, 0},
                                      {2, 6, 0, 0},  {1, 5, 1, 0},  {0, 4, 2, 0}};
    std::sort(printed.begin(), printed.end());
    std::vector<Exponents> greedy = p.quotient_basis;
    std::sort(greedy.begin(), greedy.end());
    CHECK(greedy == printed);
}

TEST_CASE("Torelli kernels") {
    MultiplicationKernel a = torelli_test(fa());
    CHECK(strings(a.basis) == std::vector<std::string>{"x0^12*x1"});
    MultiplicationKernel b = torelli_test(fb());
    CHECK(strings(b.basis) == std::vector<std::string>{"x0^10*x1"});
    CHECK(strings(torelli_test(fc()).basis) == std::vector<std::string>{"x1^3*x2^2"});
    CHECK(strings(torelli_test(fd()).basis) == std::vector<std::string>{"x1^4*x2^2"});
    CHECK(torelli_test(gc()).kernel_dim() == 0);
    CHECK(torelli_test(gd()).kernel_dim() == 0);
    CHECK(multiplication_kernel(gd(), x0(kD), 22).kernel_dim() == 0);
    CHECK(graded_piece(gc(), 16).dim_quotient() == 16);

    auto singular = parse_polynomial("x0^14 + x1^7 + x3^2", kA);
    CHECK_THROWS_AS(torelli_test(singular), NotQuasiSmooth);
}

TEST_CASE("rank-nullity and invariance of kernels") {
    std::mt19937 rng(23);
    const std::vector<WPolynomial> fs = {fa(), fb(), fc(), gc(), fd(), gd()};
    for (const auto& f : fs) {
        const long d = f.degree();
        MultiplicationKernel k = multiplication_kernel(f, x0(f.weights()), d);
        CHECK(k.source_dim == k.image_rank + k.kernel_dim());
        CHECK(k.coordinates.size() == k.kernel_dim());
        for (int trial = 0; trial < 3; ++trial) {
            std::vector<std::optional<WPolynomial>> torus(4);
            for (int i = 0; i < 4; ++i) {
                Rational c(static_cast<long>(rng() % 7) + 1, static_cast<long>(rng() % 5) + 1);
                c.canonicalize();
                if (rng() % 2) c = -c;
                torus[i] = WPolynomial::variable(f.weights(), i) * c;
            }
            WPolynomial g = f.substitute(torus) * Rational(-5, 3);
            CHECK(multiplication_kernel(g, x0(f.weights()), d).kernel_dim() == k.kernel_dim());
        }
    }
}

TEST_CASE("sparse echelon rank agrees with Bareiss") {
    std::mt19937 rng(29);
    for (int trial = 0; trial < 200; ++trial) {
        int rows = 1 + static_cast<int>(rng() % 8), cols = 1 + static_cast<int>(rng() % 8);
        IntMatrix m(rows, std::vector<Integer>(cols, 0));
        SparseEchelon e(cols);
        for (auto& row : m) {
            SparseVec v;
            for (int c = 0; c < cols; ++c) {
                if (rng() % 3 == 0) continue;
                row[c] = static_cast<long>(rng() % 7) - 3;
                if (row[c] != 0) v.emplace_back(c, row[c]);
            }
            e.insert(v);
        }
        // Low-rank rows stress the dependency path.
        if (rows > 2) {
            SparseVec v;
            for (int c = 0; c < cols; ++c) {
                Integer s = m[0][c] * 2 - m[1][c] * 3;
                if (s != 0) v.emplace_back(c, s);
            }
            e.insert(v);
        }
        CHECK(e.rank() == bareiss_rank(m));
        CHECK(e.rank() + e.non_pivot_columns().size() == static_cast<std::size_t>(cols));
    }
}

TEST_CASE("Bareiss determinant") {
    CHECK(bareiss_determinant(int_matrix({{2, -1}, {-1, 2}})) == 3);
    CHECK(bareiss_determinant(int_matrix({{0, 1}, {1, 0}})) == -1);
    CHECK(bareiss_determinant(int_matrix({{1, 2}, {2, 4}})) == 0);
    CHECK(bareiss_rank(int_matrix({{1, 2}, {2, 4}})) == 1);
}

TEST_CASE("nullspace vectors are annihilated") {
    std::mt19937 rng(31);
    for (int trial = 0; trial < 50; ++trial) {
        int rows = 1 + static_cast<int>(rng() % 5), cols = 1 + static_cast<int>(rng() % 6);
        RatMatrix a(rows, std::vector<Rational>(cols));
        for (auto& row : a)
            for (auto& x : row) x = Rational(static_cast<long>(rng() % 5) - 2);
        auto ns = nullspace(a);
        IntMatrix ai(rows, std::vector<Integer>(cols));
        for (int r = 0; r < rows; ++r)
            for (int c = 0; c < cols; ++c) ai[r][c] = a[r][c].get_num();
        CHECK(ns.size() + bareiss_rank(ai) == static_cast<std::size_t>(cols));
        for (const auto& v : ns)
            for (const auto& row : a) {
                Rational s = 0;
                for (int c = 0; c < cols; ++c) s += row[c] * v[c];
                CHECK(s == 0);
            }
    }
}
