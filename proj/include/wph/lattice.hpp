#pragma once

#include <optional>
#include <string>
#include <vector>

#include "wph/linalg.hpp"

namespace wph {

struct Signature {
    std::size_t positive = 0, negative = 0, zero = 0;
    friend bool operator==(const Signature&, const Signature&) = default;
    std::string to_string() const;  // "(3,19)", with ",0:k" appended when degenerate
};

// Integral symmetric bilinear form given by its Gram matrix.
class Lattice {
public:
    Lattice() = default;
    explicit Lattice(IntMatrix gram);
    static Lattice from_rows(const std::vector<std::vector<long long>>& rows);

    const IntMatrix& gram() const { return gram_; }
    std::size_t rank() const { return gram_.size(); }
    Integer determinant() const;
    bool is_even() const;
    bool is_unimodular() const;
    bool is_nondegenerate() const { return determinant() != 0; }
    Signature signature() const;
    Integer product(const std::vector<Integer>& x, const std::vector<Integer>& y) const;

    Lattice scaled(long factor) const;
    Lattice operator()(long factor) const { return scaled(factor); }  // L(-1)
    Lattice congruent(const IntMatrix& p) const;                       // P^T G P

    friend Lattice operator+(const Lattice& a, const Lattice& b);  // orthogonal direct sum
    friend bool operator==(const Lattice& a, const Lattice& b) { return a.gram_ == b.gram_; }

private:
    IntMatrix gram_;
};

Lattice copies(const Lattice& l, int n);  // n copies of L
Lattice hyperbolic_plane();                 // U
Lattice diagonal_lattice(const std::vector<long long>& entries);
// Positive definite root lattices A_n (n >= 1), D_n (n >= 4), E_n (n = 6, 7, 8).
Lattice root_lattice(char type, int n);
Lattice root_lattice(const std::string& name);  // "A2", "E8", ...

// Lattice spanned by the vanishing cycles of T^1_{p,q,r}: vertices r, r1, r2, then the
// arms u_1..u_{p-1}, s_1..s_{q-1}, t_1..t_{r-1}; every vertex has square -2.
Lattice dynkin_graph_lattice(int p, int q, int r);
std::vector<std::string> dynkin_graph_labels(int p, int q, int r);

// A(L) = L^* / L as a sum of cyclic groups with the induced forms.
struct DiscriminantForm {
    std::vector<Integer> invariants;   // orders of the generators, each > 1, each dividing the next
    RatMatrix bilinear;                // b(g_i, g_j) in [0, 1)
    std::vector<Rational> quadratic;   // q(g_i) in [0, 2); meaningful only when even
    bool even = true;

    Integer order() const;
    DiscriminantForm negated() const;
    using Element = std::vector<long>;
    Rational b(const Element& x, const Element& y) const;
    Rational q(const Element& x) const;
};

DiscriminantForm discriminant_form(const Lattice& l);

// Brute force over generator images; groups above max_order raise CapacityExceeded.
bool disc_form_isomorphic(const DiscriminantForm& a, const DiscriminantForm& b, bool compare_quadratic,
                          long max_order = 10000);

struct GenusFingerprint {
    std::size_t rank = 0;
    Signature signature;
    bool even = false;
    std::vector<Integer> invariant_factors;  // non-trivial elementary divisors of the Gram matrix
};
GenusFingerprint genus_fingerprint(const Lattice& l);

struct GenusComparison {
    bool equal = false;
    std::vector<std::string> differences;
    // Indefinite and even with at most rank - 2 discriminant generators, or indefinite and
    // odd unimodular: the genus has a single class, so equal genus means isometric.
    bool uniqueness_hypothesis = false;
};
GenusComparison genus_equal(const Lattice& a, const Lattice& b);

struct NamedCheck {
    std::string name;
    bool passed = false;
    std::string detail;
};
struct TranscendentalCheck {
    std::vector<NamedCheck> checks;
    bool passed() const;
};
// Whether T can be the orthogonal complement of S inside the K3 lattice 3U + 2E8(-1).
TranscendentalCheck verify_transcendental(const Lattice& s, const Lattice& t);

}  // namespace wph

namespace wph {

// "U + 2E8(-1) + A2", "<2> + <-1,-1>", "[[2,-1],[-1,2]](-1)": orthogonal sums of U, root
// lattices, diagonal lattices and explicit Gram matrices, each with an optional leading count
// and trailing scale. ParseError on malformed input.
Lattice parse_lattice(const std::string& text);

}  // namespace wph
