#pragma once

#include <utility>
#include <vector>

#include "wph/arith.hpp"

namespace wph {

using IntMatrix = std::vector<std::vector<Integer>>;
using RatMatrix = std::vector<std::vector<Rational>>;

IntMatrix int_matrix(const std::vector<std::vector<long long>>& rows);
IntMatrix identity_matrix(std::size_t n);
IntMatrix multiply(const IntMatrix& a, const IntMatrix& b);
IntMatrix transpose(const IntMatrix& a);
RatMatrix to_rational(const IntMatrix& a);

// Fraction-free (Bareiss) elimination on a dense integer matrix.
std::size_t bareiss_rank(IntMatrix m);
Integer bareiss_determinant(IntMatrix m);

// Basis of {x : A x = 0} over Q, one vector per free column, in reduced form.
std::vector<std::vector<Rational>> nullspace(RatMatrix a);

using SparseVec = std::vector<std::pair<int, Integer>>;  // sorted by column, no zeros

// Incremental row echelon form over Z with primitive rows. The pivot of a row is its
// largest column, so after inserting a spanning set the non-pivot columns are exactly the
// columns chosen by a greedy scan in increasing column order that avoids the span.
class SparseEchelon {
public:
    explicit SparseEchelon(int ncols) : pivot_row_(ncols, -1) {}

    bool insert(SparseVec v);  // true when the rank grew
    std::size_t rank() const { return rows_.size(); }
    int ncols() const { return static_cast<int>(pivot_row_.size()); }
    bool is_pivot(int col) const { return pivot_row_.at(col) >= 0; }
    std::vector<int> non_pivot_columns() const;
    // Returns r with r = scale * v - (element of the span) and r free of pivot columns.
    SparseVec reduce(SparseVec v, Rational& scale) const;

private:
    std::vector<int> pivot_row_;
    std::vector<SparseVec> rows_;
};

struct SmithForm {
    IntMatrix d, u, v;  // u * m * v == d, u and v unimodular
    std::vector<Integer> diagonal() const;  // non-negative, each divides the next nonzero one
};
SmithForm smith_normal_form(const IntMatrix& m);

// Z-basis (rows) of {z in Z^rows(A) : z^T A = 0}.
IntMatrix integer_left_kernel(const IntMatrix& a);

}  // namespace wph
