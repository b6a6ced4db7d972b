#pragma once

#include <map>
#include <memory>
#include <vector>

#include "wph/linalg.hpp"
#include "wph/polynomial.hpp"

namespace wph {

// Degree-k slice of R = Q[x0..xn] and of the Jacobian ideal J = (dF/dx_i).
struct GradedPiece {
    long degree = 0;
    std::vector<Exponents> monomials;       // basis of R_k in MonomialOrder
    std::size_t dim_ring = 0;               // dim R_k
    std::size_t rank_ideal = 0;             // dim J_k
    std::vector<Exponents> quotient_basis;  // greedy in MonomialOrder; its size is dim (R/J)_k
    std::size_t dim_quotient() const { return quotient_basis.size(); }
};

// Caches echelon forms of J_k so several degrees can be queried cheaply.
class JacobianRing {
public:
    explicit JacobianRing(const WPolynomial& f);

    const WPolynomial& polynomial() const { return f_; }
    long degree() const { return degree_; }
    const std::vector<WPolynomial>& partials() const { return partials_; }

    GradedPiece piece(long k) const;

    struct Slice {
        std::vector<Exponents> monomials;
        std::map<Exponents, int> column;
        std::unique_ptr<SparseEchelon> echelon;
    };
    const Slice& slice(long k) const;
    SparseVec to_vector(const WPolynomial& p, const Slice& s) const;

private:
    WPolynomial f_;
    long degree_;
    std::vector<WPolynomial> partials_;
    mutable std::map<long, Slice> cache_;
};

GradedPiece graded_piece(const WPolynomial& f, long k);

// Kernel of (R/J)_k -> (R/J)_{k + deg g}, multiplication by g.
struct MultiplicationKernel {
    long source_degree = 0, target_degree = 0;
    std::vector<Exponents> source_basis;   // quotient basis of the source
    std::size_t source_dim = 0, target_dim = 0, image_rank = 0;
    std::vector<std::vector<Rational>> coordinates;  // kernel vectors on source_basis
    std::vector<WPolynomial> basis;                  // the same vectors as polynomials
    std::size_t kernel_dim() const { return basis.size(); }
};

MultiplicationKernel multiplication_kernel(const JacobianRing& ring, const WPolynomial& g, long k);
MultiplicationKernel multiplication_kernel(const WPolynomial& f, const WPolynomial& g, long k);

// Multiplication by x0 from degree d. Refuses input that is not quasi-smooth.
MultiplicationKernel torelli_test(const WPolynomial& f);

}  // namespace wph
