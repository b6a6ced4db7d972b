#include "wph/jacobian.hpp"

#include "wph/quasismooth.hpp"

namespace wph {

JacobianRing::JacobianRing(const WPolynomial& f) : f_(f), degree_(require_homogeneous(f)) {
    for (int i = 0; i < f.nvars(); ++i) partials_.push_back(f.partial(i));
}

SparseVec JacobianRing::to_vector(const WPolynomial& p, const Slice& s) const {
    SparseVec v;
    for (const auto& [e, c] : p.terms()) {
        auto it = s.column.find(e);
        if (it == s.column.end()) throw InvalidInput("term outside the graded piece: " + monomial_string(e));
        if (c.get_den() != 1) throw InvalidInput("to_vector expects integral coefficients");
        v.emplace_back(it->second, c.get_num());
    }
    std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    return v;
}

// Scales p so that all coefficients are coprime integers.
static WPolynomial integral(const WPolynomial& p) {
    Integer den = 1;
    for (const auto& [e, c] : p.terms()) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
    return p * Rational(den);
}

const JacobianRing::Slice& JacobianRing::slice(long k) const {
    auto found = cache_.find(k);
    if (found != cache_.end()) return found->second;
    Slice s;
    s.monomials = enumerate_monomials(f_.weights(), k);
    for (std::size_t i = 0; i < s.monomials.size(); ++i) s.column.emplace(s.monomials[i], static_cast<int>(i));
    s.echelon = std::make_unique<SparseEchelon>(static_cast<int>(s.monomials.size()));
    const Weights& w = f_.weights();
    for (int i = 0; i < f_.nvars(); ++i) {
        const WPolynomial& g = partials_[i];
        if (g.is_zero()) continue;
        long shift = k - (degree_ - w[i]);
        if (shift < 0) continue;
        WPolynomial gi = integral(g);
        for (const Exponents& m : enumerate_monomials(w, shift)) {
            SparseVec v;
            for (const auto& [e, c] : gi.terms()) {
                Exponents sum = e;
                for (std::size_t t = 0; t < sum.size(); ++t) sum[t] += m[t];
                v.emplace_back(s.column.at(sum), c.get_num());
            }
            std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
            s.echelon->insert(std::move(v));
            if (s.echelon->rank() == s.monomials.size()) break;
        }
        if (s.echelon->rank() == s.monomials.size()) break;
    }
    return cache_.emplace(k, std::move(s)).first->second;
}

GradedPiece JacobianRing::piece(long k) const {
    GradedPiece p;
    p.degree = k;
    if (k < 0) return p;
    const Slice& s = slice(k);
    p.monomials = s.monomials;
    p.dim_ring = s.monomials.size();
    p.rank_ideal = s.echelon->rank();
    for (int c : s.echelon->non_pivot_columns()) p.quotient_basis.push_back(s.monomials[c]);
    return p;
}

GradedPiece graded_piece(const WPolynomial& f, long k) { return JacobianRing(f).piece(k); }

MultiplicationKernel multiplication_kernel(const JacobianRing& ring, const WPolynomial& g, long k) {
    const WPolynomial& f = ring.polynomial();
    if (g.weights() != f.weights()) throw InvalidInput("multiplier lives in a different ring");
    long e = require_homogeneous(g);
    MultiplicationKernel out;
    out.source_degree = k;
    out.target_degree = k + e;
    GradedPiece src = ring.piece(k);
    out.source_basis = src.quotient_basis;
    out.source_dim = src.dim_quotient();
    if (k < 0) return out;
    const auto& target = ring.slice(k + e);
    out.target_dim = target.monomials.size() - target.echelon->rank();

    // Normal forms of g*q modulo J, recorded on the non-pivot columns of the target.
    std::vector<int> free_cols = target.echelon->non_pivot_columns();
    std::map<int, std::size_t> free_index;
    for (std::size_t i = 0; i < free_cols.size(); ++i) free_index[free_cols[i]] = i;
    WPolynomial gi = integral(g);
    Rational g_scale = gi.terms().begin()->second / g.terms().begin()->second;
    std::vector<Rational> scales;
    RatMatrix images(free_cols.size(), std::vector<Rational>(src.quotient_basis.size(), 0));
    for (std::size_t j = 0; j < src.quotient_basis.size(); ++j) {
        WPolynomial prod = gi * WPolynomial::monomial(f.weights(), src.quotient_basis[j], Rational(1));
        Rational scale;
        SparseVec r = target.echelon->reduce(ring.to_vector(prod, target), scale);
        scales.push_back(scale * g_scale);
        for (const auto& [c, x] : r) images[free_index.at(c)][j] = Rational(x);
    }
    auto kernel = nullspace(images);
    out.image_rank = src.quotient_basis.size() - kernel.size();
    for (auto& y : kernel) {
        // sum_j y_j r_j = 0 with r_j = s_j * g * q_j mod J.
        for (std::size_t j = 0; j < y.size(); ++j) y[j] *= scales[j];
        Rational lead = 0;
        for (const auto& v : y)
            if (v != 0) {
                lead = v;
                break;
            }
        WPolynomial p(f.weights());
        for (std::size_t j = 0; j < y.size(); ++j) {
            y[j] /= lead;
            p.add_term(src.quotient_basis[j], y[j]);
        }
        out.coordinates.push_back(y);
        out.basis.push_back(p);
    }
    return out;
}

MultiplicationKernel multiplication_kernel(const WPolynomial& f, const WPolynomial& g, long k) {
    JacobianRing ring(f);
    return multiplication_kernel(ring, g, k);
}

MultiplicationKernel torelli_test(const WPolynomial& f) {
    JacobianRing ring(f);
    QuasiSmoothCertificate cert = is_quasismooth(ring, false);
    if (!cert.quasismooth) throw NotQuasiSmooth("torelli test needs a quasi-smooth polynomial");
    return multiplication_kernel(ring, WPolynomial::variable(f.weights(), 0), ring.degree());
}

}  // namespace wph
