#include "wph/resolution.hpp"

#include <numeric>

#include "wph/family.hpp"
#include "wph/hodge.hpp"
#include "wph/linalg.hpp"
#include "wph/quasismooth.hpp"

namespace wph {

long CyclicQuotient::q_reversed() const { return h == 1 ? 1 : mod_inverse(q, h); }
long CyclicQuotient::q_canonical() const { return std::min(q, q_reversed()); }
std::vector<int> CyclicQuotient::chain() const { return hj_chain(h, q); }
std::string CyclicQuotient::to_string() const {
    return "1/" + std::to_string(h) + "(1," + std::to_string(q) + ")";
}

std::vector<SingularPoint> detect_singularities(const WPolynomial& f) {
    const long d = require_homogeneous(f);
    const Weights& w = f.weights();
    if (w.size() != 4) throw Unsupported("singularity detection is implemented for surfaces in P^3 only");
    for (const SingularStratum& s : singular_strata(w))
        if (s.coords.size() > 1) throw Unsupported("ambient stratum " + s.name() + " is not isolated");
    std::vector<SingularPoint> out;
    for (int i = 0; i < 4; ++i) {
        const long h = w[i];
        if (h == 1) continue;
        if (d % h == 0) {
            Exponents pure(4, 0);
            pure[i] = static_cast<int>(d / h);
            if (f.coefficient(pure) != 0) continue;  // P_i is not on X
        }
        int elim = -1;
        for (int j = 0; j < 4 && elim < 0; ++j) {
            if (j == i || (d - w[j]) % h != 0) continue;
            Exponents e(4, 0);
            e[i] = static_cast<int>((d - w[j]) / h);
            e[j] = 1;
            if (f.coefficient(e) != 0) elim = j;
        }
        if (elim < 0) throw NotQuasiSmooth("X is not quasi-smooth at P" + std::to_string(i));
        SingularPoint pt;
        pt.coordinate = i;
        pt.eliminated = elim;
        std::vector<int> rest;
        for (int j = 0; j < 4; ++j)
            if (j != i && j != elim) rest.push_back(j);
        pt.local_first = rest[0];
        pt.local_second = rest[1];
        CyclicQuotient& t = pt.type;
        t.h = h;
        t.p_raw = w[rest[0]] % h;
        t.q_raw = w[rest[1]] % h;
        if (std::gcd(t.p_raw, h) != 1 || std::gcd(t.q_raw, h) != 1)
            throw Unsupported("non-isolated quotient singularity at P" + std::to_string(i));
        t.q = (t.q_raw * mod_inverse(t.p_raw, h)) % h;
        out.push_back(pt);
    }
    return out;
}

std::vector<int> hj_chain(long h, long q) {
    if (h < 2 || q < 1 || q >= h) throw InvalidInput("need 0 < q < h");
    if (std::gcd(h, q) != 1) throw InvalidInput("hj_chain needs gcd(h, q) = 1");
    std::vector<int> out;
    while (q > 0) {
        long c = (h + q - 1) / q;
        out.push_back(static_cast<int>(c));
        long next = c * q - h;
        h = q;
        q = next;
    }
    return out;
}

std::pair<long, long> hj_fraction(const std::vector<int>& chain) {
    if (chain.empty()) throw InvalidInput("empty chain");
    // Evaluate from the tail: num/den = c - den'/num'.
    long num = chain.back(), den = 1;
    for (auto it = chain.rbegin() + 1; it != chain.rend(); ++it) {
        long n2 = static_cast<long>(*it) * num - den;
        den = num;
        num = n2;
    }
    return {num, den};
}

Discrepancy discrepancy(const std::vector<int>& chain) {
    const std::size_t k = chain.size();
    if (k == 0) throw InvalidInput("empty chain");
    for (int c : chain)
        if (c < 2) throw InvalidInput("chain entries must be at least 2");
    // Solve sum_j d_j E_i.E_j = c_i - 2 (tridiagonal, negative definite).
    RatMatrix a(k, std::vector<Rational>(k + 1, 0));
    for (std::size_t i = 0; i < k; ++i) {
        a[i][i] = -chain[i];
        if (i > 0) a[i][i - 1] = 1;
        if (i + 1 < k) a[i][i + 1] = 1;
        a[i][k] = chain[i] - 2;
    }
    for (std::size_t i = 0; i < k; ++i) {  // forward elimination; pivots never vanish
        for (std::size_t r = i + 1; r < k; ++r) {
            if (a[r][i] == 0) continue;
            Rational f = a[r][i] / a[i][i];
            for (std::size_t c = i; c <= k; ++c) a[r][c] -= f * a[i][c];
        }
    }
    Discrepancy out;
    out.coefficients.assign(k, 0);
    for (std::size_t i = k; i-- > 0;) {
        Rational s = a[i][k];
        for (std::size_t c = i + 1; c < k; ++c) s -= a[i][c] * out.coefficients[c];
        out.coefficients[i] = s / a[i][i];
    }
    out.self_intersection = 0;
    for (std::size_t i = 0; i < k; ++i) out.self_intersection += out.coefficients[i] * (chain[i] - 2);
    out.self_intersection.canonicalize();
    return out;
}

InvariantReport invariant_report(const WPolynomial& f) {
    InvariantReport rep;
    rep.degree = require_homogeneous(f);
    rep.weights = f.weights();
    if (rep.weights.size() != 4) throw Unsupported("invariant report is implemented for surfaces only");
    if (!is_quasismooth(f, false).quasismooth) throw NotQuasiSmooth("invariant report needs a quasi-smooth surface");
    FamilySymbol sym = make_symbol(rep.degree, rep.weights);
    rep.amplitude = sym.amplitude();
    rep.hodge = hodge_numbers(sym);
    rep.b2 = 2 * rep.hodge[0] + rep.hodge[1] + 1;
    rep.euler_singular = 2 + rep.b2;
    Rational prod = 1;
    for (int a : rep.weights) prod *= a;
    rep.hyperplane_square = Rational(rep.degree) / prod;
    rep.hyperplane_square.canonicalize();
    rep.canonical_square_singular = Rational(rep.amplitude * rep.amplitude) * rep.hyperplane_square;
    rep.canonical_square = rep.canonical_square_singular;
    rep.euler_resolved = rep.euler_singular;
    for (const SingularPoint& p : detect_singularities(f)) {
        ResolvedPoint r{p, p.type.chain(), {}};
        r.discrepancy = discrepancy(r.chain);
        rep.canonical_square += r.discrepancy.self_intersection;
        rep.euler_resolved += static_cast<long>(r.chain.size());  // -1 point, +(len + 1)
        rep.points.push_back(std::move(r));
    }
    rep.canonical_square.canonicalize();
    rep.chi = 1 + rep.hodge[0];
    Rational lhs = rep.canonical_square + Rational(rep.euler_resolved);
    if (lhs != Rational(12 * rep.chi))
        throw InvariantViolation("Noether's formula fails: K^2 + e = " + to_string(lhs) + " but 12 chi = " +
                                 to_string(Integer(12 * rep.chi)));
    return rep;
}

}  // namespace wph
