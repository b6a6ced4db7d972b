#include "wph/quasismooth.hpp"

#include <algorithm>
#include <numeric>

namespace wph {

namespace {

struct Candidate {
    long r;
    int gamma_index;
};

bool assign(const std::vector<int>& beta_idx, const std::vector<std::vector<Candidate>>& cands, std::size_t pos,
            std::vector<bool>& used, std::vector<Candidate>& chosen) {
    if (pos == beta_idx.size()) return true;
    for (const Candidate& c : cands[pos]) {
        if (used[c.gamma_index]) continue;
        used[c.gamma_index] = true;
        chosen[pos] = c;
        if (assign(beta_idx, cands, pos + 1, used, chosen)) return true;
        used[c.gamma_index] = false;
    }
    return false;
}

}  // namespace

LemmaResult lemma_lat_check(const FamilySymbol& sym) {
    const Weights& w = sym.weights;
    validate_weights(w);
    const long d = sym.degree;
    if (d <= *std::max_element(w.begin(), w.end()))
        throw InvalidInput("lemma needs the degree to exceed every weight");
    LemmaResult res;
    std::vector<int> beta_idx;
    std::vector<std::vector<Candidate>> cands;
    for (int i = 0; i < static_cast<int>(w.size()); ++i) {
        if (d % w[i] == 0) continue;
        beta_idx.push_back(i);
        std::vector<Candidate> c;
        // Largest r first: the euclidean remainder is preferred.
        for (long r = (d - 1) / w[i]; r >= 1; --r)
            for (int j = 0; j < static_cast<int>(w.size()); ++j)
                if (d - r * w[i] == w[j]) c.push_back({r, j});
        if (c.empty() && !res.failing_beta) res.failing_beta = w[i];
        cands.push_back(std::move(c));
    }
    if (res.failing_beta) {
        res.reason = "no r >= 1 with d - r*" + std::to_string(*res.failing_beta) + " a weight";
        return res;
    }
    std::vector<bool> used(w.size(), false);
    std::vector<Candidate> chosen(beta_idx.size());
    if (!assign(beta_idx, cands, 0, used, chosen)) {
        res.reason = "remainders cannot be chosen pairwise distinct";
        return res;
    }
    res.holds = true;
    for (std::size_t k = 0; k < beta_idx.size(); ++k)
        res.witness.push_back({beta_idx[k], w[beta_idx[k]], chosen[k].r, chosen[k].gamma_index,
                               w[chosen[k].gamma_index]});
    return res;
}

std::vector<Cycle> cycle_decomposition(const FamilySymbol& sym) {
    LemmaResult lemma = lemma_lat_check(sym);
    if (!lemma.holds) throw Unsupported(sym.to_string() + " fails the lemma: " + lemma.reason);
    const Weights& w = sym.weights;
    const int n = static_cast<int>(w.size());
    std::vector<const LemmaStep*> step(n, nullptr);
    std::vector<bool> is_target(n, false);
    for (const LemmaStep& s : lemma.witness) {
        step[s.beta_index] = &s;
        is_target[s.gamma_index] = true;
    }
    std::vector<bool> placed(n, false);
    std::vector<Cycle> cycles;
    for (int start = 0; start < n; ++start) {
        if (!step[start] || is_target[start]) continue;
        Cycle c;
        int cur = start;
        while (step[cur]) {
            if (placed[cur]) throw Unsupported("division process loops inside the non-dividing weights");
            placed[cur] = true;
            c.indices.push_back(cur);
            c.exponents.push_back(step[cur]->r);
            cur = step[cur]->gamma_index;
        }
        placed[cur] = true;
        c.indices.push_back(cur);
        c.exponents.push_back(sym.degree / w[cur]);
        cycles.push_back(std::move(c));
    }
    for (int i = 0; i < n; ++i) {
        if (placed[i]) continue;
        if (step[i]) throw Unsupported("division process never reaches a dividing weight");
        cycles.push_back({{i}, {sym.degree / w[i]}});
        placed[i] = true;
    }
    return cycles;
}

WPolynomial basic_polynomial(const FamilySymbol& sym, const std::vector<Cycle>& cycles) {
    const Weights& w = sym.weights;
    WPolynomial f(w);
    for (const Cycle& c : cycles) {
        for (std::size_t j = 0; j + 1 < c.indices.size(); ++j) {
            Exponents e(w.size(), 0);
            e[c.indices[j]] = static_cast<int>(c.exponents[j]);
            e[c.indices[j + 1]] += 1;
            f.add_term(e, Rational(1));
        }
        Exponents e(w.size(), 0);
        e[c.indices.back()] = static_cast<int>(c.exponents.back());
        f.add_term(e, Rational(1));
    }
    if (f.degree() != sym.degree) throw InvariantViolation("basic polynomial has the wrong degree");
    return f;
}

WPolynomial basic_polynomial(const FamilySymbol& sym) { return basic_polynomial(sym, cycle_decomposition(sym)); }

QuasiSmoothCertificate is_quasismooth(const JacobianRing& ring, bool compute_total) {
    const WPolynomial& f = ring.polynomial();
    const Weights& w = f.weights();
    const long d = ring.degree();
    QuasiSmoothCertificate cert;
    long top = 0;
    for (int a : w) top += d - 2L * a;
    cert.top_degree = top;
    cert.expected_total = 1;
    for (int a : w) cert.expected_total *= Rational(d - a, a);
    cert.expected_total.canonicalize();
    const long max_a = *std::max_element(w.begin(), w.end());
    cert.window_begin = std::max(top + 1, 0L);
    cert.window_end = cert.window_begin + max_a - 1;
    cert.quasismooth = true;
    for (long k = cert.window_begin; k <= cert.window_end; ++k) {
        std::size_t dim = ring.piece(k).dim_quotient();
        cert.window_dims.emplace_back(k, dim);
        if (dim != 0 && cert.quasismooth) {
            cert.quasismooth = false;
            cert.failing_degree = k;
        }
    }
    if (cert.quasismooth && compute_total) {
        Integer total = 0;
        for (long k = 0; k <= top; ++k) total += static_cast<unsigned long>(ring.piece(k).dim_quotient());
        cert.total_dimension = total;
    }
    return cert;
}

QuasiSmoothCertificate is_quasismooth(const WPolynomial& f, bool compute_total) {
    JacobianRing ring(f);
    return is_quasismooth(ring, compute_total);
}

std::vector<ClassifiedFamily> enumerate_amplitude_one(long max_b) {
    if (max_b < 3) throw InvalidInput("max_b must be at least 3");
    std::vector<ClassifiedFamily> out;
    for (long b = 3; b <= max_b; b += 2)
        for (long a = 3; a <= b; a += 2) {
            if (std::gcd(a, b) != 1) continue;
            FamilySymbol sym = make_symbol(a + b + 4, {1, 2, static_cast<int>(a), static_cast<int>(b)});
            LemmaResult lemma = lemma_lat_check(sym);
            if (!lemma.holds) continue;
            ClassifiedFamily fam{sym, lemma, cycle_decomposition(sym), WPolynomial(sym.weights), {}};
            fam.basic = basic_polynomial(sym, fam.cycles);
            fam.certificate = is_quasismooth(fam.basic, false);
            if (fam.certificate.quasismooth) out.push_back(std::move(fam));
        }
    std::sort(out.begin(), out.end(), [](const ClassifiedFamily& x, const ClassifiedFamily& y) {
        return x.symbol.degree < y.symbol.degree;
    });
    return out;
}

FletcherReport fletcher_condition(const FamilySymbol& sym) {
    const Weights& w = sym.weights;
    const int n = static_cast<int>(w.size());
    if (n > 12) throw CapacityExceeded("too many variables for the subset criterion");
    const long d = sym.degree;
    // Degree-k monomial supported in mask; require_all forces every variable of mask to appear.
    auto exists = [&](unsigned mask, long k, bool require_all) {
        if (k < 0) return false;
        std::vector<int> vars;
        for (int i = 0; i < n; ++i)
            if (mask & (1U << i)) vars.push_back(i);
        long base = 0;
        if (require_all)
            for (int i : vars) base += w[i];
        long rem = k - base;
        if (rem < 0) return false;
        std::vector<bool> reach(rem + 1, false);
        reach[0] = true;
        for (int i : vars)
            for (long t = w[i]; t <= rem; ++t)
                if (reach[t - w[i]]) reach[t] = true;
        return static_cast<bool>(reach[rem]);
    };
    auto holds = [&](unsigned mask, bool require_all) {
        if (exists(mask, d, require_all)) return true;
        int size = __builtin_popcount(mask), extra = 0;
        for (int e = 0; e < n; ++e)
            if (!(mask & (1U << e)) && exists(mask, d - w[e], require_all)) ++extra;
        return extra >= size;
    };
    FletcherReport rep;
    for (unsigned mask = 1; mask < (1U << n); ++mask) {
        bool a = holds(mask, false), b = holds(mask, true);
        rep.within_reading = rep.within_reading && a;
        rep.all_of_reading = rep.all_of_reading && b;
        if (a != b) {
            FletcherSubset s;
            for (int i = 0; i < n; ++i)
                if (mask & (1U << i)) s.subset.push_back(i);
            s.within_reading = a;
            s.all_of_reading = b;
            rep.disagreements.push_back(s);
        }
    }
    return rep;
}

}  // namespace wph
