#include "wph/lattice.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <map>
#include <numeric>

#include "wph/errors.hpp"

namespace wph {

std::string Signature::to_string() const {
    std::string s = "(" + std::to_string(positive) + "," + std::to_string(negative);
    if (zero) s += ",0:" + std::to_string(zero);
    return s + ")";
}

Lattice::Lattice(IntMatrix gram) : gram_(std::move(gram)) {
    for (std::size_t i = 0; i < gram_.size(); ++i) {
        if (gram_[i].size() != gram_.size()) throw InvalidInput("Gram matrix is not square");
        for (std::size_t j = 0; j < i; ++j)
            if (gram_[i][j] != gram_[j][i]) throw InvalidInput("Gram matrix is not symmetric");
    }
}

Lattice Lattice::from_rows(const std::vector<std::vector<long long>>& rows) { return Lattice(int_matrix(rows)); }

Integer Lattice::determinant() const { return bareiss_determinant(gram_); }

bool Lattice::is_even() const {
    for (std::size_t i = 0; i < rank(); ++i)
        if (gram_[i][i] % 2 != 0) return false;
    return true;
}

bool Lattice::is_unimodular() const { return abs(determinant()) == 1; }

Signature Lattice::signature() const {
    RatMatrix a = to_rational(gram_);
    const std::size_t n = a.size();
    Signature sig;
    std::vector<bool> done(n, false);
    for (std::size_t step = 0; step < n; ++step) {
        std::size_t p = n;
        for (std::size_t i = 0; i < n; ++i)
            if (!done[i] && a[i][i] != 0) {
                p = i;
                break;
            }
        if (p == n) {
            // No usable diagonal entry: e_i -> e_i + e_j makes one when a_ij != 0.
            std::size_t bi = n, bj = n;
            for (std::size_t i = 0; i < n && bi == n; ++i)
                for (std::size_t j = i + 1; j < n; ++j)
                    if (!done[i] && !done[j] && a[i][j] != 0) {
                        bi = i;
                        bj = j;
                        break;
                    }
            if (bi == n) break;  // the remaining block is zero
            for (std::size_t k = 0; k < n; ++k) a[bi][k] += a[bj][k];
            for (std::size_t k = 0; k < n; ++k) a[k][bi] += a[k][bj];
            p = bi;
        }
        done[p] = true;
        Rational piv = a[p][p];
        (piv > 0 ? sig.positive : sig.negative) += 1;
        for (std::size_t i = 0; i < n; ++i) {
            if (done[i] || a[i][p] == 0) continue;
            Rational f = a[i][p] / piv;
            for (std::size_t k = 0; k < n; ++k) a[i][k] -= f * a[p][k];
            for (std::size_t k = 0; k < n; ++k) a[k][i] = a[i][k];
        }
    }
    sig.zero = n - sig.positive - sig.negative;
    return sig;
}

Integer Lattice::product(const std::vector<Integer>& x, const std::vector<Integer>& y) const {
    Integer s = 0;
    for (std::size_t i = 0; i < rank(); ++i)
        for (std::size_t j = 0; j < rank(); ++j) s += x[i] * gram_[i][j] * y[j];
    return s;
}

Lattice Lattice::scaled(long factor) const {
    IntMatrix g = gram_;
    for (auto& row : g)
        for (auto& v : row) v *= factor;
    return Lattice(std::move(g));
}

Lattice Lattice::congruent(const IntMatrix& p) const { return Lattice(multiply(multiply(transpose(p), gram_), p)); }

Lattice operator+(const Lattice& a, const Lattice& b) {
    const std::size_t n = a.rank(), m = b.rank();
    IntMatrix g(n + m, std::vector<Integer>(n + m, 0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) g[i][j] = a.gram()[i][j];
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) g[n + i][n + j] = b.gram()[i][j];
    return Lattice(std::move(g));
}

Lattice copies(const Lattice& l, int n) {
    if (n < 0) throw InvalidInput("negative number of copies");
    Lattice out;
    for (int i = 0; i < n; ++i) out = out + l;
    return out;
}

Lattice hyperbolic_plane() { return Lattice::from_rows({{0, 1}, {1, 0}}); }

Lattice diagonal_lattice(const std::vector<long long>& entries) {
    std::vector<std::vector<long long>> rows(entries.size(), std::vector<long long>(entries.size(), 0));
    for (std::size_t i = 0; i < entries.size(); ++i) rows[i][i] = entries[i];
    return Lattice::from_rows(rows);
}

static Lattice from_edges(std::size_t n, long long diag, const std::vector<std::pair<int, int>>& edges, long long w) {
    std::vector<std::vector<long long>> g(n, std::vector<long long>(n, 0));
    for (std::size_t i = 0; i < n; ++i) g[i][i] = diag;
    for (auto [i, j] : edges) g[i][j] = g[j][i] = w;
    return Lattice::from_rows(g);
}

Lattice root_lattice(char type, int n) {
    std::vector<std::pair<int, int>> edges;
    switch (type) {
        case 'A':
            if (n < 1) throw InvalidInput("A_n needs n >= 1");
            for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
            break;
        case 'D':
            if (n < 4) throw InvalidInput("D_n needs n >= 4");
            for (int i = 0; i + 2 < n; ++i) edges.emplace_back(i, i + 1);
            edges.emplace_back(n - 3, n - 1);
            break;
        case 'E':
            if (n < 6 || n > 8) throw InvalidInput("E_n needs n in {6, 7, 8}");
            for (int i = 0; i + 2 < n; ++i) edges.emplace_back(i, i + 1);
            edges.emplace_back(2, n - 1);
            break;
        default:
            throw InvalidInput(std::string("unknown root system ") + type);
    }
    return from_edges(n, 2, edges, -1);
}

Lattice root_lattice(const std::string& name) {
    if (name.size() < 2) throw InvalidInput("root lattice name like 'A2'");
    return root_lattice(name[0], std::stoi(name.substr(1)));
}

std::vector<std::string> dynkin_graph_labels(int p, int q, int r) {
    std::vector<std::string> l = {"r", "r1", "r2"};
    for (int i = 1; i < p; ++i) l.push_back("u" + std::to_string(i));
    for (int i = 1; i < q; ++i) l.push_back("s" + std::to_string(i));
    for (int i = 1; i < r; ++i) l.push_back("t" + std::to_string(i));
    return l;
}

Lattice dynkin_graph_lattice(int p, int q, int r) {
    if (p < 2 || q < 2 || r < 2) throw InvalidInput("arm lengths must be at least 2");
    const int n = p + q + r;
    std::vector<std::vector<long long>> g(n, std::vector<long long>(n, 0));
    auto link = [&](int i, int j, long long w) { g[i][j] = g[j][i] = w; };
    for (int i = 0; i < n; ++i) g[i][i] = -2;
    const int center = 0, r1 = 1, r2 = 2;
    int next = 3;
    for (int len : {p, q, r}) {
        int first = next;
        for (int k = 0; k + 1 < len; ++k, ++next)
            if (k > 0) link(next - 1, next, 1);
        link(center, first, 1);
        link(r2, first, 1);
    }
    link(r2, r1, 1);
    link(center, r2, -2);
    return Lattice::from_rows(g);
}

Integer DiscriminantForm::order() const {
    Integer o = 1;
    for (const auto& d : invariants) o *= d;
    return o;
}

DiscriminantForm DiscriminantForm::negated() const {
    DiscriminantForm out = *this;
    for (auto& row : out.bilinear)
        for (auto& v : row) v = reduce_mod(-v, 1);
    for (auto& v : out.quadratic) v = reduce_mod(-v, 2);
    return out;
}

Rational DiscriminantForm::b(const Element& x, const Element& y) const {
    Rational s = 0;
    for (std::size_t i = 0; i < x.size(); ++i)
        for (std::size_t j = 0; j < y.size(); ++j)
            if (x[i] && y[j]) s += Rational(x[i] * y[j]) * bilinear[i][j];
    return reduce_mod(s, 1);
}

Rational DiscriminantForm::q(const Element& x) const {
    // q(sum n_i g_i) = sum n_i^2 q(g_i) + 2 sum_{i<j} n_i n_j b(g_i, g_j) mod 2
    Rational s = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (!x[i]) continue;
        s += Rational(x[i] * x[i]) * quadratic[i];
        for (std::size_t j = i + 1; j < x.size(); ++j)
            if (x[j]) s += Rational(2 * x[i] * x[j]) * bilinear[i][j];
    }
    return reduce_mod(s, 2);
}

DiscriminantForm discriminant_form(const Lattice& l) {
    if (!l.is_nondegenerate()) throw InvalidInput("discriminant form of a degenerate lattice");
    SmithForm s = smith_normal_form(l.gram());
    std::vector<Integer> diag = s.diagonal();
    DiscriminantForm out;
    out.even = l.is_even();
    std::vector<std::vector<Rational>> gens;  // g_i = V e_i / d_i, coordinates in the lattice basis
    for (std::size_t i = 0; i < diag.size(); ++i) {
        if (diag[i] == 1) continue;
        out.invariants.push_back(diag[i]);
        std::vector<Rational> g;
        for (std::size_t r = 0; r < l.rank(); ++r) g.emplace_back(s.v[r][i], diag[i]);
        for (auto& v : g) v.canonicalize();
        gens.push_back(std::move(g));
    }
    RatMatrix gram = to_rational(l.gram());
    auto dot = [&](const std::vector<Rational>& x, const std::vector<Rational>& y) {
        Rational t = 0;
        for (std::size_t i = 0; i < x.size(); ++i)
            for (std::size_t j = 0; j < y.size(); ++j) t += x[i] * gram[i][j] * y[j];
        return t;
    };
    const std::size_t k = gens.size();
    out.bilinear.assign(k, std::vector<Rational>(k, 0));
    for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = 0; j < k; ++j) out.bilinear[i][j] = reduce_mod(dot(gens[i], gens[j]), 1);
        out.quadratic.push_back(reduce_mod(dot(gens[i], gens[i]), 2));
    }
    return out;
}

bool disc_form_isomorphic(const DiscriminantForm& a, const DiscriminantForm& b, bool compare_quadratic,
                          long max_order) {
    if (a.invariants != b.invariants) return false;
    if (a.order() > max_order) throw CapacityExceeded("discriminant group too large for brute force");
    const std::size_t k = a.invariants.size();
    if (k == 0) return true;
    // Every element of b's group, with its order.
    std::vector<DiscriminantForm::Element> elems;
    std::vector<long> orders;
    {
        DiscriminantForm::Element cur(k, 0);
        std::vector<long> mod;
        for (const auto& d : b.invariants) mod.push_back(d.get_si());
        while (true) {
            long ord = 1;
            for (std::size_t i = 0; i < k; ++i)
                if (cur[i]) ord = std::lcm(ord, mod[i] / std::gcd(mod[i], cur[i]));
            elems.push_back(cur);
            orders.push_back(ord);
            std::size_t i = 0;
            while (i < k && ++cur[i] == mod[i]) cur[i++] = 0;
            if (i == k) break;
        }
    }
    std::vector<std::size_t> image(k);
    std::function<bool(std::size_t)> extend = [&](std::size_t i) {
        if (i == k) return true;
        const long di = a.invariants[i].get_si();
        for (std::size_t c = 0; c < elems.size(); ++c) {
            if (di % orders[c] != 0) continue;
            const auto& h = elems[c];
            if (compare_quadratic && b.q(h) != a.quadratic[i]) continue;
            if (b.b(h, h) != a.bilinear[i][i]) continue;
            bool ok = true;
            for (std::size_t j = 0; j < i && ok; ++j) ok = b.b(elems[image[j]], h) == a.bilinear[j][i];
            if (!ok) continue;
            image[i] = c;
            if (extend(i + 1)) return true;
        }
        return false;
    };
    // b is non-degenerate, so a form-preserving hom between groups of equal order is bijective.
    return extend(0);
}

GenusFingerprint genus_fingerprint(const Lattice& l) {
    GenusFingerprint g;
    g.rank = l.rank();
    g.signature = l.signature();
    g.even = l.is_even();
    for (const auto& d : smith_normal_form(l.gram()).diagonal())
        if (d != 1) g.invariant_factors.push_back(d);
    return g;
}

GenusComparison genus_equal(const Lattice& a, const Lattice& b) {
    GenusComparison out;
    GenusFingerprint fa = genus_fingerprint(a), fb = genus_fingerprint(b);
    if (fa.rank != fb.rank) out.differences.push_back("rank");
    if (!(fa.signature == fb.signature)) out.differences.push_back("signature");
    if (fa.even != fb.even) out.differences.push_back("parity");
    if (fa.invariant_factors != fb.invariant_factors) out.differences.push_back("invariant factors");
    if (out.differences.empty()) {
        if (!a.is_nondegenerate()) throw InvalidInput("genus comparison needs non-degenerate lattices");
        if (!disc_form_isomorphic(discriminant_form(a), discriminant_form(b), fa.even))
            out.differences.push_back(fa.even ? "discriminant quadratic form" : "discriminant bilinear form");
    }
    out.equal = out.differences.empty();
    bool indefinite = fa.signature.positive > 0 && fa.signature.negative > 0;
    std::size_t gens = fa.invariant_factors.size();
    out.uniqueness_hypothesis =
        out.equal && indefinite && ((fa.even && gens + 2 <= fa.rank) || (!fa.even && gens == 0));
    return out;
}

bool TranscendentalCheck::passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const NamedCheck& c) { return c.passed; });
}

TranscendentalCheck verify_transcendental(const Lattice& s, const Lattice& t) {
    TranscendentalCheck out;
    auto add = [&](std::string name, bool ok, std::string detail) {
        out.checks.push_back({std::move(name), ok, std::move(detail)});
    };
    add("rank", s.rank() + t.rank() == 22,
        std::to_string(s.rank()) + " + " + std::to_string(t.rank()) + " = " + std::to_string(s.rank() + t.rank()));
    Signature ss = s.signature(), st = t.signature();
    bool sig_ok = ss.zero == 0 && st.zero == 0 && ss.positive + st.positive == 3 && ss.negative + st.negative == 19;
    add("signature", sig_ok, ss.to_string() + " + " + st.to_string());
    add("T even", t.is_even(), t.is_even() ? "even" : "odd");
    if (!s.is_nondegenerate() || !t.is_nondegenerate()) {
        add("non-degenerate", false, "degenerate lattice");
        return out;
    }
    GenusFingerprint fs = genus_fingerprint(s), ft = genus_fingerprint(t);
    add("invariant factors", fs.invariant_factors == ft.invariant_factors, "discriminant groups compared");
    if (fs.invariant_factors != ft.invariant_factors) return out;
    DiscriminantForm ds = discriminant_form(s), dt = discriminant_form(t);
    add("b_T = -b_S", disc_form_isomorphic(dt, ds.negated(), false), "bilinear forms");
    if (s.is_even() && t.is_even()) add("q_T = -q_S", disc_form_isomorphic(dt, ds.negated(), true), "quadratic forms");
    return out;
}

}  // namespace wph

namespace wph {

namespace {

class LatticeParser {
public:
    explicit LatticeParser(const std::string& text) {
        for (char ch : text)
            if (!std::isspace(static_cast<unsigned char>(ch))) s_ += ch;
    }

    Lattice parse() {
        if (s_.empty()) throw ParseError("empty lattice expression");
        Lattice out = term();
        while (accept('+')) out = out + term();
        if (pos_ != s_.size()) fail("unexpected character");
        return out;
    }

private:
    [[noreturn]] void fail(const std::string& what) const {
        throw ParseError("lattice expression: " + what + " at position " + std::to_string(pos_) + " in '" + s_ + "'");
    }
    bool accept(char ch) {
        if (pos_ < s_.size() && s_[pos_] == ch) {
            ++pos_;
            return true;
        }
        return false;
    }
    void expect(char ch) {
        if (!accept(ch)) fail(std::string("expected '") + ch + "'");
    }
    bool digit_next() const { return pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])); }
    long long integer() {
        std::size_t start = pos_;
        if (pos_ < s_.size() && (s_[pos_] == '-' || s_[pos_] == '+')) ++pos_;
        while (digit_next()) ++pos_;
        if (pos_ == start || pos_ - start > 12 || !std::isdigit(static_cast<unsigned char>(s_[pos_ - 1])))
            fail("expected an integer");
        return std::stoll(s_.substr(start, pos_ - start));
    }

    Lattice term() {
        long long count = 1;
        if (digit_next()) {
            count = integer();
            accept('*');
            if (count < 1 || count > 64) fail("repeat count out of range");
        }
        Lattice base = atom();
        if (accept('(')) {
            long long factor = integer();
            expect(')');
            if (factor == 0) fail("zero scale");
            base = base.scaled(factor);
        }
        return copies(base, static_cast<int>(count));
    }

    Lattice atom() {
        if (pos_ >= s_.size()) fail("expected a lattice");
        char ch = s_[pos_];
        if (ch == 'U') {
            ++pos_;
            return hyperbolic_plane();
        }
        if (ch == 'A' || ch == 'D' || ch == 'E') {
            ++pos_;
            long long n = integer();
            if (n < 1 || n > 64) fail("root lattice rank out of range");
            try {
                return root_lattice(ch, static_cast<int>(n));
            } catch (const InvalidInput& e) {
                fail(e.what());
            }
        }
        if (accept('<')) {
            std::vector<long long> entries{integer()};
            while (accept(',')) entries.push_back(integer());
            expect('>');
            return diagonal_lattice(entries);
        }
        if (accept('[')) {
            std::vector<std::vector<long long>> rows;
            do {
                expect('[');
                std::vector<long long> row{integer()};
                while (accept(',')) row.push_back(integer());
                expect(']');
                rows.push_back(row);
            } while (accept(','));
            expect(']');
            try {
                return Lattice::from_rows(rows);
            } catch (const InvalidInput& e) {
                fail(e.what());
            }
        }
        fail("expected U, A<n>, D<n>, E<n>, <...> or a Gram matrix");
    }

    std::string s_;
    std::size_t pos_ = 0;
};

}  // namespace

Lattice parse_lattice(const std::string& text) { return LatticeParser(text).parse(); }

}  // namespace wph
