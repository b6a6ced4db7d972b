#include "wph/normal_forms.hpp"

#include <algorithm>
#include <cmath>

#include "wph/errors.hpp"
#include "wph/linalg.hpp"

namespace wph {

NormalFormCase parse_case(const std::string& tag) {
    if (tag == "a") return NormalFormCase::a;
    if (tag == "b") return NormalFormCase::b;
    if (tag == "c") return NormalFormCase::c;
    if (tag == "d") return NormalFormCase::d;
    throw InvalidInput("unknown case '" + tag + "' (expected a, b, c or d)");
}

char case_letter(NormalFormCase c) { return static_cast<char>('a' + static_cast<int>(c)); }

std::vector<NormalFormCase> all_cases() {
    return {NormalFormCase::a, NormalFormCase::b, NormalFormCase::c, NormalFormCase::d};
}

std::optional<NormalFormCase> case_for_family(const FamilySymbol& family) {
    for (NormalFormCase c : all_cases())
        if (normal_form_template(c).family == family) return c;
    return std::nullopt;
}

bool NormalFormTemplate::allows(const Exponents& e) const {
    return pin(e) != nullptr || std::find(free.begin(), free.end(), e) != free.end();
}

const PinnedMonomial* NormalFormTemplate::pin(const Exponents& e) const {
    for (const auto& p : pinned)
        if (p.exponents == e) return &p;
    return nullptr;
}

namespace {

Exponents ex(int a, int b, int c, int d) { return {a, b, c, d}; }

// x0^{2i+odd} x1^{top-i} x2^{k}, i = 0..top.
void add_binary(std::vector<Exponents>& out, int top, int odd, int x2_power) {
    for (int i = 0; i <= top; ++i) out.push_back(ex(2 * i + odd, top - i, x2_power, 0));
}

NormalFormTemplate build_template(NormalFormCase c) {
    NormalFormTemplate t{c, {}, {}, {}, {}, {}, {}};
    switch (c) {
    case NormalFormCase::a:
        t.family = make_symbol(14, {1, 2, 3, 7});
        t.pinned = {{ex(0, 1, 4, 0), 1}, {ex(0, 0, 0, 2), -1}};
        t.free.push_back(ex(5, 0, 3, 0));
        add_binary(t.free, 4, 0, 2);
        add_binary(t.free, 5, 1, 1);
        add_binary(t.free, 7, 0, 0);
        t.cover_variables = {3};
        break;
    case NormalFormCase::b:
        t.family = make_symbol(12, {1, 2, 3, 5});
        t.pinned = {{ex(0, 1, 0, 2), 1}};
        t.free = {ex(7, 0, 0, 1), ex(4, 0, 1, 1), ex(1, 0, 2, 1), ex(0, 0, 4, 0)};
        add_binary(t.free, 3, 0, 2);
        add_binary(t.free, 4, 1, 1);
        add_binary(t.free, 6, 0, 0);
        t.nonzero = {ex(0, 0, 4, 0)};
        break;
    case NormalFormCase::c:
        t.family = make_symbol(16, {1, 2, 5, 7});
        t.pinned = {{ex(0, 1, 0, 2), 1}};
        t.free = {ex(9, 0, 0, 1), ex(4, 0, 1, 1), ex(1, 0, 3, 0), ex(0, 3, 2, 0)};
        add_binary(t.free, 5, 1, 1);
        add_binary(t.free, 8, 0, 0);
        // The x1^3 x2^2 coefficient is non-zero on normal forms; zero marks the boundary point.
        t.nonzero = {ex(1, 0, 3, 0), ex(0, 3, 2, 0)};
        break;
    case NormalFormCase::d:
        t.family = make_symbol(22, {1, 2, 7, 11});
        t.pinned = {{ex(1, 0, 3, 0), 1}, {ex(0, 0, 0, 2), -1}};
        t.free = {ex(0, 4, 2, 0)};
        add_binary(t.free, 7, 1, 1);
        for (int i = 0; i <= 10; ++i) t.free.push_back(ex(2 * i, 11 - i, 0, 0));
        t.nonzero = {ex(0, 4, 2, 0)};
        t.excluded = {ex(22, 0, 0, 0)};
        t.cover_variables = {3};
        break;
    }
    for (const auto& p : t.pinned)
        if (weighted_degree(p.exponents, t.family.weights) != t.family.degree)
            throw InvariantViolation("template monomial of wrong degree");
    for (const auto& e : t.free)
        if (weighted_degree(e, t.family.weights) != t.family.degree)
            throw InvariantViolation("template monomial of wrong degree");
    return t;
}

void require_case_ring(const WPolynomial& f, const NormalFormTemplate& t) {
    if (f.is_zero()) throw InvalidInput("the zero polynomial defines no surface");
    if (f.weights() != t.family.weights)
        throw InvalidInput(std::string("case (") + case_letter(t.tag) + ") needs weights of " + t.family.to_string());
    if (!f.is_homogeneous() || f.degree() != t.family.degree)
        throw InvalidInput(std::string("case (") + case_letter(t.tag) + ") needs a homogeneous polynomial of degree " +
                           std::to_string(t.family.degree));
}

}  // namespace

const NormalFormTemplate& normal_form_template(NormalFormCase c) {
    static const std::vector<NormalFormTemplate> templates = [] {
        std::vector<NormalFormTemplate> out;
        for (NormalFormCase k : all_cases()) out.push_back(build_template(k));
        return out;
    }();
    return templates.at(static_cast<std::size_t>(c));
}

NormalFormCheck is_normal_form(const WPolynomial& f, NormalFormCase c) {
    const NormalFormTemplate& t = normal_form_template(c);
    require_case_ring(f, t);
    NormalFormCheck out;
    auto fail = [&](std::string msg) {
        out.ok = false;
        out.violations.push_back(std::move(msg));
    };
    for (const auto& [e, coeff] : f.terms())
        if (!t.allows(e)) fail("monomial " + monomial_string(e) + " is not allowed");
    for (const auto& p : t.pinned) {
        Rational v = f.coefficient(p.exponents);
        if (v != p.value)
            fail("coefficient of " + monomial_string(p.exponents) + " is " + to_string(v) + ", expected " +
                 to_string(p.value));
    }
    for (const auto& e : t.nonzero)
        if (f.coefficient(e) == 0) fail("coefficient of " + monomial_string(e) + " must be non-zero");
    return out;
}

template <class S>
bool Reduction<S>::identity() const {
    if (!CoeffTraits<S>::is_one(scale)) return false;
    for (int i = 0; i < static_cast<int>(transform.size()); ++i)
        if (!(transform[i] == BasicPolynomial<S>::variable(normal_form.weights(), i))) return false;
    return true;
}

template struct Reduction<Rational>;
template struct Reduction<ComplexMp>;

namespace {

template <class Field>
class Pipeline {
public:
    using S = typename Field::Scalar;
    using Poly = BasicPolynomial<S>;
    using Assignment = std::vector<std::optional<Poly>>;

    Pipeline(const WPolynomial& f, NormalFormCase c, const Field& field)
        : field_(field), tmpl_(normal_form_template(c)), w_(f.weights()), input_(w_), f_(w_) {
        for (const auto& [e, coeff] : f.terms()) input_.add_term(e, field_.from_rational(coeff));
        f_ = input_;
        scale_ = one();
        for (int i = 0; i < static_cast<int>(w_.size()); ++i) transform_.push_back(Poly::variable(w_, i));
    }

    S one() const { return field_.from_rational(Rational(1)); }
    S num(long n, long d = 1) const { return field_.from_rational(Rational(n, d)); }
    const Poly& f() const { return f_; }
    S coeff(const Exponents& e) const { return f_.coefficient(e); }
    Poly var(int i) const { return Poly::variable(w_, i); }
    Poly mono(const Exponents& e, const S& c) const { return Poly::monomial(w_, e, c); }

    bool negligible(const Poly& p) const {
        for (const auto& [e, c] : p.terms())
            if (!field_.negligible(c)) return false;
        return true;
    }

    S require_nonzero(const Exponents& e, const std::string& why) const {
        S v = coeff(e);
        if (field_.negligible(v))
            throw NotReducible("coefficient of " + monomial_string(e) + " vanishes (" + why + ")");
        return v;
    }

    void substitute(int var_index, const Poly& image, const std::string& label) {
        Assignment a(w_.size());
        a[var_index] = image;
        f_ = f_.substitute(a);
        for (auto& t : transform_) t = t.substitute(a);
        steps_.push_back(label + ": x" + std::to_string(var_index) + " -> " + image.to_string());
    }

    void rescale(const S& s, const std::string& label) {
        f_ *= s;
        scale_ = scale_ * s;
        steps_.push_back(label + ": multiply by " + CoeffTraits<S>::str(s));
    }

    // x1 -> (x1 - alpha0 x0^2) / alpha1 where the x_k^power coefficient is alpha1 x1 + alpha0 x0^2.
    void normalize_x1(int k, int power) {
        Poly lead = f_.coefficient_of_power(k, power);
        S alpha1 = lead.coefficient(ex(0, 1, 0, 0));
        if (field_.negligible(alpha1))
            throw NotReducible("the x" + std::to_string(k) + "^" + std::to_string(power) +
                               " coefficient has no x1 term (not quasi-smooth)");
        S alpha0 = lead.coefficient(ex(2, 0, 0, 0));
        if (CoeffTraits<S>::is_one(alpha1) && CoeffTraits<S>::is_zero(alpha0)) return;
        Poly image = (var(1) - mono(ex(2, 0, 0, 0), alpha0)) * (one() / alpha1);
        substitute(1, image, "absorb the x0^2 term");
    }

    // x3 -> x3 - L/(2c) followed by scaling with -1/c, so that F = F_C - x3^2.
    void split_cover() {
        S c = require_nonzero(ex(0, 0, 0, 2), "no double-cover form");
        Poly linear = f_.coefficient_of_power(3, 1);
        if (!linear.is_zero()) substitute(3, var(3) - linear * (one() / (num(2) * c)), "complete the square");
        S s = -(one() / c);
        if (!CoeffTraits<S>::is_one(s)) rescale(s, "normalize x3^2");
    }

    // x3 -> x3 - (x1-divisible part of the x3 coefficient) / (2 x1); requires the x1 x3^2 pin.
    bool shift_x3() {
        Poly target = f_.coefficient_of_power(3, 1).filter([](const Exponents& e) { return e[1] > 0; });
        if (negligible(target)) return false;
        substitute(3, var(3) - target.divide_by_monomial(ex(0, 1, 0, 0)) * num(1, 2), "clear x1 from the x3 terms");
        return true;
    }

    Reduction<S> finish() {
        Reduction<S> out{f_, transform_, scale_, steps_, 0.0, 0.0};
        for (const auto& e : tmpl_.nonzero)
            if (field_.negligible(out.normal_form.coefficient(e)))
                throw NotReducible("coefficient of " + monomial_string(e) + " vanishes in the normal form");
        project(out);
        Assignment a(w_.size());
        for (std::size_t i = 0; i < w_.size(); ++i) a[i] = transform_[i];
        Poly check = input_.substitute(a) * scale_ - out.normal_form;
        record_defect(out, check);
        return out;
    }

private:
    void project(Reduction<S>& out);
    void record_defect(Reduction<S>& out, const Poly& difference);

    const Field& field_;
    const NormalFormTemplate& tmpl_;
    Weights w_;
    Poly input_, f_;
    S scale_;
    std::vector<Poly> transform_;
    std::vector<std::string> steps_;
};

template <>
void Pipeline<ExactField>::project(Reduction<Rational>& out) {
    NormalFormCheck check = is_normal_form(out.normal_form, tmpl_.tag);
    if (!check.ok) throw InvariantViolation("pipeline left a non-normal form: " + check.violations.front());
}

template <>
void Pipeline<ExactField>::record_defect(Reduction<Rational>&, const WPolynomial& difference) {
    if (!difference.is_zero()) throw InvariantViolation("re-substitution does not reproduce the normal form");
}

template <>
void Pipeline<FloatField>::project(Reduction<ComplexMp>& out) {
    Poly cleaned(w_);
    double discarded = 0;
    for (const auto& [e, c] : out.normal_form.terms()) {
        if (const PinnedMonomial* p = tmpl_.pin(e)) {
            ComplexMp target = field_.from_rational(p->value);
            if (!field_.negligible(c - target)) throw InvariantViolation("pinned coefficient drifted");
            cleaned.add_term(e, target);
            discarded = std::max(discarded, field_.magnitude(c - target));
        } else if (tmpl_.allows(e)) {
            cleaned.add_term(e, c);
        } else {
            if (!field_.negligible(c))
                throw InvariantViolation("coefficient of " + monomial_string(e) + " did not vanish: " + c.to_string());
            discarded = std::max(discarded, field_.magnitude(c));
        }
    }
    out.normal_form = cleaned;
    out.discarded = discarded;
}

template <>
void Pipeline<FloatField>::record_defect(Reduction<ComplexMp>& out, const BasicPolynomial<ComplexMp>& difference) {
    double defect = 0;
    for (const auto& [e, c] : difference.terms()) defect = std::max(defect, field_.magnitude(c));
    out.defect = defect;
}

constexpr int kMaxRounds = 64;

template <class Field>
Reduction<typename Field::Scalar> reduce_case(const WPolynomial& input, NormalFormCase c, const Field& field) {
    using S = typename Field::Scalar;
    using Poly = BasicPolynomial<S>;
    const NormalFormTemplate& t = normal_form_template(c);
    require_case_ring(input, t);
    Exponents x1_top = ex(0, static_cast<int>(t.family.degree / 2), 0, 0);
    if (input.coefficient(x1_top) == 0)
        throw NotReducible("coefficient of " + monomial_string(x1_top) + " vanishes (surface passes through P1)");

    Pipeline<Field> p(input, c, field);
    switch (c) {
    case NormalFormCase::a: {
        p.split_cover();
        p.normalize_x1(2, 4);
        Poly target = p.f().coefficient_of_power(2, 3).filter([](const Exponents& e) { return e[1] > 0; });
        if (!p.negligible(target))
            p.substitute(2, p.var(2) - target.divide_by_monomial(ex(0, 1, 0, 0)) * p.num(1, 4), "clear x1 from the x2^3 terms");
        break;
    }
    case NormalFormCase::b: {
        p.normalize_x1(3, 2);
        S g0 = p.require_nonzero(ex(0, 0, 4, 0), "surface passes through P2");
        int round = 0;
        for (; round < kMaxRounds; ++round) {
            Poly cubic = p.f().coefficient_of_power(2, 3);
            if (!p.negligible(cubic)) {
                p.substitute(2, p.var(2) - cubic * (p.one() / (p.num(4) * g0)), "clear the x2^3 terms");
                continue;
            }
            if (!p.shift_x3()) break;
        }
        if (round == kMaxRounds) throw InvariantViolation("case (b) shifts did not converge");
        break;
    }
    case NormalFormCase::c: {
        p.normalize_x1(3, 2);
        S r0 = p.require_nonzero(ex(1, 0, 3, 0), "surface singular at P2");
        int round = 0;
        for (; round < kMaxRounds; ++round) {
            if (p.shift_x3()) continue;
            Poly target = p.f().coefficient_of_power(2, 2).filter([](const Exponents& e) { return e[0] > 0; });
            if (p.negligible(target)) break;
            p.substitute(2, p.var(2) - target.divide_by_monomial(ex(1, 0, 0, 0)) * (p.one() / (p.num(3) * r0)),
                         "clear x0 from the x2^2 terms");
        }
        if (round == kMaxRounds) throw InvariantViolation("case (c) shifts did not converge");
        break;
    }
    case NormalFormCase::d: {
        p.split_cover();
        S r = p.require_nonzero(ex(1, 0, 3, 0), "surface singular at P2");
        if (!CoeffTraits<S>::is_one(r)) p.substitute(0, p.var(0) * (p.one() / r), "normalize x0 x2^3");
        S g0 = p.require_nonzero(ex(0, 4, 2, 0), "G0 = 0");
        // After x1 -> x1 + beta x0^2 and the x2-shift, the x0^22 coefficient is
        // phi(beta) = 2A^3/27 - AB/3 + C with A, B, C the x2^2, x2, x2^0 coefficients at (1, beta).
        auto profile = [&](int x2_power, int top) {
            Poly part = p.f().coefficient_of_power(2, x2_power).filter([](const Exponents& e) { return e[3] == 0; });
            std::vector<S> v(top + 1, p.num(0));
            for (int j = 0; j <= top; ++j) v[j] = part.coefficient(ex(2 * (top - j) + (x2_power == 1), j, 0, 0));
            return v;
        };
        auto mul = [&](const std::vector<S>& x, const std::vector<S>& y) {
            std::vector<S> z(x.size() + y.size() - 1, p.num(0));
            for (std::size_t i = 0; i < x.size(); ++i)
                for (std::size_t j = 0; j < y.size(); ++j) z[i + j] = z[i + j] + x[i] * y[j];
            return z;
        };
        std::vector<S> a = profile(2, 4), b = profile(1, 7), cc = profile(0, 11);
        std::vector<S> phi(13, p.num(0));
        std::vector<S> a3 = mul(mul(a, a), a), ab = mul(a, b);
        for (std::size_t i = 0; i < a3.size(); ++i) phi[i] = phi[i] + a3[i] * p.num(2, 27);
        for (std::size_t i = 0; i < ab.size(); ++i) phi[i] = phi[i] - ab[i] * p.num(1, 3);
        for (std::size_t i = 0; i < cc.size(); ++i) phi[i] = phi[i] + cc[i];
        if (!field.negligible(phi[0])) {
            std::vector<S> roots = field.roots(phi);
            if (roots.empty())
                throw RootRequired("removing the x0^22 coefficient (" + CoeffTraits<S>::str(phi[0]) +
                                   ") needs a root of a degree-12 polynomial with no rational root");
            p.substitute(1, p.var(1) + p.mono(ex(2, 0, 0, 0), roots.front()), "move the cubic's root");
        }
        Poly target = p.f().coefficient_of_power(2, 2).filter([](const Exponents& e) { return e[0] > 0; });
        (void)g0;
        if (!p.negligible(target))
            p.substitute(2, p.var(2) - target.divide_by_monomial(ex(1, 0, 0, 0)) * p.num(1, 3), "depress the cubic in x2");
        break;
    }
    }
    return p.finish();
}

}  // namespace

Reduction<Rational> reduce_to_normal_form(const WPolynomial& f, NormalFormCase c, const ExactField& field) {
    return reduce_case(f, c, field);
}

Reduction<ComplexMp> reduce_to_normal_form(const WPolynomial& f, NormalFormCase c, const FloatField& field) {
    PrecisionGuard guard(field.digits10);
    return reduce_case(f, c, field);
}

bool satisfies_constraint(const TorusElement<Rational>& t, NormalFormCase c) {
    const NormalFormTemplate& tmpl = normal_form_template(c);
    if (t.c.size() != tmpl.family.weights.size()) return false;
    if (t.lambda == 0) return false;
    for (const auto& v : t.c)
        if (v == 0) return false;
    for (const auto& p : tmpl.pinned) {
        Rational v = t.lambda;
        for (std::size_t i = 0; i < t.c.size(); ++i) v *= pow(t.c[i], p.exponents[i]);
        if (v != 1) return false;
    }
    return true;
}

namespace {

constexpr unsigned kTorusDigits = 60;

Rational power_product(const std::vector<Rational>& base, const std::vector<Integer>& exponent) {
    Rational out = 1;
    for (std::size_t m = 0; m < base.size(); ++m) {
        if (exponent[m] == 0) continue;
        if (!exponent[m].fits_slong_p()) throw CapacityExceeded("torus exponent overflow");
        out *= pow(base[m], exponent[m].get_si());
    }
    return out;
}

ComplexMp power_product(const std::vector<ComplexMp>& base, const std::vector<Integer>& exponent) {
    ComplexMp out(MpReal(1));
    for (std::size_t m = 0; m < base.size(); ++m) {
        if (exponent[m] == 0) continue;
        if (!exponent[m].fits_slong_p()) throw CapacityExceeded("torus exponent overflow");
        out *= pow(base[m], exponent[m].get_si());
    }
    return out;
}

template <class S>
TorusElement<S> normalize_c0(TorusElement<S> t, const Weights& w, long degree) {
    // The 1-subtorus x_i -> s^{a_i} x_i, lambda -> s^{-d} fixes every hypersurface.
    S s = t.c[0];
    s = (s / s) / t.c[0];
    for (std::size_t i = 0; i < w.size(); ++i) t.c[i] = t.c[i] * pow(s, static_cast<long>(w[i]));
    t.lambda = t.lambda * pow(s, -degree);
    return t;
}

}  // namespace

std::optional<TorusEquivalence> torus_equivalent(const WPolynomial& f1, const WPolynomial& f2, NormalFormCase c) {
    for (const WPolynomial* f : {&f1, &f2}) {
        NormalFormCheck check = is_normal_form(*f, c);
        if (!check.ok) throw InvalidInput("input is not in normal form: " + check.violations.front());
    }
    const Weights& w = f1.weights();
    const long degree = f1.degree();
    std::vector<Exponents> support;
    std::vector<Rational> ratio;
    for (const auto& [e, coeff] : f1.terms()) {
        Rational other = f2.coefficient(e);
        if (other == 0) return std::nullopt;
        support.push_back(e);
        ratio.push_back(other / coeff);
    }
    if (f2.size() != f1.size()) return std::nullopt;

    // Unknowns (c_0, ..., c_n, lambda); monomial m imposes c^{e(m)} lambda = ratio_m.
    const std::size_t k = w.size() + 1;
    IntMatrix a(support.size(), std::vector<Integer>(k));
    for (std::size_t m = 0; m < support.size(); ++m) {
        for (std::size_t i = 0; i < w.size(); ++i) a[m][i] = support[m][i];
        a[m][w.size()] = 1;
    }
    SmithForm snf = smith_normal_form(a);
    std::vector<Integer> diag = snf.diagonal();
    std::size_t rank = 0;
    while (rank < diag.size() && diag[rank] != 0) ++rank;
    std::vector<Rational> s(support.size());
    for (std::size_t i = 0; i < support.size(); ++i) s[i] = power_product(ratio, snf.u[i]);
    for (std::size_t i = rank; i < support.size(); ++i)
        if (s[i] != 1) return std::nullopt;

    TorusEquivalence out;
    // Exact attempt: y_i = s_i^{1/d_i} in Q.
    std::vector<Rational> y(k, Rational(1));
    bool rational = true;
    for (std::size_t i = 0; i < rank && rational; ++i) rational = rational_root(s[i], diag[i].get_ui(), y[i]);
    auto assemble = [&](const auto& yy, auto unit) {
        using S = std::decay_t<decltype(unit)>;
        TorusElement<S> t;
        for (std::size_t j = 0; j < k; ++j) {
            std::vector<Integer> col(k);
            for (std::size_t i = 0; i < k; ++i) col[i] = snf.v[j][i];
            S v = power_product(yy, col);
            if (j < w.size()) t.c.push_back(v);
            else t.lambda = v;
        }
        return normalize_c0(t, w, degree);
    };
    if (rational) {
        out.exact = assemble(y, Rational(1));
        if (!(act(f1, *out.exact) == f2)) throw InvariantViolation("torus solution does not map F1 to F2");
    }
    PrecisionGuard guard(kTorusDigits);
    std::vector<ComplexMp> yc(k, ComplexMp(MpReal(1)));
    for (std::size_t i = 0; i < rank; ++i) yc[i] = principal_root(ComplexMp(s[i]), diag[i].get_ui());
    out.numeric = assemble(yc, ComplexMp(MpReal(1)));
    BasicPolynomial<ComplexMp> g1(w), g2(w);
    for (const auto& [e, coeff] : f1.terms()) g1.add_term(e, ComplexMp(coeff));
    for (const auto& [e, coeff] : f2.terms()) g2.add_term(e, ComplexMp(coeff));
    BasicPolynomial<ComplexMp> diff = act(g1, out.numeric) - g2;
    for (const auto& [e, coeff] : diff.terms()) out.defect = std::max(out.defect, static_cast<double>(coeff.abs()));
    if (out.defect > 1e-30) throw InvariantViolation("numeric torus solution does not map F1 to F2");
    return out;
}

int torus_dimension(NormalFormCase c) {
    const NormalFormTemplate& t = normal_form_template(c);
    const std::size_t n = t.family.weights.size();
    IntMatrix rows;
    for (const auto& p : t.pinned) {
        std::vector<Integer> row(n + 1);
        for (std::size_t i = 0; i < n; ++i) row[i] = p.exponents[i];
        row[n] = 1;
        rows.push_back(row);
    }
    return static_cast<int>(n + 1 - bareiss_rank(rows) - 1);
}

int normal_form_moduli_dim(NormalFormCase c) {
    return static_cast<int>(normal_form_template(c).free.size()) - torus_dimension(c);
}

Integer torus_stabilizer_order(const WPolynomial& f, NormalFormCase c) {
    const NormalFormTemplate& t = normal_form_template(c);
    require_case_ring(f, t);
    std::vector<int> columns;
    for (int i = 0; i < f.nvars(); ++i)
        if (std::find(t.cover_variables.begin(), t.cover_variables.end(), i) == t.cover_variables.end())
            columns.push_back(i);
    IntMatrix a;
    for (const auto& [e, coeff] : f.terms()) {
        bool on_cover = false;
        for (int v : t.cover_variables) on_cover = on_cover || e[v] > 0;
        if (on_cover) continue;
        std::vector<Integer> row;
        for (int i : columns) row.push_back(e[i]);
        row.push_back(1);
        a.push_back(row);
    }
    // The stabilizer modulo the 1-subtorus is dual to the torsion of Z^k / Row(A); it is
    // finite exactly when Row(A) has full rank in the weight hyperplane.
    std::vector<Integer> diag = smith_normal_form(a).diagonal();
    Integer order = 1;
    std::size_t rank = 0;
    for (const auto& v : diag)
        if (v != 0) {
            order *= v;
            ++rank;
        }
    if (rank < columns.size()) return 0;
    return order;
}

}  // namespace wph

namespace wph {

Rational sample_rational(std::mt19937& rng, bool nonzero) {
    for (;;) {
        long num = static_cast<long>(rng() % 13) - 6;
        long den = static_cast<long>(rng() % 4) + 1;
        Rational q(num, den);
        q.canonicalize();
        if (!nonzero || q != 0) return q;
    }
}

WPolynomial random_normal_form(NormalFormCase c, std::mt19937& rng) {
    const NormalFormTemplate& t = normal_form_template(c);
    WPolynomial f(t.family.weights);
    for (const auto& p : t.pinned) f.add_term(p.exponents, p.value);
    for (const auto& e : t.free) {
        bool nonzero = std::find(t.nonzero.begin(), t.nonzero.end(), e) != t.nonzero.end();
        f.add_term(e, sample_rational(rng, nonzero));
    }
    Exponents top{0, static_cast<int>(t.family.degree / 2), 0, 0};
    if (f.coefficient(top) == 0) f.set_term(top, 1);
    return f;
}

TorusElement<Rational> random_torus_element(NormalFormCase c, std::mt19937& rng) {
    TorusElement<Rational> t;
    for (int i = 0; i < 4; ++i) t.c.push_back(sample_rational(rng, true));
    switch (c) {
    case NormalFormCase::a:  // lambda c3^2 = lambda c1 c2^4 = 1
        t.lambda = 1 / (t.c[3] * t.c[3]);
        t.c[1] = 1 / (t.lambda * pow(t.c[2], 4));
        break;
    case NormalFormCase::b:
    case NormalFormCase::c:  // lambda c1 c3^2 = 1
        t.lambda = sample_rational(rng, true);
        t.c[1] = 1 / (t.lambda * t.c[3] * t.c[3]);
        break;
    case NormalFormCase::d:  // lambda c3^2 = lambda c0 c2^3 = 1
        t.lambda = 1 / (t.c[3] * t.c[3]);
        t.c[0] = 1 / (t.lambda * pow(t.c[2], 3));
        break;
    }
    return t;
}

WPolynomial random_group_image(const WPolynomial& f, std::mt19937& rng) {
    const Weights& w = f.weights();
    auto form = [&](long degree, int last_variable) {
        WPolynomial g(w);
        for (const auto& e : enumerate_monomials(w, degree)) {
            bool inside = true;
            for (int i = last_variable + 1; i < f.nvars(); ++i) inside = inside && e[i] == 0;
            if (inside) g.add_term(e, sample_rational(rng, false));
        }
        return g;
    };
    std::vector<std::optional<WPolynomial>> s(w.size());
    s[1] = WPolynomial::variable(w, 1) * sample_rational(rng, true) + form(w[1], 0);
    s[2] = WPolynomial::variable(w, 2) + form(w[2], 1);
    s[3] = WPolynomial::variable(w, 3) + form(w[3], 2);
    return f.substitute(s) * sample_rational(rng, true);
}

}  // namespace wph
