#include "wph/scalar.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "wph/errors.hpp"

namespace wph {

namespace bmp = boost::multiprecision;

ComplexMp::ComplexMp(const Rational& q)
    : re(MpReal(q.get_num().get_str()) / MpReal(q.get_den().get_str())), im(0) {}

ComplexMp& ComplexMp::operator/=(const ComplexMp& o) {
    MpReal den = o.re * o.re + o.im * o.im;
    if (den == 0) throw InvalidInput("complex division by zero");
    MpReal r = (re * o.re + im * o.im) / den;
    im = (im * o.re - re * o.im) / den;
    re = r;
    return *this;
}

MpReal ComplexMp::abs() const { return bmp::hypot(re, im); }
MpReal ComplexMp::arg() const { return bmp::atan2(im, re); }

std::string ComplexMp::to_string(int digits) const {
    std::ostringstream os;
    os.precision(digits);
    if (im == 0) {
        os << re;
        return os.str();
    }
    os << "(" << re << (im < 0 ? "-" : "+") << bmp::abs(im) << "i)";
    return os.str();
}

ComplexMp pow(const ComplexMp& z, long k) {
    if (k < 0) return ComplexMp(MpReal(1)) / pow(z, -k);
    ComplexMp result(MpReal(1)), base = z;
    while (k > 0) {
        if (k & 1) result *= base;
        k >>= 1;
        if (k) base *= base;
    }
    return result;
}

ComplexMp principal_root(const ComplexMp& z, unsigned k) {
    if (k == 0) throw InvalidInput("zeroth root");
    if (z.re == 0 && z.im == 0) return z;
    MpReal r = bmp::pow(z.abs(), MpReal(1) / k);
    MpReal t = z.arg() / k;
    return ComplexMp(r * bmp::cos(t), r * bmp::sin(t));
}

PrecisionGuard::PrecisionGuard(unsigned digits10) : saved_(MpReal::default_precision()) {
    if (digits10 < 10) throw InvalidInput("precision below 10 digits");
    MpReal::default_precision(digits10);
}
PrecisionGuard::~PrecisionGuard() { MpReal::default_precision(saved_); }

Rational ExactField::root(const Rational& s, unsigned k) const {
    Rational out;
    if (!rational_root(s, k, out))
        throw RootRequired("the " + std::to_string(k) + "-th root of " + to_string(s) + " is not rational");
    return out;
}

std::vector<Rational> ExactField::roots(const std::vector<Rational>& coeffs) const { return rational_roots(coeffs); }

bool FloatField::negligible(const ComplexMp& s) const {
    MpReal tol = bmp::pow(MpReal(10), -static_cast<int>(digits10 / 2));
    return s.abs() <= tol;
}

std::vector<ComplexMp> FloatField::roots(const std::vector<ComplexMp>& coeffs) const {
    return polynomial_roots(coeffs, digits10);
}

static void trim(std::vector<ComplexMp>& c) {
    while (!c.empty() && c.back().re == 0 && c.back().im == 0) c.pop_back();
}

namespace {

// One Aberth run at the current default precision; false when the iteration stalls.
bool aberth(const std::vector<ComplexMp>& c, std::vector<ComplexMp>& z, unsigned digits10) {
    const std::size_t n = c.size() - 1;
    // Start on a circle around the root centroid enclosing every root of the shifted polynomial.
    ComplexMp center = -c[n - 1] / (c[n] * ComplexMp(MpReal(static_cast<long>(n))));
    std::vector<ComplexMp> shifted = c;  // Taylor coefficients at center
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = n - 1; k + 1 > i; --k) shifted[k] += center * shifted[k + 1];
    MpReal radius = 0;
    for (std::size_t k = 0; k < n; ++k) {
        MpReal r = shifted[k].abs() / shifted[n].abs();
        if (r > 0) radius = bmp::max(radius, bmp::pow(r, MpReal(1) / (n - k)));
    }
    if (radius == 0) radius = 1;
    z.assign(n, ComplexMp());
    const MpReal pi = bmp::acos(MpReal(-1));
    for (std::size_t i = 0; i < n; ++i) {
        MpReal t = 2 * pi * i / n + MpReal(0.4);
        z[i] = center + ComplexMp(radius * bmp::cos(t), radius * bmp::sin(t));
    }
    // Steps stall at the rounding level once converged; three quarters of the digits suffice.
    const MpReal eps = bmp::pow(MpReal(10), -static_cast<int>(3 * digits10 / 4));
    MpReal best = -1;
    int since_best = 0;
    for (int iter = 0; iter < 500; ++iter) {
        MpReal worst = 0;
        for (std::size_t i = 0; i < n; ++i) {
            ComplexMp p = c[n], dp(MpReal(0));
            for (std::size_t k = n; k-- > 0;) {
                dp = dp * z[i] + p;
                p = p * z[i] + c[k];
            }
            if (p.re == 0 && p.im == 0) continue;
            ComplexMp ratio = p / dp;
            ComplexMp sum(MpReal(0));
            for (std::size_t j = 0; j < n; ++j)
                if (j != i) sum += ComplexMp(MpReal(1)) / (z[i] - z[j]);
            ComplexMp step = ratio / (ComplexMp(MpReal(1)) - ratio * sum);
            z[i] -= step;
            worst = bmp::max(worst, step.abs() / (1 + z[i].abs()));
        }
        if (worst < eps) return true;
        // Stagnation at the rounding floor means the precision is too low for the root cluster.
        if (best < 0 || worst < best / 2) {
            best = worst;
            since_best = 0;
        } else if (++since_best > 40) {
            return false;
        }
    }
    return false;
}

}  // namespace

// `make` rebuilds the coefficients at the current default precision.
std::vector<ComplexMp> adaptive_roots(const std::function<std::vector<ComplexMp>()>& make, unsigned digits10) {
    std::vector<ComplexMp> roots;
    // Clustered roots are ill-conditioned; retry at doubled precision until the iteration converges.
    for (unsigned digits = digits10;; digits *= 2) {
        PrecisionGuard guard(digits);
        std::vector<ComplexMp> c = make();
        trim(c);
        if (c.size() < 2) return {};
        roots.clear();
        while (c.size() > 1 && c[0].re == 0 && c[0].im == 0) {
            roots.emplace_back(MpReal(0));
            c.erase(c.begin());
        }
        if (c.size() < 2) break;
        std::vector<ComplexMp> z;
        if (aberth(c, z, digits)) {
            roots.insert(roots.end(), z.begin(), z.end());
            break;
        }
        if (digits > 64 * digits10) throw InvariantViolation("polynomial root iteration did not converge");
    }
    std::stable_sort(roots.begin(), roots.end(), [](const ComplexMp& a, const ComplexMp& b) {
        MpReal ma = a.abs(), mb = b.abs();
        MpReal scale = 1 + bmp::max(ma, mb);
        if (bmp::abs(ma - mb) > scale * MpReal(1e-20)) return ma < mb;
        return a.arg() < b.arg();
    });
    return roots;
}

std::vector<ComplexMp> polynomial_roots(const std::vector<ComplexMp>& input, unsigned digits10) {
    return adaptive_roots(
        [&] {
            std::vector<ComplexMp> c;
            for (const auto& v : input) c.emplace_back(MpReal(v.re), MpReal(v.im));
            return c;
        },
        digits10);
}

namespace {

using RatPoly = std::vector<Rational>;  // ascending coefficients, no trailing zeros

void trim(RatPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

Rational evaluate(const RatPoly& c, const Rational& t) {
    Rational v = 0;
    for (std::size_t k = c.size(); k-- > 0;) v = v * t + c[k];
    return v;
}

RatPoly remainder(RatPoly a, const RatPoly& b) {
    while (a.size() >= b.size()) {
        Rational f = a.back() / b.back();
        std::size_t shift = a.size() - b.size();
        for (std::size_t i = 0; i < b.size(); ++i) a[i + shift] -= f * b[i];
        a.pop_back();
        trim(a);
    }
    return a;
}

RatPoly quotient(RatPoly a, const RatPoly& b) {
    RatPoly q(a.size() - b.size() + 1);
    while (a.size() >= b.size()) {
        Rational f = a.back() / b.back();
        std::size_t shift = a.size() - b.size();
        q[shift] = f;
        for (std::size_t i = 0; i < b.size(); ++i) a[i + shift] -= f * b[i];
        a.pop_back();
        trim(a);
    }
    return q;
}

RatPoly gcd(RatPoly a, RatPoly b) {
    while (!b.empty()) {
        RatPoly r = remainder(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

// Primitive integer multiple of p.
std::vector<Integer> primitive(const RatPoly& p) {
    Integer den = 1;
    for (const auto& v : p) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), v.get_den_mpz_t());
    std::vector<Integer> out;
    Integer g = 0;
    for (const auto& v : p) {
        out.push_back(Integer(v.get_num() * (den / v.get_den())));
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), out.back().get_mpz_t());
    }
    for (auto& v : out) v /= g;
    return out;
}

Integer floor_integer(const MpReal& x) {
    Integer z;
    mpfr_get_z(z.get_mpz_t(), x.backend().data(), MPFR_RNDD);
    return z;
}

}  // namespace

std::vector<Rational> rational_roots(const std::vector<Rational>& input) {
    RatPoly p = input;
    trim(p);
    if (p.empty()) throw InvalidInput("every value is a root of the zero polynomial");
    std::vector<Rational> out;
    if (p[0] == 0) {
        out.push_back(0);
        while (p[0] == 0) p.erase(p.begin());
    }
    if (p.size() >= 2) {
        RatPoly derivative;
        for (std::size_t i = 1; i < p.size(); ++i) derivative.push_back(p[i] * static_cast<long>(i));
        RatPoly squarefree = quotient(p, gcd(p, derivative));
        std::vector<Integer> z = primitive(squarefree);
        // Any rational root p/q has q | lead, so |root - p/q| < 1/(2 lead^2) identifies it.
        const Integer lead = abs(z.back());
        const unsigned digits = static_cast<unsigned>(40 + 0.61 * mpz_sizeinbase(lead.get_mpz_t(), 2));
        std::vector<ComplexMp> approx = adaptive_roots(
            [&] {
                std::vector<ComplexMp> c;
                for (const auto& v : z) c.emplace_back(MpReal(v.get_str()));
                return c;
            },
            40);
        PrecisionGuard guard(digits);
        std::vector<MpReal> zr;
        for (const auto& v : z) zr.emplace_back(v.get_str());
        const MpReal tiny = bmp::pow(MpReal(10), -static_cast<int>(digits) + 10);
        for (const ComplexMp& root : approx) {
            if (bmp::abs(MpReal(root.im)) > MpReal(1e-12) * (1 + root.abs())) continue;
            MpReal x(root.re);
            for (int iter = 0; iter < 200; ++iter) {
                MpReal v = 0, dv = 0;
                for (std::size_t k = zr.size(); k-- > 0;) {
                    dv = dv * x + v;
                    v = v * x + zr[k];
                }
                if (dv == 0) break;
                MpReal step = v / dv;
                x -= step;
                if (bmp::abs(step) <= tiny * (1 + bmp::abs(x))) break;
            }
            Integer p0 = 0, q0 = 1, p1 = 1, q1 = 0;
            for (int step = 0; step < 100000; ++step) {
                Integer a = floor_integer(x);
                Integer p2 = a * p1 + p0, q2 = a * q1 + q0;
                if (q2 > lead) break;
                Rational cand(p2, q2);
                cand.canonicalize();
                if (evaluate(squarefree, cand) == 0) {
                    if (std::find(out.begin(), out.end(), cand) == out.end()) out.push_back(cand);
                    break;
                }
                MpReal frac = x - MpReal(a.get_str());
                if (frac == 0) break;
                x = 1 / frac;
                p0 = p1; q0 = q1; p1 = p2; q1 = q2;
            }
        }
    }
    std::sort(out.begin(), out.end(), [](const Rational& a, const Rational& b) {
        Rational aa = abs(a), ab = abs(b);
        if (aa != ab) return aa < ab;
        return a > b;
    });
    return out;
}

}  // namespace wph
