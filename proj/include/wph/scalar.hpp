#pragma once

#include <boost/multiprecision/mpfr.hpp>

#include <string>
#include <vector>

#include "wph/arith.hpp"
#include "wph/coeff.hpp"

namespace wph {

using MpReal = boost::multiprecision::mpfr_float;

// Complex number over MPFR reals; precision follows MpReal's default at construction time.
struct ComplexMp {
    MpReal re = 0, im = 0;

    ComplexMp() = default;
    ComplexMp(MpReal r, MpReal i = 0) : re(std::move(r)), im(std::move(i)) {}
    explicit ComplexMp(const Rational& q);

    ComplexMp& operator+=(const ComplexMp& o) { re += o.re; im += o.im; return *this; }
    ComplexMp& operator-=(const ComplexMp& o) { re -= o.re; im -= o.im; return *this; }
    ComplexMp& operator*=(const ComplexMp& o) {
        MpReal r = re * o.re - im * o.im;
        im = re * o.im + im * o.re;
        re = r;
        return *this;
    }
    ComplexMp& operator/=(const ComplexMp& o);
    friend ComplexMp operator+(ComplexMp a, const ComplexMp& b) { return a += b; }
    friend ComplexMp operator-(ComplexMp a, const ComplexMp& b) { return a -= b; }
    friend ComplexMp operator*(ComplexMp a, const ComplexMp& b) { return a *= b; }
    friend ComplexMp operator/(ComplexMp a, const ComplexMp& b) { return a /= b; }
    friend ComplexMp operator-(const ComplexMp& a) { return ComplexMp(-a.re, -a.im); }
    friend bool operator==(const ComplexMp& a, const ComplexMp& b) { return a.re == b.re && a.im == b.im; }

    MpReal abs() const;
    MpReal arg() const;
    std::string to_string(int digits = 12) const;
};

ComplexMp pow(const ComplexMp& z, long k);
ComplexMp principal_root(const ComplexMp& z, unsigned k);

template <>
struct CoeffTraits<ComplexMp> {
    static bool is_zero(const ComplexMp& c) { return c.re == 0 && c.im == 0; }
    static bool is_one(const ComplexMp& c) { return c.re == 1 && c.im == 0; }
    static bool is_negative(const ComplexMp& c) { return c.im == 0 && c.re < 0; }
    static std::string str(const ComplexMp& c) { return c.to_string(); }
    static ComplexMp from_rational(const Rational& q) { return ComplexMp(q); }
};

// Sets MpReal's default precision for the lifetime of the guard.
class PrecisionGuard {
public:
    explicit PrecisionGuard(unsigned digits10);
    ~PrecisionGuard();
    PrecisionGuard(const PrecisionGuard&) = delete;
    PrecisionGuard& operator=(const PrecisionGuard&) = delete;

private:
    unsigned saved_;
};

// Exact arithmetic over Q. Roots that are not rational raise RootRequired.
struct ExactField {
    using Scalar = Rational;
    static constexpr const char* name = "exact";
    Scalar from_rational(const Rational& q) const { return q; }
    bool negligible(const Scalar& s) const { return s == 0; }
    Scalar root(const Scalar& s, unsigned k) const;
    // Rational roots of sum coeffs[i] t^i, sorted by absolute value then value.
    std::vector<Scalar> roots(const std::vector<Scalar>& coeffs) const;
    double magnitude(const Scalar& s) const { return std::abs(s.get_d()); }
};

// Complex floating point with digits10 decimal digits; every root exists.
struct FloatField {
    using Scalar = ComplexMp;
    static constexpr const char* name = "float";
    unsigned digits10 = 50;
    Scalar from_rational(const Rational& q) const { return ComplexMp(q); }
    bool negligible(const Scalar& s) const;  // |s| below 10^{-digits10/2}
    Scalar root(const Scalar& s, unsigned k) const { return principal_root(s, k); }
    std::vector<Scalar> roots(const std::vector<Scalar>& coeffs) const;  // all complex roots
    double magnitude(const Scalar& s) const { return static_cast<double>(s.abs()); }
};

// All complex roots of sum coeffs[i] t^i by simultaneous (Aberth) iteration, ordered by
// modulus then argument. Leading coefficient must be non-zero.
std::vector<ComplexMp> polynomial_roots(const std::vector<ComplexMp>& coeffs, unsigned digits10);

// Rational roots of a polynomial with rational coefficients, each verified exactly.
std::vector<Rational> rational_roots(const std::vector<Rational>& coeffs);

}  // namespace wph
