#include "wph/arith.hpp"

#include <numeric>

#include "wph/errors.hpp"

namespace wph {

std::string to_string(const Integer& z) { return z.get_str(); }

std::string to_string(const Rational& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Rational parse_rational(const std::string& text) {
    try {
        Rational q(text, 10);
        if (q.get_den() == 0) throw ParseError("zero denominator in '" + text + "'");
        q.canonicalize();
        return q;
    } catch (const std::invalid_argument&) {
        throw ParseError("not a rational number: '" + text + "'");
    }
}

Integer pow(const Integer& base, unsigned long exponent) {
    Integer out;
    mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), exponent);
    return out;
}

Rational pow(const Rational& base, long exponent) {
    if (exponent < 0) {
        if (base == 0) throw InvalidInput("zero raised to a negative power");
        return pow(Rational(1) / base, -exponent);
    }
    Rational out(pow(base.get_num(), static_cast<unsigned long>(exponent)),
                 pow(base.get_den(), static_cast<unsigned long>(exponent)));
    return out;
}

static bool integer_root(const Integer& v, unsigned k, Integer& out) {
    if (v < 0) {
        if (k % 2 == 0) return false;
        Integer pos = -v;
        if (!integer_root(pos, k, out)) return false;
        out = -out;
        return true;
    }
    return mpz_root(out.get_mpz_t(), v.get_mpz_t(), k) != 0;
}

bool rational_root(const Rational& value, unsigned k, Rational& out) {
    if (k == 0) throw InvalidInput("zeroth root");
    Integer n, d;
    if (!integer_root(value.get_num(), k, n)) return false;
    if (!integer_root(value.get_den(), k, d)) return false;
    out = Rational(n, d);
    out.canonicalize();
    return true;
}

long long gcd_all(const std::vector<long long>& values) {
    long long g = 0;
    for (long long v : values) g = std::gcd(g, v);
    return g;
}

long long mod_inverse(long long a, long long m) {
    long long r0 = ((a % m) + m) % m, r1 = m, s0 = 1, s1 = 0;
    while (r1 != 0) {
        long long q = r0 / r1;
        long long t = r0 - q * r1; r0 = r1; r1 = t;
        t = s0 - q * s1; s0 = s1; s1 = t;
    }
    if (r0 != 1) throw InvalidInput("no inverse modulo " + std::to_string(m));
    return ((s0 % m) + m) % m;
}

Rational reduce_mod(const Rational& q, const Rational& modulus) {
    Rational t = q / modulus;
    Integer fl;
    mpz_fdiv_q(fl.get_mpz_t(), t.get_num_mpz_t(), t.get_den_mpz_t());
    Rational out = q - Rational(fl) * modulus;
    out.canonicalize();
    return out;
}

}  // namespace wph
