#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <vector>

namespace wph {

using Integer = mpz_class;
using Rational = mpq_class;

std::string to_string(const Integer& z);
// "p/q", or "p" when the denominator is 1.
std::string to_string(const Rational& q);

Rational parse_rational(const std::string& text);

Rational pow(const Rational& base, long exponent);
Integer pow(const Integer& base, unsigned long exponent);

// Exact k-th root when one exists in Q (k >= 1). Picks the positive root for even k.
bool rational_root(const Rational& value, unsigned k, Rational& out);

long long gcd_all(const std::vector<long long>& values);
long long mod_inverse(long long a, long long m);  // requires gcd(a, m) = 1

// Representative of q in [0, modulus).
Rational reduce_mod(const Rational& q, const Rational& modulus);

}  // namespace wph
