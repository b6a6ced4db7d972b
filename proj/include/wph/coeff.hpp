#pragma once

#include <string>

#include "wph/arith.hpp"

namespace wph {

// Coefficient behaviour needed by BasicPolynomial. Specialised per scalar type.
template <class C>
struct CoeffTraits;

template <>
struct CoeffTraits<Rational> {
    static bool is_zero(const Rational& c) { return sgn(c) == 0; }
    static bool is_one(const Rational& c) { return c == 1; }
    static bool is_negative(const Rational& c) { return sgn(c) < 0; }
    static std::string str(const Rational& c) { return to_string(c); }
    static Rational from_rational(const Rational& q) { return q; }
};

}  // namespace wph
