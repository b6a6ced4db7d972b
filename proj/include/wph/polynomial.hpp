#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "wph/arith.hpp"
#include "wph/coeff.hpp"
#include "wph/errors.hpp"

namespace wph {

using Weights = std::vector<int>;
using Exponents = std::vector<int>;

void validate_weights(const Weights& w);
// Every n-element sub-multiset has gcd 1.
bool well_formed(const Weights& w);
long weighted_degree(const Exponents& e, const Weights& w);

// Graded order: lower weighted degree first, then larger exponent of x0, then x1, ...
struct MonomialOrder {
    const Weights* weights;
    bool operator()(const Exponents& a, const Exponents& b) const {
        long da = weighted_degree(a, *weights), db = weighted_degree(b, *weights);
        if (da != db) return da < db;
        return a > b;
    }
};

// All monomials of weighted degree d, in MonomialOrder.
std::vector<Exponents> enumerate_monomials(const Weights& w, long d);
std::string monomial_string(const Exponents& e);

// Sparse polynomial in x0..xn with positive integer weights. Zero coefficients are never stored.
template <class C>
class BasicPolynomial {
public:
    using Coeff = C;
    using Traits = CoeffTraits<C>;
    // Within one weighted degree this is exactly MonomialOrder.
    using TermMap = std::map<Exponents, C, std::greater<Exponents>>;

    BasicPolynomial() = default;
    explicit BasicPolynomial(Weights w) : weights_(std::move(w)) { validate_weights(weights_); }

    static BasicPolynomial monomial(const Weights& w, const Exponents& e, const C& c) {
        BasicPolynomial p(w);
        p.add_term(e, c);
        return p;
    }
    static BasicPolynomial variable(const Weights& w, int i) {
        Exponents e(w.size(), 0);
        e.at(i) = 1;
        return monomial(w, e, Traits::from_rational(Rational(1)));
    }
    static BasicPolynomial constant(const Weights& w, const C& c) {
        return monomial(w, Exponents(w.size(), 0), c);
    }

    const Weights& weights() const { return weights_; }
    int nvars() const { return static_cast<int>(weights_.size()); }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }

    C coefficient(const Exponents& e) const {
        auto it = terms_.find(e);
        return it == terms_.end() ? C(Traits::from_rational(Rational(0))) : it->second;
    }
    void add_term(const Exponents& e, const C& c) {
        if (e.size() != weights_.size()) throw InvalidInput("monomial has wrong number of variables");
        for (int v : e)
            if (v < 0) throw InvalidInput("negative exponent");
        if (Traits::is_zero(c)) return;
        auto [it, inserted] = terms_.emplace(e, c);
        if (!inserted) {
            it->second += c;
            if (Traits::is_zero(it->second)) terms_.erase(it);
        }
    }
    void set_term(const Exponents& e, const C& c) {
        terms_.erase(e);
        add_term(e, c);
    }

    bool is_homogeneous() const {
        if (terms_.empty()) return true;
        long d = weighted_degree(terms_.begin()->first, weights_);
        for (const auto& [e, c] : terms_)
            if (weighted_degree(e, weights_) != d) return false;
        return true;
    }
    // Weighted degree of a non-zero homogeneous polynomial.
    long degree() const {
        if (terms_.empty()) throw InvalidInput("zero polynomial has no degree");
        if (!is_homogeneous()) throw InvalidInput("polynomial is not weighted homogeneous");
        return weighted_degree(terms_.begin()->first, weights_);
    }

    BasicPolynomial& operator+=(const BasicPolynomial& o) {
        check_compatible(o);
        for (const auto& [e, c] : o.terms_) add_term(e, c);
        return *this;
    }
    BasicPolynomial& operator-=(const BasicPolynomial& o) {
        check_compatible(o);
        for (const auto& [e, c] : o.terms_) add_term(e, -c);
        return *this;
    }
    BasicPolynomial& operator*=(const C& s) {
        if (Traits::is_zero(s)) {
            terms_.clear();
            return *this;
        }
        for (auto& [e, c] : terms_) c *= s;
        return *this;
    }
    friend BasicPolynomial operator+(BasicPolynomial a, const BasicPolynomial& b) { return a += b; }
    friend BasicPolynomial operator-(BasicPolynomial a, const BasicPolynomial& b) { return a -= b; }
    friend BasicPolynomial operator*(BasicPolynomial a, const C& s) { return a *= s; }
    friend BasicPolynomial operator*(const C& s, BasicPolynomial a) { return a *= s; }
    friend BasicPolynomial operator-(BasicPolynomial a) { return a *= C(Traits::from_rational(Rational(-1))); }
    friend BasicPolynomial operator*(const BasicPolynomial& a, const BasicPolynomial& b) {
        a.check_compatible(b);
        BasicPolynomial out(a.weights_);
        Exponents e(a.weights_.size());
        for (const auto& [ea, ca] : a.terms_)
            for (const auto& [eb, cb] : b.terms_) {
                for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
                out.add_term(e, ca * cb);
            }
        return out;
    }
    friend bool operator==(const BasicPolynomial& a, const BasicPolynomial& b) {
        return a.weights_ == b.weights_ && a.terms_ == b.terms_;
    }

    BasicPolynomial pow(unsigned k) const {
        BasicPolynomial result = constant(weights_, Traits::from_rational(Rational(1)));
        BasicPolynomial base = *this;
        while (k > 0) {
            if (k & 1U) result = result * base;
            k >>= 1U;
            if (k > 0) base = base * base;
        }
        return result;
    }

    BasicPolynomial partial(int i) const {
        if (i < 0 || i >= nvars()) throw InvalidInput("variable index out of range");
        BasicPolynomial out(weights_);
        for (const auto& [e, c] : terms_) {
            if (e[i] == 0) continue;
            Exponents f = e;
            f[i] -= 1;
            out.add_term(f, c * C(Traits::from_rational(Rational(e[i]))));
        }
        return out;
    }

    // Coefficient of x_i^k viewed as a polynomial in the remaining variables.
    BasicPolynomial coefficient_of_power(int i, int k) const {
        BasicPolynomial out(weights_);
        for (const auto& [e, c] : terms_) {
            if (e[i] != k) continue;
            Exponents f = e;
            f[i] = 0;
            out.add_term(f, c);
        }
        return out;
    }
    int max_exponent(int i) const {
        int m = 0;
        for (const auto& [e, c] : terms_) m = std::max(m, e[i]);
        return m;
    }

    template <class F>
    BasicPolynomial filter(F keep) const {
        BasicPolynomial out(weights_);
        for (const auto& [e, c] : terms_)
            if (keep(e)) out.terms_.emplace(e, c);
        return out;
    }

    // Exact division by a monomial that divides every term.
    BasicPolynomial divide_by_monomial(const Exponents& m) const {
        BasicPolynomial out(weights_);
        for (const auto& [e, c] : terms_) {
            Exponents f = e;
            for (std::size_t i = 0; i < f.size(); ++i) {
                f[i] -= m[i];
                if (f[i] < 0) throw InvalidInput("monomial does not divide polynomial");
            }
            out.terms_.emplace(f, c);
        }
        return out;
    }

    // Ring homomorphism x_i -> assignment[i]; unassigned variables are fixed.
    // Each assignment must be homogeneous of degree a_i (zero is allowed).
    BasicPolynomial substitute(const std::vector<std::optional<BasicPolynomial>>& assignment) const {
        if (assignment.size() != weights_.size()) throw InvalidInput("substitution has wrong arity");
        std::vector<BasicPolynomial> image;
        for (int i = 0; i < nvars(); ++i) {
            if (!assignment[i]) {
                image.push_back(variable(weights_, i));
                continue;
            }
            const BasicPolynomial& p = *assignment[i];
            if (p.weights_ != weights_) throw InvalidInput("substitution uses different weights");
            if (!p.is_zero() && (!p.is_homogeneous() || p.degree() != weights_[i]))
                throw DegreeMismatch("assignment for x" + std::to_string(i) + " is not of degree " +
                                     std::to_string(weights_[i]));
            image.push_back(p);
        }
        std::vector<std::vector<BasicPolynomial>> powers(weights_.size());
        for (int i = 0; i < nvars(); ++i) {
            powers[i].push_back(constant(weights_, Traits::from_rational(Rational(1))));
            powers[i].push_back(image[i]);
        }
        BasicPolynomial out(weights_);
        for (const auto& [e, c] : terms_) {
            BasicPolynomial term = constant(weights_, c);
            for (int i = 0; i < nvars(); ++i) {
                while (static_cast<int>(powers[i].size()) <= e[i]) powers[i].push_back(powers[i].back() * image[i]);
                if (e[i] > 0) term = term * powers[i][e[i]];
            }
            out += term;
        }
        return out;
    }

    std::string to_string() const {
        if (terms_.empty()) return "0";
        std::vector<Exponents> order;
        for (const auto& [e, c] : terms_) order.push_back(e);
        std::stable_sort(order.begin(), order.end(), MonomialOrder{&weights_});
        std::ostringstream os;
        bool first = true;
        for (const Exponents& e : order) {
            const C& c = terms_.at(e);
            bool constant_term = std::all_of(e.begin(), e.end(), [](int v) { return v == 0; });
            bool neg = Traits::is_negative(c);
            C mag = neg ? C(-c) : c;
            if (first) os << (neg ? "-" : "");
            else os << (neg ? " - " : " + ");
            first = false;
            if (constant_term) {
                os << Traits::str(mag);
            } else if (Traits::is_one(mag)) {
                os << monomial_string(e);
            } else {
                os << Traits::str(mag) << "*" << monomial_string(e);
            }
        }
        return os.str();
    }

private:
    void check_compatible(const BasicPolynomial& o) const {
        if (o.weights_ != weights_) throw InvalidInput("polynomials live in different weighted rings");
    }

    Weights weights_;
    TermMap terms_;
};

using WPolynomial = BasicPolynomial<Rational>;

WPolynomial parse_polynomial(const std::string& text, const Weights& weights);

// Degree-d part check and (F, d) validation shared by the analysis modules.
long require_homogeneous(const WPolynomial& f);

}  // namespace wph
