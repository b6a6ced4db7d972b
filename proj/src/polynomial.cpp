#include "wph/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

namespace wph {

void validate_weights(const Weights& w) {
    if (w.empty()) throw InvalidInput("empty weight vector");
    for (int a : w)
        if (a <= 0) throw InvalidInput("weights must be positive integers");
}

bool well_formed(const Weights& w) {
    validate_weights(w);
    if (w.size() < 2) return true;
    for (std::size_t skip = 0; skip < w.size(); ++skip) {
        int g = 0;
        for (std::size_t i = 0; i < w.size(); ++i)
            if (i != skip) g = std::gcd(g, w[i]);
        if (g != 1) return false;
    }
    return true;
}

long weighted_degree(const Exponents& e, const Weights& w) {
    long d = 0;
    for (std::size_t i = 0; i < e.size(); ++i) d += static_cast<long>(e[i]) * w[i];
    return d;
}

static void enumerate_rec(const Weights& w, std::size_t i, long rem, Exponents& cur, std::vector<Exponents>& out) {
    if (i + 1 == w.size()) {
        if (rem % w[i] == 0) {
            cur[i] = static_cast<int>(rem / w[i]);
            out.push_back(cur);
        }
        return;
    }
    for (long e = rem / w[i]; e >= 0; --e) {
        cur[i] = static_cast<int>(e);
        enumerate_rec(w, i + 1, rem - e * w[i], cur, out);
    }
}

std::vector<Exponents> enumerate_monomials(const Weights& w, long d) {
    validate_weights(w);
    std::vector<Exponents> out;
    if (d < 0) return out;
    Exponents cur(w.size(), 0);
    enumerate_rec(w, 0, d, cur, out);
    return out;
}

std::string monomial_string(const Exponents& e) {
    std::string s;
    for (std::size_t i = 0; i < e.size(); ++i) {
        if (e[i] == 0) continue;
        if (!s.empty()) s += "*";
        s += "x" + std::to_string(i);
        if (e[i] > 1) s += "^" + std::to_string(e[i]);
    }
    return s.empty() ? "1" : s;
}

namespace {

class Parser {
public:
    Parser(const std::string& text, const Weights& w) : weights_(w) {
        for (char ch : text)
            if (!std::isspace(static_cast<unsigned char>(ch))) src_ += ch;
    }

    WPolynomial parse() {
        WPolynomial out(weights_);
        if (src_.empty()) throw ParseError("empty polynomial");
        bool negate = false;
        if (peek() == '+' || peek() == '-') negate = get() == '-';
        add(out, negate);
        while (pos_ < src_.size()) {
            char op = get();
            if (op != '+' && op != '-') fail("expected '+' or '-'");
            add(out, op == '-');
        }
        return out;
    }

private:
    void add(WPolynomial& out, bool negate) {
        Rational coeff(1);
        Exponents e(weights_.size(), 0);
        if (std::isdigit(static_cast<unsigned char>(peek()))) {
            coeff = parse_coeff();
            if (peek() == '*') {
                get();
                parse_monomial(e);
            }
        } else if (peek() == 'x') {
            parse_monomial(e);
        } else {
            fail("expected a coefficient or a variable");
        }
        out.add_term(e, negate ? Rational(-coeff) : coeff);
    }

    Rational parse_coeff() {
        Integer num(parse_uint());
        Integer den(1);
        if (peek() == '/') {
            get();
            den = Integer(parse_uint());
            if (den == 0) fail("zero denominator");
        }
        Rational q(num, den);
        q.canonicalize();
        return q;
    }

    void parse_monomial(Exponents& e) {
        parse_factor(e);
        while (peek() == '*') {
            get();
            parse_factor(e);
        }
    }

    void parse_factor(Exponents& e) {
        if (get() != 'x') fail("expected variable 'x<i>'");
        std::string idx = parse_uint();
        if (idx.size() > 6) fail("variable index too large");
        std::size_t i = std::stoul(idx);
        if (i >= weights_.size()) fail("variable x" + idx + " outside the weighted ring");
        long exp = 1;
        if (peek() == '^') {
            get();
            std::string digits = parse_uint();
            if (digits.size() > 6) fail("exponent too large");
            exp = std::stol(digits);
        }
        e[i] += static_cast<int>(exp);
    }

    std::string parse_uint() {
        std::size_t start = pos_;
        while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) ++pos_;
        if (start == pos_) fail("expected digits");
        return src_.substr(start, pos_ - start);
    }

    char peek() const { return pos_ < src_.size() ? src_[pos_] : '\0'; }
    char get() {
        if (pos_ >= src_.size()) fail("unexpected end of input");
        return src_[pos_++];
    }
    [[noreturn]] void fail(const std::string& what) const {
        throw ParseError("parse error at offset " + std::to_string(pos_) + ": " + what);
    }

    std::string src_;
    std::size_t pos_ = 0;
    const Weights& weights_;
};

}  // namespace

WPolynomial parse_polynomial(const std::string& text, const Weights& weights) {
    validate_weights(weights);
    return Parser(text, weights).parse();
}

long require_homogeneous(const WPolynomial& f) {
    if (f.is_zero()) throw InvalidInput("zero polynomial");
    if (!f.is_homogeneous()) throw InvalidInput("polynomial is not weighted homogeneous: " + f.to_string());
    return f.degree();
}

}  // namespace wph
