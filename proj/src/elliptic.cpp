#include "wph/elliptic.hpp"

#include <cctype>

#include "wph/errors.hpp"

namespace wph {

std::string FiberType::name() const {
    std::string m = multiplicity > 1 ? std::to_string(multiplicity) : "";
    switch (kind) {
        case FiberKind::I: return m + "I" + std::to_string(b);
        case FiberKind::II: return "II";
        case FiberKind::III: return "III";
        case FiberKind::IV: return "IV";
        case FiberKind::IStar: return "I*" + std::to_string(b);
        case FiberKind::IIStar: return "II*";
        case FiberKind::IIIStar: return "III*";
        case FiberKind::IVStar: return "IV*";
    }
    return "?";
}

static std::string squeeze(const std::string& text) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c)) && c != '_' && c != '^' && c != '{' && c != '}') s += c;
    return s;
}

FiberType parse_fiber(const std::string& text) {
    std::string s = squeeze(text);
    FiberType f;
    std::size_t pos = 0;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos > 0) f.multiplicity = std::stoi(s.substr(0, pos));
    std::string body = s.substr(pos);
    bool star = false;
    std::string digits;
    std::string roman;
    for (char c : body) {
        if (c == '*') star = true;
        else if (std::isdigit(static_cast<unsigned char>(c))) digits += c;
        else if (c == 'I' || c == 'V') roman += c;
        else throw ParseError("bad fiber type '" + text + "'");
    }
    if (roman == "I") {
        f.kind = star ? FiberKind::IStar : FiberKind::I;
        if (digits.empty()) throw ParseError("fiber I needs an index: '" + text + "'");
        f.b = std::stoi(digits);
    } else {
        if (!digits.empty()) throw ParseError("unexpected index in '" + text + "'");
        if (roman == "II") f.kind = star ? FiberKind::IIStar : FiberKind::II;
        else if (roman == "III") f.kind = star ? FiberKind::IIIStar : FiberKind::III;
        else if (roman == "IV") f.kind = star ? FiberKind::IVStar : FiberKind::IV;
        else throw ParseError("unknown fiber type '" + text + "'");
    }
    if (f.multiplicity < 1) throw ParseError("multiplicity must be positive");
    if (f.multiplicity > 1 && f.kind != FiberKind::I) throw InvalidInput("only I_b fibers can be multiple");
    return f;
}

std::vector<FiberType> parse_fiber_configuration(const std::string& text) {
    std::string s = squeeze(text);
    // Normalise the UTF-8 times sign to 'x'.
    for (std::size_t p; (p = s.find("\xC3\x97")) != std::string::npos;) s.replace(p, 2, "x");
    std::vector<FiberType> out;
    std::size_t start = 0;
    while (start < s.size()) {
        std::size_t end = s.find('+', start);
        if (end == std::string::npos) end = s.size();
        std::string term = s.substr(start, end - start);
        if (term.empty()) throw ParseError("empty term in fiber configuration");
        int count = 1;
        std::size_t digits = 0;
        while (digits < term.size() && std::isdigit(static_cast<unsigned char>(term[digits]))) ++digits;
        if (digits > 0 && digits < term.size() && (term[digits] == 'x' || term[digits] == '*')) {
            count = std::stoi(term.substr(0, digits));
            term = term.substr(digits + 1);
        }
        FiberType f = parse_fiber(term);
        for (int i = 0; i < count; ++i) out.push_back(f);
        start = end + 1;
    }
    return out;
}

FiberData kodaira_fiber(const FiberType& f) {
    FiberData d;
    auto set = [&](int e, std::optional<Lattice> l, std::string name) {
        d.euler = e;
        d.lattice = std::move(l);
        d.lattice_name = std::move(name);
    };
    switch (f.kind) {
        case FiberKind::I:
            if (f.b < 0) throw InvalidInput("I_b needs b >= 0");
            if (f.b <= 1) set(f.b, std::nullopt, "0");
            else set(f.b, root_lattice('A', f.b - 1).scaled(-1), "A" + std::to_string(f.b - 1) + "(-1)");
            break;
        case FiberKind::II: set(2, std::nullopt, "0"); break;
        case FiberKind::III: set(3, root_lattice('A', 1).scaled(-1), "A1(-1)"); break;
        case FiberKind::IV: set(4, root_lattice('A', 2).scaled(-1), "A2(-1)"); break;
        case FiberKind::IStar:
            if (f.b < 0) throw InvalidInput("I*_b needs b >= 0");
            set(f.b + 6, root_lattice('D', f.b + 4).scaled(-1), "D" + std::to_string(f.b + 4) + "(-1)");
            break;
        case FiberKind::IIStar: set(10, root_lattice('E', 8).scaled(-1), "E8(-1)"); break;
        case FiberKind::IIIStar: set(9, root_lattice('E', 7).scaled(-1), "E7(-1)"); break;
        case FiberKind::IVStar: set(8, root_lattice('E', 6).scaled(-1), "E6(-1)"); break;
    }
    return d;
}

int fiber_config_euler(const std::vector<FiberType>& config) {
    int e = 0;
    for (const auto& f : config) e += kodaira_fiber(f).euler;
    return e;
}

std::string KodairaDimension::to_string() const { return minus_infinity ? "-inf" : std::to_string(kappa); }

KodairaDimension kodaira_dimension(long chi, long genus, const std::vector<int>& multiplicities) {
    if (genus < 0) throw InvalidInput("negative genus");
    KodairaDimension k;
    k.delta = Rational(chi + 2 * genus - 2);
    for (int m : multiplicities) {
        if (m < 2) throw InvalidInput("fiber multiplicities must be at least 2");
        k.delta += 1 - Rational(1, m);
    }
    k.delta.canonicalize();
    if (k.delta < 0) k.minus_infinity = true;
    else k.kappa = k.delta == 0 ? 0 : 1;
    return k;
}

Lattice picard_from_configuration(char family_case) {
    switch (family_case) {
        case 'a': return Lattice::from_rows({{0, 1}, {1, -3}});
        case 'b': return Lattice::from_rows({{0, 1, 0}, {1, -3, 1}, {0, 1, -2}});
        case 'c': return hyperbolic_plane() + root_lattice('A', 2).scaled(-1);
        case 'd': return hyperbolic_plane();
        default: throw InvalidInput(std::string("unknown family case '") + family_case + "'");
    }
}

Lattice transcendental_lattice(char family_case) {
    Lattice e8m = root_lattice('E', 8).scaled(-1);
    switch (family_case) {
        case 'a':
        case 'd': return copies(hyperbolic_plane(), 2) + copies(e8m, 2);
        case 'b': return diagonal_lattice({2}) + hyperbolic_plane() + copies(e8m, 2);
        case 'c': return root_lattice('A', 2) + copies(e8m, 2);
        default: throw InvalidInput(std::string("unknown family case '") + family_case + "'");
    }
}

}  // namespace wph
