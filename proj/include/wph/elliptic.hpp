#pragma once

#include <optional>
#include <string>
#include <vector>

#include "wph/lattice.hpp"

namespace wph {

enum class FiberKind { I, II, III, IV, IStar, IIStar, IIIStar, IVStar };

// Kodaira fiber type; b is the index of I_b and I*_b, multiplicity only applies to I_b.
struct FiberType {
    FiberKind kind = FiberKind::I;
    int b = 0;
    int multiplicity = 1;
    std::string name() const;  // "I3", "2I0", "I*1", "II*"
    friend bool operator==(const FiberType&, const FiberType&) = default;
};

FiberType parse_fiber(const std::string& text);
// "2I0 + 24xI1", "I3+II+19*I1"; a leading count N followed by 'x', '*' or the times sign repeats a fiber.
std::vector<FiberType> parse_fiber_configuration(const std::string& text);

struct FiberData {
    int euler = 0;
    std::optional<Lattice> lattice;  // span of the components missing the zero section, when non-trivial
    std::string lattice_name;        // "A2(-1)", or "0"
};
FiberData kodaira_fiber(const FiberType& f);

int fiber_config_euler(const std::vector<FiberType>& config);

// delta = chi + 2g - 2 + sum (1 - 1/m); kappa is -infinity, 0 or 1 by its sign.
struct KodairaDimension {
    Rational delta;
    bool minus_infinity = false;
    int kappa = 0;  // valid when !minus_infinity
    std::string to_string() const;
};
KodairaDimension kodaira_dimension(long chi, long genus, const std::vector<int>& multiplicities);

// Picard lattice of the general member of each amplitude-one family, read off the
// elliptic fibration of its minimal resolution.
Lattice picard_from_configuration(char family_case);
// Transcendental lattice used for the same family.
Lattice transcendental_lattice(char family_case);

}  // namespace wph
