// One PASS/FAIL line per acceptance criterion. Exit status 1 when any criterion fails.
#include <iostream>
#include <map>
#include <set>

#include "wph/reports.hpp"

namespace {

const std::map<int, std::string> kCriteria = {
    {1, "classification of amplitude-one families"},
    {2, "Hodge numbers and moduli of every table row"},
    {3, "graded pieces and kernel for the generic (d) member"},
    {4, "Torelli kernels of the basic and generic members"},
    {5, "printed quotient bases modulo the two documented typos"},
    {6, "singularities, chains, e and K^2 of the resolutions"},
    {7, "discrepancies and the case (c) K^2 total"},
    {8, "Picard genera and transcendental lattice checks"},
    {9, "discriminant forms q(A2), q(<2>) and q(A2) vs q(A2(-1))"},
    {10, "ranks of the T(2,3,r) graph lattices"},
    {11, "fiber Euler numbers and Kodaira dimension"},
    {12, "normal-form moduli and reduction round trips"},
    {13, "series, congruence and continued-fraction property suites"}};

// Expected failures the criteria themselves allow: the annotated (b) kernel generator and
// the (7,4,2) table entry. Every other XFAIL row means the printed value is not reproduced.
const std::set<std::string> kSanctioned = {"4.basic.b", "5.a.15"};

}  // namespace

int main() {
    std::vector<wph::CheckRow> rows = wph::reproduce();
    bool all = true;
    for (const auto& [criterion, title] : kCriteria) {
        std::vector<const wph::CheckRow*> broken;
        std::size_t count = 0;
        for (const auto& r : rows) {
            if (r.criterion != criterion) continue;
            ++count;
            bool ok = r.status == wph::CheckStatus::pass ||
                      (r.status == wph::CheckStatus::expected_fail && kSanctioned.count(r.id));
            if (!ok) broken.push_back(&r);
        }
        bool pass = count > 0 && broken.empty();
        all = all && pass;
        std::cout << "Criterion " << criterion << ": " << (pass ? "PASS" : "FAIL") << " - " << title << " ("
                  << count - broken.size() << "/" << count << " checks)\n";
        for (const auto* r : broken) {
            std::cout << "    " << r->id << ": expected " << r->expected << ", got " << r->actual;
            if (!r->note.empty()) std::cout << " [" << r->note << "]";
            std::cout << "\n";
        }
    }
    return all ? 0 : 1;
}
