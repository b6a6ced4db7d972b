#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <set>

#include "wph/reports.hpp"

using namespace wph;

namespace {
using C = NormalFormCase;

ReproduceOptions quick() {
    ReproduceOptions o;
    o.include_slow = false;
    o.random_cases = 5;
    return o;
}
}  // namespace

TEST_CASE("family report (a)") {
    FamilyReport r = report_family(C::a);
    Json j = to_json(r);
    CHECK(j["hodge"] == Json::array({1, 18, 1}));
    CHECK(j["moduli"] == 18);
    CHECK(j["amplitude"] == 1);
    REQUIRE(j["singularities"].size() == 1);
    CHECK(j["singularities"][0]["type"] == "1/3(1,1)");
    CHECK(j["invariants"]["euler_resolved"] == 24);
    CHECK(j["invariants"]["canonical_square"] == "0");
    CHECK(j["invariants"]["noether_holds"] == true);
    CHECK(j["torelli"]["basic"]["kernel_dim"] == 1);
    CHECK(j["fibers"]["euler"] == 24);
    CHECK(j["transcendental"]["passed"] == true);
    CHECK(j["picard"]["genus"]["equal"] == true);
}

TEST_CASE("family report (c)") {
    Json j = to_json(report_family(C::c));
    CHECK(j["hodge"] == Json::array({1, 17, 1}));
    CHECK(j["moduli"] == 16);
    CHECK(j["normal_form_moduli"] == 16);
    CHECK(j["invariants"]["euler_resolved"] == 26);
    CHECK(j["invariants"]["canonical_square"] == "-2");
    CHECK(j["invariants"]["canonical_square_singular"] == "8/35");
    CHECK(j["torelli"]["basic"]["kernel_dim"] == 1);
    CHECK(j["torelli"]["generic"]["kernel_dim"] == 0);
}

TEST_CASE("family report (d)") {
    Json j = to_json(report_family(C::d));
    CHECK(j["hodge"] == Json::array({1, 18, 1}));
    CHECK(j["moduli"] == 18);
    REQUIRE(j["singularities"].size() == 1);
    CHECK(j["singularities"][0]["type"] == "1/7(1,2)");
    CHECK(j["singularities"][0]["chain"] == Json::array({4, 2}));
    CHECK(j["invariants"]["euler_resolved"] == 25);
}

TEST_CASE("rationals serialize as strings") {
    CHECK(to_json(Rational(-78, 35)) == "-78/35");
    CHECK(to_json(Rational(4)) == "4");
    CHECK(to_json(Integer(7)) == 7);
    Integer big("123456789012345678901234567890");
    CHECK(to_json(big) == "123456789012345678901234567890");
}

TEST_CASE("reports are deterministic and survive a JSON round trip") {
    for (C c : all_cases()) {
        std::string first = to_json(report_family(c)).dump();
        std::string second = to_json(report_family(c)).dump();
        CHECK(first == second);
        CHECK(Json::parse(first) == to_json(report_family(c)));
        CHECK(Json::parse(first).dump() == first);
    }
    auto rows = reproduce(quick());
    std::string a = to_json(rows).dump(), b = to_json(reproduce(quick())).dump();
    CHECK(a == b);
    CHECK(Json::parse(a).dump() == a);
    CHECK(format_table(rows) == format_table(reproduce(quick())));
}

TEST_CASE("published tables audit") {
    const auto& tables = published_quotient_bases();
    REQUIRE(tables.size() == 8);
    for (const auto& t : tables) {
        BasisAudit a = audit_published_basis(t);
        CHECK(a.corrected_is_basis);
        CHECK(a.alternatives_consistent);
        CHECK(a.dimension == t.entries.size());
        for (const auto& c : a.corrections) CHECK(c.find("no defect found") == std::string::npos);
    }
    // The (a) degree-14 table and both (d) tables stand as printed.
    CHECK(audit_published_basis(tables[0]).printed_is_basis);
    CHECK(audit_published_basis(tables[6]).printed_is_basis);
    CHECK(audit_published_basis(tables[7]).printed_is_basis);
    CHECK_FALSE(audit_published_basis(tables[1]).printed_is_basis);
}

TEST_CASE("reproduction harness") {
    auto rows = reproduce(quick());
    CHECK(all_accepted(rows));
    std::set<int> criteria;
    for (const auto& r : rows) criteria.insert(r.criterion);
    CHECK(criteria.size() == 13);
    std::set<std::string> ids;
    for (const auto& r : rows) CHECK(ids.insert(r.id).second);

    auto find = [&](const std::vector<CheckRow>& rs, const std::string& id) {
        return *std::find_if(rs.begin(), rs.end(), [&](const CheckRow& r) { return r.id == id; });
    };
    CHECK(find(rows, "4.basic.b").status == CheckStatus::expected_fail);
    CHECK(find(rows, "9.A2").status == CheckStatus::expected_fail);
    CHECK(find(rows, "3.R22").status == CheckStatus::pass);

    ReproduceOptions corrupt = quick();
    corrupt.corrupt = "3.R22";
    auto bad = reproduce(corrupt);
    CHECK_FALSE(all_accepted(bad));
    CHECK(find(bad, "3.R22").status == CheckStatus::fail);
    corrupt.corrupt = "4.basic.b";
    CHECK(find(reproduce(corrupt), "4.basic.b").status == CheckStatus::fail);

    Json j = to_json(rows);
    CHECK(j["summary"]["accepted"] == true);
    CHECK(j["summary"]["fail"] == 0);
    CHECK(j["checks"].size() == rows.size());
    CHECK(to_string(CheckStatus::expected_fail) == "XFAIL");
}
