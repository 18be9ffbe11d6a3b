#include <doctest.h>

#include <json.hpp>

#include "mixedpoly/families.hpp"
#include "mixedpoly/mixed.hpp"

using namespace mixedpoly;

TEST_CASE("mixed generating functions agree with the convolution forms") {
    for (MixedKind kind : kAllMixed) {
        for (int r = 1; r <= 3; ++r) {
            for (int s = 1; s <= 3; ++s) {
                const MixedSpec spec{kind, r, s};
                CAPTURE(mixed_symbol(kind));
                CAPTURE(r);
                CAPTURE(s);
                const TSeries gf = mixed_gf(spec, 12);
                for (std::size_t n = 0; n <= 12; ++n) {
                    CHECK(nth_poly(gf, n) == mixed_poly(spec, n));
                }
            }
        }
    }
}

TEST_CASE("CD collapses by the sign of r - s") {
    const std::size_t T = 10;
    CHECK(cd_collapsed_gf(2, 2, T) == primitive_series(Primitive::BinomialX, T));
    CHECK(cd_collapsed_gf(3, 1, T) == family_gf({FamilyKind::Cauchy, 2}, T));
    CHECK(cd_collapsed_gf(1, 3, T) == family_gf({FamilyKind::Daehee, 2}, T));
    CHECK(mixed_gf({MixedKind::CD, 2, 2}, 3).coeff(3) * XPoly(6) == falling_factorial(3));
}

TEST_CASE("mixed orders must be positive") {
    CHECK_THROWS(mixed_gf({MixedKind::BE, 0, 1}, 4));
    CHECK_THROWS(mixed_poly({MixedKind::CC, 1, -1}, 2));
}

TEST_CASE("every identity passes in its corrected form") {
    for (IdentityId id : kAllIdentities) {
        CAPTURE(identity_name(id));
        const auto reports = verify_identity(id, 8, {1, 3}, {1, 3}, Variant::Corrected);
        CHECK(all_pass(reports));
        const std::size_t pairs = identity_is_single_order(id) ? 3 : 9;
        CHECK(reports.size() == pairs * 9);
    }
}

TEST_CASE("single-order identities report s = r") {
    const auto reports = verify_identity(IdentityId::E11, 3, {1, 2}, {1, 3}, Variant::Corrected);
    for (const auto& rep : reports) {
        CHECK(rep.instance.s == rep.instance.r);
    }
}

TEST_CASE("as-printed variants of E34 and E40 fail") {
    const auto e34 = verify_identity(IdentityId::E34, 8, {1, 2}, {1, 2}, Variant::AsPrinted);
    CHECK(!all_pass(e34));
    const auto e40 = verify_identity(IdentityId::E40, 8, {1, 2}, {1, 2}, Variant::AsPrinted);
    CHECK(!all_pass(e40));
    for (const auto& rep : e34) {
        CHECK(rep.diff == rep.lhs - rep.rhs);
        CHECK(rep.variant == Variant::AsPrinted);
    }
}

TEST_CASE("reports are sorted by r, s, n") {
    const auto reports = verify_identity(IdentityId::E37, 2, {1, 2}, {1, 2}, Variant::Corrected);
    REQUIRE(reports.size() == 12);
    for (std::size_t i = 1; i < reports.size(); ++i) {
        const auto& a = reports[i - 1].instance;
        const auto& b = reports[i].instance;
        CHECK(std::tie(a.r, a.s, a.n) < std::tie(b.r, b.s, b.n));
    }
}

TEST_CASE("report rendering") {
    const auto reports = verify_identity(IdentityId::E11, 1, {1, 1}, {1, 1}, Variant::Corrected);
    const auto j = nlohmann::json::parse(render_report(reports, OutputFormat::Json));
    REQUIRE(j.is_array());
    REQUIRE(j.size() == 2);
    CHECK(j[1]["identity"] == "E11");
    CHECK(j[1]["verdict"] == "pass");
    CHECK(j[1]["diff"] == "0");
    const std::string csv = render_report(reports, OutputFormat::Csv);
    CHECK(csv.rfind("identity,variant,n,r,s,verdict,diff\n", 0) == 0);
    CHECK(render_report(reports, OutputFormat::Latex).find("\\begin{tabular}") != std::string::npos);
}

TEST_CASE("identity and variant names parse") {
    for (IdentityId id : kAllIdentities) {
        CHECK(parse_identity(identity_name(id)) == id);
    }
    CHECK(!parse_identity("E12").has_value());
    CHECK(parse_variant("as-printed") == Variant::AsPrinted);
    CHECK(parse_variant("corrected") == Variant::Corrected);
    CHECK(identity_has_variants(IdentityId::E40));
    CHECK(!identity_has_variants(IdentityId::E11));
}
