#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "xorgame/bounds.hpp"
#include "xorgame/certify.hpp"
#include "xorgame/constants.hpp"
#include "xorgame/rng.hpp"

using namespace xorgame;

TEST_CASE("L_K grids certify at the reference resolution") {
    for (int K : {4, 5, 6}) {
        const CertificationReport rep = certify_lk_grid(K);
        CHECK(rep.pass);
        CHECK(rep.worst_upper <= -1e-4);
        CHECK(rep.failing_cells.empty());
    }
}

TEST_CASE("tightened threshold fails with reported cells") {
    const CertificationReport rep = certify_lk_grid(4, 25, -1.0);
    CHECK(!rep.pass);
    CHECK(!rep.failing_cells.empty());
    CHECK(rep.worst_upper > -1.0);
}

TEST_CASE("sqrt-curve regions certify at the reference grids") {
    const CertificationReport r2a = certify_region_2a();
    CHECK(r2a.pass);
    CHECK(r2a.worst_upper <= -1e-4);
    const CertificationReport r2b = certify_region_2b();
    CHECK(r2b.pass);
    const CertificationReport r3 = certify_region_3();
    CHECK(r3.pass);
    CHECK(r3.worst_upper <= -0.01);
}

TEST_CASE("a coarse grid may fail to certify, without error") {
    const CertificationReport rep = certify_region_2b(10, 10);
    CHECK(rep.pass == rep.failing_cells.empty());  // either outcome is a report
}

TEST_CASE("K >= 7 expression and side conditions") {
    const CertificationReport rep = certify_k_geq_7();
    CHECK(rep.pass);
    CHECK(rep.worst_upper < -0.016);
    const iv::Interval a7 = alpha_star_iv(7);
    CHECK(a7.lo > 0.0);
    CHECK(a7.hi < 0.5);
    const iv::Interval b7 = beta_K_iv(7);
    CHECK(b7.lo > 0.0);
    CHECK(b7.hi < 0.2);
}

TEST_CASE("beta bounds certify for K in 3..14 plus the K >= 15 tail") {
    const CertificationReport rep = certify_beta_bounds();
    CHECK(rep.pass);
    CHECK(iv::div(iv::exp_iv(iv::point(1.0)), iv::point(14.0)).hi < 0.2);
}

TEST_CASE("tail certification") {
    const TailSearchResult r = tail_delta_search(3, 2.5);
    REQUIRE(r.found);
    const CertificationReport rep = certify_tail(3, 2.5, r.delta_hat, r.eps_hat);
    CHECK(rep.pass);

    // delta = beta_K exceeds the intended design range: must report, not crash
    const CertificationReport big = certify_tail(3, 2.5, beta_K(3), r.eps_hat, 6);
    CHECK(big.pass == big.failing_cells.empty());

    // alpha cells touching 1 use the 0 ln 0 convention without a domain error
    const CertificationReport tiny = certify_tail(3, 2.5, 1e-6, r.eps_hat, 4);
    CHECK(tiny.pass == tiny.failing_cells.empty());
}

TEST_CASE("soundness sampling inside certified regions") {
    Rng rng(51);
    for (int t = 0; t < 10000; ++t) {
        const double a2a = 0.07 + (0.5 - 0.07) * rng.uniform01();
        const double l2a = 2.0 * rng.uniform01();
        REQUIRE(j_sqrt3(a2a, l2a) <= -1e-4);
        const double a2b = 0.07 + (0.4 - 0.07) * rng.uniform01();
        const double l2b = 2.0 + 0.15 * rng.uniform01();
        REQUIRE(j_sqrt3(a2b, l2b) <= -1e-4);
        const double a3 = 0.39 + 0.11 * rng.uniform01();
        const double l3 = 1.9 + 0.25 * rng.uniform01();
        REQUIRE(d2j_sqrt3_dalpha2(a3, l3) <= -0.01);
    }
    for (int K : {4, 5, 6}) {
        for (int t = 0; t < 10000; ++t) {
            const double a = 0.15 + 0.3 * rng.uniform01();
            REQUIRE(l_K(a, static_cast<double>(K), K) <= -1e-4);
        }
    }
}

TEST_CASE("reports are deterministic across runs and thread counts") {
    const CertificationReport a1 = certify_lk_grid(4, 25, -1e-4, 1);
    const CertificationReport a4 = certify_lk_grid(4, 25, -1e-4, 4);
    CHECK(a1.canonical_text() == a4.canonical_text());
    const CertificationReport b1 = certify_region_3(40, 40, 1);
    const CertificationReport b4 = certify_region_3(40, 40, 4);
    const CertificationReport b4_again = certify_region_3(40, 40, 4);
    CHECK(b1.canonical_text() == b4.canonical_text());
    CHECK(b4.canonical_text() == b4_again.canonical_text());
}

TEST_CASE("report serialization carries the schema fields") {
    const CertificationReport rep = certify_lk_grid(4);
    const std::string js = rep.to_json();
    CHECK(js.find("\"region\": \"lk4\"") != std::string::npos);
    CHECK(js.find("\"threshold\"") != std::string::npos);
    CHECK(js.find("\"worst_upper\"") != std::string::npos);
    CHECK(js.find("\"verdict\": \"pass\"") != std::string::npos);
    CHECK(js.find("\"failing_cells\"") != std::string::npos);
    CHECK(js.find("\"wall_time_ms\"") != std::string::npos);
    CHECK(rep.canonical_text().find("wall_time") == std::string::npos);
}
