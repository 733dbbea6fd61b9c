#include "doctest.h"
#include "thicklab/verify.hpp"

using namespace thicklab;

TEST_CASE("single instances") {
    const auto k4 = make_complete(4);
    auto r = check_instance(k4, k4, AmalgamationSpec::vertex(0, 0));
    CHECK(r.theta1 == 1);
    CHECK(r.theta2 == 1);
    CHECK(r.theta_upper == 1);
    CHECK(r.verified());

    const auto k5 = make_complete(5);
    r = check_instance(k5, k5, AmalgamationSpec::vertex(1, 3));
    CHECK(r.theta_upper == 2);
    CHECK(r.bound_lower == 2);
    CHECK(r.bound_upper == 2);
    CHECK(r.verified());

    r = check_instance(k5, k5, AmalgamationSpec::bar(0, 0));
    CHECK(r.theta_upper == 2);
    CHECK(r.verified());

    r = check_instance(k5, k5, AmalgamationSpec::edge(0, 1, 0, 1));
    CHECK(r.bound_lower == 2);
    CHECK(r.bound_upper == 3);
    CHECK(r.composed == 3);
    CHECK(r.theta_upper >= 2);
    CHECK(r.theta_upper <= 3);
    CHECK(r.verified());
}

TEST_CASE("campaigns pass for every kind") {
    for (auto kind : {AmalgamationKind::vertex, AmalgamationKind::bar, AmalgamationKind::edge,
                      AmalgamationKind::two_vertex}) {
        CampaignConfig config;
        config.kind = kind;
        config.count = 50;
        config.seed = 7;
        const auto reports = run_campaign(config);
        CAPTURE(to_string(kind));
        REQUIRE(reports.size() == 50);
        CHECK(campaign_passed(reports));
        for (const auto& r : reports) {
            CHECK(r.verified());
            if (kind == AmalgamationKind::vertex || kind == AmalgamationKind::bar) {
                CHECK(r.theta_upper == std::max(r.theta1, r.theta2));
            }
        }
    }
}

TEST_CASE("campaigns are reproducible and respect the size caps") {
    CampaignConfig config;
    config.kind = AmalgamationKind::two_vertex;
    config.count = 30;
    config.seed = 99;
    config.max_vertices = 8;
    config.max_edges = 14;
    const auto a = run_campaign(config);
    const auto b = run_campaign(config);
    CHECK(a == b);
    CHECK(write_reports(a, "csv") == write_reports(b, "csv"));
    for (const auto& inst : campaign_instances(config)) {
        CHECK(inst.g1.order() <= 8);
        CHECK(inst.g2.order() <= 8);
        CHECK(inst.g1.size() <= 14);
        CHECK(inst.g2.size() <= 14);
    }
    config.seed = 100;
    CHECK(run_campaign(config) != a);
}

TEST_CASE("report formats round trip") {
    CampaignConfig config;
    config.kind = AmalgamationKind::edge;
    config.count = 12;
    const auto reports = run_campaign(config);
    for (const char* format : {"csv", "jsonl"}) {
        const auto text = write_reports(reports, format);
        CHECK(read_reports(text, format) == reports);
    }
    const auto csv = write_reports(reports, "csv");
    CHECK(csv.substr(0, csv.find('\n')) == csv_header());
    CHECK_THROWS(write_reports(reports, "xml"));
    CHECK_THROWS(read_reports("index,kind\n", "csv"));
}

TEST_CASE("flags are recomputable from the numeric fields") {
    CampaignConfig config;
    config.kind = AmalgamationKind::bar;
    config.count = 20;
    for (auto r : run_campaign(config)) {
        const auto before = r;
        r.lower = r.upper = r.composition = Check::skip;
        r.bound_lower = r.bound_upper = -1;
        recompute_flags(r);
        CHECK(r == before);
    }

    VerificationReport r;
    r.kind = AmalgamationKind::vertex;
    r.theta1 = 2;
    r.theta2 = 1;
    r.composed = 2;
    r.theta_lower = r.theta_upper = 1;
    recompute_flags(r);
    CHECK(r.lower == Check::fail);
    CHECK_FALSE(r.passed());

    // exhausted amalgam: interval [2, 3] against the equality bound 2
    r.theta_lower = 2;
    r.theta_upper = 3;
    r.status = CertificateStatus::bounded;
    recompute_flags(r);
    CHECK(r.lower == Check::pass);
    CHECK(r.upper == Check::skip);
    CHECK(r.passed());
    CHECK_FALSE(r.verified());

    r.status1 = CertificateStatus::bounded;
    recompute_flags(r);
    CHECK(r.lower == Check::skip);
    CHECK(r.composition == Check::skip);
}

TEST_CASE("budget-exhausted instances are reported") {
    const auto k66 = make_complete_bipartite(6, 6);
    const auto k5 = make_complete(5);
    const auto r = check_instance(k66, k5, AmalgamationSpec::vertex(0, 0), Budget{5, 60});
    CHECK(r.status1 == CertificateStatus::bounded);
    CHECK(r.passed());
    CHECK_FALSE(r.verified());
}

TEST_CASE("infeasible configurations") {
    CampaignConfig config;
    config.kind = AmalgamationKind::edge;
    config.max_edges = 0;
    CHECK_THROWS_AS(campaign_instances(config), CampaignError);
    config = {};
    config.count = -1;
    CHECK_THROWS_AS(campaign_instances(config), CampaignError);
    config = {};
    config.max_vertices = 1;
    CHECK_THROWS_AS(campaign_instances(config), CampaignError);
    config = {};
    config.budget.nodes = 0;
    CHECK_THROWS_AS(campaign_instances(config), CampaignError);
}

TEST_CASE("bounded sampling") {
    std::mt19937_64 rng(5489);
    std::mt19937_64 raw(5489);
    for (int i = 0; i < 100; ++i) {
        CHECK(uniform_below(rng, 10) == raw() % 10);
    }
    CHECK_THROWS(uniform_below(rng, 0));
}
