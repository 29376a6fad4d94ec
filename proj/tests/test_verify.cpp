#include <doctest.h>

#include "ebu/graph6.hpp"
#include "ebu/verify.hpp"

using namespace ebu;
using nlohmann::ordered_json;

TEST_CASE("freeness suite passes on a single cell and echoes its certificate") {
    ordered_json config = default_verify_config();
    config["freeness"]["n"] = 30;
    config["freeness"]["cells"] = ordered_json::array({ordered_json::array({3, 2, 2})});
    SuiteReport report = run_freeness_suite(config, {});
    REQUIRE(report.cases.size() == 1);
    CHECK(report.cases[0].outcome == "pass");
    CHECK(report.cases[0].witness.at("construction") == "H(30,2,3)");
    CHECK(report.cases[0].witness.at("certificate_valid") == true);
    CHECK(report.failed() == 0);
}

TEST_CASE("suite reports serialize deterministically without timings") {
    ordered_json config = default_verify_config();
    config["families"]["bases"] = ordered_json::array({ordered_json::array({3, 2})});
    VerifyOptions opts;
    auto once = report_to_json({run_families_suite(config, opts)}, opts, config);
    auto twice = report_to_json({run_families_suite(config, opts)}, opts, config);
    CHECK(once.dump() == twice.dump());
    CHECK(once.at("failed") == 0);
}

TEST_CASE("saturation suite graphs decode back to the probed host") {
    ordered_json config = default_verify_config();
    config["saturation"] = {{"k", 3}, {"l", 2}, {"p", 2}, {"n", 16}, {"variant", "H"}, {"q", 3}};
    SuiteReport report = run_saturation_suite(config, {});
    REQUIRE(report.cases.size() == 1);
    const auto& witness = report.cases[0].witness;
    Graph host = decode_graph6(witness.at("host").get<std::string>());
    CHECK(host == realize(ConstructionSpec::h(16, 2, 3)));
    int total = witness.at("creates").get<int>() + witness.at("free").get<int>() +
                witness.at("undecided").get<int>();
    CHECK(total == static_cast<int>(witness.at("probes").size()));
}

TEST_CASE("unknown suite names are rejected") {
    CHECK_THROWS_AS(run_suite("nonsense", default_verify_config(), {}), std::invalid_argument);
}
