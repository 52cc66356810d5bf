#include <doctest.h>

#include <json.hpp>

#include "growth/bounds.hpp"
#include "growth/report.hpp"

using namespace growth;

TEST_CASE("sha256 standard vectors") {
    CHECK(sha256_hex("") ==
          "e3b0c44298fc1c149afbf4c8996fb92427ae41e4649b934ca495991b7852b855");
    CHECK(sha256_hex("abc") ==
          "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
}

TEST_CASE("bound report layout") {
    BoundResult b = eden_bound(2);
    std::string text = bound_report_json(b, 3);
    auto j = nlohmann::json::parse(text);
    CHECK(j.at("format") == 1);
    CHECK(j.at("method") == "eden");
    CHECK(j.at("direction") == "upper");
    CHECK(j.at("d") == 2);
    CHECK(j.at("value") == "6.750000000");
    CHECK(j.at("precision") == 9);
    CHECK(j.at("exact") == "27/4");
    CHECK(j.at("runtime_ms") == 3);
}

TEST_CASE("bound report carries certificates") {
    BoundResult b = multinomial_bound(3);
    auto j = nlohmann::json::parse(bound_report_json(b, 0));
    CHECK(j.at("certificate").contains("b0"));
    BoundResult diag = diagonal_radius_bound(general_weight_formula(2), 2, 1);
    auto jd = nlohmann::json::parse(bound_report_json(diag, 0));
    CHECK(jd.at("certificate").contains("root_lo"));
    CHECK(jd.at("certificate").contains("discriminant"));
    CHECK(jd.at("i") == 1);
}

TEST_CASE("manifest layout and stability") {
    RunManifest m;
    m.command = "weights";
    m.parameters = {{"d", "2"}, {"i", "3"}};
    m.workers = 4;
    m.node_budget = 1000;
    m.wall_ms = 17;
    m.output_digests["w.json"] = sha256_hex("payload");
    std::string text = manifest_json(m);
    CHECK(text == manifest_json(m));
    auto j = nlohmann::json::parse(text);
    CHECK(j.at("format") == 1);
    CHECK(j.at("tool") == std::string(kToolVersion));
    CHECK(j.at("command") == "weights");
    CHECK(j.at("parameters").at("d") == "2");
    CHECK(j.at("outputs").at("w.json") == sha256_hex("payload"));
}
