#include "doctest.h"
#include "qdha/errors.hpp"
#include "qdha/instance.hpp"
#include "qdha/verify.hpp"

using namespace qdha;

TEST_CASE("instance parsing") {
    auto j = nlohmann::json::parse(R"({"root_system": "A1", "lambda0": ["1/4"], "h": ["1/2"]})");
    Instance inst(parse_instance(j));
    CHECK(inst.gamma() == RVec{Rational(-1)});
    CHECK(inst.clan_bound() == 4);
    CHECK(inst.digest().size() == 16);
    CHECK(parse_instance(to_json(inst.spec())).lambda0 == inst.spec().lambda0);
    CHECK(digest(parse_instance(to_json(inst.spec()))) == inst.digest());

    auto s = nlohmann::json::parse(
        R"({"root_system": "A2", "lambda0": ["1/5", "1/7"], "support": [{"root": [1, 0], "level": 0, "value": 1}]})");
    InstanceSpec spec = parse_instance(s);
    CHECK(spec.support.size() == 1);
    CHECK(digest(parse_instance(to_json(spec))) == digest(spec));
}

TEST_CASE("instance errors") {
    CHECK_THROWS_AS(parse_instance(nlohmann::json::parse(R"({"root_system": "A1", "lambda0": ["1/4"]})")), UsageError);
    CHECK_THROWS_AS(parse_instance(nlohmann::json::parse(R"({"root_system": "A1", "lambda0": ["1/4"], "h": ["1/2"],
        "support": []})")),
                    UsageError);
    CHECK_THROWS_AS(parse_instance(nlohmann::json::parse(R"({"lambda0": ["1/4"], "h": ["1/2"]})")), UsageError);
    CHECK_THROWS_AS(parse_instance(nlohmann::json::parse(R"({"root_system": "A1", "lambda0": [0.5], "h": ["1/2"]})")),
                    UsageError);
    auto wrong_dim = parse_instance(nlohmann::json::parse(R"({"root_system": "A2", "lambda0": ["1/4"], "h": ["1/2"]})"));
    CHECK_THROWS_AS(Instance{wrong_dim}, UsageError);
    auto bad_gamma =
        parse_instance(nlohmann::json::parse(R"({"root_system": "A1", "lambda0": ["1/4"], "h": ["1/2"], "gamma": ["1"]})"));
    CHECK_THROWS_AS(Instance{bad_gamma}, InvalidParameter);
}

TEST_CASE("reports are deterministic") {
    auto j = nlohmann::json::parse(R"({"root_system": "A1", "lambda0": ["1/4"], "h": ["1/2"]})");
    Instance inst(parse_instance(j));
    std::mt19937 a(7), b(7);
    CHECK(to_json(verify_basis(inst.omega(), 20, 5, a)).dump() == to_json(verify_basis(inst.omega(), 20, 5, b)).dump());
    Report ex = verify_example_a1();
    CHECK(ex.pass());
    CHECK(ex.details["products"][0]["c"] == ex.details["products"][1]["c"]);
}
