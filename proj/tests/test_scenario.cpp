#include <doctest.h>

#include <string>

#include "mink/scenario.hpp"
#include "mink/suites.hpp"

using namespace mink;

namespace {

std::string scenario_path(const char* name) {
    return std::string(SCENARIO_DIR) + "/" + name;
}

std::string data_path(const char* name) {
    return std::string(TEST_DATA_DIR) + "/" + name;
}

nlohmann::json reports_without_wall_time(const std::vector<VerificationReport>& reports) {
    nlohmann::json out = nlohmann::json::array();
    for (const VerificationReport& rep : reports) {
        nlohmann::json j = rep.to_json();
        j.erase("wall_ms");
        out.push_back(std::move(j));
    }
    return out;
}

} // namespace

TEST_CASE("scenario loading: bundled files and field shapes") {
    Scenario sc = load_scenario(scenario_path("free_electron.json"));
    CHECK(sc.signs == SignPair(1, 1));
    CHECK(sc.gauge_constant.is_zero());
    CHECK(sc.potential.is_zero());
    CHECK(sc.potential.rank() == 1);
    CHECK(sc.spinor.phi().modes().size() == 1);
    CHECK(sc.spinor.chi().is_zero());
    CHECK(sc.maps.size() == 4);
    CHECK(sc.seed == 1);
    CHECK(sc.maps[0].build().orthochronous());

    for (const char* name : {"free_electron.json", "random_A_constant.json",
                             "plane_wave_A.json", "charge_electron.json",
                             "charge_positron.json"}) {
        Scenario bundled = load_scenario(scenario_path(name));
        // every bundled scenario must satisfy the full checker suite
        for (const VerificationReport& rep : theorem1_suite(bundled))
            CHECK_MESSAGE(rep.passed(), name, ": ", rep.name);
        for (const VerificationReport& rep : charge_suite(bundled))
            CHECK_MESSAGE(rep.passed(), name, ": ", rep.name);
    }
}

TEST_CASE("scenario loading: malformed inputs are load errors") {
    CHECK_THROWS_AS(load_scenario(data_path("missing.json")), ValidationError);
    CHECK_THROWS_AS(load_scenario(data_path("bad_json.json")), ValidationError);
    CHECK_THROWS_AS(load_scenario(data_path("bad_signs.json")), ValidationError);

    try {
        load_scenario(data_path("bad_A3.json"));
        FAIL("bad_A3.json must not load");
    } catch (const ValidationError& e) {
        CHECK(std::string(e.what()).find("A3") != std::string::npos);
    }

    // structural violations inside embedded values
    nlohmann::json j = nlohmann::json::parse(R"({
        "signs": {"alpha": 1, "beta": 1},
        "gauge_constant": "0",
        "potential": {"rank": 1, "orientation": 1, "modes": []},
        "spinor": {"phi": {"rank": 0, "orientation": 1, "modes": []},
                   "chi": {"rank": 0, "orientation": 1, "modes": []}},
        "maps": [{"kind": "boost-x1", "param": ["1", "1"]}],
        "seed": 1
    })");
    CHECK_THROWS_AS(scenario_from_json(j), ValidationError); // 1² − 1² ≠ 1

    j["maps"] = nlohmann::json::array();
    j["seed"] = -3;
    CHECK_THROWS_AS(scenario_from_json(j), ValidationError);
    j["seed"] = 1;
    j.erase("spinor");
    CHECK_THROWS_AS(scenario_from_json(j), ValidationError);
}

TEST_CASE("identity suite: passes, deterministic, rejects bad count") {
    std::vector<VerificationReport> first = identity_suite(9, 6);
    REQUIRE_FALSE(first.empty());
    for (const VerificationReport& rep : first) {
        CHECK(rep.passed());
        CHECK(rep.details.at("seed") == 9);
        CHECK(rep.details.at("count") == 6);
    }
    // names arrive sorted
    for (size_t n = 1; n < first.size(); ++n)
        CHECK(first[n - 1].name < first[n].name);

    std::vector<VerificationReport> second = identity_suite(9, 6);
    CHECK(reports_without_wall_time(first) == reports_without_wall_time(second));

    std::vector<VerificationReport> other_seed = identity_suite(10, 6);
    for (const VerificationReport& rep : other_seed)
        CHECK(rep.passed());

    CHECK_THROWS_AS(identity_suite(1, 0), DomainError);
}

TEST_CASE("charge suite: family values for the bundled scenarios") {
    Scenario electron = load_scenario(scenario_path("charge_electron.json"));
    std::vector<VerificationReport> reps = charge_suite(electron);
    REQUIRE(reps.size() == 2);
    CHECK(reps[0].name == "charge");
    CHECK(reps[0].details.at("c") == -1);
    CHECK(reps[0].details.at("witness") == "4");
    CHECK(reps[0].details.at("family") == "electron");
    CHECK(reps[1].name == "charge-conjugation");
    CHECK(reps[1].passed());

    Scenario positron = load_scenario(scenario_path("charge_positron.json"));
    std::vector<VerificationReport> preps = charge_suite(positron);
    CHECK(preps[0].details.at("c") == 1);
    CHECK(preps[0].details.at("family") == "positron");
}

TEST_CASE("dispersion suite: both branches with labels") {
    std::vector<VerificationReport> reps = dispersion_suite(make_rational(1, 10));
    REQUIRE(reps.size() == 2);
    for (const VerificationReport& rep : reps)
        CHECK(rep.passed());
    // sorted: negative branch first
    CHECK(reps[0].name == "dispersion-negative-branch");
    CHECK(reps[0].details.at("epsilon") == "9/10");
    CHECK(reps[0].details.at("branch") == "positron");
    CHECK(reps[1].details.at("epsilon") == "11/10");
    CHECK(reps[1].details.at("branch") == "electron");

    for (const VerificationReport& rep : dispersion_suite(Rational(0))) {
        CHECK(rep.passed());
        CHECK(rep.details.at("epsilon") == "1");
    }
}
