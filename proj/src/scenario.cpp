#include "mink/scenario.hpp"

#include <fstream>

namespace mink {

using nlohmann::json;

namespace {

const json& member(const json& j, const char* key) {
    if (!j.is_object() || !j.contains(key))
        throw ValidationError(std::string("scenario: missing key '") + key + "'");
    return j.at(key);
}

int int_member(const json& j, const char* key) {
    const json& v = member(j, key);
    if (!v.is_number_integer())
        throw ValidationError(std::string("scenario: '") + key + "' must be an integer");
    return v.get<int>();
}

// surfaces constructor-level invariant failures as load errors
template <typename F>
auto revalidated(const char* what, F&& make) {
    try {
        return make();
    } catch (const DomainError& e) {
        throw ValidationError(std::string("scenario: invalid ") + what + ": " + e.what());
    }
}

MapSpec map_from_json(const json& j) {
    const json& kind = member(j, "kind");
    if (!kind.is_string())
        throw ValidationError("scenario: map 'kind' must be a string");
    MapSpec spec{parse_map_kind(kind.get<std::string>()), std::nullopt};
    if (j.contains("param")) {
        const json& p = j.at("param");
        if (!p.is_array() || p.size() != 2)
            throw ValidationError("scenario: map 'param' must be two rationals");
        spec.param = std::array<Rational, 2>{rational_from_json(p[0]),
                                             rational_from_json(p[1])};
    }
    revalidated("map", [&] { return spec.build(); });
    return spec;
}

} // namespace

Scenario scenario_from_json(const json& j) {
    Scenario sc;

    const json& signs = member(j, "signs");
    sc.signs = revalidated("signs", [&] {
        return SignPair(int_member(signs, "alpha"), int_member(signs, "beta"));
    });

    sc.gauge_constant = complex_from_json(member(j, "gauge_constant"));

    sc.potential = field_from_json(member(j, "potential"));
    revalidated("potential", [&] { require_potential_2d(sc.potential); return 0; });

    const json& spinor = member(j, "spinor");
    sc.spinor = revalidated("spinor", [&] {
        return SpinorPair2D(field_from_json(member(spinor, "phi")),
                            field_from_json(member(spinor, "chi")));
    });

    const json& maps = member(j, "maps");
    if (!maps.is_array())
        throw ValidationError("scenario: 'maps' must be an array");
    for (const json& m : maps)
        sc.maps.push_back(map_from_json(m));

    const json& seed = member(j, "seed");
    if (!seed.is_number_unsigned() && !seed.is_number_integer())
        throw ValidationError("scenario: 'seed' must be an integer");
    if (seed.is_number_integer() && seed.get<std::int64_t>() < 0)
        throw ValidationError("scenario: 'seed' must be non-negative");
    sc.seed = seed.get<std::uint64_t>();

    return sc;
}

Scenario load_scenario(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw ValidationError("cannot open scenario file: " + path);
    json j = json::parse(in, nullptr, /*allow_exceptions=*/false);
    if (j.is_discarded())
        throw ValidationError("scenario file is not valid JSON: " + path);
    return scenario_from_json(j);
}

} // namespace mink
