#pragma once

#include <optional>
#include <string>
#include <vector>

#include "mink/dirac.hpp"
#include "mink/json_io.hpp"
#include "mink/lorentz.hpp"

namespace mink {

// A frame to replay a check in, stored as constructor arguments so the
// scenario file stays exact-rational.
struct MapSpec {
    MapKind kind;
    std::optional<std::array<Rational, 2>> param;

    LorentzMap build() const { return LorentzMap::make(kind, param); }
};

// One self-contained verification input: the sign pair, the photon gauge
// constant, a potential, a spinor pair, the frames to sweep, and the seed
// for any randomized part of the run.
struct Scenario {
    SignPair signs{1, 1};
    ComplexRational gauge_constant;
    ExpField potential{1};
    SpinorPair2D spinor;
    std::vector<MapSpec> maps;
    std::uint64_t seed = 0;
};

// Both throw ValidationError on malformed input; every embedded invariant
// (sign values, potential shape, spinor shape, map parameters) is
// revalidated here so that a bad file is a load error, not a crash later.
Scenario scenario_from_json(const nlohmann::json& j);
Scenario load_scenario(const std::string& path);

} // namespace mink
