#include "mink/json_io.hpp"

#include <algorithm>

namespace mink {

using nlohmann::json;

json to_json(const ComplexRational& z) {
    return to_string(z);
}

json to_json(const AntisymTensor& t) {
    json entries = json::array();
    const auto& tuples = increasing_tuples(t.rank());
    for (size_t p = 0; p < tuples.size(); ++p) {
        if (t.stored()[p].is_zero())
            continue;
        entries.push_back(json::array({tuples[p], to_string(t.stored()[p])}));
    }
    return json{{"rank", t.rank()}, {"entries", entries}};
}

json to_json(const WaveCovector& k) {
    json out = json::array();
    for (const Rational& c : k.k)
        out.push_back(to_string(c));
    return out;
}

json to_json(const ExpField& f) {
    json modes = json::array();
    for (const auto& [k, c] : f.modes())
        modes.push_back(json{{"k", to_json(k)}, {"coeff", to_json(c)}});
    return json{{"rank", f.rank()}, {"orientation", f.orientation()}, {"modes", modes}};
}

namespace {

[[noreturn]] void bad(const std::string& what, const json& j) {
    throw ValidationError(what + ": " + j.dump());
}

const json& field_at(const json& j, const char* key) {
    if (!j.is_object() || !j.contains(key))
        bad(std::string("missing key '") + key + "'", j);
    return j.at(key);
}

} // namespace

ComplexRational complex_from_json(const json& j) {
    if (!j.is_string())
        bad("scalar must be a string", j);
    return parse_complex(j.get<std::string>());
}

Rational rational_from_json(const json& j) {
    if (!j.is_string())
        bad("rational must be a string", j);
    return parse_rational(j.get<std::string>());
}

AntisymTensor tensor_from_json(const json& j) {
    const json& rank = field_at(j, "rank");
    if (!rank.is_number_integer())
        bad("rank must be an integer", j);
    int r = rank.get<int>();
    if (r < 0 || r > kDim)
        bad("rank must be 0..4", j);
    AntisymTensor t(r);
    const json& entries = field_at(j, "entries");
    if (!entries.is_array())
        bad("entries must be an array", j);
    for (const json& e : entries) {
        if (!e.is_array() || e.size() != 2 || !e[0].is_array())
            bad("entry must be [[indices...], scalar]", e);
        std::vector<int> idx;
        for (const json& i : e[0]) {
            if (!i.is_number_integer())
                bad("index must be an integer", e);
            idx.push_back(i.get<int>());
        }
        if (static_cast<int>(idx.size()) != r)
            bad("entry index count must equal rank", e);
        for (int i : idx)
            if (i < 0 || i >= kDim)
                bad("index must be 0..3", e);
        std::vector<int> sorted = idx;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
            bad("entry indices must be distinct", e);
        ComplexRational value = complex_from_json(e[1]);
        // accumulate so repeated tuples are well defined
        ComplexRational prior = t.at(std::span<const int>(idx));
        t.set(std::span<const int>(idx), prior + value);
    }
    return t;
}

WaveCovector wave_from_json(const json& j) {
    if (!j.is_array() || j.size() != kDim)
        bad("wave covector must be an array of 4 rationals", j);
    WaveCovector k;
    for (int mu = 0; mu < kDim; ++mu)
        k.k[mu] = rational_from_json(j[mu]);
    return k;
}

ExpField field_from_json(const json& j) {
    const json& rank = field_at(j, "rank");
    if (!rank.is_number_integer())
        bad("rank must be an integer", j);
    int r = rank.get<int>();
    int orientation = 1;
    if (j.contains("orientation")) {
        const json& o = j.at("orientation");
        if (!o.is_number_integer() || (o.get<int>() != 1 && o.get<int>() != -1))
            bad("orientation must be 1 or -1", j);
        orientation = o.get<int>();
    }
    if (r < 0 || r > kDim)
        bad("rank must be 0..4", j);
    ExpField f(r, orientation);
    const json& modes = field_at(j, "modes");
    if (!modes.is_array())
        bad("modes must be an array", j);
    for (const json& m : modes) {
        WaveCovector k = wave_from_json(field_at(m, "k"));
        AntisymTensor c = tensor_from_json(field_at(m, "coeff"));
        if (c.rank() != r)
            bad("mode coefficient rank differs from field rank", m);
        f.add_mode(k, c);
    }
    return f;
}

} // namespace mink
