#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "mink/field.hpp"

namespace mink {

enum class MapKind { BoostX1, RotationX1X2, ReverseX3, ReverseX0, ReverseX1 };

MapKind parse_map_kind(std::string_view name); // "boost-x1", "reverse-x3", ...
std::string to_string(MapKind kind);

// Exact Lorentz transformation L^μ_ν with LᵀgL = g that preserves the
// hyperplane {x³ = 0}: row/column 3 vanish off the diagonal. Only rational
// subgroup elements are constructible (Pythagorean rotations, rational
// hyperbola boosts, axis reversals), which keeps every test exact.
class LorentzMap {
public:
    using Matrix = std::array<std::array<Rational, 4>, 4>;

    static LorentzMap identity();
    // boost-x1 takes (ch, sh) with ch² − sh² = 1, ch > 0;
    // rotation-x1x2 takes (c, s) with c² + s² = 1; reversals take no parameter.
    static LorentzMap make(MapKind kind,
                           const std::optional<std::array<Rational, 2>>& param = std::nullopt);
    static LorentzMap from_matrix(const Matrix& m); // validates all invariants

    const Rational& entry(int mu, int nu) const; // L^μ_ν
    int orientation() const { return det_; }     // det L, ±1
    bool orthochronous() const;                  // L⁰₀ > 0
    LorentzMap inverse() const;

    friend bool operator==(const LorentzMap&, const LorentzMap&) = default;

private:
    LorentzMap() = default;
    Matrix m_{};
    int det_ = 1;
};

// matrix product a·b: the map applying b first, then a
LorentzMap compose(const LorentzMap& a, const LorentzMap& b);

// Passive transforms: components re-expressed in coordinates x' = Lx, so
// covariant indices contract with L⁻¹.
AntisymTensor transform_tensor(const LorentzMap& L, const AntisymTensor& t);

// ... and each wave covector transforms the same way; the field's orientation
// flag picks up det L, keeping the hodge convention frame-correct.
ExpField transform_field(const LorentzMap& L, const ExpField& f);

} // namespace mink
