#include "mink/lorentz.hpp"

#include <algorithm>
#include <numeric>
#include <vector>

namespace mink {

MapKind parse_map_kind(std::string_view name) {
    if (name == "boost-x1")
        return MapKind::BoostX1;
    if (name == "rotation-x1x2")
        return MapKind::RotationX1X2;
    if (name == "reverse-x3")
        return MapKind::ReverseX3;
    if (name == "reverse-x0")
        return MapKind::ReverseX0;
    if (name == "reverse-x1")
        return MapKind::ReverseX1;
    throw ValidationError("unknown map kind: '" + std::string(name) + "'");
}

std::string to_string(MapKind kind) {
    switch (kind) {
    case MapKind::BoostX1: return "boost-x1";
    case MapKind::RotationX1X2: return "rotation-x1x2";
    case MapKind::ReverseX3: return "reverse-x3";
    case MapKind::ReverseX0: return "reverse-x0";
    case MapKind::ReverseX1: return "reverse-x1";
    }
    throw InternalError("unhandled map kind");
}

namespace {

Rational det4(const LorentzMap::Matrix& m) {
    std::vector<int> perm{0, 1, 2, 3};
    Rational det;
    do {
        Rational term = m[0][perm[0]] * m[1][perm[1]] * m[2][perm[2]] * m[3][perm[3]];
        det += epsilon_sign(std::span<const int>(perm)) == 1 ? term : Rational(-term);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return det;
}

} // namespace

LorentzMap LorentzMap::identity() {
    Matrix m{};
    for (int mu = 0; mu < kDim; ++mu)
        m[mu][mu] = 1;
    return from_matrix(m);
}

LorentzMap LorentzMap::make(MapKind kind, const std::optional<std::array<Rational, 2>>& param) {
    Matrix m{};
    for (int mu = 0; mu < kDim; ++mu)
        m[mu][mu] = 1;

    switch (kind) {
    case MapKind::BoostX1: {
        if (!param)
            throw DomainError("boost-x1 needs a (ch, sh) parameter");
        const auto& [ch, sh] = *param;
        if (ch * ch - sh * sh != 1 || ch <= 0)
            throw DomainError("boost parameter must satisfy ch^2 - sh^2 = 1, ch > 0");
        m[0][0] = ch;
        m[0][1] = sh;
        m[1][0] = sh;
        m[1][1] = ch;
        break;
    }
    case MapKind::RotationX1X2: {
        if (!param)
            throw DomainError("rotation-x1x2 needs a (c, s) parameter");
        const auto& [c, s] = *param;
        if (c * c + s * s != 1)
            throw DomainError("rotation parameter must satisfy c^2 + s^2 = 1");
        m[1][1] = c;
        m[1][2] = -s;
        m[2][1] = s;
        m[2][2] = c;
        break;
    }
    case MapKind::ReverseX3:
        m[3][3] = -1;
        break;
    case MapKind::ReverseX0:
        m[0][0] = -1;
        break;
    case MapKind::ReverseX1:
        m[1][1] = -1;
        break;
    }
    if (param && (kind == MapKind::ReverseX3 || kind == MapKind::ReverseX0 ||
                  kind == MapKind::ReverseX1))
        throw DomainError("axis reversals take no parameter");
    return from_matrix(m);
}

LorentzMap LorentzMap::from_matrix(const Matrix& m) {
    // metric preservation: Σ_κ g_κκ L^κ_μ L^κ_ν = g_μν
    for (int mu = 0; mu < kDim; ++mu)
        for (int nu = mu; nu < kDim; ++nu) {
            Rational acc;
            for (int kappa = 0; kappa < kDim; ++kappa) {
                Rational term = m[kappa][mu] * m[kappa][nu];
                acc += metric_sign(kappa) == 1 ? term : Rational(-term);
            }
            Rational expect = mu == nu ? Rational(metric_sign(mu)) : Rational(0);
            if (acc != expect)
                throw DomainError("matrix does not preserve the metric");
        }

    // hyperplane {x³ = 0} preservation
    for (int nu = 0; nu < 3; ++nu)
        if (m[3][nu] != 0 || m[nu][3] != 0)
            throw DomainError("matrix does not preserve the x3 hyperplane");

    LorentzMap L;
    L.m_ = m;
    Rational det = det4(m);
    if (det == 1)
        L.det_ = 1;
    else if (det == -1)
        L.det_ = -1;
    else
        throw InternalError("metric-preserving matrix with determinant != +-1");
    return L;
}

const Rational& LorentzMap::entry(int mu, int nu) const {
    if (mu < 0 || mu >= kDim || nu < 0 || nu >= kDim)
        throw DomainError("matrix index must be 0..3");
    return m_[mu][nu];
}

bool LorentzMap::orthochronous() const {
    return m_[0][0] > 0;
}

LorentzMap LorentzMap::inverse() const {
    // (L⁻¹)^μ_ν = g^μμ L^ν_μ g_νν
    Matrix inv;
    for (int mu = 0; mu < kDim; ++mu)
        for (int nu = 0; nu < kDim; ++nu) {
            inv[mu][nu] = m_[nu][mu];
            if (metric_sign(mu) * metric_sign(nu) == -1)
                inv[mu][nu] = -inv[mu][nu];
        }
    return from_matrix(inv);
}

LorentzMap compose(const LorentzMap& a, const LorentzMap& b) {
    LorentzMap::Matrix m{};
    for (int mu = 0; mu < kDim; ++mu)
        for (int nu = 0; nu < kDim; ++nu)
            for (int kappa = 0; kappa < kDim; ++kappa)
                m[mu][nu] += a.entry(mu, kappa) * b.entry(kappa, nu);
    return LorentzMap::from_matrix(m);
}

AntisymTensor transform_tensor(const LorentzMap& L, const AntisymTensor& t) {
    const LorentzMap M = L.inverse();
    const int q = t.rank();
    AntisymTensor out(q);
    // t'_J = t_I Π (L⁻¹)^{I_a}_{J_a}, summed over all index tuples I
    for (const auto& J : increasing_tuples(q)) {
        ComplexRational acc;
        std::vector<int> I(q);
        const int total = 1 << (2 * q); // 4^q
        for (int code = 0; code < total; ++code) {
            Rational weight(1);
            for (int a = 0; a < q; ++a) {
                I[a] = code >> (2 * a) & 3;
                weight *= M.entry(I[a], J[a]);
            }
            if (weight == 0)
                continue;
            acc += ComplexRational(weight) * t.at(std::span<const int>(I));
        }
        out.set(std::span<const int>(J), acc);
    }
    return out;
}

ExpField transform_field(const LorentzMap& L, const ExpField& f) {
    const LorentzMap M = L.inverse();
    ExpField out(f.rank(), f.orientation() * L.orientation());
    for (const auto& [k, c] : f.modes()) {
        WaveCovector kp;
        for (int mu = 0; mu < kDim; ++mu) {
            Rational acc;
            for (int nu = 0; nu < kDim; ++nu)
                acc += k.k[nu] * M.entry(nu, mu);
            kp.k[mu] = acc;
        }
        out.add_mode(kp, transform_tensor(L, c));
    }
    return out;
}

} // namespace mink
