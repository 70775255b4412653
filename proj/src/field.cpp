#include "mink/field.hpp"

#include <algorithm>
#include <string>

namespace mink {

bool WaveCovector::is_zero() const {
    return std::all_of(k.begin(), k.end(), [](const Rational& c) { return c == 0; });
}

bool WaveCovector::operator<(const WaveCovector& o) const {
    for (int mu = 0; mu < kDim; ++mu) {
        if (k[mu] != o.k[mu])
            return k[mu] < o.k[mu];
    }
    return false;
}

WaveCovector operator+(const WaveCovector& a, const WaveCovector& b) {
    WaveCovector out;
    for (int mu = 0; mu < kDim; ++mu)
        out.k[mu] = a.k[mu] + b.k[mu];
    return out;
}

WaveCovector operator-(const WaveCovector& a) {
    WaveCovector out;
    for (int mu = 0; mu < kDim; ++mu)
        out.k[mu] = -a.k[mu];
    return out;
}

namespace {

void check_orientation(int orientation) {
    if (orientation != 1 && orientation != -1)
        throw DomainError("orientation must be +1 or -1");
}

void check_same_frame(const ExpField& a, const ExpField& b) {
    if (a.orientation() != b.orientation())
        throw DomainError("fields live in frames of different orientation");
}

} // namespace

ExpField::ExpField(int rank, int orientation) : rank_(rank), orientation_(orientation) {
    increasing_tuples(rank); // validates the rank
    check_orientation(orientation);
}

ExpField ExpField::constant(const AntisymTensor& c, int orientation) {
    ExpField f(c.rank(), orientation);
    f.add_mode(WaveCovector{}, c);
    return f;
}

ExpField ExpField::mode(const WaveCovector& k, const AntisymTensor& c, int orientation) {
    ExpField f(c.rank(), orientation);
    f.add_mode(k, c);
    return f;
}

ExpField ExpField::unit_scalar(const WaveCovector& k, int orientation) {
    return mode(k, AntisymTensor::scalar(ComplexRational(1)), orientation);
}

AntisymTensor ExpField::coeff(const WaveCovector& k) const {
    auto it = modes_.find(k);
    return it == modes_.end() ? AntisymTensor(rank_) : it->second;
}

void ExpField::add_mode(const WaveCovector& k, const AntisymTensor& c) {
    if (c.rank() != rank_)
        throw DomainError("mode coefficient rank does not match field rank");
    auto [it, inserted] = modes_.try_emplace(k, c);
    if (!inserted)
        it->second += c;
    if (it->second.is_zero())
        modes_.erase(it);
}

ExpField& ExpField::operator+=(const ExpField& o) {
    if (rank_ != o.rank_)
        throw DomainError("field sum needs equal ranks");
    check_same_frame(*this, o);
    for (const auto& [k, c] : o.modes_)
        add_mode(k, c);
    return *this;
}

ExpField& ExpField::operator-=(const ExpField& o) {
    if (rank_ != o.rank_)
        throw DomainError("field difference needs equal ranks");
    check_same_frame(*this, o);
    for (const auto& [k, c] : o.modes_)
        add_mode(k, -c);
    return *this;
}

ExpField& ExpField::operator*=(const ComplexRational& s) {
    if (s.is_zero()) {
        modes_.clear();
        return *this;
    }
    for (auto& [k, c] : modes_)
        c *= s;
    return *this;
}

ExpField operator+(ExpField a, const ExpField& b) { return a += b; }
ExpField operator-(ExpField a, const ExpField& b) { return a -= b; }

ExpField operator-(const ExpField& a) {
    ExpField f = a;
    return f *= ComplexRational(-1);
}

ExpField operator*(const ComplexRational& s, ExpField a) { return a *= s; }

ExpField wedge(const ExpField& a, const ExpField& b) {
    check_same_frame(a, b);
    ExpField out(a.rank() + b.rank(), a.orientation()); // ranks validated here
    for (const auto& [ka, ca] : a.modes())
        for (const auto& [kb, cb] : b.modes())
            out.add_mode(ka + kb, wedge(ca, cb));
    return out;
}

ExpField dot(const ExpField& a, const ExpField& b) {
    if (a.rank() != b.rank())
        throw DomainError("dot needs equal ranks");
    check_same_frame(a, b);
    ExpField out(0, a.orientation());
    for (const auto& [ka, ca] : a.modes())
        for (const auto& [kb, cb] : b.modes())
            out.add_mode(ka + kb, AntisymTensor::scalar(dot(ca, cb)));
    return out;
}

ExpField hodge(const ExpField& a) {
    ExpField out(kDim - a.rank(), a.orientation());
    for (const auto& [k, c] : a.modes())
        out.add_mode(k, hodge(c, a.orientation()));
    return out;
}

ExpField reflect(const ExpField& a) {
    ExpField out(a.rank(), a.orientation());
    for (const auto& [k, c] : a.modes())
        out.add_mode(k, reflect(c));
    return out;
}

ExpField conjugate(const ExpField& a) {
    ExpField out(a.rank(), a.orientation());
    for (const auto& [k, c] : a.modes())
        out.add_mode(-k, conjugate(c));
    return out;
}

bool is_real(const ExpField& a) {
    return conjugate(a) == a;
}

bool perp(const ExpField& a, const ExpField& b) {
    return dot(a, conjugate(b)).is_zero();
}

ExpField partial(const ExpField& a, int mu) {
    if (mu < 0 || mu >= kDim)
        throw DomainError("derivative index must be 0..3");
    ExpField out(a.rank(), a.orientation());
    const ComplexRational minus_i{Rational(0), Rational(-1)};
    for (const auto& [k, c] : a.modes())
        out.add_mode(k, (minus_i * ComplexRational(k.k[mu])) * c);
    return out;
}

ExpField ext_d(const ExpField& a) {
    if (a.rank() >= kDim)
        throw DomainError("exterior derivative needs rank <= 3");
    ExpField out(a.rank() + 1, a.orientation());
    const ComplexRational minus_i{Rational(0), Rational(-1)};
    for (const auto& [k, c] : a.modes()) {
        std::array<ComplexRational, 4> dk;
        for (int mu = 0; mu < kDim; ++mu)
            dk[mu] = minus_i * ComplexRational(k.k[mu]);
        out.add_mode(k, wedge(AntisymTensor::covector(dk), c));
    }
    return out;
}

ExpField codiff(const ExpField& a) {
    if (a.rank() < 1)
        throw DomainError("codifferential needs rank >= 1");
    return hodge(ext_d(hodge(a)));
}

namespace {

void check_potential(const ExpField& A) {
    if (A.rank() != 1)
        throw DomainError("potential must have rank 1");
    if (!is_real(A))
        throw DomainError("potential must be real");
    if (!every_mode_k3_equals(A, Rational(0)))
        throw DomainError("potential modes must have k3 = 0");
}

} // namespace

ExpField ext_dA(const ExpField& f, const ExpField& A) {
    check_potential(A);
    check_same_frame(f, A);
    if (f.rank() == 0)
        return ext_d(f);
    if (f.rank() == 1)
        return ext_d(f) - hodge(wedge(A, f));
    throw DomainError("covariant exterior derivative supports ranks 0 and 1 only");
}

bool every_mode_k3_equals(const ExpField& a, const Rational& value) {
    return std::all_of(a.modes().begin(), a.modes().end(),
                       [&](const auto& mode) { return mode.first.k[3] == value; });
}

ExpField component_field(const ExpField& a, std::initializer_list<int> indices) {
    ExpField out(0, a.orientation());
    for (const auto& [k, c] : a.modes())
        out.add_mode(k, AntisymTensor::scalar(c.at(indices)));
    return out;
}

TorsionConnection::TorsionConnection(const ExpField& constant_real_A)
    : orientation_(constant_real_A.orientation()) {
    const ExpField& A = constant_real_A;
    check_potential(A);
    if (A.modes().size() > 1 || (A.modes().size() == 1 && !A.modes().begin()->first.is_zero()))
        throw DomainError("explicit connection coefficients need a constant potential");
    AntisymTensor c = A.coeff(WaveCovector{});
    for (int mu = 0; mu < kDim; ++mu)
        a_[mu] = c.at({mu}).re;
}

Rational TorsionConnection::gamma(int lambda, int mu, int nu) const {
    // Γ^λ_{μν} = ½ A_κ ε^{κλ}_{μν}; both raises are metric signs
    Rational acc;
    for (int kappa = 0; kappa < kDim; ++kappa) {
        int eps = epsilon_sign({kappa, lambda, mu, nu});
        if (eps == 0)
            continue;
        int s = eps * metric_sign(kappa) * metric_sign(lambda) * orientation_;
        acc += s == 1 ? a_[kappa] : Rational(-a_[kappa]);
    }
    return acc / 2;
}

Rational TorsionConnection::torsion(int lambda, int mu, int nu) const {
    return gamma(lambda, mu, nu) - gamma(lambda, nu, mu);
}

} // namespace mink
