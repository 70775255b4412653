#include "mink/dirac.hpp"

#include "mink/json_io.hpp"

namespace mink {

namespace {

const ComplexRational kI = ComplexRational::i();

ComplexRational i_times(int sign) {
    return ComplexRational{Rational(0), Rational(sign)};
}

void check_sign(int s, const char* what) {
    if (s != 1 && s != -1)
        throw DomainError(std::string(what) + " must be +1 or -1");
}

void check_canonical_frame(const ExpField& f, const char* what) {
    if (f.orientation() != 1)
        throw DomainError(std::string(what) +
                          " must be given in a positively oriented frame");
}

} // namespace

void require_potential_2d(const ExpField& A) {
    if (A.rank() != 1)
        throw DomainError("potential must have rank 1");
    if (!is_real(A))
        throw DomainError("potential must be real");
    if (!every_mode_k3_equals(A, Rational(0)))
        throw DomainError("potential modes must have k3 = 0");
    if (!component_field(A, {3}).is_zero())
        throw DomainError("potential component A3 must vanish");
}

SignPair::SignPair(int a, int b) : alpha(a), beta(b) {
    check_sign(a, "alpha");
    check_sign(b, "beta");
}

SpinorPair2D::SpinorPair2D() : phi_(0), chi_(0) {}

SpinorPair2D::SpinorPair2D(ExpField phi, ExpField chi)
    : phi_(std::move(phi)), chi_(std::move(chi)) {
    if (phi_.rank() != 0 || chi_.rank() != 0)
        throw DomainError("spinor amplitudes must be rank-0 fields");
    if (!every_mode_k3_equals(phi_, Rational(0)) ||
        !every_mode_k3_equals(chi_, Rational(0)))
        throw DomainError("spinor amplitudes must not depend on x3");
    check_canonical_frame(phi_, "spinor");
    check_canonical_frame(chi_, "spinor");
}

std::string to_string(ParticleBranch b) {
    return b == ParticleBranch::Electron ? "electron" : "positron";
}

ExpField make_photon(const PhotonSpec& spec) {
    const SignPair& sg = spec.signs;
    const ComplexRational& C = spec.gauge_constant;
    AntisymTensor coeff = AntisymTensor::covector(
        {C, ComplexRational(1), -kI * sg.ab(), C * ComplexRational(sg.alpha)});
    WaveCovector k{{Rational(1), Rational(0), Rational(0), Rational(sg.alpha)}};
    return ExpField::mode(k, coeff);
}

ExpField make_electron_candidate(const SignPair& signs, const SpinorPair2D& s) {
    AntisymTensor kvec = AntisymTensor::covector({ComplexRational(1), ComplexRational(0),
                                                  ComplexRational(0),
                                                  ComplexRational(signs.alpha)});
    AntisymTensor pol = AntisymTensor::covector(
        {ComplexRational(0), ComplexRational(1), kI * signs.ab(), ComplexRational(0)});
    ExpField mass_mode = ExpField::unit_scalar(
        WaveCovector{{Rational(0), Rational(0), Rational(0), Rational(signs.alpha)}});
    ExpField v = wedge(s.phi(), ExpField::constant(kvec)) -
                 wedge(s.chi(), ExpField::constant(pol));
    return wedge(v, mass_mode);
}

ExpField polarised_residual(const ExpField& u, int beta) {
    check_sign(beta, "beta");
    if (u.rank() != 1)
        throw DomainError("polarised residual needs a rank-1 field");
    ExpField du = ext_d(u);
    return hodge(du) - i_times(beta) * du;
}

ExpField perturbed_residual(const ExpField& v, const ExpField& A, int beta) {
    check_sign(beta, "beta");
    if (v.rank() != 1)
        throw DomainError("perturbed residual needs a rank-1 field");
    ExpField dav = ext_dA(v, A);
    return hodge(dav) - i_times(beta) * dav;
}

DiracOperator2x2 DiracOperator2x2::combined(const SignPair& signs) {
    const ComplexRational one(1);
    const ComplexRational ab = signs.ab();
    DiracOperator2x2 op;
    op.entries[0][0] = {{kI, 0}, {-one, std::nullopt}};
    op.entries[0][1] = {{kI, 1}, {-ab, 2}};
    op.entries[1][0] = {{-kI, 1}, {-ab, 2}};
    op.entries[1][1] = {{-kI, 0}, {-one, std::nullopt}};
    return op;
}

std::pair<ExpField, ExpField> DiracOperator2x2::apply(const SpinorPair2D& s,
                                                      const ExpField& A, int beta) const {
    check_sign(beta, "beta");
    require_potential_2d(A);
    check_canonical_frame(A, "potential");

    std::array<ExpField, 4> a_comp{ExpField(0), ExpField(0), ExpField(0), ExpField(0)};
    for (int mu = 0; mu < kDim; ++mu)
        a_comp[mu] = component_field(A, {mu});

    auto nabla = [&](const ExpField& f, int mu) {
        return partial(f, mu) + i_times(beta) * wedge(a_comp[mu], f);
    };
    auto eval = [&](const Entry& entry, const ExpField& f) {
        ExpField acc(0);
        for (const Term& t : entry)
            acc += t.coeff * (t.grad ? nabla(f, *t.grad) : f);
        return acc;
    };

    return {eval(entries[0][0], s.phi()) + eval(entries[0][1], s.chi()),
            eval(entries[1][0], s.phi()) + eval(entries[1][1], s.chi())};
}

std::pair<ExpField, ExpField> dirac_residual_2d(const SpinorPair2D& s, const ExpField& A,
                                                const SignPair& signs) {
    return DiracOperator2x2::combined(signs).apply(s, A, signs.beta);
}

std::array<ExpField, 4> dirac_residual_3d(const Bispinor3D& psi, const ExpField& A) {
    if (A.rank() != 1)
        throw DomainError("potential must have rank 1");
    if (!is_real(A))
        throw DomainError("potential must be real");
    check_canonical_frame(A, "potential");
    for (const ExpField* f : {&psi.phi1, &psi.phi2, &psi.chi1, &psi.chi2}) {
        if (f->rank() != 0)
            throw DomainError("bispinor components must be rank-0 fields");
        check_canonical_frame(*f, "bispinor");
    }

    std::array<ExpField, 4> a_comp{ExpField(0), ExpField(0), ExpField(0), ExpField(0)};
    for (int mu = 0; mu < kDim; ++mu)
        a_comp[mu] = component_field(A, {mu});
    auto nabla = [&](const ExpField& f, int mu) {
        return partial(f, mu) + kI * wedge(a_comp[mu], f);
    };

    const ExpField& f1 = psi.phi1;
    const ExpField& f2 = psi.phi2;
    const ExpField& c1 = psi.chi1;
    const ExpField& c2 = psi.chi2;

    std::array<ExpField, 4> rows{ExpField(0), ExpField(0), ExpField(0), ExpField(0)};
    rows[0] = kI * nabla(f1, 0) - f1 + kI * nabla(c1, 3) + kI * nabla(c2, 1) + nabla(c2, 2);
    rows[1] = kI * nabla(f2, 0) - f2 + kI * nabla(c1, 1) - nabla(c1, 2) - kI * nabla(c2, 3);
    rows[2] = -kI * nabla(f1, 3) - kI * nabla(f2, 1) - nabla(f2, 2) - kI * nabla(c1, 0) - c1;
    rows[3] = -kI * nabla(f1, 1) + nabla(f1, 2) + kI * nabla(f2, 3) - kI * nabla(c2, 0) - c2;
    return rows;
}

VerificationReport theorem1_check(const SpinorPair2D& s, const ExpField& A,
                                  const SignPair& signs) {
    return theorem1_check(s, A, signs, DiracOperator2x2::combined(signs));
}

VerificationReport theorem1_check(const SpinorPair2D& s, const ExpField& A,
                                  const SignPair& signs, const DiracOperator2x2& op) {
    VerificationReport rep;
    rep.name = "theorem1";
    rep.property = "R^03 = ab*D1*m, R^13 = ab*D2*m, R^23 = i*D2*m with m = e^(-i*alpha*x3); "
                   "and R = 0 <=> (D1, D2) = 0";

    ExpField v = make_electron_candidate(signs, s);
    ExpField R = perturbed_residual(v, A, signs.beta);
    auto [d1, d2] = op.apply(s, A, signs.beta);

    ExpField mass_mode = ExpField::unit_scalar(
        WaveCovector{{Rational(0), Rational(0), Rational(0), Rational(signs.alpha)}});
    const ComplexRational ab = signs.ab();

    // raised components: R^03 = -R_03, R^13 = +R_13, R^23 = +R_23
    ExpField lhs03 = -component_field(R, {0, 3});
    ExpField lhs13 = component_field(R, {1, 3});
    ExpField lhs23 = component_field(R, {2, 3});
    ExpField rhs03 = ab * wedge(d1, mass_mode);
    ExpField rhs13 = ab * wedge(d2, mass_mode);
    ExpField rhs23 = kI * wedge(d2, mass_mode);

    if (!(lhs03 == rhs03))
        rep.fail("component_03", to_json(lhs03 - rhs03));
    if (!(lhs13 == rhs13))
        rep.fail("component_13", to_json(lhs13 - rhs13));
    if (!(lhs23 == rhs23))
        rep.fail("component_23", to_json(lhs23 - rhs23));

    const bool r_zero = R.is_zero();
    const bool d_zero = d1.is_zero() && d2.is_zero();
    if (r_zero != d_zero)
        rep.fail("equivalence", nlohmann::json{{"residual_zero", r_zero},
                                               {"dirac_rows_zero", d_zero}});

    rep.details["alpha"] = signs.alpha;
    rep.details["beta"] = signs.beta;
    rep.details["is_solution"] = r_zero && d_zero;
    return rep;
}

VerificationReport conjugation_symmetry_check(const ExpField& u, const ExpField& v,
                                              const ExpField& A, const SignPair& signs) {
    VerificationReport rep;
    rep.name = "conjugation-symmetry";
    rep.property = "*d(conj u) - i*(-beta)*d(conj u) = conj(*du - i*beta*du); "
                   "same for d_A with real A";

    ExpField pol_flipped = polarised_residual(conjugate(u), -signs.beta);
    ExpField pol_conj = conjugate(polarised_residual(u, signs.beta));
    if (!(pol_flipped == pol_conj))
        rep.fail("polarised", to_json(pol_flipped - pol_conj));

    ExpField pert_flipped = perturbed_residual(conjugate(v), A, -signs.beta);
    ExpField pert_conj = conjugate(perturbed_residual(v, A, signs.beta));
    if (!(pert_flipped == pert_conj))
        rep.fail("perturbed", to_json(pert_flipped - pert_conj));

    rep.details["alpha"] = signs.alpha;
    rep.details["beta"] = signs.beta;
    return rep;
}

ChargeValue charge(const ExpField& u) {
    if (u.rank() != 1)
        throw DomainError("charge needs a rank-1 field");
    ExpField du = ext_d(u);
    ExpField w = kI * hodge(wedge(du, conjugate(reflect(du))));
    if (w.is_zero())
        throw DomainError("charge degenerate: witness vanishes");
    if (w.modes().size() != 1 || !w.modes().begin()->first.is_zero())
        throw DomainError("charge undefined for this field: witness depends on x");
    ComplexRational value = w.modes().begin()->second.stored()[0];
    if (!value.is_real())
        throw InternalError("charge witness must be real");
    return ChargeValue{value.re > 0 ? -1 : 1, value};
}

DispersionResult dispersion_solve(const Rational& A0, const SignPair& signs) {
    ExpField A = ExpField::constant(AntisymTensor::covector(
        {ComplexRational(A0), ComplexRational(0), ComplexRational(0), ComplexRational(0)}));

    auto rows_at = [&](const Rational& eps) {
        SpinorPair2D s(ExpField::unit_scalar(
                           WaveCovector{{eps, Rational(0), Rational(0), Rational(0)}}),
                       ExpField(0));
        return dirac_residual_2d(s, A, signs);
    };
    auto row1_value = [&](const Rational& eps) -> ComplexRational {
        auto [r1, r2] = rows_at(eps);
        if (!r2.is_zero())
            throw DomainError("ansatz does not close: second row is nonzero");
        if (r1.is_zero())
            return {};
        if (r1.modes().size() != 1)
            throw InternalError("ansatz row is not a single mode");
        return r1.modes().begin()->second.stored()[0];
    };

    // the row value is affine in epsilon; fit it from two samples, then
    // verify exactness at the root and the affineness assumption itself
    ComplexRational at0 = row1_value(Rational(0));
    ComplexRational at1 = row1_value(Rational(1));
    ComplexRational slope = at1 - at0;
    if (slope.is_zero())
        throw DomainError("no isolated solution of the ansatz form");
    if (!(row1_value(Rational(2)) == at0 + slope + slope))
        throw InternalError("ansatz row value is not affine in epsilon");
    ComplexRational eps_c = -at0 / slope;
    if (!eps_c.is_real())
        throw DomainError("no real solution of the ansatz form");
    Rational eps = eps_c.re;

    auto [w1, w2] = rows_at(eps);
    if (!w1.is_zero() || !w2.is_zero())
        throw InternalError("dispersion solution failed exact re-verification");

    ParticleBranch branch;
    if (A0 != 0 && eps == 1 + A0)
        branch = ParticleBranch::Electron;
    else if (A0 != 0 && eps == 1 - A0)
        branch = ParticleBranch::Positron;
    else if (A0 == 0 && eps == 1)
        branch = signs.beta == 1 ? ParticleBranch::Electron : ParticleBranch::Positron;
    else
        throw InternalError("dispersion value escapes the two-branch classification");

    // the branch label must agree with the charge sign of the same-signs photon
    ChargeValue cv = charge(make_photon({signs, ComplexRational(0)}));
    const bool electron_by_charge = cv.c == -1;
    if ((branch == ParticleBranch::Electron) != electron_by_charge)
        throw InternalError("dispersion branch disagrees with the charge label");

    return DispersionResult{eps, branch};
}

std::pair<ExpField, ExpField> free_catalogue(const SignPair& signs,
                                             const ComplexRational& C) {
    ExpField u = make_photon({signs, C});
    WaveCovector k{{Rational(1), Rational(0), Rational(0), Rational(signs.alpha)}};

    SpinorPair2D s(ExpField::unit_scalar(
                       WaveCovector{{Rational(1), Rational(0), Rational(0), Rational(0)}}),
                   ExpField(0));
    ExpField v = make_electron_candidate(signs, s);

    ExpField grad = ext_d(kI * ExpField::unit_scalar(k));
    if (!(v == grad))
        throw InternalError("free particle is not the stated gradient");
    if (v.modes().size() != 1 || !(v.modes().begin()->first == k))
        throw InternalError("free particle does not share the photon wave covector");
    return {u, v};
}

} // namespace mink
