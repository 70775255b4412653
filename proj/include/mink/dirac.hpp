#pragma once

#include <array>
#include <optional>
#include <utility>
#include <vector>

#include "mink/field.hpp"
#include "mink/report.hpp"

namespace mink {

// α: sign of the pinned x³ oscillation e^{−iαx³} (the mass mode);
// β: eigenvalue sign in the polarisation condition *du = iβ du.
struct SignPair {
    int alpha;
    int beta;

    SignPair(int a, int b);
    ComplexRational ab() const { return ComplexRational(alpha * beta); }

    friend bool operator==(const SignPair&, const SignPair&) = default;
};

// Scalar amplitude pair (φ, χ): rank-0 fields of (x⁰, x¹, x²) only.
class SpinorPair2D {
public:
    SpinorPair2D(); // zero pair
    SpinorPair2D(ExpField phi, ExpField chi);

    const ExpField& phi() const { return phi_; }
    const ExpField& chi() const { return chi_; }

private:
    ExpField phi_;
    ExpField chi_;
};

struct Bispinor3D {
    ExpField phi1{0}, phi2{0}, chi1{0}, chi2{0};
};

struct PhotonSpec {
    SignPair signs;
    ComplexRational gauge_constant; // the C of the gauge freedom u₃ = Cα
};

enum class ParticleBranch { Electron, Positron };

std::string to_string(ParticleBranch b);

struct ChargeValue {
    int c;                   // ±1
    ComplexRational witness; // the pre-sign scalar; real and nonzero
};

struct DispersionResult {
    Rational epsilon;
    ParticleBranch branch;
};

// Requires A to be rank 1, real, with k₃ = 0 on every mode and A₃ ≡ 0 —
// the potential shape every two-dimensional operator below accepts.
void require_potential_2d(const ExpField& A);

// u_μ = (C, 1, −iαβ, Cα) e^{−i(x⁰+αx³)}: a plane wave with *du = iβ du,
// wave covector (1,0,0,α) on the forward light cone.
ExpField make_photon(const PhotonSpec& spec);

// v_μ = { φ·(1,0,0,α) − χ·(0,1,iαβ,0) } e^{−iαx³}: the general rank-1 field
// orthogonal to the photon's conjugate and to its wave covector.
ExpField make_electron_candidate(const SignPair& signs, const SpinorPair2D& s);

// *du − iβ du
ExpField polarised_residual(const ExpField& u, int beta);

// *d_A v − iβ d_A v
ExpField perturbed_residual(const ExpField& v, const ExpField& A, int beta);

// 2×2 first-order operator whose entries are sums of coeff·∇^β_μ and
// coeff·id terms, with ∇^β_μ f = ∂_μ f + iβ A_μ f.
struct DiracOperator2x2 {
    struct Term {
        ComplexRational coeff;
        std::optional<int> grad; // ∇^β_μ when set, identity otherwise
    };
    using Entry = std::vector<Term>;
    std::array<std::array<Entry, 2>, 2> entries;

    // [[ i∇₀ − 1,     i∇₁ − αβ∇₂ ],
    //  [ −i∇₁ − αβ∇₂, −i∇₀ − 1   ]]
    static DiracOperator2x2 combined(const SignPair& signs);

    std::pair<ExpField, ExpField> apply(const SpinorPair2D& s, const ExpField& A,
                                        int beta) const;
};

// the two rows of the combined operator applied to (φ, χ)
std::pair<ExpField, ExpField> dirac_residual_2d(const SpinorPair2D& s, const ExpField& A,
                                                const SignPair& signs);

// the four rows of the 3+1-dimensional equation with ∇ = ∂ + iA
std::array<ExpField, 4> dirac_residual_3d(const Bispinor3D& psi, const ExpField& A);

// Builds v from (signs, s), computes R = *d_A v − iβ d_A v and the two rows
// D of the combined operator, then certifies the component identity
//   R^{03} = αβ·D₁·e^{−iαx³},  R^{13} = αβ·D₂·e^{−iαx³},  R^{23} = i·D₂·e^{−iαx³}
// and the equivalence R = 0 ⇔ D = 0. The overload taking an explicit
// operator exists so a corrupted operator can serve as a negative control.
VerificationReport theorem1_check(const SpinorPair2D& s, const ExpField& A,
                                  const SignPair& signs);
VerificationReport theorem1_check(const SpinorPair2D& s, const ExpField& A,
                                  const SignPair& signs, const DiracOperator2x2& op);

// Certifies that conjugating a field flips both signs:
//   *d ū − i(−β) d ū = conj(*du − iβ du), and the d_A analogue for real A.
VerificationReport conjugation_symmetry_check(const ExpField& u, const ExpField& v,
                                              const ExpField& A, const SignPair& signs);

// witness = i·*(du ∧ conj(reflect(du))) — must be a constant real nonzero
// scalar; the charge is −sign(witness).
ChargeValue charge(const ExpField& u);

// Solves (i∇^β₀ − 1) e^{−iεx⁰} = 0 for ε under A = (A₀,0,0,0), checking the
// solution is exact and the branch label agrees with the charge sign.
DispersionResult dispersion_solve(const Rational& A0, const SignPair& signs);

// The zero-potential plane-wave pair: u = make_photon(signs, C) and
// v = (1,0,0,α) e^{−i(x⁰+αx³)}, verified to be the gradient of
// i·e^{−i(x⁰+αx³)} and to share u's wave covector.
std::pair<ExpField, ExpField> free_catalogue(const SignPair& signs,
                                             const ComplexRational& C);

} // namespace mink
