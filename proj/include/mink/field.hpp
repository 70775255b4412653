#pragma once

#include <array>
#include <map>

#include "mink/tensor.hpp"

namespace mink {

// Lower-index wave covector of a plane-wave mode e^{−ik·x}, k·x = k_μ x^μ
// (natural pairing, no metric in the phase).
struct WaveCovector {
    std::array<Rational, 4> k{};

    bool is_zero() const;
    friend bool operator==(const WaveCovector&, const WaveCovector&) = default;
    bool operator<(const WaveCovector& o) const; // lexicographic, for map keys
};

WaveCovector operator+(const WaveCovector& a, const WaveCovector& b);
WaveCovector operator-(const WaveCovector& a);

// Finite sum of plane-wave modes  x ↦ Σ_k c_k e^{−ik·x}  with antisymmetric
// tensor coefficients of one common rank. Canonical form: distinct wave
// covectors, no zero coefficients — so equality of fields is equality of the
// stored maps (finitely many distinct exponentials are linearly independent).
// The orientation flag is the sign of ε₀₁₂₃ in the frame the components are
// expressed in; hodge threads it through.
class ExpField {
public:
    explicit ExpField(int rank, int orientation = +1);
    static ExpField constant(const AntisymTensor& c, int orientation = +1);
    static ExpField mode(const WaveCovector& k, const AntisymTensor& c, int orientation = +1);
    // scalar e^{−ik·x}
    static ExpField unit_scalar(const WaveCovector& k, int orientation = +1);

    int rank() const { return rank_; }
    int orientation() const { return orientation_; }
    bool is_zero() const { return modes_.empty(); }
    const std::map<WaveCovector, AntisymTensor>& modes() const { return modes_; }

    // coefficient at k; the zero tensor when k carries no mode
    AntisymTensor coeff(const WaveCovector& k) const;

    // accumulate c·e^{−ik·x}, keeping the canonical form
    void add_mode(const WaveCovector& k, const AntisymTensor& c);

    ExpField& operator+=(const ExpField& o);
    ExpField& operator-=(const ExpField& o);
    ExpField& operator*=(const ComplexRational& s);

    friend bool operator==(const ExpField&, const ExpField&) = default;

private:
    int rank_;
    int orientation_;
    std::map<WaveCovector, AntisymTensor> modes_;
};

ExpField operator+(ExpField a, const ExpField& b);
ExpField operator-(ExpField a, const ExpField& b);
ExpField operator-(const ExpField& a);
ExpField operator*(const ComplexRational& s, ExpField a);

// pointwise lifts of the tensor operations; products convolve modes
ExpField wedge(const ExpField& a, const ExpField& b);
ExpField dot(const ExpField& a, const ExpField& b); // rank-0 field
ExpField hodge(const ExpField& a);                  // uses the field's orientation
ExpField reflect(const ExpField& a);                // components only; k untouched
ExpField conjugate(const ExpField& a);              // (k, c) ↦ (−k, c̄)
bool is_real(const ExpField& a);                    // conjugate(a) = a

// true iff dot(a, conjugate(b)) is the zero field — orthogonality at every point
bool perp(const ExpField& a, const ExpField& b);

// ∂_μ: multiplies each mode by −i k_μ
ExpField partial(const ExpField& a, int mu);

// exterior derivative d = ∂∧ : mode (k, c) ↦ (k, (−ik)∧c); rank +1
ExpField ext_d(const ExpField& a);

// codifferential δ := *d* (no extra sign; every in-scope identity is
// insensitive to one); rank −1
ExpField codiff(const ExpField& a);

// covariant exterior derivative for a real potential A with k₃ = 0 modes:
// rank 0: d_A s = ds;  rank 1: d_A v = dv − *(A∧v)
ExpField ext_dA(const ExpField& f, const ExpField& A);

bool every_mode_k3_equals(const ExpField& a, const Rational& value);

// the scalar field x ↦ F(x)_{indices} (signed component extraction per mode)
ExpField component_field(const ExpField& a, std::initializer_list<int> indices);

// Connection coefficients Γ^λ_{μν} = ½ A_κ ε^{κλ}_{μν} generated by a
// constant real potential (single k = 0 mode or zero). The torsion
// T^λ_{μν} = Γ^λ_{μν} − Γ^λ_{νμ} recovers *A.
class TorsionConnection {
public:
    explicit TorsionConnection(const ExpField& constant_real_A);

    Rational gamma(int lambda, int mu, int nu) const;
    Rational torsion(int lambda, int mu, int nu) const;

private:
    std::array<Rational, 4> a_{};
    int orientation_;
};

} // namespace mink
