#pragma once

#include <cstdint>
#include <random>

#include "mink/field.hpp"
#include "mink/tensor.hpp"

namespace mink {

// Deterministic random values for the identity suites and property tests.
// mt19937_64 with explicit modulo sampling; std::uniform_int_distribution is
// implementation-defined and would break reproducibility of frozen values.
class RandomSource {
public:
    explicit RandomSource(std::uint64_t seed) : rng_(seed) {}

    std::uint64_t raw() { return rng_(); }

    // in [lo, hi], inclusive
    long long integer(long long lo, long long hi) {
        return lo + static_cast<long long>(rng_() % static_cast<std::uint64_t>(hi - lo + 1));
    }

    Rational rational() {
        return make_rational(integer(-10, 10), integer(1, 9));
    }

    Rational nonzero_rational() {
        Rational r = rational();
        while (r == 0)
            r = rational();
        return r;
    }

    ComplexRational complex() { return {rational(), rational()}; }

    ComplexRational real_complex() { return {rational(), Rational(0)}; }

    int sign() { return integer(0, 1) == 0 ? -1 : 1; }

    AntisymTensor tensor(int rank) {
        AntisymTensor t(rank);
        for (const auto& tuple : increasing_tuples(rank))
            t.set(std::span<const int>(tuple), complex());
        return t;
    }

    AntisymTensor real_tensor(int rank) {
        AntisymTensor t(rank);
        for (const auto& tuple : increasing_tuples(rank))
            t.set(std::span<const int>(tuple), real_complex());
        return t;
    }

    WaveCovector wave() {
        WaveCovector k;
        for (int mu = 0; mu < kDim; ++mu)
            k.k[mu] = rational();
        return k;
    }

    // wave covector with the x³ component pinned (mass-ansatz structure)
    WaveCovector wave_k3(const Rational& k3) {
        WaveCovector k = wave();
        k.k[3] = k3;
        return k;
    }

    ExpField field(int rank, int mode_count, int orientation = +1) {
        ExpField f(rank, orientation);
        for (int m = 0; m < mode_count; ++m)
            f.add_mode(wave(), tensor(rank));
        return f;
    }

    // rank-0 field depending on (x⁰, x¹, x²) only
    ExpField scalar_2d(int mode_count) {
        ExpField f(0);
        for (int m = 0; m < mode_count; ++m)
            f.add_mode(wave_k3(Rational(0)), tensor(0));
        return f;
    }

    // real rank-1 potential with k₃ = 0 modes: c e^{−ik·x} + c̄ e^{ik·x}
    ExpField real_potential(int mode_count) {
        ExpField f(1);
        for (int m = 0; m < mode_count; ++m) {
            WaveCovector k = wave_k3(Rational(0));
            AntisymTensor c = tensor(1);
            f.add_mode(k, c);
            f.add_mode(-k, conjugate(c));
        }
        return f;
    }

    ExpField constant_real_potential() {
        return ExpField::constant(real_tensor(1));
    }

    // additionally A₃ ≡ 0: the potential shape the 2D Dirac operators accept
    ExpField real_potential_2d(int mode_count) {
        ExpField f(1);
        for (int m = 0; m < mode_count; ++m) {
            WaveCovector k = wave_k3(Rational(0));
            AntisymTensor c = tensor(1);
            c.set({3}, ComplexRational(0));
            f.add_mode(k, c);
            f.add_mode(-k, conjugate(c));
        }
        return f;
    }

    ExpField constant_real_potential_2d() {
        AntisymTensor c = real_tensor(1);
        c.set({3}, ComplexRational(0));
        return ExpField::constant(c);
    }

private:
    std::mt19937_64 rng_;
};

} // namespace mink
