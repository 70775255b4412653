#pragma once

#include <array>
#include <initializer_list>
#include <span>
#include <vector>

#include "mink/rational.hpp"

namespace mink {

inline constexpr int kDim = 4;

// diag(+1,-1,-1,-1), index 0 is time.
int metric_sign(int index);

// Sign of the permutation taking (0,1,2,3) to `indices`; 0 when `indices` is
// not a permutation of 0..3. This is the only source of epsilon signs.
int epsilon_sign(std::span<const int> indices);
int epsilon_sign(std::initializer_list<int> indices);

// Strictly increasing index tuples of the given length over {0,1,2,3}, in
// lexicographic order. This fixes the storage layout of AntisymTensor.
const std::vector<std::vector<int>>& increasing_tuples(int rank);

// Totally antisymmetric covariant tensor of rank 0..4 on Minkowski space.
// Components live only on strictly increasing index tuples; the accessor
// supplies permutation signs for every other tuple, so antisymmetry holds by
// construction. Index raising happens inside dot/hodge via the metric signs.
class AntisymTensor {
public:
    explicit AntisymTensor(int rank); // zero tensor
    static AntisymTensor scalar(const ComplexRational& value);
    static AntisymTensor covector(const std::array<ComplexRational, 4>& values);
    // Unit tensor e^{i0} ∧ e^{i1} ∧ ... for strictly increasing indices.
    static AntisymTensor basis(std::initializer_list<int> indices);

    int rank() const { return rank_; }
    bool is_zero() const;

    // Signed read/write at an arbitrary index tuple (0 / no-op on repeats).
    ComplexRational at(std::span<const int> indices) const;
    ComplexRational at(std::initializer_list<int> indices) const;
    void set(std::span<const int> indices, const ComplexRational& value);
    void set(std::initializer_list<int> indices, const ComplexRational& value);

    // Stored components in increasing_tuples(rank()) order.
    const std::vector<ComplexRational>& stored() const { return comp_; }

    AntisymTensor& operator+=(const AntisymTensor& o);
    AntisymTensor& operator-=(const AntisymTensor& o);
    AntisymTensor& operator*=(const ComplexRational& s);

    friend bool operator==(const AntisymTensor&, const AntisymTensor&) = default;

private:
    int rank_;
    std::vector<ComplexRational> comp_;
};

AntisymTensor operator+(AntisymTensor a, const AntisymTensor& b);
AntisymTensor operator-(AntisymTensor a, const AntisymTensor& b);
AntisymTensor operator-(const AntisymTensor& a);
AntisymTensor operator*(const ComplexRational& s, AntisymTensor a);

// Full metric contraction Q^I R_I over increasing tuples (one raised copy).
ComplexRational dot(const AntisymTensor& a, const AntisymTensor& b);

AntisymTensor wedge(const AntisymTensor& a, const AntisymTensor& b);

// Hodge dual; orientation = sign of ε_{0123} in the active frame, ±1.
AntisymTensor hodge(const AntisymTensor& a, int orientation = +1);

// Spatial reflection x³ → −x³: negates components with an index equal to 3.
AntisymTensor reflect(const AntisymTensor& a);

AntisymTensor conjugate(const AntisymTensor& a);

bool is_real(const AntisymTensor& a);

} // namespace mink
