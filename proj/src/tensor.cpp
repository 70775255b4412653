#include "mink/tensor.hpp"

#include <algorithm>
#include <bit>
#include <string>

namespace mink {

namespace {

void check_rank(int rank) {
    if (rank < 0 || rank > kDim)
        throw DomainError("tensor rank must be 0..4, got " + std::to_string(rank));
}

void check_index(int index) {
    if (index < 0 || index >= kDim)
        throw DomainError("tensor index must be 0..3, got " + std::to_string(index));
}

// Sorts `idx` ascending; returns the permutation sign, or 0 on duplicates.
int sort_sign(std::vector<int>& idx) {
    int sign = 1;
    for (size_t i = 1; i < idx.size(); ++i) {
        for (size_t j = i; j > 0 && idx[j] <= idx[j - 1]; --j) {
            if (idx[j] == idx[j - 1])
                return 0;
            std::swap(idx[j], idx[j - 1]);
            sign = -sign;
        }
    }
    return sign;
}

// Position of a strictly increasing tuple in increasing_tuples(rank).
int tuple_pos(int rank, const std::vector<int>& sorted) {
    const auto& table = increasing_tuples(rank);
    for (size_t p = 0; p < table.size(); ++p)
        if (table[p] == sorted)
            return static_cast<int>(p);
    throw InternalError("increasing tuple not found");
}

// Product of metric signs over a tuple: raises all indices of one factor.
int metric_product(const std::vector<int>& tuple) {
    int s = 1;
    for (int i : tuple)
        s *= metric_sign(i);
    return s;
}

} // namespace

int metric_sign(int index) {
    check_index(index);
    return index == 0 ? 1 : -1;
}

int epsilon_sign(std::span<const int> indices) {
    if (indices.size() != kDim)
        throw DomainError("epsilon takes exactly 4 indices");
    std::vector<int> idx(indices.begin(), indices.end());
    for (int i : idx)
        check_index(i);
    // A duplicate-free sorted result is exactly (0,1,2,3), so the sort sign
    // is the permutation sign relative to it.
    return sort_sign(idx);
}

int epsilon_sign(std::initializer_list<int> indices) {
    return epsilon_sign(std::span<const int>(indices.begin(), indices.size()));
}

const std::vector<std::vector<int>>& increasing_tuples(int rank) {
    check_rank(rank);
    static const std::array<std::vector<std::vector<int>>, 5> tables = [] {
        std::array<std::vector<std::vector<int>>, 5> t;
        t[0] = {{}};
        for (int q = 1; q <= kDim; ++q) {
            for (const auto& prefix : t[q - 1]) {
                int lo = prefix.empty() ? 0 : prefix.back() + 1;
                for (int next = lo; next < kDim; ++next) {
                    auto tuple = prefix;
                    tuple.push_back(next);
                    t[q].push_back(std::move(tuple));
                }
            }
        }
        return t;
    }();
    return tables[rank];
}

AntisymTensor::AntisymTensor(int rank) : rank_(rank) {
    check_rank(rank);
    comp_.resize(increasing_tuples(rank).size());
}

AntisymTensor AntisymTensor::scalar(const ComplexRational& value) {
    AntisymTensor t(0);
    t.comp_[0] = value;
    return t;
}

AntisymTensor AntisymTensor::covector(const std::array<ComplexRational, 4>& values) {
    AntisymTensor t(1);
    for (int mu = 0; mu < kDim; ++mu)
        t.comp_[mu] = values[mu];
    return t;
}

AntisymTensor AntisymTensor::basis(std::initializer_list<int> indices) {
    std::vector<int> idx(indices);
    for (size_t i = 1; i < idx.size(); ++i)
        if (idx[i] <= idx[i - 1])
            throw DomainError("basis indices must be strictly increasing");
    AntisymTensor t(static_cast<int>(idx.size()));
    t.set(std::span<const int>(idx), ComplexRational(1));
    return t;
}

bool AntisymTensor::is_zero() const {
    return std::all_of(comp_.begin(), comp_.end(),
                       [](const ComplexRational& c) { return c.is_zero(); });
}

ComplexRational AntisymTensor::at(std::span<const int> indices) const {
    if (static_cast<int>(indices.size()) != rank_)
        throw DomainError("component tuple length must equal tensor rank");
    std::vector<int> idx(indices.begin(), indices.end());
    for (int i : idx)
        check_index(i);
    int sign = sort_sign(idx);
    if (sign == 0)
        return {};
    ComplexRational v = comp_[tuple_pos(rank_, idx)];
    return sign == 1 ? v : -v;
}

ComplexRational AntisymTensor::at(std::initializer_list<int> indices) const {
    return at(std::span<const int>(indices.begin(), indices.size()));
}

void AntisymTensor::set(std::span<const int> indices, const ComplexRational& value) {
    if (static_cast<int>(indices.size()) != rank_)
        throw DomainError("component tuple length must equal tensor rank");
    std::vector<int> idx(indices.begin(), indices.end());
    for (int i : idx)
        check_index(i);
    int sign = sort_sign(idx);
    if (sign == 0)
        return;
    comp_[tuple_pos(rank_, idx)] = sign == 1 ? value : -value;
}

void AntisymTensor::set(std::initializer_list<int> indices, const ComplexRational& value) {
    set(std::span<const int>(indices.begin(), indices.size()), value);
}

AntisymTensor& AntisymTensor::operator+=(const AntisymTensor& o) {
    if (rank_ != o.rank_)
        throw DomainError("tensor sum needs equal ranks");
    for (size_t i = 0; i < comp_.size(); ++i)
        comp_[i] += o.comp_[i];
    return *this;
}

AntisymTensor& AntisymTensor::operator-=(const AntisymTensor& o) {
    if (rank_ != o.rank_)
        throw DomainError("tensor difference needs equal ranks");
    for (size_t i = 0; i < comp_.size(); ++i)
        comp_[i] -= o.comp_[i];
    return *this;
}

AntisymTensor& AntisymTensor::operator*=(const ComplexRational& s) {
    for (auto& c : comp_)
        c *= s;
    return *this;
}

AntisymTensor operator+(AntisymTensor a, const AntisymTensor& b) { return a += b; }
AntisymTensor operator-(AntisymTensor a, const AntisymTensor& b) { return a -= b; }

AntisymTensor operator-(const AntisymTensor& a) {
    AntisymTensor t = a;
    return t *= ComplexRational(-1);
}

AntisymTensor operator*(const ComplexRational& s, AntisymTensor a) { return a *= s; }

ComplexRational dot(const AntisymTensor& a, const AntisymTensor& b) {
    if (a.rank() != b.rank())
        throw DomainError("dot needs equal ranks");
    const auto& tuples = increasing_tuples(a.rank());
    ComplexRational acc;
    for (size_t p = 0; p < tuples.size(); ++p) {
        ComplexRational term = a.stored()[p] * b.stored()[p];
        acc += metric_product(tuples[p]) == 1 ? term : -term;
    }
    return acc;
}

AntisymTensor wedge(const AntisymTensor& a, const AntisymTensor& b) {
    const int q = a.rank(), r = b.rank();
    if (q + r > kDim)
        throw DomainError("wedge ranks exceed dimension");
    AntisymTensor out(q + r);
    const auto& out_tuples = increasing_tuples(q + r);
    std::vector<int> left, right;
    for (size_t p = 0; p < out_tuples.size(); ++p) {
        const auto& L = out_tuples[p];
        // (a∧b)_L = Σ over q-subsets S of L's positions, kept in order:
        //   shuffle_sign(S) · a_{L[S]} · b_{L[rest]}
        ComplexRational acc;
        for (unsigned mask = 0; mask < (1u << L.size()); ++mask) {
            if (std::popcount(mask) != q)
                continue;
            left.clear();
            right.clear();
            int inversions = 0, right_seen = 0;
            for (size_t pos = 0; pos < L.size(); ++pos) {
                if (mask >> pos & 1u) {
                    left.push_back(L[pos]);
                    inversions += right_seen;
                } else {
                    right.push_back(L[pos]);
                    ++right_seen;
                }
            }
            ComplexRational term =
                a.at(std::span<const int>(left)) * b.at(std::span<const int>(right));
            acc += inversions % 2 == 0 ? term : -term;
        }
        out.set(std::span<const int>(L), acc);
    }
    return out;
}

AntisymTensor hodge(const AntisymTensor& a, int orientation) {
    if (orientation != 1 && orientation != -1)
        throw DomainError("orientation must be +1 or -1");
    const int q = a.rank();
    AntisymTensor out(kDim - q);
    std::vector<int> full;
    for (const auto& J : increasing_tuples(kDim - q)) {
        // complement of J, increasing
        std::vector<int> I;
        for (int mu = 0; mu < kDim; ++mu)
            if (std::find(J.begin(), J.end(), mu) == J.end())
                I.push_back(mu);
        // (*a)_J = a^I ε_{I J},  ε_{0123} = orientation
        full = I;
        full.insert(full.end(), J.begin(), J.end());
        int eps = epsilon_sign(std::span<const int>(full)) * orientation;
        ComplexRational v = a.at(std::span<const int>(I));
        if (metric_product(I) * eps == -1)
            v = -v;
        out.set(std::span<const int>(J), v);
    }
    return out;
}

AntisymTensor reflect(const AntisymTensor& a) {
    AntisymTensor out = a;
    const auto& tuples = increasing_tuples(a.rank());
    for (size_t p = 0; p < tuples.size(); ++p)
        if (std::find(tuples[p].begin(), tuples[p].end(), 3) != tuples[p].end())
            out.set(std::span<const int>(tuples[p]), -a.stored()[p]);
    return out;
}

AntisymTensor conjugate(const AntisymTensor& a) {
    AntisymTensor out(a.rank());
    const auto& tuples = increasing_tuples(a.rank());
    for (size_t p = 0; p < tuples.size(); ++p)
        out.set(std::span<const int>(tuples[p]), a.stored()[p].conj());
    return out;
}

bool is_real(const AntisymTensor& a) {
    return std::all_of(a.stored().begin(), a.stored().end(),
                       [](const ComplexRational& c) { return c.is_real(); });
}

} // namespace mink
