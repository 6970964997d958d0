// Copyright 2026 The nilclean authors
// SPDX-License-Identifier: Apache-2.0

#include "nilclean/matrix.hpp"

#include <utility>

namespace nilclean {

Mat::Mat(const FieldSpec& spec, std::size_t n)
    : spec_(spec), n_(n), entries_(n * n, FieldElem::zero(spec)) {
    if (n == 0) fail(Errc::dimension_mismatch, "matrices must have dimension >= 1");
}

Mat Mat::identity(std::size_t n, const FieldSpec& spec) {
    Mat m(spec, n);
    for (std::size_t i = 0; i < n; ++i) m.cell(i, i) = FieldElem::one(spec);
    return m;
}

void Mat::set(std::size_t i, std::size_t j, const FieldElem& value) {
    if (value.spec() != spec_) fail(Errc::mixed_fields, "entry from a different field");
    cell(i, j) = value;
}

void Mat::require_compatible(const Mat& rhs) const {
    if (spec_ != rhs.spec_)
        fail(Errc::mixed_fields, "matrices over different fields: " + spec_.str() + " vs " + rhs.spec_.str());
    if (n_ != rhs.n_)
        fail(Errc::dimension_mismatch,
             "dimension mismatch: " + std::to_string(n_) + " vs " + std::to_string(rhs.n_));
}

Mat Mat::operator+(const Mat& rhs) const {
    require_compatible(rhs);
    Mat out(spec_, n_);
    for (std::size_t i = 0; i < entries_.size(); ++i) out.entries_[i] = entries_[i] + rhs.entries_[i];
    return out;
}

Mat Mat::operator-(const Mat& rhs) const {
    require_compatible(rhs);
    Mat out(spec_, n_);
    for (std::size_t i = 0; i < entries_.size(); ++i) out.entries_[i] = entries_[i] - rhs.entries_[i];
    return out;
}

Mat Mat::operator*(const Mat& rhs) const {
    require_compatible(rhs);
    Mat out(spec_, n_);
    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t t = 0; t < n_; ++t) {
            const FieldElem& a = at(i, t);
            if (a.is_zero()) continue;
            for (std::size_t j = 0; j < n_; ++j)
                out.cell(i, j) += a * rhs.at(t, j);
        }
    return out;
}

bool Mat::operator==(const Mat& rhs) const {
    return spec_ == rhs.spec_ && n_ == rhs.n_ && entries_ == rhs.entries_;
}

Mat Mat::pow(std::uint64_t k) const {
    Mat result = identity(n_, spec_);
    Mat base = *this;
    while (k > 0) {
        if (k & 1) result = result * base;
        k >>= 1;
        if (k > 0) base = base * base;
    }
    return result;
}

FieldElem Mat::trace() const {
    FieldElem t = FieldElem::zero(spec_);
    for (std::size_t i = 0; i < n_; ++i) t += at(i, i);
    return t;
}

Mat Mat::block_diag(const Mat& a, const Mat& b) {
    if (a.spec_ != b.spec_) fail(Errc::mixed_fields, "block_diag over different fields");
    Mat out(a.spec_, a.n_ + b.n_);
    for (std::size_t i = 0; i < a.n_; ++i)
        for (std::size_t j = 0; j < a.n_; ++j) out.cell(i, j) = a.at(i, j);
    for (std::size_t i = 0; i < b.n_; ++i)
        for (std::size_t j = 0; j < b.n_; ++j) out.cell(a.n_ + i, a.n_ + j) = b.at(i, j);
    return out;
}

Poly Mat::charpoly() const {
    const FieldElem one = FieldElem::one(spec_);
    // coefficient vector of det(XI - A[0..k][0..k]), highest degree first
    std::vector<FieldElem> vec{one, -at(0, 0)};
    for (std::size_t k = 1; k < n_; ++k) {
        // Toeplitz column: 1, -a_kk, -(R S), -(R M S), ..., -(R M^(k-2) S),
        // with M the leading k x k block, R = A[k][0..k), S = A[0..k)[k].
        std::vector<FieldElem> col;
        col.reserve(k + 2);
        col.push_back(one);
        col.push_back(-at(k, k));
        std::vector<FieldElem> w;
        w.reserve(k);
        for (std::size_t i = 0; i < k; ++i) w.push_back(at(i, k));
        for (std::size_t j = 0; j < k; ++j) {
            FieldElem dot = FieldElem::zero(spec_);
            for (std::size_t t = 0; t < k; ++t) dot += at(k, t) * w[t];
            col.push_back(-dot);
            if (j + 1 == k) break;
            std::vector<FieldElem> next(k, FieldElem::zero(spec_));
            for (std::size_t i = 0; i < k; ++i)
                for (std::size_t t = 0; t < k; ++t) next[i] += at(i, t) * w[t];
            w = std::move(next);
        }
        // first k+2 entries of the convolution col * vec
        std::vector<FieldElem> next(k + 2, FieldElem::zero(spec_));
        for (std::size_t i = 0; i < next.size(); ++i)
            for (std::size_t j = 0; j <= i && j < vec.size(); ++j)
                if (i - j < col.size()) next[i] += col[i - j] * vec[j];
        vec = std::move(next);
    }
    std::vector<FieldElem> low_to_high(vec.rbegin(), vec.rend());
    return Poly(spec_, std::move(low_to_high));
}

Poly Mat::minpoly() const {
    Poly m = Poly::one(spec_);
    const FieldElem zero = FieldElem::zero(spec_);
    for (std::size_t b = 0; b < n_; ++b) {
        // echelon rows over the Krylov vectors of e_b, augmented with the
        // combination that produced them in terms of e_b, A e_b, ...
        std::vector<std::vector<FieldElem>> rows;
        std::vector<std::size_t> pivots;
        std::vector<FieldElem> v(n_, zero);
        v[b] = FieldElem::one(spec_);
        for (std::size_t step = 0;; ++step) {
            std::vector<FieldElem> aug = v;
            aug.resize(n_ + n_ + 1, zero);
            aug[n_ + step] = FieldElem::one(spec_);
            for (std::size_t r = 0; r < rows.size(); ++r) {
                const FieldElem f = aug[pivots[r]];
                if (f.is_zero()) continue;
                for (std::size_t j = 0; j < aug.size(); ++j) aug[j] -= f * rows[r][j];
            }
            std::size_t pivot = n_;
            for (std::size_t j = 0; j < n_; ++j)
                if (!aug[j].is_zero()) {
                    pivot = j;
                    break;
                }
            if (pivot == n_) {
                // dependence found; the tail holds the annihilator of e_b
                std::vector<FieldElem> coeffs(aug.begin() + n_, aug.begin() + n_ + step + 1);
                m = Poly::lcm(m, Poly(spec_, std::move(coeffs)));
                break;
            }
            const FieldElem inv = aug[pivot].inverse();
            for (std::size_t j = 0; j < aug.size(); ++j) aug[j] *= inv;
            rows.push_back(std::move(aug));
            pivots.push_back(pivot);
            std::vector<FieldElem> next(n_, zero);
            for (std::size_t i = 0; i < n_; ++i)
                for (std::size_t t = 0; t < n_; ++t) next[i] += at(i, t) * v[t];
            v = std::move(next);
        }
        if (m.degree() == n_) break;
    }
    return m;
}

std::size_t Mat::rank() const {
    std::vector<FieldElem> work = entries_;
    auto cell_at = [&](std::size_t i, std::size_t j) -> FieldElem& { return work[i * n_ + j]; };
    std::size_t rank = 0;
    for (std::size_t col = 0; col < n_ && rank < n_; ++col) {
        std::size_t pivot = n_;
        for (std::size_t i = rank; i < n_; ++i)
            if (!cell_at(i, col).is_zero()) {
                pivot = i;
                break;
            }
        if (pivot == n_) continue;
        for (std::size_t j = 0; j < n_; ++j) std::swap(cell_at(rank, j), cell_at(pivot, j));
        const FieldElem inv = cell_at(rank, col).inverse();
        for (std::size_t j = col; j < n_; ++j) cell_at(rank, j) *= inv;
        for (std::size_t i = 0; i < n_; ++i) {
            if (i == rank) continue;
            const FieldElem f = cell_at(i, col);
            if (f.is_zero()) continue;
            for (std::size_t j = col; j < n_; ++j) cell_at(i, j) -= f * cell_at(rank, j);
        }
        ++rank;
    }
    return rank;
}

bool Mat::is_idempotent() const { return *this * *this == *this; }

bool Mat::is_nilpotent() const { return charpoly() == Poly::monomial(spec_, n_); }

bool Mat::is_unipotent() const {
    return charpoly() == Poly::power_of_linear(FieldElem::one(spec_), n_);
}

}  // namespace nilclean
