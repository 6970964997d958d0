// Copyright 2026 The nilclean authors
// SPDX-License-Identifier: Apache-2.0

// Dense square matrices over a FieldSpec field, with the exact invariants
// the nil-clean machinery runs on: characteristic polynomial, minimal
// polynomial, rank, trace, and the idempotent/nilpotent/unipotent tests.

#pragma once

#include <cstddef>
#include <vector>

#include "nilclean/poly.hpp"

namespace nilclean {

class Mat {
  public:
    /// Zero matrix of dimension n >= 1.
    Mat(const FieldSpec& spec, std::size_t n);

    static Mat zero(std::size_t n, const FieldSpec& spec) { return Mat(spec, n); }
    static Mat identity(std::size_t n, const FieldSpec& spec);

    const FieldSpec& spec() const noexcept { return spec_; }
    std::size_t dim() const noexcept { return n_; }

    const FieldElem& at(std::size_t i, std::size_t j) const { return entries_[i * n_ + j]; }
    void set(std::size_t i, std::size_t j, const FieldElem& value);

    Mat operator+(const Mat& rhs) const;
    Mat operator-(const Mat& rhs) const;
    Mat operator*(const Mat& rhs) const;
    bool operator==(const Mat& rhs) const;
    bool operator!=(const Mat& rhs) const { return !(*this == rhs); }

    /// A^k by repeated squaring; A^0 is the identity.
    Mat pow(std::uint64_t k) const;

    FieldElem trace() const;

    /// diag(A, B); both blocks must share a field.
    static Mat block_diag(const Mat& a, const Mat& b);

    /// Characteristic polynomial det(XI - A), monic of degree n, by the
    /// division-free Samuelson-Berkowitz vector recurrence (valid verbatim
    /// in any characteristic).
    Poly charpoly() const;

    /// Minimal polynomial: for each standard basis vector, the first linear
    /// dependence in its Krylov sequence v, Av, A^2 v, ... gives a monic
    /// annihilator; their lcm generates the full annihilating ideal.
    Poly minpoly() const;

    /// Row rank by Gaussian elimination with exact pivoting.
    std::size_t rank() const;

    bool is_idempotent() const;

    /// Equivalent to charpoly(A) = X^n.
    bool is_nilpotent() const;

    /// Equivalent to charpoly(A) = (X-1)^n.
    bool is_unipotent() const;

  private:
    FieldElem& cell(std::size_t i, std::size_t j) { return entries_[i * n_ + j]; }
    void require_compatible(const Mat& rhs) const;

    FieldSpec spec_;
    std::size_t n_;
    std::vector<FieldElem> entries_;
};

}  // namespace nilclean
