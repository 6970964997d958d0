// Copyright 2026 The nilclean authors
// SPDX-License-Identifier: Apache-2.0

// Companion matrices and the two constructive completions built on them:
// filling the free first row of a bordered companion so the whole matrix
// attains a prescribed characteristic polynomial, and splitting a companion
// matrix into an idempotent plus a matrix with prescribed characteristic
// polynomial tail.

#pragma once

#include <cstddef>
#include <vector>

#include "nilclean/matrix.hpp"
#include "nilclean/poly.hpp"

namespace nilclean {

/// A companion matrix given by its coefficient tuple (c_0, ..., c_{n-1}):
/// subdiagonal ones, last column (-c_0, ..., -c_{n-1})^T, zeros elsewhere.
/// Its characteristic polynomial is X^n + c_{n-1} X^{n-1} + ... + c_0.
struct CompanionSpec {
    FieldSpec spec;
    std::vector<FieldElem> c;

    CompanionSpec(const FieldSpec& field, std::vector<FieldElem> coeffs);
    std::size_t dim() const noexcept { return c.size(); }
};

Mat companion(const CompanionSpec& cs);

/// A companion matrix whose last column keeps the tail (c_1, ..., c_{n-1})
/// but whose first row is free: row 0 is (-alpha_{n-1}, ..., -alpha_0),
/// rows below keep subdiagonal ones and -c_i in the last column.
struct BorderedCompanion {
    FieldSpec spec;
    std::vector<FieldElem> alphas;  // alpha_0 .. alpha_{n-1}
    std::vector<FieldElem> c_tail;  // c_1 .. c_{n-1}

    Mat materialize() const;
};

struct CompletionResult {
    std::vector<FieldElem> alphas;  // alpha_0 .. alpha_{n-1}
    Mat m;
};

/// Completes the free first row so that the bordered companion has
/// characteristic (and minimal) polynomial exactly f. Expanding
/// det(XI - M) along the first row couples each alpha with the tail;
/// the resulting triangular system
///   alpha_{n-i} = f_{n-i} - c_{n-i} - sum_{t=1}^{i-1} alpha_{n-i+t} c_{n-t}
/// (with c_0 taken as 0) is solved in order i = 1, ..., n and has a unique
/// solution. The output matrix is similar to the companion matrix of f.
CompletionResult complete_with_charpoly(const Poly& f, const std::vector<FieldElem>& c_tail);

struct FixedLeadingResult {
    std::vector<FieldElem> alphas;
    Mat m;
    Poly f;
};

/// Variant of complete_with_charpoly with alpha_{n-1} pinned. The degree
/// n-1 coefficient of the attained polynomial is then forced to
/// alpha_top + c_{n-1}; the lower coefficients f_0..f_{n-2} are free.
FixedLeadingResult complete_fixed_leading(const FieldElem& alpha_top,
                                          const std::vector<FieldElem>& target_low,
                                          const std::vector<FieldElem>& c_tail);

struct TargetDecomposition {
    Mat e;  // idempotent of rank k
    Mat m;  // companion(cs) - e
};

/// Splits C = companion(cs) as C = E + M where E is an idempotent of rank
/// k (1 <= k <= n-1) and M has characteristic polynomial
/// X^n + (k*1 + c_{n-1}) X^{n-1} + g, for any g of degree <= n-2.
///
/// E is supported on an identity block in the first k rows plus a k x (n-k)
/// strip that is nonzero only in its last column (entries alpha_i - c_i)
/// and bottom row (entries alpha_{n-2}, ..., alpha_k). The alphas are found
/// by peeling one factor (X+1) off the target per rank unit: each division
/// leaves the constant remainder as the lowest outstanding alpha and hands
/// the quotient to a problem of rank k-1 on the shortened tail; rank 1 is
/// the fixed-leading completion with alpha_top = 1.
TargetDecomposition nil_clean_decompose_with_target(const CompanionSpec& cs, std::size_t k,
                                                    const Poly& g);

}  // namespace nilclean
