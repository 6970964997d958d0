// Copyright 2026 The nilclean authors
// SPDX-License-Identifier: Apache-2.0

// Brute-force ground truth, kept deliberately naive: scan the whole matrix
// space of M_n(F_p) for idempotents and test each as a nil-clean summand.
// Results are exhaustive proofs, so an absent witness certifies that no
// decomposition exists.

#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "nilclean/matrix.hpp"

namespace nilclean {

enum class ScanStrategy {
    full_scan,    // enumerate all p^(n^2) matrices per query
    precomputed,  // enumerate once per (p, n), cache the idempotents, reuse
};

struct SearchBudget {
    std::uint64_t max_candidates = 1ull << 25;
    ScanStrategy strategy = ScanStrategy::full_scan;
    unsigned jobs = 1;  // disjoint index ranges; merged result is deterministic
};

/// All idempotents of M_n(F_p), ordered by the base-p row-major encoding of
/// their entries (entry (0,0) is the least significant digit). Throws
/// Errc::budget_exceeded when p^(n^2) > budget.max_candidates.
std::vector<Mat> idempotents(std::uint32_t p, std::size_t n, const SearchBudget& budget = {});

struct BruteForceResult {
    /// The (E, A - E) pair for the enumeration-first idempotent E making
    /// A - E nilpotent; absent iff no idempotent works.
    std::optional<std::pair<Mat, Mat>> witness;
    std::uint64_t candidates_checked = 0;

    bool found() const noexcept { return witness.has_value(); }
};

/// Exhaustively decides whether A (over a prime field; Errc::wrong_field
/// otherwise) is a sum of an idempotent and a nilpotent matrix.
BruteForceResult brute_force_nil_clean(const Mat& a, const SearchBudget& budget = {});

}  // namespace nilclean
