// Copyright 2026 The nilclean authors
// SPDX-License-Identifier: Apache-2.0

// The nil-clean decision procedure for companion matrices, the necessary
// trace conditions for arbitrary square matrices, certified decomposition
// assembly, and the exhaustive coefficient-tuple census.

#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "nilclean/companion.hpp"

namespace nilclean {

enum class Verdict { nilpotent, unipotent, nil_clean_proper, not_nil_clean };

enum class NotNilCleanReason { trace_not_integer, k_out_of_range };

/// Which of the four decision clauses fired: (i) nilpotent, (ii) unipotent,
/// (iii) proper over characteristic zero, (iv) proper over characteristic p.
/// The clauses overlap; precedence is fixed (i), (ii), then (iii)/(iv) so
/// verdicts are deterministic.
enum class Clause { i, ii, iii, iv };

struct Classification {
    Verdict verdict;
    std::optional<Clause> clause;            // present iff nil-clean
    std::optional<std::int64_t> k;           // present iff nil_clean_proper
    std::optional<NotNilCleanReason> reason;  // present iff not_nil_clean

    bool is_nil_clean() const noexcept { return verdict != Verdict::not_nil_clean; }
};

/// Decides nil-cleanness of companion(cs).
///
/// Nilpotent iff every c_i = 0; unipotent iff the coefficient tuple matches
/// (X-1)^n. Otherwise the verdict rides on k = trace_index(-c_{n-1}):
/// over characteristic zero C is nil-clean iff k exists with 0 < k < n;
/// over characteristic p iff k (in {1,...,p}) satisfies n > k.
Classification classify(const CompanionSpec& cs);

/// An explicit decomposition C = E + N with machine-recomputed claims.
struct Certificate {
    Mat c;
    Mat e;
    Mat n;
    std::uint64_t k;  // rank of e

    struct Checks {
        bool sum_ok;
        bool idempotent_ok;
        bool nilpotent_ok;
        bool all() const noexcept { return sum_ok && idempotent_ok && nilpotent_ok; }
    };

    /// Recomputes all three claims from the matrices; never trusts state.
    Checks recheck() const;
};

Certificate make_certificate(Mat c, Mat e, Mat n, std::uint64_t k);

/// Builds a certified decomposition when classify says nil-clean: E = 0 for
/// the nilpotent case, E = I for the unipotent case, otherwise the rank-k
/// target split with g = 0 (whose remainder has characteristic polynomial
/// X^n because k*1 = -c_{n-1}). Absent exactly when not nil-clean.
std::optional<Certificate> decompose(const CompanionSpec& cs);

/// Necessary trace conditions for an arbitrary square matrix A. A failed
/// condition proves A is not nil-clean; a passed one proves nothing. Some
/// trace values force the shape of any decomposition (rank of the
/// idempotent 0 or n), which pins A nilpotent respectively unipotent.
struct TraceReport {
    bool trace_integral;            // some non-negative integer k has k*1 = tr A
    std::optional<BigInt> k;        // canonical candidate (in {1,...,p} over F_p)
    enum class Forced { none, nilpotent, unipotent, nilpotent_or_unipotent };
    Forced forced = Forced::none;
    bool proves_not_nil_clean = false;
    std::string detail;
};

TraceReport trace_conditions(const Mat& a);

/// Exhaustive classification of all p^n coefficient tuples, validating a
/// certificate for every nil-clean verdict.
struct Census {
    std::uint32_t p = 0;
    std::size_t n = 0;
    std::uint64_t total = 0;
    std::uint64_t nilpotent = 0;
    std::uint64_t unipotent = 0;
    std::uint64_t proper = 0;
    std::uint64_t not_nil_clean = 0;
    bool all_nil_clean = false;
    bool certificates_ok = false;

    std::uint64_t nil_clean_total() const noexcept { return nilpotent + unipotent + proper; }
};

inline constexpr std::uint64_t kDefaultCensusBudget = 10'000'000;

/// Throws Errc::budget_exceeded when p^n > budget. jobs > 1 partitions the
/// tuple space; counters merge associatively so the result is identical.
Census enumerate_companions(std::uint32_t p, std::size_t n,
                            std::uint64_t budget = kDefaultCensusBudget, unsigned jobs = 1);

std::string to_string(Verdict v);
std::string to_string(NotNilCleanReason r);
std::string to_string(Clause c);

}  // namespace nilclean
