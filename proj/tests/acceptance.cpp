// Copyright 2026 The nilclean authors
// SPDX-License-Identifier: Apache-2.0

// End-to-end acceptance suite. Each criterion computes its verdict first,
// prints exactly one [criterion N] PASS/FAIL line, and then asserts it.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

#include "nilclean/classifier.hpp"
#include "nilclean/oracle.hpp"
#include "test_support.hpp"

using namespace nilclean;
using nilclean::test::Rng;
using nilclean::test::make_companion_spec;
using nilclean::test::make_mat;

namespace {

class Stopwatch {
  public:
    double ms() const {
        return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_)
            .count();
    }

  private:
    std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

void report(const char* label, bool ok, const std::string& detail, double elapsed_ms) {
    std::printf("[criterion %s] %s: %s (%.0f ms)\n", label, ok ? "PASS" : "FAIL", detail.c_str(),
                elapsed_ms);
    std::fflush(stdout);
}

std::vector<CompanionSpec> all_tuples(std::uint32_t p, std::size_t n) {
    const FieldSpec spec = FieldSpec::prime(p);
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < n; ++i) total *= p;
    std::vector<CompanionSpec> out;
    out.reserve(total);
    for (std::uint64_t idx = 0; idx < total; ++idx) {
        std::vector<FieldElem> c;
        std::uint64_t rest = idx;
        for (std::size_t i = 0; i < n; ++i) {
            c.push_back(FieldElem::from_integer(static_cast<std::int64_t>(rest % p), spec));
            rest /= p;
        }
        out.emplace_back(spec, std::move(c));
    }
    return out;
}

const std::vector<FieldSpec>& property_fields() {
    static const std::vector<FieldSpec> fields = {FieldSpec::prime(2), FieldSpec::prime(3),
                                                  FieldSpec::prime(5), FieldSpec::rationals()};
    return fields;
}

bool has_split_shape(const Mat& e, std::size_t k) {
    const std::size_t n = e.dim();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const bool diag_block = i < k && i == j;
            const bool strip = i < k && j >= k && (j == n - 1 || i == k - 1);
            if (diag_block) {
                if (!e.at(i, j).is_one()) return false;
            } else if (!strip && !e.at(i, j).is_zero()) {
                return false;
            }
        }
    return true;
}

}  // namespace

TEST_CASE("criterion 1: classifier matches the brute-force oracle exhaustively") {
    Stopwatch timer;
    SearchBudget budget;
    budget.strategy = ScanStrategy::precomputed;
    std::size_t checked = 0, disagreements = 0;
    for (auto [p, n] : {std::pair<std::uint32_t, std::size_t>{2, 2}, {2, 3}, {2, 4}, {3, 2},
                        {3, 3}, {5, 2}}) {
        for (const auto& cs : all_tuples(p, n)) {
            const bool predicted = classify(cs).is_nil_clean();
            const bool observed = brute_force_nil_clean(companion(cs), budget).found();
            ++checked;
            if (predicted != observed) ++disagreements;
        }
    }
    const bool ok = checked == 89 && disagreements == 0;
    report("1", ok,
           "oracle equivalence on " + std::to_string(checked) + " companion matrices, " +
               std::to_string(disagreements) + " disagreements",
           timer.ms());
    CHECK(ok);
}

TEST_CASE("criterion 2: fields smaller than the dimension are fully nil-clean, certified") {
    Stopwatch timer;
    bool ok = true;
    std::string detail;
    for (auto [p, n, expected_total] :
         {std::tuple<std::uint32_t, std::size_t, std::uint64_t>{2, 3, 8}, {2, 4, 16}, {3, 4, 81}}) {
        const Census census = enumerate_companions(p, n);
        const bool cell_ok =
            census.total == expected_total && census.all_nil_clean && census.certificates_ok;
        ok = ok && cell_ok;
        detail += "(" + std::to_string(p) + "," + std::to_string(n) + "): " +
                  std::to_string(census.nil_clean_total()) + "/" + std::to_string(census.total) +
                  " certified; ";
    }
    report("2", ok, detail, timer.ms());
    CHECK(ok);
}

TEST_CASE("criterion 3: the sign witness tuple is rejected when p >= n") {
    Stopwatch timer;
    bool ok = true;
    for (auto [p, n] : {std::pair<std::uint32_t, std::size_t>{3, 3}, {5, 3}, {5, 4}}) {
        const FieldSpec spec = FieldSpec::prime(p);
        std::vector<FieldElem> c(n, FieldElem::zero(spec));
        c[0] = FieldElem::from_integer(n % 2 == 0 ? -1 : 1, spec);  // (-1)^(n+1)
        const CompanionSpec cs(spec, std::move(c));
        ok = ok && classify(cs).verdict == Verdict::not_nil_clean;
    }
    // independent exhaustive confirmation for (3, 3)
    const auto oracle_verdict =
        brute_force_nil_clean(companion(make_companion_spec(FieldSpec::prime(3), {1, 0, 0})));
    ok = ok && !oracle_verdict.found();
    report("3", ok, "witness tuples rejected at (3,3), (5,3), (5,4); (3,3) confirmed by oracle",
           timer.ms());
    CHECK(ok);
}

TEST_CASE("criterion 4: the F_3 cubic census counts 20 nil-clean companions") {
    Stopwatch timer;
    const Census census = enumerate_companions(3, 3);
    bool ok = census.nil_clean_total() == 20 && census.nilpotent == 1 && census.unipotent == 1 &&
              census.proper == 18;

    // oracle-side recount, stratified by the trace coefficient
    SearchBudget budget;
    budget.strategy = ScanStrategy::precomputed;
    std::uint64_t by_oracle = 0, at_minus_1 = 0, at_minus_2 = 0, at_zero = 0;
    const FieldSpec f3 = FieldSpec::prime(3);
    for (const auto& cs : all_tuples(3, 3)) {
        if (!brute_force_nil_clean(companion(cs), budget).found()) continue;
        ++by_oracle;
        if (cs.c[2] == FieldElem::from_integer(-1, f3)) ++at_minus_1;
        if (cs.c[2] == FieldElem::from_integer(-2, f3)) ++at_minus_2;
        if (cs.c[2].is_zero()) ++at_zero;
    }
    ok = ok && by_oracle == 20 && at_minus_1 == 9 && at_minus_2 == 9 && at_zero == 2;
    report("4", ok,
           "census 1+1+18 = 20 nil-clean; oracle recount " + std::to_string(by_oracle) + " = 9+9+2",
           timer.ms());
    CHECK(ok);
}

TEST_CASE("criterion 5: fixture decompositions hold exactly") {
    Stopwatch timer;
    const FieldSpec f5 = FieldSpec::prime(5);
    const FieldSpec f3 = FieldSpec::prime(3);
    bool ok = true;

    // (a): 2x2 family over F_5, all c_0
    for (std::int64_t c0 = 0; c0 < 5; ++c0) {
        const Mat e = make_mat(f5, {{0, -c0}, {0, 1}});
        const Mat n = make_mat(f5, {{0, 0}, {1, 0}});
        ok = ok && e.is_idempotent() && n.is_nilpotent() &&
             e + n == companion(make_companion_spec(f5, {c0, -1}));
    }

    // (b): 3x3 displays over F_5 for c_2 = -1 and c_2 = -2
    Rng rng(160);
    std::uniform_int_distribution<std::int64_t> digit5(0, 4);
    for (int trial = 0; trial < 10; ++trial) {
        const std::int64_t c0 = digit5(rng), c1 = digit5(rng);
        const Mat n1 = make_mat(f5, {{-1, c1 - 1, 2 * c1 - 1}, {1, 0, -c1}, {0, 1, 1}});
        const Mat c_minus_1 = companion(make_companion_spec(f5, {c0, c1, -1}));
        ok = ok && n1.charpoly() == Poly::monomial(f5, 3) && (c_minus_1 - n1).is_idempotent();

        const Mat n2 = make_mat(f5, {{-1, 0, 1}, {1, -1, 5 - 3}, {0, 1, 2}});
        const Mat c_minus_2 = companion(make_companion_spec(f5, {c0, c1, -2}));
        ok = ok && n2.charpoly() == Poly::monomial(f5, 3) && (c_minus_2 - n2).is_idempotent();
    }

    // (c): 4x4 displays over F_3 for c_3 = 0 and c_3 = 1
    std::uniform_int_distribution<std::int64_t> digit3(0, 2);
    for (int trial = 0; trial < 10; ++trial) {
        const std::int64_t c0 = digit3(rng), c1 = digit3(rng), c2 = digit3(rng);
        const Mat n0 = make_mat(
            f3, {{-1, 0, 0, -1}, {1, -1, 0, 1}, {0, 1, -1, 0}, {0, 0, 1, 0}});
        const Mat c_zero = companion(make_companion_spec(f3, {c0, c1, c2, 0}));
        ok = ok && n0.charpoly() == Poly::monomial(f3, 4) && (c_zero - n0).is_idempotent();

        const Mat n1 = make_mat(
            f3, {{-1, 0, 0, -1}, {1, -1, c2, 1}, {0, 1, 0, -c2}, {0, 0, 1, -1}});
        const Mat c_one = companion(make_companion_spec(f3, {c0, c1, c2, 1}));
        ok = ok && n1.charpoly() == Poly::monomial(f3, 4) && (c_one - n1).is_idempotent();
    }

    report("5", ok, "fixtures (a), (b), (c) verified exactly", timer.ms());
    CHECK(ok);
}

TEST_CASE("criterion 6: prescribed-charpoly completion property suite") {
    Stopwatch timer;
    Rng rng(600);
    std::size_t failures = 0, checked = 0;
    for (const auto& spec : property_fields()) {
        for (int trial = 0; trial < 500; ++trial) {
            const std::size_t n = 1 + trial % 8;
            const Poly f = test::random_monic(rng, spec, n);
            const auto tail = test::random_elems(rng, spec, n - 1);
            const auto result = complete_with_charpoly(f, tail);
            ++checked;
            if (result.m.charpoly() != f || result.m.minpoly() != f) ++failures;
        }
    }
    const bool ok = failures == 0 && checked == 2000;
    report("6", ok,
           "charpoly and minpoly hit the target on " + std::to_string(checked) +
               " random completions (500 per field)",
           timer.ms());
    CHECK(ok);
}

TEST_CASE("criterion 7: rank-k split property suite") {
    Stopwatch timer;
    Rng rng(700);
    std::size_t failures = 0, checked = 0;
    for (const auto& spec : property_fields()) {
        for (int trial = 0; trial < 500; ++trial) {
            const std::size_t n = 2 + trial % 7;
            std::uniform_int_distribution<std::size_t> kdist(1, n - 1);
            const std::size_t k = kdist(rng);
            const CompanionSpec cs(spec, test::random_elems(rng, spec, n));
            const Poly g = test::random_poly(rng, spec, n - 2);
            const auto split = nil_clean_decompose_with_target(cs, k, g);

            std::vector<FieldElem> expect(n + 1, FieldElem::zero(spec));
            for (std::size_t j = 0; j + 1 < n; ++j) expect[j] = g.coeff(j);
            expect[n - 1] =
                FieldElem::from_integer(static_cast<std::int64_t>(k), spec) + cs.c[n - 1];
            expect[n] = FieldElem::one(spec);

            ++checked;
            const bool good = split.e.is_idempotent() && split.e.rank() == k &&
                              has_split_shape(split.e, k) &&
                              split.e + split.m == companion(cs) &&
                              split.m.charpoly() == Poly(spec, expect);
            if (!good) ++failures;
        }
    }
    const bool ok = failures == 0 && checked == 2000;
    report("7", ok,
           "idempotency, rank, sparsity and charpoly verified on " + std::to_string(checked) +
               " random splits (500 per field)",
           timer.ms());
    CHECK(ok);
}

TEST_CASE("criterion 8a: block-diagonal experiments, exhaustive negatives") {
    Stopwatch timer;
    const FieldSpec f3 = FieldSpec::prime(3);

    const bool diag_absent = !brute_force_nil_clean(make_mat(f3, {{1, 0}, {0, -1}})).found();
    const bool cubic_absent =
        !brute_force_nil_clean(companion(make_companion_spec(f3, {0, -1, 0}))).found();

    const Mat block = Mat::block_diag(companion(make_companion_spec(f3, {0, 0})),
                                      companion(make_companion_spec(f3, {-1, 0})));
    const bool minpoly_full = block.minpoly().degree() == 4;

    // the block is similar to the companion of its charpoly X^4 - X^2
    const Poly chi = block.charpoly();
    std::vector<FieldElem> tuple(chi.coeffs().begin(), chi.coeffs().end() - 1);
    const Classification verdict = classify(CompanionSpec(f3, std::move(tuple)));
    const bool classified =
        verdict.verdict == Verdict::nil_clean_proper && verdict.k.has_value() && *verdict.k == 3;

    const bool ok = diag_absent && cubic_absent && minpoly_full && classified;
    report("8a", ok,
           "diag(1,-1) and C_{0,-1,0} proven not nil-clean; block minpoly degree 4; similar "
           "companion classifies proper k=3",
           timer.ms());
    CHECK(ok);
}

TEST_SUITE("slow") {
    TEST_CASE("criterion 8b: raised-budget scan decomposes the 4x4 block matrix") {
        Stopwatch timer;
        const FieldSpec f3 = FieldSpec::prime(3);
        const Mat block = Mat::block_diag(companion(make_companion_spec(f3, {0, 0})),
                                          companion(make_companion_spec(f3, {-1, 0})));
        SearchBudget budget;
        budget.max_candidates = 50'000'000;
        const auto result = brute_force_nil_clean(block, budget);
        const bool ok = result.found() &&
                        make_certificate(block, result.witness->first, result.witness->second,
                                         result.witness->first.rank())
                            .recheck()
                            .all();
        report("8b", ok,
               "witness found after " + std::to_string(result.candidates_checked) +
                   " of 43046721 candidates and certified",
               timer.ms());
        CHECK(ok);
    }
}

TEST_CASE("criterion 9: characteristic-zero spot checks") {
    Stopwatch timer;
    const FieldSpec q = FieldSpec::rationals();
    bool ok = true;

    for (const auto& c01 : {std::pair<std::string, std::string>{"0", "0"}, {"5/3", "-7/2"}}) {
        const CompanionSpec cs(q, {FieldElem::parse(c01.first, q), FieldElem::parse(c01.second, q),
                                   FieldElem::from_integer(-2, q)});
        const Classification verdict = classify(cs);
        ok = ok && verdict.verdict == Verdict::nil_clean_proper && verdict.k.has_value() &&
             *verdict.k == 2;
        const auto cert = decompose(cs);
        ok = ok && cert.has_value() && cert->recheck().all();
    }

    const CompanionSpec half(q, {FieldElem::one(q), FieldElem::zero(q),
                                 FieldElem::parse("-5/2", q)});
    ok = ok && classify(half).reason == NotNilCleanReason::trace_not_integer;

    const CompanionSpec seven(q, {FieldElem::one(q), FieldElem::zero(q),
                                  FieldElem::from_integer(-7, q)});
    ok = ok && classify(seven).reason == NotNilCleanReason::k_out_of_range;

    report("9", ok, "trace -c_2 = 2 certified; 5/2 and 7 rejected with the right reasons",
           timer.ms());
    CHECK(ok);
}
