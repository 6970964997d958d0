// Copyright 2026 The nilclean authors
// SPDX-License-Identifier: Apache-2.0

#include "nilclean/companion.hpp"

#include <cassert>
#include <utility>

namespace nilclean {

CompanionSpec::CompanionSpec(const FieldSpec& field, std::vector<FieldElem> coeffs)
    : spec(field), c(std::move(coeffs)) {
    if (c.empty()) fail(Errc::dimension_mismatch, "companion tuples need at least one coefficient");
    for (const auto& e : c)
        if (e.spec() != spec) fail(Errc::mixed_fields, "companion coefficient from a different field");
}

Mat companion(const CompanionSpec& cs) {
    const std::size_t n = cs.dim();
    Mat m(cs.spec, n);
    for (std::size_t i = 0; i + 1 < n; ++i) m.set(i + 1, i, FieldElem::one(cs.spec));
    for (std::size_t i = 0; i < n; ++i) m.set(i, n - 1, -cs.c[i]);
    return m;
}

Mat BorderedCompanion::materialize() const {
    const std::size_t n = alphas.size();
    if (c_tail.size() + 1 != n)
        fail(Errc::degree_mismatch, "bordered companion needs n alphas and n-1 tail entries");
    Mat m(spec, n);
    for (std::size_t j = 0; j < n; ++j) m.set(0, j, -alphas[n - 1 - j]);
    for (std::size_t i = 1; i < n; ++i) {
        m.set(i, i - 1, FieldElem::one(spec));
        m.set(i, n - 1, -c_tail[i - 1]);
    }
    return m;
}

namespace {

// The shared triangular solve. tail holds c_1..c_{n-1}; c_0 enters as 0.
std::vector<FieldElem> solve_alphas(const Poly& f, const std::vector<FieldElem>& tail) {
    const FieldSpec spec = f.spec();
    const std::size_t n = tail.size() + 1;
    auto c = [&](std::size_t i) {
        return i == 0 ? FieldElem::zero(spec) : tail[i - 1];
    };
    std::vector<FieldElem> alphas(n, FieldElem::zero(spec));
    for (std::size_t i = 1; i <= n; ++i) {
        const std::size_t idx = n - i;
        FieldElem acc = f.coeff(idx) - c(idx);
        for (std::size_t t = 1; t < i; ++t) acc -= alphas[idx + t] * c(n - t);
        alphas[idx] = acc;
    }
    return alphas;
}

}  // namespace

CompletionResult complete_with_charpoly(const Poly& f, const std::vector<FieldElem>& c_tail) {
    if (f.is_zero() || !f.is_monic()) fail(Errc::not_monic, "target polynomial must be monic");
    const std::size_t n = *f.degree();
    if (n < 1) fail(Errc::degree_mismatch, "target polynomial must have degree >= 1");
    if (c_tail.size() + 1 != n)
        fail(Errc::degree_mismatch, "tail length " + std::to_string(c_tail.size()) +
                                        " does not match degree " + std::to_string(n));
    for (const auto& e : c_tail)
        if (e.spec() != f.spec()) fail(Errc::mixed_fields, "tail entry from a different field");
    std::vector<FieldElem> alphas = solve_alphas(f, c_tail);
    Mat m = BorderedCompanion{f.spec(), alphas, c_tail}.materialize();
    return {std::move(alphas), std::move(m)};
}

FixedLeadingResult complete_fixed_leading(const FieldElem& alpha_top,
                                          const std::vector<FieldElem>& target_low,
                                          const std::vector<FieldElem>& c_tail) {
    const FieldSpec spec = alpha_top.spec();
    const std::size_t n = target_low.size() + 1;
    if (c_tail.size() + 1 != n)
        fail(Errc::degree_mismatch, "tail length " + std::to_string(c_tail.size()) +
                                        " does not match dimension " + std::to_string(n));
    const FieldElem c_last = n >= 2 ? c_tail[n - 2] : FieldElem::zero(spec);
    std::vector<FieldElem> coeffs(n + 1, FieldElem::zero(spec));
    for (std::size_t j = 0; j + 1 < n; ++j) coeffs[j] = target_low[j];
    coeffs[n - 1] += alpha_top + c_last;
    coeffs[n] = FieldElem::one(spec);
    Poly f(spec, std::move(coeffs));
    CompletionResult base = complete_with_charpoly(f, c_tail);
    assert(base.alphas[n - 1] == alpha_top);
    return {std::move(base.alphas), std::move(base.m), std::move(f)};
}

TargetDecomposition nil_clean_decompose_with_target(const CompanionSpec& cs, std::size_t k,
                                                    const Poly& g) {
    const std::size_t n = cs.dim();
    const FieldSpec& spec = cs.spec;
    if (k < 1 || k > n - 1)
        fail(Errc::bad_rank, "rank k must lie in [1, n-1], got " + std::to_string(k));
    if (g.spec() != spec) fail(Errc::mixed_fields, "g lives in a different field");
    if (g.degree() > n - 2)
        fail(Errc::degree_too_high, "deg g must be at most n-2");

    // target: X^n + (k*1 + c_{n-1}) X^{n-1} + g
    std::vector<FieldElem> coeffs(n + 1, FieldElem::zero(spec));
    for (std::size_t j = 0; j + 1 < n; ++j) coeffs[j] = g.coeff(j);
    coeffs[n - 1] = FieldElem::from_integer(static_cast<std::int64_t>(k), spec) + cs.c[n - 1];
    coeffs[n] = FieldElem::one(spec);
    Poly target(spec, std::move(coeffs));

    // peel (X+1) once per rank unit above 1, collecting the remainders as
    // the lowest alphas; the surviving quotient is handled by the rank-1
    // completion on the shortened tail
    const Poly x_plus_one(spec, {FieldElem::one(spec), FieldElem::one(spec)});
    std::vector<FieldElem> alphas;
    alphas.reserve(n - 1);
    Poly current = target;
    std::vector<FieldElem> tail(cs.c.begin() + 1, cs.c.end());
    for (std::size_t level = k; level >= 2; --level) {
        auto [quotient, remainder] = Poly::divrem(current, x_plus_one);
        alphas.push_back(remainder.coeff(0));
        current = std::move(quotient);
        tail.erase(tail.begin());
    }
    std::vector<FieldElem> base = solve_alphas(current, tail);
    assert(base.back().is_one());
    alphas.insert(alphas.end(), base.begin(), base.end() - 1);
    // alphas now holds alpha_0 .. alpha_{n-2}

    Mat e(spec, n);
    const std::size_t m_dim = n - k;
    for (std::size_t i = 0; i < k; ++i) {
        e.set(i, i, FieldElem::one(spec));
        e.set(i, n - 1, alphas[i] - cs.c[i]);
    }
    for (std::size_t j = 0; j + 1 < m_dim; ++j) e.set(k - 1, k + j, alphas[n - 2 - j]);
    Mat m = companion(cs) - e;
    return {std::move(e), std::move(m)};
}

}  // namespace nilclean
