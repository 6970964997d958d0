// Copyright 2026 The nilclean authors
// SPDX-License-Identifier: Apache-2.0

#include "nilclean/classifier.hpp"

#include <algorithm>
#include <thread>
#include <utility>

namespace nilclean {

namespace {

bool all_zero(const std::vector<FieldElem>& c) {
    return std::all_of(c.begin(), c.end(), [](const FieldElem& e) { return e.is_zero(); });
}

bool tuple_is_unipotent(const CompanionSpec& cs) {
    const Poly target = Poly::power_of_linear(FieldElem::one(cs.spec), cs.dim());
    for (std::size_t i = 0; i < cs.dim(); ++i)
        if (cs.c[i] != target.coeff(i)) return false;
    return true;
}

std::optional<std::uint64_t> checked_pow(std::uint64_t base, std::size_t exp, std::uint64_t limit) {
    std::uint64_t r = 1;
    for (std::size_t i = 0; i < exp; ++i) {
        if (base != 0 && r > limit / base) return std::nullopt;
        r *= base;
    }
    return r;
}

}  // namespace

Classification classify(const CompanionSpec& cs) {
    const std::size_t n = cs.dim();
    if (all_zero(cs.c)) return {Verdict::nilpotent, Clause::i, std::nullopt, std::nullopt};
    if (tuple_is_unipotent(cs)) return {Verdict::unipotent, Clause::ii, std::nullopt, std::nullopt};

    const FieldElem trace = -cs.c[n - 1];
    const auto k = trace_index(trace);
    if (cs.spec.is_prime_field()) {
        // k in {1,...,p} always exists; nil-clean iff n > k
        const std::int64_t kk = k->convert_to<std::int64_t>();
        if (static_cast<std::uint64_t>(kk) < n)
            return {Verdict::nil_clean_proper, Clause::iv, kk, std::nullopt};
        return {Verdict::not_nil_clean, std::nullopt, std::nullopt, NotNilCleanReason::k_out_of_range};
    }
    if (!k) return {Verdict::not_nil_clean, std::nullopt, std::nullopt, NotNilCleanReason::trace_not_integer};
    if (*k > 0 && *k < n) {
        return {Verdict::nil_clean_proper, Clause::iii, k->convert_to<std::int64_t>(), std::nullopt};
    }
    return {Verdict::not_nil_clean, std::nullopt, std::nullopt, NotNilCleanReason::k_out_of_range};
}

Certificate::Checks Certificate::recheck() const {
    return {.sum_ok = e + n == c,
            .idempotent_ok = e.is_idempotent(),
            .nilpotent_ok = n.is_nilpotent()};
}

Certificate make_certificate(Mat c, Mat e, Mat n, std::uint64_t k) {
    return Certificate{std::move(c), std::move(e), std::move(n), k};
}

std::optional<Certificate> decompose(const CompanionSpec& cs) {
    const Classification verdict = classify(cs);
    const std::size_t n = cs.dim();
    switch (verdict.verdict) {
        case Verdict::nilpotent: {
            Mat c = companion(cs);
            return make_certificate(c, Mat::zero(n, cs.spec), c, 0);
        }
        case Verdict::unipotent: {
            Mat c = companion(cs);
            Mat identity = Mat::identity(n, cs.spec);
            return make_certificate(c, identity, c - identity, n);
        }
        case Verdict::nil_clean_proper: {
            auto split = nil_clean_decompose_with_target(
                cs, static_cast<std::size_t>(*verdict.k), Poly::zero(cs.spec));
            return make_certificate(companion(cs), std::move(split.e), std::move(split.m),
                                    static_cast<std::uint64_t>(*verdict.k));
        }
        case Verdict::not_nil_clean:
            return std::nullopt;
    }
    return std::nullopt;
}

TraceReport trace_conditions(const Mat& a) {
    const std::size_t n = a.dim();
    const FieldElem trace = a.trace();
    TraceReport report;
    const auto k = trace_index(trace);
    report.k = k;
    report.trace_integral = k.has_value();
    using Forced = TraceReport::Forced;

    if (!a.spec().is_prime_field()) {
        if (!k) {
            report.proves_not_nil_clean = true;
            report.detail = "trace is not a non-negative integer";
            return report;
        }
        if (*k > n) {
            report.proves_not_nil_clean = true;
            report.detail = "trace index k = " + k->str() + " exceeds n";
            return report;
        }
        if (*k == 0) {
            report.forced = Forced::nilpotent;
            report.detail = "k = 0: any decomposition has a zero idempotent";
        } else if (*k == n) {
            report.forced = Forced::unipotent;
            report.detail = "k = n: any decomposition has the identity idempotent";
        }
        return report;
    }

    const std::uint64_t p = a.spec().modulus();
    const std::uint64_t kk = k->convert_to<std::uint64_t>();
    if (kk > n && kk != p) {
        report.proves_not_nil_clean = true;
        report.detail = "no idempotent rank is congruent to the trace index within [0, n]";
        return report;
    }
    if (n < kk && kk == p) {
        report.forced = Forced::nilpotent;
        report.detail = "zero trace with p > n forces a zero idempotent";
    } else if (kk == n && n < p) {
        report.forced = Forced::unipotent;
        report.detail = "k = n < p forces the identity idempotent";
    } else if (kk == n && n == p) {
        report.forced = Forced::nilpotent_or_unipotent;
        report.detail = "k = n = p forces a zero or identity idempotent";
    }
    return report;
}

namespace {

struct CensusCounters {
    std::uint64_t nilpotent = 0;
    std::uint64_t unipotent = 0;
    std::uint64_t proper = 0;
    std::uint64_t not_nil_clean = 0;
    bool certificates_ok = true;
};

// classifies the tuples with indices in [lo, hi), low digit = c_0
CensusCounters census_range(std::uint32_t p, std::size_t n, std::uint64_t lo, std::uint64_t hi) {
    const FieldSpec spec = FieldSpec::prime(p);
    CensusCounters out;
    std::vector<std::uint64_t> digits(n, 0);
    std::uint64_t rest = lo;
    for (std::size_t i = 0; i < n; ++i) {
        digits[i] = rest % p;
        rest /= p;
    }
    for (std::uint64_t idx = lo; idx < hi; ++idx) {
        std::vector<FieldElem> c;
        c.reserve(n);
        for (std::size_t i = 0; i < n; ++i)
            c.push_back(FieldElem::from_integer(static_cast<std::int64_t>(digits[i]), spec));
        CompanionSpec cs(spec, std::move(c));
        const Classification verdict = classify(cs);
        switch (verdict.verdict) {
            case Verdict::nilpotent: ++out.nilpotent; break;
            case Verdict::unipotent: ++out.unipotent; break;
            case Verdict::nil_clean_proper: ++out.proper; break;
            case Verdict::not_nil_clean: ++out.not_nil_clean; break;
        }
        if (verdict.is_nil_clean()) {
            auto cert = decompose(cs);
            if (!cert || !cert->recheck().all()) out.certificates_ok = false;
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (++digits[i] < p) break;
            digits[i] = 0;
        }
    }
    return out;
}

}  // namespace

Census enumerate_companions(std::uint32_t p, std::size_t n, std::uint64_t budget, unsigned jobs) {
    FieldSpec::prime(p);  // validates p
    if (n < 1) fail(Errc::dimension_mismatch, "census needs n >= 1");
    const auto total = checked_pow(p, n, budget);
    if (!total)
        fail(Errc::budget_exceeded, "p^n exceeds the census budget of " + std::to_string(budget));

    std::vector<CensusCounters> parts;
    if (jobs <= 1 || *total < 2 * jobs) {
        parts.push_back(census_range(p, n, 0, *total));
    } else {
        parts.resize(jobs);
        std::vector<std::thread> workers;
        const std::uint64_t chunk = (*total + jobs - 1) / jobs;
        for (unsigned j = 0; j < jobs; ++j) {
            const std::uint64_t lo = std::min<std::uint64_t>(j * chunk, *total);
            const std::uint64_t hi = std::min<std::uint64_t>(lo + chunk, *total);
            workers.emplace_back([&parts, j, p, n, lo, hi] { parts[j] = census_range(p, n, lo, hi); });
        }
        for (auto& w : workers) w.join();
    }

    Census census;
    census.p = p;
    census.n = n;
    census.total = *total;
    census.certificates_ok = true;
    for (const auto& part : parts) {
        census.nilpotent += part.nilpotent;
        census.unipotent += part.unipotent;
        census.proper += part.proper;
        census.not_nil_clean += part.not_nil_clean;
        census.certificates_ok = census.certificates_ok && part.certificates_ok;
    }
    census.all_nil_clean = census.not_nil_clean == 0;
    return census;
}

std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::nilpotent: return "nilpotent";
        case Verdict::unipotent: return "unipotent";
        case Verdict::nil_clean_proper: return "nil_clean_proper";
        case Verdict::not_nil_clean: return "not_nil_clean";
    }
    return "?";
}

std::string to_string(NotNilCleanReason r) {
    switch (r) {
        case NotNilCleanReason::trace_not_integer: return "trace_not_integer";
        case NotNilCleanReason::k_out_of_range: return "k_out_of_range";
    }
    return "?";
}

std::string to_string(Clause c) {
    switch (c) {
        case Clause::i: return "i";
        case Clause::ii: return "ii";
        case Clause::iii: return "iii";
        case Clause::iv: return "iv";
    }
    return "?";
}

}  // namespace nilclean
