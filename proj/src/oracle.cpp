// Copyright 2026 The nilclean authors
// SPDX-License-Identifier: Apache-2.0

#include "nilclean/oracle.hpp"

#include <array>
#include <atomic>
#include <map>
#include <memory>
#include <mutex>
#include <thread>

namespace nilclean {

namespace {

constexpr std::size_t kMaxDim = 8;

// small dense matrix mod p for the hot enumeration loops
struct SmallMat {
    std::uint32_t n = 0;
    std::uint32_t p = 0;
    std::array<std::uint32_t, kMaxDim * kMaxDim> v{};

    std::uint32_t at(std::size_t i, std::size_t j) const { return v[i * n + j]; }
};

SmallMat small_mul(const SmallMat& a, const SmallMat& b) {
    SmallMat out;
    out.n = a.n;
    out.p = a.p;
    for (std::size_t i = 0; i < a.n; ++i)
        for (std::size_t j = 0; j < a.n; ++j) {
            std::uint64_t acc = 0;
            for (std::size_t t = 0; t < a.n; ++t)
                acc += static_cast<std::uint64_t>(a.at(i, t)) * b.at(t, j);
            out.v[i * a.n + j] = static_cast<std::uint32_t>(acc % a.p);
        }
    return out;
}

// E*E == E, entry by entry, bailing out at the first mismatch
bool small_is_idempotent(const SmallMat& e) {
    for (std::size_t i = 0; i < e.n; ++i)
        for (std::size_t j = 0; j < e.n; ++j) {
            std::uint64_t acc = 0;
            for (std::size_t t = 0; t < e.n; ++t)
                acc += static_cast<std::uint64_t>(e.at(i, t)) * e.at(t, j);
            if (acc % e.p != e.at(i, j)) return false;
        }
    return true;
}

bool small_is_zero(const SmallMat& m) {
    for (std::size_t i = 0; i < static_cast<std::size_t>(m.n) * m.n; ++i)
        if (m.v[i] != 0) return false;
    return true;
}

// nilpotency via powering: N^n = 0 iff N^(2^ceil(lg n)) = 0 over a field
bool small_is_nilpotent(const SmallMat& m) {
    SmallMat acc = m;
    for (std::uint32_t covered = 1; covered < m.n; covered *= 2) {
        if (small_is_zero(acc)) return true;
        acc = small_mul(acc, acc);
    }
    return small_is_zero(acc);
}

SmallMat small_sub(const SmallMat& a, const SmallMat& b) {
    SmallMat out;
    out.n = a.n;
    out.p = a.p;
    for (std::size_t i = 0; i < static_cast<std::size_t>(a.n) * a.n; ++i)
        out.v[i] = (a.v[i] + a.p - b.v[i]) % a.p;
    return out;
}

SmallMat decode(std::uint64_t index, std::uint32_t p, std::uint32_t n) {
    SmallMat m;
    m.n = n;
    m.p = p;
    for (std::size_t i = 0; i < static_cast<std::size_t>(n) * n; ++i) {
        m.v[i] = static_cast<std::uint32_t>(index % p);
        index /= p;
    }
    return m;
}

// odometer step in encoding order; returns false on wrap-around
bool advance(SmallMat& m) {
    for (std::size_t i = 0; i < static_cast<std::size_t>(m.n) * m.n; ++i) {
        if (++m.v[i] < m.p) return true;
        m.v[i] = 0;
    }
    return false;
}

Mat to_mat(const SmallMat& m, const FieldSpec& spec) {
    Mat out(spec, m.n);
    for (std::size_t i = 0; i < m.n; ++i)
        for (std::size_t j = 0; j < m.n; ++j)
            out.set(i, j, FieldElem::from_integer(static_cast<std::int64_t>(m.at(i, j)), spec));
    return out;
}

SmallMat from_mat(const Mat& a) {
    SmallMat m;
    m.n = static_cast<std::uint32_t>(a.dim());
    m.p = a.spec().modulus();
    for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t j = 0; j < a.dim(); ++j)
            m.v[i * a.dim() + j] = static_cast<std::uint32_t>(a.at(i, j).residue());
    return m;
}

std::uint64_t space_size_or_throw(std::uint32_t p, std::size_t n, std::uint64_t limit) {
    if (n < 1 || n > kMaxDim)
        fail(Errc::dimension_mismatch, "oracle supports dimensions 1 through " + std::to_string(kMaxDim));
    std::uint64_t size = 1;
    for (std::size_t i = 0; i < n * n; ++i) {
        if (size > limit / p)
            fail(Errc::budget_exceeded,
                 "p^(n^2) exceeds the search budget of " + std::to_string(limit) + " candidates");
        size *= p;
    }
    return size;
}

// scans [lo, hi) and returns the idempotents in encoding order
std::vector<SmallMat> scan_idempotents(std::uint32_t p, std::uint32_t n, std::uint64_t lo,
                                       std::uint64_t hi) {
    std::vector<SmallMat> found;
    SmallMat m = decode(lo, p, n);
    for (std::uint64_t idx = lo; idx < hi; ++idx) {
        if (small_is_idempotent(m)) found.push_back(m);
        advance(m);
    }
    return found;
}

std::vector<SmallMat> all_idempotents(std::uint32_t p, std::uint32_t n, std::uint64_t total,
                                      unsigned jobs) {
    if (jobs <= 1 || total < 4 * jobs) return scan_idempotents(p, n, 0, total);
    std::vector<std::vector<SmallMat>> parts(jobs);
    std::vector<std::thread> workers;
    const std::uint64_t chunk = (total + jobs - 1) / jobs;
    for (unsigned j = 0; j < jobs; ++j) {
        const std::uint64_t lo = std::min<std::uint64_t>(j * chunk, total);
        const std::uint64_t hi = std::min<std::uint64_t>(lo + chunk, total);
        workers.emplace_back([&parts, j, p, n, lo, hi] { parts[j] = scan_idempotents(p, n, lo, hi); });
    }
    for (auto& w : workers) w.join();
    std::vector<SmallMat> merged;
    for (auto& part : parts) merged.insert(merged.end(), part.begin(), part.end());
    return merged;
}

// process-wide read-only cache for the precomputed strategy
class IdempotentCache {
  public:
    std::shared_ptr<const std::vector<SmallMat>> get(std::uint32_t p, std::uint32_t n,
                                                     std::uint64_t total, unsigned jobs) {
        std::scoped_lock lock(mutex_);
        auto& slot = cache_[{p, n}];
        if (!slot) slot = std::make_shared<const std::vector<SmallMat>>(all_idempotents(p, n, total, jobs));
        return slot;
    }

  private:
    std::mutex mutex_;
    std::map<std::pair<std::uint32_t, std::uint32_t>, std::shared_ptr<const std::vector<SmallMat>>>
        cache_;
};

IdempotentCache& cache() {
    static IdempotentCache instance;
    return instance;
}

struct ScanHit {
    std::uint64_t index;
    SmallMat idempotent;
};

// first index in [lo, hi) whose matrix is an idempotent E with A - E
// nilpotent; cooperates with an atomic best-so-far for early stopping
std::optional<ScanHit> scan_witness(const SmallMat& a, std::uint64_t lo, std::uint64_t hi,
                                    std::atomic<std::uint64_t>& best) {
    SmallMat e = decode(lo, a.p, a.n);
    for (std::uint64_t idx = lo; idx < hi; ++idx) {
        if ((idx & 0xfff) == 0 && best.load(std::memory_order_relaxed) < lo) return std::nullopt;
        if (small_is_idempotent(e) && small_is_nilpotent(small_sub(a, e))) {
            std::uint64_t seen = best.load(std::memory_order_relaxed);
            while (idx < seen && !best.compare_exchange_weak(seen, idx)) {
            }
            return ScanHit{idx, e};
        }
        advance(e);
    }
    return std::nullopt;
}

}  // namespace

std::vector<Mat> idempotents(std::uint32_t p, std::size_t n, const SearchBudget& budget) {
    const FieldSpec spec = FieldSpec::prime(p);
    const std::uint64_t total = space_size_or_throw(p, n, budget.max_candidates);
    const auto nn = static_cast<std::uint32_t>(n);
    std::vector<SmallMat> small;
    if (budget.strategy == ScanStrategy::precomputed) {
        small = *cache().get(p, nn, total, budget.jobs);
    } else {
        small = all_idempotents(p, nn, total, budget.jobs);
    }
    std::vector<Mat> out;
    out.reserve(small.size());
    for (const auto& m : small) out.push_back(to_mat(m, spec));
    return out;
}

BruteForceResult brute_force_nil_clean(const Mat& a, const SearchBudget& budget) {
    if (!a.spec().is_prime_field())
        fail(Errc::wrong_field, "the brute-force oracle only searches prime fields");
    const std::uint64_t total = space_size_or_throw(a.spec().modulus(), a.dim(), budget.max_candidates);
    const SmallMat target = from_mat(a);

    if (budget.strategy == ScanStrategy::precomputed) {
        auto list = cache().get(target.p, target.n, total, budget.jobs);
        std::uint64_t checked = 0;
        for (const auto& e : *list) {
            ++checked;
            if (small_is_nilpotent(small_sub(target, e))) {
                Mat em = to_mat(e, a.spec());
                return {std::make_pair(em, a - em), checked};
            }
        }
        return {std::nullopt, checked};
    }

    std::atomic<std::uint64_t> best{UINT64_MAX};
    std::vector<std::optional<ScanHit>> hits;
    const unsigned jobs = budget.jobs;
    if (jobs <= 1 || total < 4 * jobs) {
        hits.push_back(scan_witness(target, 0, total, best));
    } else {
        hits.resize(jobs);
        std::vector<std::thread> workers;
        const std::uint64_t chunk = (total + jobs - 1) / jobs;
        for (unsigned j = 0; j < jobs; ++j) {
            const std::uint64_t lo = std::min<std::uint64_t>(j * chunk, total);
            const std::uint64_t hi = std::min<std::uint64_t>(lo + chunk, total);
            workers.emplace_back(
                [&hits, &best, &target, j, lo, hi] { hits[j] = scan_witness(target, lo, hi, best); });
        }
        for (auto& w : workers) w.join();
    }

    std::optional<ScanHit> first;
    for (const auto& hit : hits)
        if (hit && (!first || hit->index < first->index)) first = hit;
    if (!first) return {std::nullopt, total};
    Mat em = to_mat(first->idempotent, a.spec());
    return {std::make_pair(em, a - em), first->index + 1};
}

}  // namespace nilclean
