// Copyright 2026 The nilclean authors
// SPDX-License-Identifier: Apache-2.0

// Exact arithmetic over the two coefficient domains used throughout:
// prime fields F_p (p < 2^31, residues in 64-bit words) and the rational
// numbers (arbitrary precision).

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

#include "nilclean/errors.hpp"

namespace nilclean {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

/// Identifies a coefficient field: F_p for a prime p, or the rationals.
///
/// Textual form is "fp:<p>" respectively "q".
class FieldSpec {
  public:
    /// The rational numbers.
    static FieldSpec rationals() noexcept { return FieldSpec(0); }

    /// F_p. Runs a deterministic primality check; requires 2 <= p < 2^31.
    static FieldSpec prime(std::uint32_t p);

    bool is_prime_field() const noexcept { return p_ != 0; }

    /// The prime modulus; only meaningful for prime fields.
    std::uint32_t modulus() const;

    /// 0 for the rationals, p for F_p.
    std::uint32_t characteristic() const noexcept { return p_; }

    std::string str() const;
    static FieldSpec parse(std::string_view text);

    friend bool operator==(const FieldSpec&, const FieldSpec&) = default;

  private:
    explicit FieldSpec(std::uint32_t p) noexcept : p_(p) {}
    std::uint32_t p_;
};

/// An element of a FieldSpec field, kept in canonical form: a residue in
/// [0, p) for F_p, a reduced fraction with positive denominator for the
/// rationals. Equal elements therefore compare equal structurally.
///
/// Elements are immutable values; all operations are pure and throw
/// Errc::mixed_fields when operands live in different fields.
class FieldElem {
  public:
    /// Zero over the rationals. Prefer the explicit factories below.
    FieldElem() : spec_(FieldSpec::rationals()) {}

    static FieldElem zero(const FieldSpec& spec) { return from_integer(0, spec); }
    static FieldElem one(const FieldSpec& spec) { return from_integer(1, spec); }

    /// Image of the integer k under the canonical ring map Z -> field.
    static FieldElem from_integer(std::int64_t k, const FieldSpec& spec);
    static FieldElem from_integer(const BigInt& k, const FieldSpec& spec);

    /// Rational value; requires the rational field.
    static FieldElem from_rational(const BigRat& value, const FieldSpec& spec);

    /// Parses the canonical textual syntax: a decimal integer over F_p,
    /// "a/b" or a decimal integer over the rationals.
    static FieldElem parse(std::string_view text, const FieldSpec& spec);

    const FieldSpec& spec() const noexcept { return spec_; }
    bool is_zero() const noexcept;
    bool is_one() const noexcept;

    FieldElem operator+(const FieldElem& rhs) const;
    FieldElem operator-(const FieldElem& rhs) const;
    FieldElem operator*(const FieldElem& rhs) const;
    FieldElem operator-() const;
    FieldElem& operator+=(const FieldElem& rhs) { return *this = *this + rhs; }
    FieldElem& operator-=(const FieldElem& rhs) { return *this = *this - rhs; }
    FieldElem& operator*=(const FieldElem& rhs) { return *this = *this * rhs; }

    /// Multiplicative inverse; throws Errc::division_by_zero on zero.
    FieldElem inverse() const;

    bool operator==(const FieldElem& rhs) const noexcept;
    bool operator!=(const FieldElem& rhs) const noexcept { return !(*this == rhs); }

    /// Canonical representative in [0, p); prime fields only.
    std::uint64_t residue() const;

    /// Exact rational value; rational field only.
    const BigRat& rational() const;

    /// Canonical rendering: residue decimal for F_p, "n" or "n/d" for Q.
    std::string str() const;

  private:
    FieldElem(const FieldSpec& spec, std::uint64_t residue) : spec_(spec), residue_(residue) {}
    FieldElem(const FieldSpec& spec, BigRat value) : spec_(spec), rat_(std::move(value)) {}
    void require_same(const FieldElem& rhs) const;

    FieldSpec spec_;
    std::uint64_t residue_ = 0;
    BigRat rat_;
};

inline FieldElem add(const FieldElem& a, const FieldElem& b) { return a + b; }
inline FieldElem sub(const FieldElem& a, const FieldElem& b) { return a - b; }
inline FieldElem mul(const FieldElem& a, const FieldElem& b) { return a * b; }
inline FieldElem neg(const FieldElem& a) { return -a; }
inline FieldElem inv(const FieldElem& a) { return a.inverse(); }

/// 0 for the rationals, p for F_p.
inline std::uint32_t characteristic(const FieldSpec& spec) noexcept { return spec.characteristic(); }

/// The index k of e along the canonical ring map Z -> field, normalized as
/// the trace conditions need it: over F_p the unique k in {1,...,p} with
/// k*1 = e (so k = p when e = 0); over the rationals, e itself when it is
/// a non-negative integer. Absent when no such k exists.
std::optional<BigInt> trace_index(const FieldElem& e);

/// Deterministic trial-division primality check for 32-bit candidates.
bool is_prime_u32(std::uint32_t n) noexcept;

}  // namespace nilclean
