// Copyright 2026 The nilclean authors
// SPDX-License-Identifier: Apache-2.0

#include "nilclean/fields.hpp"

#include <charconv>

namespace nilclean {

namespace {

std::uint64_t inverse_mod(std::uint64_t a, std::uint64_t p) {
    // extended Euclid; a in [1, p), p prime
    std::int64_t t = 0, new_t = 1;
    std::int64_t r = static_cast<std::int64_t>(p), new_r = static_cast<std::int64_t>(a);
    while (new_r != 0) {
        std::int64_t q = r / new_r;
        std::int64_t tmp = t - q * new_t;
        t = new_t;
        new_t = tmp;
        tmp = r - q * new_r;
        r = new_r;
        new_r = tmp;
    }
    return static_cast<std::uint64_t>(t < 0 ? t + static_cast<std::int64_t>(p) : t);
}

BigInt parse_bigint(std::string_view text) {
    if (text.empty()) fail(Errc::parse_error, "empty integer literal");
    std::size_t i = 0;
    bool negative = false;
    if (text[0] == '+' || text[0] == '-') {
        negative = text[0] == '-';
        i = 1;
    }
    if (i == text.size()) fail(Errc::parse_error, "sign without digits");
    BigInt value = 0;
    for (; i < text.size(); ++i) {
        if (text[i] < '0' || text[i] > '9')
            fail(Errc::parse_error, "invalid digit in integer literal: '" + std::string(text) + "'");
        value = value * 10 + (text[i] - '0');
    }
    return negative ? BigInt(-value) : value;
}

}  // namespace

bool is_prime_u32(std::uint32_t n) noexcept {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (std::uint64_t d = 3; d * d <= n; d += 2)
        if (n % d == 0) return false;
    return true;
}

FieldSpec FieldSpec::prime(std::uint32_t p) {
    if (p >= (1u << 31))
        fail(Errc::invalid_field, "prime modulus must be below 2^31, got " + std::to_string(p));
    if (!is_prime_u32(p))
        fail(Errc::invalid_field, std::to_string(p) + " is not prime");
    return FieldSpec(p);
}

std::uint32_t FieldSpec::modulus() const {
    if (!is_prime_field()) fail(Errc::wrong_field, "the rationals have no modulus");
    return p_;
}

std::string FieldSpec::str() const {
    return is_prime_field() ? "fp:" + std::to_string(p_) : "q";
}

FieldSpec FieldSpec::parse(std::string_view text) {
    if (text == "q" || text == "Q") return rationals();
    if (text.rfind("fp:", 0) == 0) {
        std::uint32_t p = 0;
        const char* first = text.data() + 3;
        const char* last = text.data() + text.size();
        auto [ptr, ec] = std::from_chars(first, last, p);
        if (ec != std::errc() || ptr != last)
            fail(Errc::parse_error, "invalid field selector: '" + std::string(text) + "'");
        return prime(p);
    }
    fail(Errc::parse_error, "invalid field selector: '" + std::string(text) + "' (expected \"q\" or \"fp:<p>\")");
}

void FieldElem::require_same(const FieldElem& rhs) const {
    if (spec_ != rhs.spec_)
        fail(Errc::mixed_fields, "operands live in different fields: " + spec_.str() + " vs " + rhs.spec_.str());
}

FieldElem FieldElem::from_integer(std::int64_t k, const FieldSpec& spec) {
    if (!spec.is_prime_field()) return FieldElem(spec, BigRat(k));
    const auto p = static_cast<std::int64_t>(spec.modulus());
    std::int64_t r = k % p;
    if (r < 0) r += p;
    return FieldElem(spec, static_cast<std::uint64_t>(r));
}

FieldElem FieldElem::from_integer(const BigInt& k, const FieldSpec& spec) {
    if (!spec.is_prime_field()) return FieldElem(spec, BigRat(k));
    BigInt r = k % spec.modulus();
    if (r < 0) r += spec.modulus();
    return FieldElem(spec, r.convert_to<std::uint64_t>());
}

FieldElem FieldElem::from_rational(const BigRat& value, const FieldSpec& spec) {
    if (spec.is_prime_field())
        fail(Errc::wrong_field, "fractional literals are only valid over the rationals");
    return FieldElem(spec, value);
}

FieldElem FieldElem::parse(std::string_view text, const FieldSpec& spec) {
    const auto slash = text.find('/');
    if (slash == std::string_view::npos) return from_integer(parse_bigint(text), spec);
    if (spec.is_prime_field())
        fail(Errc::parse_error, "fraction '" + std::string(text) + "' is not a valid " + spec.str() + " element");
    BigInt num = parse_bigint(text.substr(0, slash));
    BigInt den = parse_bigint(text.substr(slash + 1));
    if (den == 0) fail(Errc::division_by_zero, "zero denominator in '" + std::string(text) + "'");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    return FieldElem(spec, BigRat(num, den));
}

bool FieldElem::is_zero() const noexcept {
    return spec_.is_prime_field() ? residue_ == 0 : rat_.is_zero();
}

bool FieldElem::is_one() const noexcept {
    if (spec_.is_prime_field()) return residue_ == 1;
    return rat_ == 1;
}

FieldElem FieldElem::operator+(const FieldElem& rhs) const {
    require_same(rhs);
    if (!spec_.is_prime_field()) return FieldElem(spec_, BigRat(rat_ + rhs.rat_));
    const std::uint64_t p = spec_.modulus();
    std::uint64_t s = residue_ + rhs.residue_;
    if (s >= p) s -= p;
    return FieldElem(spec_, s);
}

FieldElem FieldElem::operator-(const FieldElem& rhs) const {
    require_same(rhs);
    if (!spec_.is_prime_field()) return FieldElem(spec_, BigRat(rat_ - rhs.rat_));
    const std::uint64_t p = spec_.modulus();
    std::uint64_t s = residue_ + p - rhs.residue_;
    if (s >= p) s -= p;
    return FieldElem(spec_, s);
}

FieldElem FieldElem::operator*(const FieldElem& rhs) const {
    require_same(rhs);
    if (!spec_.is_prime_field()) return FieldElem(spec_, BigRat(rat_ * rhs.rat_));
    // p < 2^31, so the product of two residues fits a 64-bit word
    return FieldElem(spec_, residue_ * rhs.residue_ % spec_.modulus());
}

FieldElem FieldElem::operator-() const {
    if (!spec_.is_prime_field()) return FieldElem(spec_, BigRat(-rat_));
    return FieldElem(spec_, residue_ == 0 ? 0 : spec_.modulus() - residue_);
}

FieldElem FieldElem::inverse() const {
    if (is_zero()) fail(Errc::division_by_zero, "inverse of zero");
    if (!spec_.is_prime_field()) return FieldElem(spec_, BigRat(1 / rat_));
    return FieldElem(spec_, inverse_mod(residue_, spec_.modulus()));
}

bool FieldElem::operator==(const FieldElem& rhs) const noexcept {
    if (spec_ != rhs.spec_) return false;
    return spec_.is_prime_field() ? residue_ == rhs.residue_ : rat_ == rhs.rat_;
}

std::uint64_t FieldElem::residue() const {
    if (!spec_.is_prime_field()) fail(Errc::wrong_field, "residue() requires a prime field element");
    return residue_;
}

const BigRat& FieldElem::rational() const {
    if (spec_.is_prime_field()) fail(Errc::wrong_field, "rational() requires a rational element");
    return rat_;
}

std::string FieldElem::str() const {
    if (spec_.is_prime_field()) return std::to_string(residue_);
    if (denominator(rat_) == 1) return numerator(rat_).str();
    return numerator(rat_).str() + "/" + denominator(rat_).str();
}

std::optional<BigInt> trace_index(const FieldElem& e) {
    if (e.spec().is_prime_field()) {
        const std::uint64_t p = e.spec().modulus();
        return BigInt(e.residue() == 0 ? p : e.residue());
    }
    const BigRat& v = e.rational();
    if (denominator(v) != 1 || numerator(v) < 0) return std::nullopt;
    return numerator(v);
}

}  // namespace nilclean
