// Copyright 2026 The nilclean authors
// SPDX-License-Identifier: Apache-2.0

// Dense univariate polynomials over a FieldSpec field. Characteristic and
// minimal polynomials of matrices live here.

#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "nilclean/fields.hpp"

namespace nilclean {

/// Coefficients are stored low-to-high and kept trimmed: the leading
/// coefficient is nonzero unless the polynomial is zero. The zero
/// polynomial has no degree (degree() is empty, never an integer).
class Poly {
  public:
    explicit Poly(const FieldSpec& spec) : spec_(spec) {}
    Poly(const FieldSpec& spec, std::vector<FieldElem> coeffs);

    static Poly zero(const FieldSpec& spec) { return Poly(spec); }
    static Poly one(const FieldSpec& spec) { return constant(FieldElem::one(spec)); }
    static Poly constant(const FieldElem& value);

    /// X^degree.
    static Poly monomial(const FieldSpec& spec, std::size_t degree);

    /// (X - a)^n by repeated multiplication, exact in any characteristic.
    static Poly power_of_linear(const FieldElem& a, std::size_t n);

    const FieldSpec& spec() const noexcept { return spec_; }
    bool is_zero() const noexcept { return coeffs_.empty(); }
    std::optional<std::size_t> degree() const noexcept {
        if (coeffs_.empty()) return std::nullopt;
        return coeffs_.size() - 1;
    }
    bool is_monic() const noexcept { return !coeffs_.empty() && coeffs_.back().is_one(); }

    /// Coefficient of X^i (zero beyond the degree).
    FieldElem coeff(std::size_t i) const {
        return i < coeffs_.size() ? coeffs_[i] : FieldElem::zero(spec_);
    }
    const std::vector<FieldElem>& coeffs() const noexcept { return coeffs_; }
    FieldElem leading() const;

    Poly operator+(const Poly& rhs) const;
    Poly operator-(const Poly& rhs) const;
    Poly operator*(const Poly& rhs) const;
    Poly scale(const FieldElem& a) const;
    FieldElem eval(const FieldElem& a) const;

    bool operator==(const Poly& rhs) const;
    bool operator!=(const Poly& rhs) const { return !(*this == rhs); }

    /// Division with remainder: f = d*q + r with deg r < deg d.
    static std::pair<Poly, Poly> divrem(const Poly& f, const Poly& d);

    /// Monic greatest common divisor (Euclid); gcd(0, 0) = 0.
    static Poly gcd(Poly a, Poly b);

    /// Monic least common multiple; requires both operands nonzero.
    static Poly lcm(const Poly& a, const Poly& b);

    /// Scales to leading coefficient one; requires nonzero.
    Poly monic() const;

    /// Comma-separated coefficient list, low-to-high ("2,0,0,1" is X^3+2);
    /// the zero polynomial renders as "0".
    std::string str() const;
    static Poly parse(std::string_view text, const FieldSpec& spec);

  private:
    void trim();
    void require_same(const Poly& rhs) const;

    FieldSpec spec_;
    std::vector<FieldElem> coeffs_;
};

}  // namespace nilclean
