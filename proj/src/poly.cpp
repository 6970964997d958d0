// Copyright 2026 The nilclean authors
// SPDX-License-Identifier: Apache-2.0

#include "nilclean/poly.hpp"

#include <algorithm>

namespace nilclean {

Poly::Poly(const FieldSpec& spec, std::vector<FieldElem> coeffs)
    : spec_(spec), coeffs_(std::move(coeffs)) {
    for (const auto& c : coeffs_)
        if (c.spec() != spec_) fail(Errc::mixed_fields, "coefficient from a different field");
    trim();
}

void Poly::trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

void Poly::require_same(const Poly& rhs) const {
    if (spec_ != rhs.spec_)
        fail(Errc::mixed_fields, "polynomials over different fields: " + spec_.str() + " vs " + rhs.spec_.str());
}

Poly Poly::constant(const FieldElem& value) {
    return Poly(value.spec(), std::vector<FieldElem>{value});
}

Poly Poly::monomial(const FieldSpec& spec, std::size_t degree) {
    std::vector<FieldElem> cs(degree + 1, FieldElem::zero(spec));
    cs.back() = FieldElem::one(spec);
    return Poly(spec, std::move(cs));
}

Poly Poly::power_of_linear(const FieldElem& a, std::size_t n) {
    const FieldSpec& spec = a.spec();
    Poly linear(spec, {-a, FieldElem::one(spec)});
    Poly acc = Poly::one(spec);
    for (std::size_t i = 0; i < n; ++i) acc = acc * linear;
    return acc;
}

FieldElem Poly::leading() const {
    if (coeffs_.empty()) fail(Errc::division_by_zero, "the zero polynomial has no leading coefficient");
    return coeffs_.back();
}

Poly Poly::operator+(const Poly& rhs) const {
    require_same(rhs);
    std::vector<FieldElem> out(std::max(coeffs_.size(), rhs.coeffs_.size()), FieldElem::zero(spec_));
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = coeff(i) + rhs.coeff(i);
    return Poly(spec_, std::move(out));
}

Poly Poly::operator-(const Poly& rhs) const {
    require_same(rhs);
    std::vector<FieldElem> out(std::max(coeffs_.size(), rhs.coeffs_.size()), FieldElem::zero(spec_));
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = coeff(i) - rhs.coeff(i);
    return Poly(spec_, std::move(out));
}

Poly Poly::operator*(const Poly& rhs) const {
    require_same(rhs);
    if (is_zero() || rhs.is_zero()) return Poly(spec_);
    std::vector<FieldElem> out(coeffs_.size() + rhs.coeffs_.size() - 1, FieldElem::zero(spec_));
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j)
            out[i + j] += coeffs_[i] * rhs.coeffs_[j];
    return Poly(spec_, std::move(out));
}

Poly Poly::scale(const FieldElem& a) const {
    std::vector<FieldElem> out;
    out.reserve(coeffs_.size());
    for (const auto& c : coeffs_) out.push_back(c * a);
    return Poly(spec_, std::move(out));
}

FieldElem Poly::eval(const FieldElem& a) const {
    FieldElem acc = FieldElem::zero(spec_);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * a + *it;
    return acc;
}

bool Poly::operator==(const Poly& rhs) const {
    return spec_ == rhs.spec_ && coeffs_ == rhs.coeffs_;
}

std::pair<Poly, Poly> Poly::divrem(const Poly& f, const Poly& d) {
    f.require_same(d);
    if (d.is_zero()) fail(Errc::division_by_zero, "polynomial division by zero");
    const std::size_t dd = *d.degree();
    Poly r = f;
    if (f.is_zero() || *f.degree() < dd) return {Poly(f.spec_), r};
    const FieldElem lead_inv = d.leading().inverse();
    std::vector<FieldElem> q(*f.degree() - dd + 1, FieldElem::zero(f.spec_));
    while (!r.is_zero() && *r.degree() >= dd) {
        const std::size_t shift = *r.degree() - dd;
        const FieldElem factor = r.leading() * lead_inv;
        q[shift] = factor;
        std::vector<FieldElem> sub(r.coeffs_);
        for (std::size_t i = 0; i <= dd; ++i) sub[shift + i] = sub[shift + i] - factor * d.coeff(i);
        r = Poly(f.spec_, std::move(sub));
    }
    return {Poly(f.spec_, std::move(q)), r};
}

Poly Poly::monic() const {
    if (is_zero()) fail(Errc::division_by_zero, "cannot normalize the zero polynomial");
    if (is_monic()) return *this;
    return scale(leading().inverse());
}

Poly Poly::gcd(Poly a, Poly b) {
    while (!b.is_zero()) {
        Poly r = divrem(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return a.is_zero() ? a : a.monic();
}

Poly Poly::lcm(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) fail(Errc::division_by_zero, "lcm requires nonzero polynomials");
    Poly g = gcd(a, b);
    return divrem(a * b, g).first.monic();
}

std::string Poly::str() const {
    if (coeffs_.empty()) return "0";
    std::string out;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (i) out += ',';
        out += coeffs_[i].str();
    }
    return out;
}

Poly Poly::parse(std::string_view text, const FieldSpec& spec) {
    std::vector<FieldElem> cs;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t comma = text.find(',', start);
        if (comma == std::string_view::npos) comma = text.size();
        cs.push_back(FieldElem::parse(text.substr(start, comma - start), spec));
        start = comma + 1;
        if (comma == text.size()) break;
    }
    return Poly(spec, std::move(cs));
}

}  // namespace nilclean
