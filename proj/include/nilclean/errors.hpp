// Copyright 2026 The nilclean authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <stdexcept>
#include <string>

namespace nilclean {

enum class Errc {
    mixed_fields,
    division_by_zero,
    dimension_mismatch,
    degree_mismatch,
    not_monic,
    bad_rank,
    degree_too_high,
    budget_exceeded,
    wrong_field,
    invalid_field,
    parse_error,
};

/// Library-wide exception carrying a machine-checkable error code.
class Error : public std::runtime_error {
  public:
    Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
    Errc code() const noexcept { return code_; }

  private:
    Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) { throw Error(code, what); }

}  // namespace nilclean
