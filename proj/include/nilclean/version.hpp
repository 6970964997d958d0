// Copyright 2026 The nilclean authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

namespace nilclean {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace nilclean
