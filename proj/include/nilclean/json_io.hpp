// Copyright 2026 The nilclean authors
// SPDX-License-Identifier: Apache-2.0

// JSON interchange for matrices, certificates, verdicts, censuses, and
// oracle results. Keys are emitted in fixed order and elements rendered
// canonically, so equal inputs serialize to identical bytes.

#pragma once

#include <string>

#include <json.hpp>

#include "nilclean/classifier.hpp"
#include "nilclean/oracle.hpp"

namespace nilclean {

using Json = nlohmann::ordered_json;

/// {"field": "fp:3" | "q", "n": <int>, "rows": [[entry, ...], ...]} with
/// entries in the textual element syntax.
Json mat_to_json(const Mat& a);
Mat mat_from_json(const Json& j);

Json classification_to_json(const Classification& c);

Json certificate_to_json(const Certificate& cert);
Certificate certificate_from_json(const Json& j);

Json census_to_json(const Census& census);

Json oracle_result_to_json(const BruteForceResult& result);

}  // namespace nilclean
