// Copyright 2026 The nilclean authors
// SPDX-License-Identifier: Apache-2.0

#include "nilclean/json_io.hpp"

namespace nilclean {

namespace {

FieldElem elem_from_json(const Json& j, const FieldSpec& spec) {
    if (j.is_number_integer()) return FieldElem::from_integer(j.get<std::int64_t>(), spec);
    if (j.is_string()) return FieldElem::parse(j.get<std::string>(), spec);
    fail(Errc::parse_error, "matrix entries must be integers or strings");
}

}  // namespace

Json mat_to_json(const Mat& a) {
    Json rows = Json::array();
    for (std::size_t i = 0; i < a.dim(); ++i) {
        Json row = Json::array();
        for (std::size_t j = 0; j < a.dim(); ++j) row.push_back(a.at(i, j).str());
        rows.push_back(std::move(row));
    }
    return Json{{"field", a.spec().str()}, {"n", a.dim()}, {"rows", std::move(rows)}};
}

Mat mat_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("field") || !j.contains("n") || !j.contains("rows"))
        fail(Errc::parse_error, "matrix JSON needs \"field\", \"n\" and \"rows\"");
    const FieldSpec spec = FieldSpec::parse(j.at("field").get<std::string>());
    const auto n = j.at("n").get<std::size_t>();
    const Json& rows = j.at("rows");
    if (!rows.is_array() || rows.size() != n)
        fail(Errc::parse_error, "matrix JSON needs exactly n rows");
    Mat a(spec, n);
    for (std::size_t i = 0; i < n; ++i) {
        const Json& row = rows.at(i);
        if (!row.is_array() || row.size() != n)
            fail(Errc::parse_error, "matrix JSON rows must have n entries");
        for (std::size_t k = 0; k < n; ++k) a.set(i, k, elem_from_json(row.at(k), spec));
    }
    return a;
}

Json classification_to_json(const Classification& c) {
    Json out{{"verdict", to_string(c.verdict)}};
    out["clause"] = c.clause ? Json(to_string(*c.clause)) : Json(nullptr);
    out["k"] = c.k ? Json(*c.k) : Json(nullptr);
    out["reason"] = c.reason ? Json(to_string(*c.reason)) : Json(nullptr);
    return out;
}

Json certificate_to_json(const Certificate& cert) {
    const auto checks = cert.recheck();
    return Json{{"field", cert.c.spec().str()},
                {"n", cert.c.dim()},
                {"k", cert.k},
                {"C", mat_to_json(cert.c)},
                {"E", mat_to_json(cert.e)},
                {"N", mat_to_json(cert.n)},
                {"checks",
                 Json{{"sum_ok", checks.sum_ok},
                      {"idempotent_ok", checks.idempotent_ok},
                      {"nilpotent_ok", checks.nilpotent_ok}}}};
}

Certificate certificate_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("C") || !j.contains("E") || !j.contains("N"))
        fail(Errc::parse_error, "certificate JSON needs \"C\", \"E\" and \"N\"");
    Mat c = mat_from_json(j.at("C"));
    Mat e = mat_from_json(j.at("E"));
    Mat n = mat_from_json(j.at("N"));
    const std::uint64_t k = j.contains("k") && j.at("k").is_number() ? j.at("k").get<std::uint64_t>()
                                                                     : e.rank();
    return make_certificate(std::move(c), std::move(e), std::move(n), k);
}

Json census_to_json(const Census& census) {
    return Json{{"p", census.p},
                {"n", census.n},
                {"total", census.total},
                {"nilpotent", census.nilpotent},
                {"unipotent", census.unipotent},
                {"proper", census.proper},
                {"not_nil_clean", census.not_nil_clean},
                {"all_nil_clean", census.all_nil_clean},
                {"certificates_ok", census.certificates_ok}};
}

Json oracle_result_to_json(const BruteForceResult& result) {
    Json out{{"found", result.found()}, {"candidates_checked", result.candidates_checked}};
    out["E"] = result.witness ? mat_to_json(result.witness->first) : Json(nullptr);
    out["N"] = result.witness ? mat_to_json(result.witness->second) : Json(nullptr);
    return out;
}

}  // namespace nilclean
