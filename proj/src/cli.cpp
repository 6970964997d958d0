// Copyright 2026 The nilclean authors
// SPDX-License-Identifier: Apache-2.0

#include "nilclean/cli.hpp"

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "nilclean/json_io.hpp"
#include "nilclean/version.hpp"

namespace nilclean {

namespace {

constexpr int kExitOk = 0;
constexpr int kExitError = 1;
constexpr int kExitNegative = 2;

std::vector<FieldElem> parse_elem_list(const std::string& text, const FieldSpec& spec) {
    std::vector<FieldElem> out;
    if (text.empty()) return out;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t comma = text.find(',', start);
        if (comma == std::string::npos) comma = text.size();
        out.push_back(FieldElem::parse(std::string_view(text).substr(start, comma - start), spec));
        start = comma + 1;
        if (comma == text.size()) break;
    }
    return out;
}

void emit(std::ostream& out, const Json& payload) { out << payload.dump() << '\n'; }

Json poly_to_json(const Poly& p) { return Json(p.str()); }

Json read_json_arg(const std::string& arg, std::istream& in) {
    std::string text;
    const auto first = arg.find_first_not_of(" \t\r\n");
    if (arg == "-") {
        std::ostringstream buffer;
        buffer << in.rdbuf();
        text = buffer.str();
    } else if (first != std::string::npos && (arg[first] == '{' || arg[first] == '[')) {
        text = arg;
    } else {
        std::ifstream file(arg);
        if (!file) fail(Errc::parse_error, "cannot open file: " + arg);
        std::ostringstream buffer;
        buffer << file.rdbuf();
        text = buffer.str();
    }
    try {
        return Json::parse(text);
    } catch (const Json::parse_error& e) {
        fail(Errc::parse_error, std::string("invalid JSON: ") + e.what());
    }
}

struct CommonArgs {
    std::string field = "q";
    std::string c;
    std::string target;
    std::string ctail;
    std::string g = "0";
    std::string matrix;
    std::uint64_t k = 0;
    std::uint32_t p = 0;
    std::size_t n = 0;
    std::uint64_t budget = 0;
    unsigned jobs = 1;
    std::string certificate_path;
};

int dispatch(const std::string& command, const CommonArgs& args, std::istream& in,
             std::ostream& out) {
    if (command == "classify") {
        const FieldSpec spec = FieldSpec::parse(args.field);
        CompanionSpec cs(spec, parse_elem_list(args.c, spec));
        const Classification verdict = classify(cs);
        emit(out, classification_to_json(verdict));
        return verdict.is_nil_clean() ? kExitOk : kExitNegative;
    }
    if (command == "decompose") {
        const FieldSpec spec = FieldSpec::parse(args.field);
        CompanionSpec cs(spec, parse_elem_list(args.c, spec));
        const auto cert = decompose(cs);
        if (!cert) {
            emit(out, classification_to_json(classify(cs)));
            return kExitNegative;
        }
        emit(out, certificate_to_json(*cert));
        return kExitOk;
    }
    if (command == "decompose-target") {
        const FieldSpec spec = FieldSpec::parse(args.field);
        CompanionSpec cs(spec, parse_elem_list(args.c, spec));
        const Poly g = Poly::parse(args.g, spec);
        auto split = nil_clean_decompose_with_target(cs, args.k, g);
        emit(out, Json{{"k", args.k},
                       {"E", mat_to_json(split.e)},
                       {"M", mat_to_json(split.m)},
                       {"charpoly_m", poly_to_json(split.m.charpoly())}});
        return kExitOk;
    }
    if (command == "complete") {
        const FieldSpec spec = FieldSpec::parse(args.field);
        const Poly f = Poly::parse(args.target, spec);
        auto result = complete_with_charpoly(f, parse_elem_list(args.ctail, spec));
        Json alphas = Json::array();
        for (const auto& a : result.alphas) alphas.push_back(a.str());
        emit(out, Json{{"alphas", std::move(alphas)}, {"M", mat_to_json(result.m)}});
        return kExitOk;
    }
    if (command == "enumerate") {
        const std::uint64_t budget = args.budget ? args.budget : kDefaultCensusBudget;
        const Census census = enumerate_companions(args.p, args.n, budget, args.jobs);
        emit(out, census_to_json(census));
        return kExitOk;
    }
    if (command == "oracle") {
        const Mat a = mat_from_json(read_json_arg(args.matrix, in));
        SearchBudget budget;
        if (args.budget) budget.max_candidates = args.budget;
        budget.jobs = args.jobs;
        const BruteForceResult result = brute_force_nil_clean(a, budget);
        emit(out, oracle_result_to_json(result));
        return result.found() ? kExitOk : kExitNegative;
    }
    if (command == "verify") {
        const std::string source = args.certificate_path.empty() ? "-" : args.certificate_path;
        const Certificate cert = certificate_from_json(read_json_arg(source, in));
        const auto checks = cert.recheck();
        emit(out, Json{{"valid", checks.all()},
                       {"checks",
                        Json{{"sum_ok", checks.sum_ok},
                             {"idempotent_ok", checks.idempotent_ok},
                             {"nilpotent_ok", checks.nilpotent_ok}}}});
        return checks.all() ? kExitOk : kExitNegative;
    }
    fail(Errc::parse_error, "unknown subcommand: " + command);
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
            std::ostream& err) {
    CLI::App app{"exact nil-clean decompositions of companion matrices"};
    app.require_subcommand(1);
    CommonArgs common;

    auto* classify_cmd = app.add_subcommand("classify", "decide nil-cleanness of a companion matrix");
    auto* decompose_cmd = app.add_subcommand("decompose", "emit a certified nil-clean decomposition");
    auto* target_cmd = app.add_subcommand(
        "decompose-target", "split off a rank-k idempotent with a prescribed remainder tail");
    auto* complete_cmd =
        app.add_subcommand("complete", "fill a bordered companion to a prescribed charpoly");
    auto* enumerate_cmd = app.add_subcommand("enumerate", "census of all companion tuples over F_p");
    auto* oracle_cmd = app.add_subcommand("oracle", "brute-force nil-clean search for any matrix");
    auto* verify_cmd = app.add_subcommand("verify", "recheck a certificate JSON");

    for (auto* cmd : {classify_cmd, decompose_cmd, target_cmd}) {
        cmd->add_option("--field", common.field, "field selector: q or fp:<p>")->required();
        cmd->add_option("--c", common.c, "companion coefficients c_0,...,c_{n-1} (low to high)")
            ->required();
    }
    target_cmd->add_option("--k", common.k, "rank of the idempotent summand")->required();
    target_cmd->add_option("--g", common.g, "target tail polynomial, degree <= n-2");

    complete_cmd->add_option("--field", common.field, "field selector: q or fp:<p>")->required();
    complete_cmd->add_option("--target", common.target, "monic target polynomial, low to high")
        ->required();
    complete_cmd->add_option("--ctail", common.ctail, "fixed tail c_1,...,c_{n-1}");

    enumerate_cmd->add_option("--p", common.p, "prime field modulus")->required();
    enumerate_cmd->add_option("--n", common.n, "matrix dimension")->required();
    enumerate_cmd->add_option("--budget", common.budget, "max tuples to enumerate");
    enumerate_cmd->add_option("--jobs", common.jobs, "parallel workers");

    oracle_cmd->add_option("--field", common.field, "field selector (informational)");
    oracle_cmd->add_option("--matrix", common.matrix, "matrix JSON, inline or a file path, - for stdin")
        ->required();
    oracle_cmd->add_option("--budget", common.budget, "max candidate matrices to scan");
    oracle_cmd->add_option("--jobs", common.jobs, "parallel workers");

    verify_cmd->add_option("certificate", common.certificate_path,
                           "certificate JSON file (stdin when omitted)");

    std::vector<const char*> argv;
    argv.push_back("nilclean");
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err) == 0 ? kExitOk : kExitError;
    }

    const auto started = std::chrono::steady_clock::now();
    const std::string command = app.get_subcommands().front()->get_name();
    int code = kExitError;
    try {
        code = dispatch(command, common, in, out);
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        code = kExitError;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        code = kExitError;
    }
    const auto elapsed =
        std::chrono::duration_cast<std::chrono::microseconds>(std::chrono::steady_clock::now() - started);
    err << Json{{"command", command},
                {"elapsed_us", elapsed.count()},
                {"version", kVersion},
                {"exit", code}}
               .dump()
        << '\n';
    return code;
}

}  // namespace nilclean
