// Copyright 2026 The nilclean authors
// SPDX-License-Identifier: Apache-2.0

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>

#include "nilclean/cli.hpp"
#include "nilclean/json_io.hpp"
#include "test_support.hpp"

using namespace nilclean;

namespace {

struct CliRun {
    int exit_code;
    std::string out;
    std::string err;
};

CliRun run(const std::vector<std::string>& args, const std::string& stdin_text = "") {
    std::istringstream in(stdin_text);
    std::ostringstream out, err;
    const int code = run_cli(args, in, out, err);
    return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("matrix json round trip") {
    const FieldSpec f3 = FieldSpec::prime(3);
    const Mat a = companion(test::make_companion_spec(f3, {1, 2, 0}));
    CHECK(mat_from_json(mat_to_json(a)) == a);

    // lenient input: plain integers work as entries
    const Mat b = mat_from_json(Json::parse(R"({"field":"fp:5","n":2,"rows":[[1,-1],[0,7]]})"));
    CHECK(b.at(0, 1) == FieldElem::from_integer(4, FieldSpec::prime(5)));
    CHECK(b.at(1, 1) == FieldElem::from_integer(2, FieldSpec::prime(5)));

    const Mat q = mat_from_json(
        Json::parse(R"({"field":"q","n":2,"rows":[["1/2","0"],["0","-3/4"]]})"));
    CHECK(q.at(0, 0) == FieldElem::parse("1/2", FieldSpec::rationals()));

    CHECK_THROWS_AS((void)mat_from_json(Json::parse(R"({"field":"q","n":2,"rows":[["1"]]})")),
                    Error);
}

TEST_CASE("classify subcommand") {
    const auto negative = run({"classify", "--field", "fp:3", "--c", "1,0,0"});
    CHECK(negative.exit_code == 2);
    const Json verdict = Json::parse(negative.out);
    CHECK(verdict.at("verdict") == "not_nil_clean");
    CHECK(verdict.at("reason") == "k_out_of_range");

    const auto positive = run({"classify", "--field", "fp:5", "--c", "4,4"});
    CHECK(positive.exit_code == 0);
    CHECK(Json::parse(positive.out).at("verdict") == "nil_clean_proper");
    CHECK(Json::parse(positive.out).at("k") == 1);

    // byte-identical reruns
    CHECK(run({"classify", "--field", "fp:5", "--c", "4,4"}).out == positive.out);
}

TEST_CASE("decompose then verify round trip") {
    const auto decomposed = run({"decompose", "--field", "fp:5", "--c", "4,4"});
    REQUIRE(decomposed.exit_code == 0);
    const Json cert = Json::parse(decomposed.out);
    CHECK(cert.at("checks").at("sum_ok") == true);

    const auto verified = run({"verify"}, decomposed.out);
    CHECK(verified.exit_code == 0);
    CHECK(Json::parse(verified.out).at("valid") == true);

    SUBCASE("tampering flips the verdict") {
        Json tampered = cert;
        tampered["N"]["rows"][0][0] = "3";
        const auto failed = run({"verify"}, tampered.dump());
        CHECK(failed.exit_code == 2);
        CHECK(Json::parse(failed.out).at("valid") == false);
    }

    SUBCASE("negative outcome uses exit 2 and reports the classification") {
        const auto negative = run({"decompose", "--field", "fp:3", "--c", "1,0,0"});
        CHECK(negative.exit_code == 2);
        CHECK(Json::parse(negative.out).at("verdict") == "not_nil_clean");
    }
}

TEST_CASE("complete subcommand") {
    const auto completed =
        run({"complete", "--field", "fp:3", "--target", "0,0,1", "--ctail", "-1"});
    REQUIRE(completed.exit_code == 0);
    const Json payload = Json::parse(completed.out);
    CHECK(payload.at("alphas") == Json::array({"1", "1"}));
    const Mat m = mat_from_json(payload.at("M"));
    CHECK(m == test::make_mat(FieldSpec::prime(3), {{-1, -1}, {1, 1}}));
}

TEST_CASE("decompose-target subcommand") {
    const auto split = run({"decompose-target", "--field", "fp:3", "--c", "0,1,2,0", "--k", "3",
                            "--g", "0"});
    REQUIRE(split.exit_code == 0);
    const Json payload = Json::parse(split.out);
    CHECK(payload.at("k") == 3);
    CHECK(payload.at("charpoly_m") == "0,0,0,0,1");
    const Mat e = mat_from_json(payload.at("E"));
    const Mat m = mat_from_json(payload.at("M"));
    CHECK(e.is_idempotent());
    CHECK(m.is_nilpotent());
}

TEST_CASE("enumerate subcommand") {
    const auto census = run({"enumerate", "--p", "2", "--n", "3"});
    REQUIRE(census.exit_code == 0);
    const Json payload = Json::parse(census.out);
    CHECK(payload.at("total") == 8);
    CHECK(payload.at("all_nil_clean") == true);
    CHECK(payload.at("certificates_ok") == true);
}

TEST_CASE("oracle subcommand") {
    const std::string diag = R"({"field":"fp:3","n":2,"rows":[["1","0"],["0","2"]]})";
    const auto absent = run({"oracle", "--matrix", diag});
    CHECK(absent.exit_code == 2);
    CHECK(Json::parse(absent.out).at("found") == false);
    CHECK(Json::parse(absent.out).at("candidates_checked") == 81);

    const auto via_stdin = run({"oracle", "--matrix", "-"}, diag);
    CHECK(via_stdin.out == absent.out);

    const std::string nilclean_c = R"({"field":"fp:5","n":2,"rows":[["0","1"],["1","1"]]})";
    const auto found = run({"oracle", "--matrix", nilclean_c});
    CHECK(found.exit_code == 0);
    const Json payload = Json::parse(found.out);
    CHECK(payload.at("found") == true);
    const Mat e = mat_from_json(payload.at("E"));
    const Mat n = mat_from_json(payload.at("N"));
    CHECK(e.is_idempotent());
    CHECK(n.is_nilpotent());
}

TEST_CASE("malformed input exits 1") {
    CHECK(run({"classify", "--field", "fp:4", "--c", "1,0"}).exit_code == 1);
    CHECK(run({"classify", "--field", "fp:3", "--c", "1/2,0"}).exit_code == 1);
    CHECK(run({"classify", "--field", "fp:3"}).exit_code == 1);  // missing --c
    CHECK(run({"frobnicate"}).exit_code == 1);
    CHECK(run({"oracle", "--matrix", "{not json"}).exit_code == 1);
    CHECK(run({"oracle", "--matrix", "/nonexistent/path.json"}).exit_code == 1);
    CHECK(run({"decompose-target", "--field", "fp:3", "--c", "1,1", "--k", "2"}).exit_code == 1);
    CHECK(run({"verify"}, "{}").exit_code == 1);
}
