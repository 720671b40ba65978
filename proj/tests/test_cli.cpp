#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cli_runner.hpp"

#include <nlohmann/json.hpp>

using nabla::testing::run_cli;
using nabla::testing::write_file;

namespace {

const char* kRadiusSquared =
    R"({"kind":"scalar","terms":[{"c":"1","e":[2,0,0]},{"c":"1","e":[0,2,0]},{"c":"1","e":[0,0,2]}]})";
const char* kRadiusFourth =
    R"({"kind":"scalar","terms":[{"c":"1","e":[4,0,0]},{"c":"2","e":[2,2,0]},{"c":"2","e":[2,0,2]},{"c":"1","e":[0,4,0]},{"c":"2","e":[0,2,2]},{"c":"1","e":[0,0,4]}]})";
const char* kRotation =
    R"({"kind":"vector","components":[[{"c":"-1","e":[0,1,0]}],[{"c":"1","e":[1,0,0]}],[]]})";

}  // namespace

TEST_CASE("classify") {
    auto r = run_cli("classify \"div curl\"");
    CHECK(r.status == 0);
    CHECK(r.out == "zero (scalar), annihilating pair at position 0: div curl\n");

    r = run_cli("classify \"curl curl curl\"");
    CHECK(r.out == "nontrivial: curl-power, order 3, signature vector -> vector\n");

    r = run_cli("classify \"grad grad\"");
    CHECK(r.status == 0);
    CHECK(r.out == "meaningless\n");

    r = run_cli("classify div curl grad");
    CHECK(r.out == "zero (scalar), annihilating pair at position 0: div curl\n");

    r = run_cli("classify \"curl curl grad\"");
    CHECK(r.out == "zero (vector), annihilating pair at position 1: curl grad\n");

    r = run_cli("classify '∇1 ∘ ∇3 ∘ ∇1'");
    CHECK(r.out == "nontrivial: grad-div-alternating, order 3, signature scalar -> vector\n");

    CHECK(run_cli("classify \"grad rot\"").status == 1);
    CHECK(run_cli("classify").status == 1);
}

TEST_CASE("census") {
    auto r = run_cli("census --max 3");
    CHECK(r.status == 0);
    CHECK(r.out ==
          "length  total     meaningless  meaningful  trivial-zero  nontrivial\n"
          "1       3         0            3           0             3\n"
          "2       9         4            5           2             3\n"
          "3       27        19           8           5             3\n");

    r = run_cli("census --max 5 --json");
    CHECK(r.status == 0);
    auto doc = nlohmann::json::parse(r.out);
    REQUIRE(doc.size() == 5);
    CHECK(doc[4]["meaningful"] == 21);
    CHECK(doc[4]["nontrivial"] == 3);
    CHECK(doc[1]["meaningful"] == 5);

    CHECK(run_cli("census --max 13").status == 1);
    CHECK(run_cli("census --max 0").status == 1);
}

TEST_CASE("apply") {
    write_file("cli_r2.json", kRadiusSquared);
    write_file("cli_x1sq_x2.json", R"({"kind":"scalar","terms":[{"c":"1","e":[2,1,0]}]})");

    auto r = run_cli("apply --chain \"div grad\" --field cli_r2.json");
    CHECK(r.status == 0);
    CHECK(r.out == "{\"kind\":\"scalar\",\"terms\":[{\"c\":\"6\",\"e\":[0,0,0]}]}\n");

    r = run_cli("apply --chain \"curl grad\" --field cli_x1sq_x2.json");
    CHECK(r.status == 0);
    CHECK(r.out == "{\"kind\":\"vector\",\"components\":[[],[],[]]}\n");

    r = run_cli("apply --chain grad --field cli_r2.json --at \"1/2,0,-3\"");
    CHECK(r.out == "(1, 0, -6)\n");
    r = run_cli("apply --chain grad --field cli_r2.json --at \"1/2,0,-3\" --json");
    CHECK(r.out == "{\"kind\":\"vector\",\"value\":[\"1\",\"0\",\"-6\"]}\n");

    CHECK(run_cli("apply --chain \"grad grad\" --field cli_r2.json").status == 2);
    CHECK(run_cli("apply --chain div --field cli_r2.json").status == 1);
    CHECK(run_cli("apply --chain div --field missing.json").status == 1);
    write_file("cli_bad.json", R"({"kind":"scalar","terms":[{"c":"1","e":[1,0,0]},{"c":"1","e":[1,0,0]}]})");
    CHECK(run_cli("apply --chain grad --field cli_bad.json").status == 1);
    CHECK(run_cli("apply --chain grad --field cli_r2.json --at 1,2").status == 1);
}

TEST_CASE("apply output feeds back into apply") {
    write_file("cli_r2.json", kRadiusSquared);
    auto grad_r2 = run_cli("apply --chain grad --field cli_r2.json");
    write_file("cli_grad_r2.json", grad_r2.out);
    auto lap = run_cli("apply --chain div --field cli_grad_r2.json");
    CHECK(lap.out == "{\"kind\":\"scalar\",\"terms\":[{\"c\":\"6\",\"e\":[0,0,0]}]}\n");
}

TEST_CASE("order") {
    write_file("cli_harm.json",
               R"({"kind":"scalar","terms":[{"c":"1","e":[2,0,0]},{"c":"-1","e":[0,2,0]}]})");
    write_file("cli_r4.json", kRadiusFourth);
    write_file("cli_rot.json", kRotation);

    auto r = run_cli("order --collection harmonic --field cli_harm.json");
    CHECK(r.status == 0);
    CHECK(r.out == "order 1\n");
    CHECK(run_cli("order --collection harmonic --field cli_r4.json").out == "order 3\n");
    CHECK(run_cli("order --collection curling --field cli_rot.json").out == "order 2\n");
    r = run_cli("order --collection harmonic --field cli_r4.json --max 2");
    CHECK(r.status == 0);
    CHECK(r.out == "exceeds 2\n");
    CHECK(run_cli("order --collection curling --field cli_r4.json").status == 1);
    CHECK(run_cli("order --collection spinning --field cli_r4.json").status == 1);
}

TEST_CASE("verify") {
    auto r = run_cli("verify --suite associativity --trials 10");
    CHECK(r.status == 0);
    CHECK(r.out.find("PASS signature groupings (54 cases) (54/54)") != std::string::npos);

    auto a = run_cli("verify --suite identities --trials 20 --seed 42 --degree 4");
    auto b = run_cli("verify --suite identities --trials 20 --seed 42 --degree 4");
    CHECK(a.status == 0);
    CHECK(a.out == b.out);

    CHECK(run_cli("verify --suite examples --trials 5").status == 0);
    CHECK(run_cli("verify --suite oracle --trials 5").status == 0);
    CHECK(run_cli("verify --suite identities --trials 2 --inject-fault").status == 3);
    CHECK(run_cli("verify --suite nonsense").status == 1);
    CHECK(run_cli("verify --suite identities --trials 0").status == 1);
}
