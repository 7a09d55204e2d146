#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "tcalc/cli.hpp"

using namespace tcalc;
using nlohmann::json;

namespace {

struct RunResult {
    int code;
    std::string out;
    std::string err;
};

RunResult run_cli(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    int code = run(args, out, err);
    return {code, out.str(), err.str()};
}

json parse_out(const RunResult& r) { return json::parse(r.out); }

class TempFile {
  public:
    TempFile(const std::string& name, const std::string& content)
        : path_("/tmp/" + name) {
        std::ofstream f(path_);
        f << content;
    }
    ~TempFile() { std::remove(path_.c_str()); }
    const std::string& path() const { return path_; }

  private:
    std::string path_;
};

const char* kInfiniteK3 = R"({
  "r": 2, "k": 3,
  "degrees": [
    {"i": 1, "free_rank": 1},
    {"i": 2, "free_rank": 1},
    {"i": 3, "free_rank": 1}
  ],
  "power_order": {"type": "infinite", "q_factors": [[3, 1]]}
})";

}  // namespace

TEST_CASE("lambda reports odd k as zero") {
    RunResult r = run_cli({"lambda", "--k", "3"});
    REQUIRE(r.code == 0);
    json j = parse_out(r);
    CHECK(j["command"] == "lambda");
    CHECK(j["result"]["value"] == "0");
    CHECK(j["result"]["note"] == "odd k");
}

TEST_CASE("lambda with factorization and the boxed form") {
    RunResult r = run_cli({"lambda", "--k", "4", "--factor", "--show-lemma2-form"});
    REQUIRE(r.code == 0);
    json j = parse_out(r);
    CHECK(j["result"]["value"] == "90");
    CHECK(j["result"]["factorization"]["rendering"] == "2 * 3^2 * 5");
    CHECK(j["result"]["lemma2_form"]["display_value"] == "522");
    CHECK(j["result"]["lemma2_form"]["alternating_value"] == "90");
    CHECK(j["result"]["lemma2_form"]["agrees"] == false);

    // at k = 2 the two forms coincide
    RunResult r2 = run_cli({"lambda", "--k", "2", "--show-lemma2-form"});
    json j2 = parse_out(r2);
    CHECK(j2["result"]["lemma2_form"]["agrees"] == true);

    RunResult rt = run_cli({"lambda", "--k", "2", "--factor", "--format", "text"});
    CHECK(rt.out.find("lambda(3,2) = -6") != std::string::npos);
    CHECK(rt.out.find("factorization: -2 * 3") != std::string::npos);
}

TEST_CASE("prime-support table in both layouts") {
    RunResult rt = run_cli({"table1", "--max", "4"});
    REQUIRE(rt.code == 0);
    CHECK(rt.out.find("k = 2: {2, 3}   (lambda = -6 = -2 * 3)") != std::string::npos);
    CHECK(rt.out.find("k = 4: {2, 3, 5}") != std::string::npos);

    RunResult rj = run_cli({"table1", "--max", "4", "--format", "json"});
    json j = parse_out(rj);
    CHECK(j["command"] == "table1");
    REQUIRE(j["result"]["rows"].size() == 2);
    CHECK(j["result"]["rows"][0]["support"] == json::array({2, 3}));
    CHECK(j["provenance"] == json::array({"Table 1"}));

    RunResult rl = run_cli({"lambda-table", "--max", "6"});
    json jl = parse_out(rl);
    CHECK(jl["command"] == "lambda-table");
    CHECK(jl["result"]["rows"].size() == 3);
    CHECK(jl["result"]["rows"][2]["value"] == "-1680");
}

TEST_CASE("witness certificate over the rationals") {
    RunResult r = run_cli({"zcl-witness", "--n", "3", "--k", "2"});
    REQUIRE(r.code == 0);
    json j = parse_out(r);
    CHECK(j["result"]["route"] == "xi");
    CHECK(j["result"]["witness_length"] == 6);
    CHECK(j["result"]["product_nonzero"] == true);
    CHECK(j["result"]["top_coefficient"] == "-6");
    CHECK(j["result"]["routes_agree"] == true);
    CHECK(j["result"]["factors"].size() == 6);  // nk difference factors
}

TEST_CASE("witness errors are structured") {
    RunResult r = run_cli({"zcl-witness", "--n", "3", "--k", "2", "--char", "4"});
    CHECK(r.code == 1);
    json j = parse_out(r);
    CHECK(j["error"]["type"] == "domain");
    CHECK(r.err.find("error:") != std::string::npos);

    RunResult r2 = run_cli({"zcl-witness", "--n", "3", "--k", "2", "--route", "square"});
    CHECK(r2.code == 1);
    CHECK(parse_out(r2)["error"]["type"] == "domain");
}

TEST_CASE("identity verification reports the failing clause") {
    RunResult r = run_cli({"verify-lemma2", "--max-n", "3", "--max-k", "3"});
    REQUIRE(r.code == 0);
    json j = parse_out(r);
    CHECK(j["result"]["all_pass"] == false);
    REQUIRE(j["result"]["identities"].size() == 3);
    CHECK(j["result"]["identities"][0]["pass"] == true);   // xi at k = 2
    CHECK(j["result"]["identities"][1]["pass"] == true);   // vanishing at k = 3
    CHECK(j["result"]["identities"][2]["pass"] == false);  // odd-k constant
    CHECK(j["result"]["identities"][2]["expected"] == "-12");
    CHECK(j["result"]["identities"][2]["actual"] == "-20");

    RunResult rt = run_cli({"verify-lemma2", "--max-n", "3", "--max-k", "3", "--format", "text"});
    CHECK(rt.out.find("FAIL mu * (A1 - An)") != std::string::npos);
    CHECK(rt.out.find("some identities fail") != std::string::npos);
}

TEST_CASE("generating function for the linear family") {
    RunResult r = run_cli({"tcgen", "--k", "2", "--expand", "4"});
    REQUIRE(r.code == 0);
    json j = parse_out(r);
    CHECK(j["result"]["numerator"] == "4x - 2x^2");
    CHECK(j["result"]["numerator_coefficients"] == json::array({"0", "4", "-2"}));
    CHECK(j["result"]["p_at_one"] == "2");
    CHECK(j["result"]["eventual_slope"] == "2");
    CHECK(j["result"]["series"] == json::array({"0", "4", "6", "8"}));

    RunResult rt = run_cli({"tcgen", "--k", "3", "--format", "text"});
    CHECK(rt.out.find("P(x) = 6x - 3x^2") != std::string::npos);
    CHECK(rt.out.find("P(1) = 3") != std::string::npos);
}

TEST_CASE("admissible characteristics from a data file") {
    TempFile f("tcalc_test_charsets.json", kInfiniteK3);
    RunResult r = run_cli({"char-sets", "--input", f.path()});
    REQUIRE(r.code == 0);
    json j = parse_out(r);
    CHECK(j["result"]["case"] == "(i)");
    CHECK(j["result"]["includes_zero"] == true);
    CHECK(j["result"]["excluded"] == json::array({3}));
    CHECK(j["result"]["selected_characteristic"] == 0);
    CHECK(j["result"]["echo"]["k"] == 3);
}

TEST_CASE("invalid cohomology input lists every violation") {
    TempFile f("tcalc_test_bad.json", R"({
      "r": 3, "k": 1,
      "degrees": [{"i": 1, "free_rank": -1}],
      "power_order": {"type": "finite", "l": 0, "l_q_factors": []}
    })");
    RunResult r = run_cli({"char-sets", "--input", f.path()});
    CHECK(r.code == 1);
    json j = parse_out(r);
    std::string msg = j["error"]["message"];
    CHECK(msg.find("invalid cohomology input:") != std::string::npos);
    CHECK(msg.find("r must be a positive even integer") != std::string::npos);
    CHECK(msg.find("k must be at least 2") != std::string::npos);
    CHECK(msg.find("l must satisfy 2 <= l <= k-1") != std::string::npos);

    TempFile g("tcalc_test_notjson.json", "not json at all");
    RunResult r2 = run_cli({"char-sets", "--input", g.path()});
    CHECK(r2.code == 1);
    std::string msg2 = parse_out(r2)["error"]["message"];
    CHECK(msg2.find("malformed JSON") != std::string::npos);

    RunResult r3 = run_cli({"char-sets", "--input", "/nonexistent/nope.json"});
    CHECK(r3.code == 1);
}

TEST_CASE("cell structure synthesis and cochain check round trip") {
    TempFile f("tcalc_test_cwbuild.json", kInfiniteK3);
    RunResult r = run_cli({"cw-build", "--input", f.path()});
    REQUIRE(r.code == 0);
    json j = parse_out(r);
    CHECK(j["result"]["case"] == "(a)");
    REQUIRE(j["result"]["cells"].size() == 4);
    CHECK(j["result"]["cells"][3]["dimension"] == 6);
    CHECK(j["result"]["cells"][3]["hopf_invariant"] == "3");

    TempFile s("tcalc_test_structure.json", j["result"].dump());
    RunResult rc = run_cli({"cw-check", "--structure", s.path(), "--char", "5"});
    REQUIRE(rc.code == 0);
    json jc = parse_out(rc);
    CHECK(jc["result"]["dims"] == json::array({1, 0, 1, 0, 1, 0, 1}));
    CHECK(jc["result"]["profile_match"] == true);
    CHECK(jc["result"]["spine_product"] == "3");
    CHECK(jc["result"]["unit_check"] == true);

    RunResult rc3 = run_cli({"cw-check", "--structure", s.path(), "--char", "3"});
    json jc3 = parse_out(rc3);
    CHECK(jc3["result"]["unit_check"] == false);
    CHECK(jc3["result"]["profile_match"] == true);  // dims are field-independent here

    RunResult rt = run_cli({"cw-build", "--input", f.path(), "--format", "text"});
    CHECK(rt.out.find("case (a) structure, 4 cells:") != std::string::npos);
    CHECK(rt.out.find("e^6 generator (hopf invariant 3)") != std::string::npos);
}

TEST_CASE("finite-order synthesis places torsion pairs") {
    TempFile f("tcalc_test_finite.json", R"({
      "r": 2, "k": 3,
      "degrees": [
        {"i": 1, "free_rank": 1},
        {"i": 2, "free_rank": 1},
        {"i": 3, "free_rank": 0, "torsion": [[5, 1]]}
      ],
      "power_order": {"type": "finite", "l": 2, "l_q_factors": []}
    })");
    RunResult r = run_cli({"cw-build", "--input", f.path()});
    REQUIRE(r.code == 0);
    json j = parse_out(r);
    CHECK(j["result"]["case"] == "(b)");
    REQUIRE(j["result"]["cells"].size() == 5);
    CHECK(j["result"]["cells"][4]["boundary_multiplicity"] == "5");

    TempFile s("tcalc_test_finite_structure.json", j["result"].dump());
    RunResult rc = run_cli({"cw-check", "--structure", s.path(), "--char", "5"});
    json jc = parse_out(rc);
    CHECK(jc["result"]["profile_match"] == false);
}

TEST_CASE("excluded-characteristics table") {
    RunResult r = run_cli({"table2"});
    REQUIRE(r.code == 0);
    CHECK(r.out.find("k = 4: {2, 3, 5}") != std::string::npos);
    CHECK(r.out.find("k = 22: {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31}") != std::string::npos);

    RunResult rj = run_cli({"table2", "--k-list", "4,5", "--format", "json"});
    json j = parse_out(rj);
    REQUIRE(j["result"]["rows"].size() == 2);
    CHECK(j["result"]["rows"][0]["excluded"] == json::array({2, 3, 5}));

    RunResult rbad = run_cli({"table2", "--k-list", "4,x"});
    CHECK(rbad.code == 1);
    CHECK(parse_out(rbad)["error"]["type"] == "domain");
}

TEST_CASE("argument errors exit with code 2") {
    CHECK(run_cli({"no-such-command"}).code == 2);
    CHECK(run_cli({}).code == 2);
    CHECK(run_cli({"lambda"}).code == 2);             // --k required
    CHECK(run_cli({"tcgen", "--k", "abc"}).code == 2);
    RunResult help = run_cli({"--help"});
    CHECK(help.code == 0);
    CHECK(help.out.find("zcl-witness") != std::string::npos);
}

TEST_CASE("output is byte-identical across runs") {
    RunResult a = run_cli({"zcl-witness", "--n", "3", "--k", "3", "--route", "mu"});
    RunResult b = run_cli({"zcl-witness", "--n", "3", "--k", "3", "--route", "mu"});
    CHECK(a.out == b.out);
    RunResult c = run_cli({"table1", "--max", "12", "--format", "json"});
    RunResult d = run_cli({"table1", "--max", "12", "--format", "json"});
    CHECK(c.out == d.out);
}
