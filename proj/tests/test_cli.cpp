#include <doctest.h>

#include <sstream>

#include "quivmod/cli.hpp"
#include "quivmod/json_io.hpp"

using namespace quivmod;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args, const std::string& input = "") {
    std::istringstream in(input);
    std::ostringstream out, err;
    const int code = run_command(args, in, out, err);
    return {code, out.str(), err.str()};
}

const char* kSymmetricProblem = R"({
  "vertices": ["i", "j"],
  "arrows": [[0, 2], [2, 0]],
  "dimension": [1, 1],
  "stability": [0, 0],
  "deformed_stability": [1, -1],
  "assume_nonempty": true
})";

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("ic on the determinantal example") {
    const Run r = run({"ic", "--example", "determinantal:2,1", "--json"});
    CHECK(r.code == 0);
    const Json j = Json::parse(r.out);
    CHECK(j["result"]["v_powers"] == Json{{"4", "1"}, {"6", "1"}});
    CHECK(j["result"]["pretty"] == "q^2 + q^3");
    CHECK(j["routes_agree"] == true);
    CHECK(j["resolution_route"] == j["dt_route"]);
}

TEST_CASE("betti without a deformation is a precondition failure") {
    const Run r = run({"betti", "--example", "determinantal:2,1"});
    CHECK(r.code == 2);
    CHECK(r.err.find("stability not coprime for d") != std::string::npos);
    const Run j = run({"betti", "--example", "determinantal:2,1", "--json"});
    CHECK(j.code == 2);
    CHECK(Json::parse(j.out)["error"]["reason"] == "not_coprime");
    CHECK(Json::parse(j.out)["error"]["kind"] == "precondition");
}

TEST_CASE("smallness on the asymmetric Kronecker example") {
    const Run r = run({"smallness", "--example", "kronecker_general:3,1", "--json"});
    CHECK(r.code == 0);
    const Json j = Json::parse(r.out);
    CHECK(j["report"]["verdict"] == "NotApplicable");
    CHECK(j["report"]["hypotheses"]["kernel_symmetric"] == false);
    CHECK(j["rank_one"]["note"] == "not small (m>n)");
    const Run t = run({"smallness", "--example", "kronecker_general:3,1"});
    CHECK(t.out.find("NotApplicable") != std::string::npos);
    CHECK(t.out.find("not small (m>n)") != std::string::npos);
}

TEST_CASE("stdin input and overrides") {
    const Run r = run({"betti", "-", "--stability", "1,-1", "--json"}, kSymmetricProblem);
    CHECK(r.code == 0);
    CHECK(Json::parse(r.out)["betti"]["pretty"] == "q^2 + q^3");
    const Run ic = run({"ic", "-"}, kSymmetricProblem);
    CHECK(ic.code == 0);
    CHECK(ic.out.find("routes agree: yes") != std::string::npos);
}

TEST_CASE("every command succeeds on a catalog example") {
    for (const char* cmd : {"info", "deform", "pd", "dt", "ic", "strata", "smallness"}) {
        CAPTURE(cmd);
        for (const char* ref : {"determinantal:2,1", "levi_adjoint:3", "points:4,2"}) {
            CAPTURE(ref);
            const Run t = run({cmd, "--example", ref});
            CHECK(t.code == 0);
            CHECK_FALSE(t.out.empty());
            const Run j = run({cmd, "--example", ref, "--json"});
            CHECK(j.code == 0);
            CHECK(Json::parse(j.out)["command"] == cmd);
        }
    }
    const Run e = run({"examples", "--json"});
    CHECK(e.code == 0);
    CHECK(Json::parse(e.out)["families"].size() == 7);
}

TEST_CASE("json output round trips byte for byte") {
    for (const char* cmd : {"info", "pd", "dt", "ic", "strata", "smallness"}) {
        const Run r = run({cmd, "--example", "determinantal:3,1", "--json"});
        REQUIRE(r.code == 0);
        CHECK(Json::parse(r.out).dump(2) + "\n" == r.out);
    }
}

TEST_CASE("json algebra round trips") {
    const HalfLaurent p = HalfLaurent::monomial(Rational(-3, 2), -1) + HalfLaurent::q_power(4, 7);
    CHECK(laurent_from_json(Json::parse(to_json(p).dump())) == p);
    const RatFunc r = RatFunc::fraction(p, HalfLaurent(1L) - HalfLaurent::q_power(1));
    CHECK(ratfunc_from_json(Json::parse(to_json(r).dump())) == r);
}

TEST_CASE("outputs are deterministic") {
    const Run a = run({"strata", "--example", "points:4,2", "--json"});
    const Run b = run({"strata", "--example", "points:4,2", "--json", "--kernel", "scalar"});
    CHECK(a.out == b.out);
}

TEST_CASE("input errors exit with code 1") {
    CHECK(run({"ic"}).code == 1);
    CHECK(run({"frobnicate", "--example", "determinantal:2,1"}).code == 1);
    CHECK(run({"ic", "-"}, "{not json").code == 1);
    CHECK(run({"ic", "-"}, R"({"arrows": [[0, 1]], "dimension": [1], "stability": [0]})").code == 1);
    CHECK(run({"ic", "-"}, R"({"arrows": [[0]], "dimension": [1, 2], "stability": [0]})").code == 1);
    CHECK(run({"ic", "-"}, R"({"arrows": [[0]], "dimension": [1], "stability": [0], "extra": 1})").code == 1);
    CHECK(run({"ic", "--example", "unknown:1"}).code == 1);
    CHECK(run({"ic", "/nonexistent/file.json"}).code == 1);
    CHECK(run({"ic", "--example", "determinantal:2,1", "--stability", "1,x"}).code == 1);
}

TEST_CASE("box guard and kernel asymmetry exit with code 2") {
    const Run g = run({"betti", "--example", "kronecker:2", "--max-box", "2"});
    CHECK(g.code == 2);
    CHECK(g.err.find("--max-box") != std::string::npos);
    CHECK(run({"ic", "--example", "kronecker_general:3,1"}).code == 2);
}

TEST_CASE("help") {
    const Run h = run({"--help"});
    CHECK(h.code == 0);
    CHECK(h.out.find("determinantal:m,r") != std::string::npos);
}

}
