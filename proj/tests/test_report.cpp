#include <doctest.h>

#include <sstream>

#include "partid/report.hpp"

using namespace partid;

TEST_CASE("verification report JSON schema") {
    const auto report = verify(IdentityId::forward_general, PartSet::primes(), 1, 3);
    const Json j = to_json(report);
    CHECK(j.dump() ==
          R"({"identity":"forward","set":"primes","alpha":1,"N":3,"all_equal":true,"records":[)"
          R"({"n":0,"lhs":"1","rhs":"1","equal":true},{"n":1,"lhs":"0","rhs":"0","equal":true},)"
          R"({"n":2,"lhs":"1","rhs":"1","equal":true},{"n":3,"lhs":"1","rhs":"1","equal":true}]})");
}

TEST_CASE("big integers are decimal strings") {
    VerifyOptions conv;
    conv.mode = EvalMode::convolution;
    const auto report = verify(IdentityId::forward_general, PartSet::naturals(), 2, 500, conv);
    const Json j = to_json(report);
    CHECK(j["records"][500]["lhs"] == "2300165032574323995027");
}

TEST_CASE("JSON round trip preserves all_equal") {
    VerifyOptions explore;
    explore.allow_odd_alpha = true;
    for (const auto& report : {verify(IdentityId::inverse, PartSet::odds(), 3, 60),
                               verify(IdentityId::signed_general, PartSet::primes(), 1, 30, explore)}) {
        const Json j = Json::parse(to_json(report).dump());
        const auto back = report_from_json(j);
        bool recomputed = true;
        for (const auto& r : back.records) {
            CHECK(r.equal == (r.lhs == r.rhs()));
            recomputed = recomputed && r.equal;
        }
        CHECK(recomputed == back.all_equal);
        CHECK(back.all_equal == report.all_equal);
        CHECK(back.exploration == report.exploration);
        CHECK(to_json(back) == j);
    }
}

TEST_CASE("solution matrix JSON") {
    CHECK(to_json(enumerate_solutions(5, 2)).dump() == R"({"n":5,"base":2,"rows":[[1,0,1],[1,2],[3,1],[5]]})");
    CHECK(to_json(enumerate_solutions(0, 3)).dump() == R"({"n":0,"base":3,"rows":[[]]})");
}

TEST_CASE("plain and csv writers") {
    const auto report = verify(IdentityId::inverse, PartSet::squares(), 1, 2);
    std::ostringstream csv;
    write_csv(csv, report);
    CHECK(csv.str() == "n,lhs,rhs,equal\n0,1,1,true\n1,1,1,true\n2,0,0,true\n");
    std::ostringstream plain;
    write_plain(plain, report);
    CHECK(plain.str().find("2\t0\t0\tyes\n") != std::string::npos);
    CHECK(plain.str().find("all_equal true") != std::string::npos);
}
