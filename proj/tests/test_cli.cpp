#include <catch2/catch_amalgamated.hpp>

#include <sstream>

#include "etamod/cli.hpp"

using namespace etamod;

namespace {

struct CliRun {
    int code;
    std::string out;
    std::string err;
};

CliRun run(std::vector<std::string> args) {
    args.insert(args.begin(), "etamod");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("quadratic literal parsing") {
    CHECK(parse_quadratic("5") == QuadraticNumber(Rational(5)));
    CHECK(parse_quadratic("-3/2") == QuadraticNumber(rational(-3, 2)));
    CHECK(parse_quadratic("sqrt(-1)") ==
          QuadraticNumber(Rational(0), Rational(1), Integer(-1)));
    CHECK(parse_quadratic("-sqrt(2)") ==
          QuadraticNumber(Rational(0), Rational(-1), Integer(2)));
    CHECK(parse_quadratic("2*sqrt(5)") ==
          QuadraticNumber(Rational(0), Rational(2), Integer(5)));
    CHECK(parse_quadratic("1+1*sqrt(-1)") ==
          QuadraticNumber(Rational(1), Rational(1), Integer(-1)));
    CHECK(parse_quadratic("3/2-2*sqrt(5)") ==
          QuadraticNumber(rational(3, 2), Rational(-2), Integer(5)));
    CHECK(parse_quadratic("-1/2 + sqrt(7)") ==
          QuadraticNumber(rational(-1, 2), Rational(1), Integer(7)));
    CHECK_THROWS_AS(parse_quadratic(""), std::domain_error);
    CHECK_THROWS_AS(parse_quadratic("sqrt(2"), std::domain_error);
}

TEST_CASE("genus command") {
    CliRun r = run({"genus", "--level", "13"});
    CHECK(r.code == 0);
    CHECK(r.out.find("genus = 0") != std::string::npos);
    CHECK(r.out.find("degree psi(N) = 14") != std::string::npos);

    CliRun rj = run({"genus", "--level", "11", "--json"});
    CHECK(rj.code == 0);
    json doc = json::parse(rj.out);
    CHECK(doc["command"] == "genus");
    CHECK(doc["level"] == 11);
    CHECK(doc["result"]["genus"] == 1);
    CHECK(doc["result"]["isGenusZero"] == false);
    CHECK(doc["warnings"].empty());
}

TEST_CASE("haupt command") {
    CliRun r = run({"haupt", "--level", "6", "--json"});
    REQUIRE(r.code == 0);
    json doc = json::parse(r.out);
    CHECK(doc["result"]["kappa"] == "72");
    CHECK(doc["result"]["exponents"]["1"] == 5);
    CHECK(doc["result"]["exponents"]["2"] == -1);
    CHECK(doc["result"]["exponents"]["3"] == 1);
    CHECK(doc["result"]["exponents"]["6"] == -5);
    CHECK(doc["result"]["kappaSqrt"]["b"] == "6");
    CHECK(doc["result"]["kappaSqrt"]["d"] == "2");

    CliRun bad = run({"haupt", "--level", "11"});
    CHECK(bad.code == 1);
    CHECK(bad.err.find("genus") != std::string::npos);
}

TEST_CASE("jmap command") {
    CliRun r = run({"jmap", "--level", "2", "--json"});
    REQUIRE(r.code == 0);
    json doc = json::parse(r.out);
    // (h + 256)^3 / h^2, coefficients low to high.
    CHECK(doc["result"]["j"]["num"] ==
          json::array({"16777216", "196608", "768", "1"}));
    CHECK(doc["result"]["j"]["den"] == json::array({"0", "0", "1"}));
    CHECK(doc["result"]["jMinus1728"]["den"] == json::array({"0", "0", "1"}));
}

TEST_CASE("coeffs command") {
    CliRun r = run({"coeffs", "--level", "2", "--json"});
    REQUIRE(r.code == 0);
    json doc = json::parse(r.out);
    CHECK(doc["result"]["A4"]["num"] == json::array({"256", "1"}));
    CHECK(doc["result"]["A4"]["den"] == json::array({"64", "1"}));
    CHECK(doc["result"]["A6"]["num"] == json::array({"-512", "1"}));
    CHECK(doc["result"]["A4p"]["num"] == json::array({"16", "1"}));
    CHECK(doc["result"]["A6p"]["num"] == json::array({"-8", "1"}));
}

TEST_CASE("cm command") {
    CliRun r = run({"cm", "--level", "13", "--json"});
    REQUIRE(r.code == 0);
    json doc = json::parse(r.out);
    CHECK(doc["result"]["tau"] == "i/sqrt(13)");
    CHECK(doc["result"]["h"]["a"] == "0");
    CHECK(doc["result"]["h"]["b"] == "1");
    CHECK(doc["result"]["h"]["d"] == "13");
    CHECK(doc["result"]["j"]["a"] == "3448440000");
    CHECK(doc["result"]["j"]["b"] == "956448000");
    CHECK(doc["result"]["j"]["d"] == "13");

    CliRun rt = run({"cm", "--level", "2"});
    CHECK(rt.code == 0);
    CHECK(rt.out.find("j = 8000") != std::string::npos);
}

TEST_CASE("kcurve command") {
    CliRun no = run({"kcurve", "--level", "2", "--disc", "5"});
    CHECK(no.code == 1);
    CHECK(no.out.find("no strict twist exists") != std::string::npos);

    CliRun yes = run({"kcurve", "--level", "2", "--disc", "-2", "--json"});
    CHECK(yes.code == 0);
    json doc = json::parse(yes.out);
    CHECK(doc["result"]["exists"] == true);
    CHECK(doc["result"]["witness"]["x"] == "0");
    CHECK(doc["result"]["witness"]["y"] == "1");
    CHECK(doc["result"]["witness"]["sign"] == 1);

    CliRun bad = run({"kcurve", "--level", "2", "--disc", "4"});
    CHECK(bad.code == 1);
    CHECK(bad.err.find("squarefree") != std::string::npos);
}

TEST_CASE("twists command") {
    CliRun r = run({"twists", "--level", "2", "--disc", "-1", "--t", "0", "--alpha",
                    "1+1*sqrt(-1)", "--json"});
    REQUIRE(r.code == 0);
    json doc = json::parse(r.out);
    CHECK(doc["result"]["strict"] == true);
    CHECK(doc["result"]["h"]["a"] == "64");
    // alpha^2 = 2i, so a4 = -2i * (5/2) / 48 = -5i/48.
    CHECK(doc["result"]["curve"]["a4"]["a"] == "0");
    CHECK(doc["result"]["curve"]["a4"]["b"] == "-5/48");
    CHECK(doc["result"]["curve"]["a4"]["d"] == "-1");

    CliRun plain = run({"twists", "--level", "2", "--disc", "-1"});
    CHECK(plain.code == 0);
    CHECK(plain.out.find("strict: no") != std::string::npos);

    CliRun bad = run({"twists", "--level", "2", "--disc", "-1", "--alpha", "sqrt(3)"});
    CHECK(bad.code == 1);
    CHECK(bad.err.find("alpha must lie") != std::string::npos);
}

TEST_CASE("verify command") {
    CliRun r = run({"verify", "--suite", "genus", "--json"});
    CHECK(r.code == 0);
    json doc = json::parse(r.out);
    CHECK(doc["result"]["pass"] == true);
    REQUIRE(doc["result"]["suites"].size() == 1);
    CHECK(doc["result"]["suites"][0]["name"] == "genus");

    CliRun unknown = run({"verify", "--suite", "nope"});
    CHECK(unknown.code == 1);
    CHECK(unknown.err.find("unknown suite") != std::string::npos);
}

TEST_CASE("usage errors") {
    CHECK(run({}).code == 2);
    CHECK(run({"frobnicate"}).code == 2);
    CHECK(run({"genus"}).code == 2);              // missing required --level
    CHECK(run({"kcurve", "--level", "2"}).code == 2);  // missing required --disc
    CHECK(run({"--help"}).code == 0);
}
