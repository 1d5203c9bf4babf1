#include <doctest.h>

#include <json.hpp>

#include <sstream>

#include "cli.hpp"
#include "flagchow/errors.hpp"

using namespace flagchow;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome invoke(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("context literals") {
  CHECK(cli::parse_context("P(2)") == ChowContext::projective_space(2));
  CHECK(cli::parse_context(" Fbar( 2 , 4 ) ") == ChowContext::incidence_flag(2, 4));
  CHECK_THROWS_WITH_AS(cli::parse_context("Fbar(2;4)"), doctest::Contains("1:7"), ParseError);
  CHECK_THROWS_AS(cli::parse_context("Q(2)"), ParseError);
  CHECK_THROWS_AS(cli::parse_context("P(2) x"), ParseError);
  CHECK_THROWS_AS(cli::parse_context("Fbar(3,5)"), ValidationError);
}

TEST_CASE("shape, type, case, char and grouping literals") {
  CHECK(cli::parse_shape("F(1,2,3;4)") == FlagShape::complete(4));
  CHECK(cli::parse_shape("F(2;5)") == FlagShape::grassmannian(2, 5));
  CHECK_THROWS_AS(cli::parse_shape("F(2,5)"), ParseError);
  CHECK_THROWS_AS(cli::parse_shape("F(3,2;5)"), ValidationError);

  CHECK(cli::parse_type("(0,-2)") == SplittingType({0, -2}));
  CHECK(cli::parse_type("( -1 , 3 )") == SplittingType({3, -1}));
  CHECK_THROWS_AS(cli::parse_type("()"), ParseError);
  CHECK_THROWS_AS(cli::parse_type("(1,,2)"), ParseError);

  CHECK(cli::parse_case("I") == LineCase::I);
  CHECK(cli::parse_case("II") == LineCase::II);
  CHECK_THROWS_AS(cli::parse_case("III"), ParseError);
  CHECK_THROWS_AS(cli::parse_case("V"), ParseError);

  CHECK(cli::parse_char("0").is_zero());
  CHECK(cli::parse_char("5").p() == 5);
  CHECK_THROWS_AS(cli::parse_char("4"), ValidationError);
  CHECK_THROWS_AS(cli::parse_char("-2"), ParseError);

  const auto g = cli::parse_grouping("(0,1),(-1,1)");
  REQUIRE(g.size() == 2);
  CHECK(g[1].u == -1);
  CHECK(g[1].rank == 1);
  CHECK_THROWS_AS(cli::parse_grouping("(0,1)(1,1)"), ParseError);
}

TEST_CASE("documented invocations") {
  const auto c = invoke({"classify", "--d", "2", "--n", "5", "--r", "2", "--type", "(0,-2)", "--char", "2"});
  CHECK(c.code == 0);
  CHECK(c.out.find("FrobeniusUniversalSub{m=1}") != std::string::npos);

  const auto r = invoke({"reduce", "--ctx", "P(2)", "--poly", "H^3"});
  CHECK(r.code == 0);
  CHECK(r.out == "0 in A(P^2)\n");

  const auto g = invoke({"gap", "--type", "(0,-2)", "--case", "II"});
  CHECK(g.code == 1);
  CHECK(g.out == "Fail{j=1}\n");

  const auto bad = invoke({"reduce", "--ctx", "P(2)", "--poly", "("});
  CHECK(bad.code == 2);
  CHECK(bad.err.find("1:2") != std::string::npos);
}

TEST_CASE("exit codes") {
  CHECK(invoke({"reduce", "--ctx", "P(2)", "--poly", "H^2"}).code == 0);
  CHECK(invoke({"equal", "--ctx", "P(2)", "--p", "1+H^3", "--q", "1"}).code == 0);
  CHECK(invoke({"equal", "--ctx", "P(2)", "--p", "H", "--q", "2*H"}).code == 1);
  CHECK(invoke({"identity", "--d", "2", "--n", "5", "--beta", "-1"}).code == 0);
  CHECK(invoke({"hnfactor", "--d", "2", "--n", "4", "--b", "-1"}).code == 0);
  CHECK(invoke({"strong", "--shape", "F(1,2,3;4)", "--type", "(1,1)", "--type", "(1,1)", "--type", "(1,1)"}).code == 0);
  CHECK(invoke({"strong", "--shape", "F(1,2,3;4)", "--type", "(1,1)", "--type", "(1,0)", "--type", "(1,1)"}).code ==
        1);
  CHECK(invoke({"kq", "--d", "3", "--r", "2", "--t", "1"}).code == 0);
  CHECK(invoke({"eq7", "--d", "2", "--n", "5", "--grouping", "(0,2)", "--roots", "-X1,-X2", "--shift", "3"}).code == 0);
  CHECK(invoke({"classify", "--d", "2", "--n", "5", "--r", "3", "--type", "(0,0,0)", "--char", "0"}).code == 2);
  CHECK(invoke({"classify", "--d", "2", "--n", "5", "--r", "2", "--type", "(0,-2)", "--char", "4"}).code == 2);
  CHECK(invoke({"hnfactor", "--d", "2", "--n", "4", "--b", "1"}).code == 2);
  CHECK(invoke({"nosuch"}).code == 2);
  CHECK(invoke({}).code == 2);
  CHECK(invoke({"gap", "--type", "(0,-2)"}).code == 2);
}

TEST_CASE("negative values in both option spellings") {
  const auto a = invoke({"hnfactor", "--d", "3", "--n", "6", "--b", "-2"});
  const auto b = invoke({"hnfactor", "--d", "3", "--n", "6", "--b=-2"});
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  const auto roots = invoke({"eq7", "--d", "2", "--n", "4", "--grouping", "(0,1),(-1,1)", "--roots=-X1,-X2"});
  CHECK(roots.code == 0);
  CHECK(roots.out.find("admissible a: Z") != std::string::npos);
}

TEST_CASE("json reports") {
  const auto c = invoke({"classify", "--d", "2", "--n", "5", "--r", "2", "--type", "(0,-3)", "--char", "2", "--json"});
  const auto doc = nlohmann::json::parse(c.out);
  CHECK(doc["schema"] == 1);
  CHECK(doc["command"] == "classify");
  CHECK(doc["parameters"]["type"] == "(0,-3)");
  CHECK(doc["possibilities"] == nlohmann::json::array({"DirectSumOfLineBundles"}));
  CHECK(doc["notes"][0].get<std::string>().find("3 is not a power of 2") != std::string::npos);

  const auto h = nlohmann::json::parse(invoke({"hnfactor", "--d", "2", "--n", "4", "--b", "-1", "--json"}).out);
  CHECK(h["sub"]["classes"] == nlohmann::json::array({"X1"}));
  CHECK(h["sub"]["expanded"] == "-X1 + T");

  const auto e = invoke({"reduce", "--ctx", "P(0)", "--poly", "H", "--json"});
  CHECK(e.code == 2);
  const auto err = nlohmann::json::parse(e.out);
  CHECK(err["error"]["kind"] == "validation");
}

TEST_CASE("output is deterministic") {
  const std::vector<std::string> args{"kq", "--d", "4", "--r", "4", "--t", "2", "--bound", "2", "--json"};
  CHECK(invoke(args).out == invoke(args).out);
  auto par = args;
  par.push_back("--parallel");
  const auto a = nlohmann::json::parse(invoke(args).out);
  const auto b = nlohmann::json::parse(invoke(par).out);
  CHECK(a["search"] == b["search"]);
}

TEST_CASE("help lists the grammar") {
  const auto h = invoke({"--help"});
  CHECK(h.code == 0);
  CHECK(h.out.find("Fbar(d,n)") != std::string::npos);
  CHECK(h.out.find("classify") != std::string::npos);
}
