#include <random>
#include <string>

#include "doctest.h"
#include "moyal/errors.hpp"
#include "moyal/format.hpp"
#include "moyal/parser.hpp"
#include "random_symbols.hpp"

using namespace moyal;

namespace {

Errc parse_code(const std::string& text, const std::vector<std::string>& params = {}) {
  try {
    parse(text, params);
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected a parse failure for " << text);
  return Errc::InvalidArgument;
}

}  // namespace

TEST_CASE("basic expressions") {
  CHECK(parse("p*q") == RatSymbol(Poly::variable("p") * Poly::variable("q")));
  CHECK(parse("2^3") == RatSymbol(8));
  CHECK(parse("-p^2") == -RatSymbol(Poly::variable("p", 2)));
  CHECK(parse("(p+q)^2") == parse("p^2 + 2*p*q + q^2"));
  CHECK(parse("1/(1+gamma*p)") * parse("1 + gamma*p") == RatSymbol(1));
  CHECK(parse("i*i") == RatSymbol(-1));
  CHECK(parse("hbar/hbar") == RatSymbol(1));
  CHECK(parse("a*p", {"a"}) == parse("p*a", {"a"}));
  CHECK(parse("p - q - p") == -parse("q"));
  CHECK(parse("8/4/2") == RatSymbol(1));
  CHECK(parse("  p\t*\nq ") == parse("p*q"));
}

TEST_CASE("syntax errors carry positions") {
  try {
    parse("p +* q");
    FAIL("no throw");
  } catch (const ParseError& e) {
    CHECK(e.code() == Errc::SyntaxError);
    CHECK(e.offset() == 3);
    CHECK(e.line() == 1);
    CHECK(e.column() == 4);
  }
  try {
    parse("p +\n  x");
    FAIL("no throw");
  } catch (const ParseError& e) {
    CHECK(e.code() == Errc::UnknownSymbol);
    CHECK(e.line() == 2);
    CHECK(e.column() == 3);
  }
  try {
    parse("(p");
    FAIL("no throw");
  } catch (const ParseError& e) {
    CHECK(e.offset() == 2);
  }
}

TEST_CASE("rejected forms") {
  CHECK(parse_code("") == Errc::SyntaxError);
  CHECK(parse_code("1.5*p") == Errc::SyntaxError);
  CHECK(parse_code("2 p") == Errc::SyntaxError);
  CHECK(parse_code("p^2^3") == Errc::SyntaxError);
  CHECK(parse_code("p^-1") == Errc::NegativeExponent);
  CHECK(parse_code("p^(2)") == Errc::SyntaxError);
  CHECK(parse_code("z") == Errc::UnknownSymbol);
  CHECK(parse_code("p/0") == Errc::ZeroDenominator);
  CHECK(parse_code("p/(q-q)") == Errc::ZeroDenominator);
  CHECK(parse_code("p^99999") == Errc::SyntaxError);
  CHECK_THROWS_AS(parse("p", {"hbar"}), Error);
  CHECK_THROWS_AS(parse("p", {"p"}), Error);
  CHECK_THROWS_AS(parse("p", {"2x"}), Error);
}

TEST_CASE("nesting limit") {
  std::string deep(kMaxNestingDepth + 5, '(');
  deep += "p";
  deep += std::string(kMaxNestingDepth + 5, ')');
  CHECK(parse_code(deep) == Errc::SyntaxError);
  std::string ok(50, '(');
  ok += "p" + std::string(50, ')');
  CHECK(parse(ok) == parse("p"));
  std::string long_sum = "p";
  for (int k = 0; k < 5000; ++k) long_sum += "+p";
  CHECK(parse(long_sum) == RatSymbol(Poly::variable("p").scaled(5001)));
}

TEST_CASE("fuzzed input never crashes") {
  std::mt19937 rng(2024);
  const std::string alphabet = "pq ai+-*/^()0123456789.hbargmx_\n";
  std::uniform_int_distribution<std::size_t> len(0, 40), pick(0, alphabet.size() - 1);
  int accepted = 0;
  for (int trial = 0; trial < 3000; ++trial) {
    std::string text;
    const std::size_t n = len(rng);
    for (std::size_t k = 0; k < n; ++k) text += alphabet[pick(rng)];
    try {
      parse(text, {"a"});
      ++accepted;
    } catch (const Error&) {
    }
  }
  CHECK(accepted > 0);
}

TEST_CASE("plain printing round-trips") {
  std::mt19937 rng(555);
  const std::vector<std::string> vars{"p", "q", "a", "hbar", "gamma"};
  for (int trial = 0; trial < 300; ++trial) {
    RatSymbol f = moyal::testing::random_ratsymbol(rng, vars, 3, 2);
    const std::string text = to_plain(f);
    CHECK_MESSAGE(parse(text, {"a"}) == f, text);
  }
  CHECK(to_plain(parse("p*q - i*hbar/2")) == "p*q - (1/2)*i*hbar");
  CHECK(to_plain(RatSymbol()) == "0");
}

TEST_CASE("latex output") {
  CHECK(to_latex(parse("p/(1+gamma*p)")) == "\\frac{p}{1 + \\gamma p}");
  CHECK(to_latex(parse("hbar")) == "\\hbar");
}

TEST_CASE("json round-trip") {
  std::mt19937 rng(11);
  const std::vector<std::string> vars{"p", "q", "a", "hbar"};
  for (int trial = 0; trial < 100; ++trial) {
    RatSymbol f = moyal::testing::random_ratsymbol(rng, vars, 3, 2);
    auto j = to_json(f);
    CHECK(ratsymbol_from_json(nlohmann::json::parse(j.dump())) == f);
  }
  CHECK_THROWS_AS(ratsymbol_from_json(nlohmann::json::parse(R"({"num": 3})")), Error);
  CHECK_THROWS_AS(poly_from_json(nlohmann::json::parse(R"({"vars":["p"],"terms":[{"coeff":{"re":"1/0","im":"0"},"exps":[1]}]})")),
                  Error);
}

TEST_CASE("leading zeros are decimal") {
  CHECK(parse("010") == RatSymbol(10));
  CHECK(parse("09*p") == parse("9*p"));
  CHECK(parse("p^010") == parse("p^10"));
}
