#include <random>

#include "doctest.h"
#include "moyal/errors.hpp"
#include "moyal/format.hpp"
#include "moyal/parser.hpp"
#include "moyal/star.hpp"
#include "random_symbols.hpp"

using namespace moyal;
using moyal::testing::random_pq_poly;

namespace {

const RatSymbol ihbar = parse("i*hbar");

RatSymbol at_hbar_zero(const RatSymbol& f) { return f.substitute("hbar", RatSymbol()); }

}  // namespace

TEST_CASE("canonical commutation") {
  CHECK(to_plain(star_product(parse("p"), parse("q"))) == "p*q - (1/2)*i*hbar");
  CHECK(moyal_bracket(parse("p"), parse("q")) == -ihbar);
  CHECK(moyal_bracket(parse("q"), parse("p")) == ihbar);
  CHECK(poisson_bracket(parse("q"), parse("p")) == RatSymbol(1));
}

TEST_CASE("frozen values") {
  CHECK(bidiff_power(parse("p^2"), parse("q^2"), 2) == RatSymbol(4));
  CHECK(moyal_bracket(parse("p*q"), parse("p^2*q")) == ihbar * parse("p^2*q"));
  CHECK(star_product(parse("p^2"), parse("q^2")) == parse("p^2*q^2 - 2*i*hbar*p*q - hbar^2/2"));
  CHECK(pq_degree(parse("p^3*q + a*q", {"a"})) == 4u);
  CHECK(!pq_degree(parse("1/p")).has_value());
}

TEST_CASE("associativity on random polynomials") {
  std::mt19937 rng(42);
  for (int trial = 0; trial < 50; ++trial) {
    RatSymbol f = random_pq_poly(rng, 3, 4), g = random_pq_poly(rng, 3, 4), h = random_pq_poly(rng, 2, 4);
    CHECK(star_product(star_product(f, g), h) == star_product(f, star_product(g, h)));
  }
}

TEST_CASE("Jacobi identity for the Moyal bracket") {
  std::mt19937 rng(43);
  for (int trial = 0; trial < 20; ++trial) {
    RatSymbol f = random_pq_poly(rng, 3, 3), g = random_pq_poly(rng, 3, 3), h = random_pq_poly(rng, 3, 3);
    RatSymbol total = moyal_bracket(f, moyal_bracket(g, h)) + moyal_bracket(g, moyal_bracket(h, f)) +
                      moyal_bracket(h, moyal_bracket(f, g));
    CHECK(total.is_zero());
  }
}

TEST_CASE("Leibniz rule and antisymmetry") {
  std::mt19937 rng(44);
  for (int trial = 0; trial < 20; ++trial) {
    RatSymbol f = random_pq_poly(rng, 3, 3), g = random_pq_poly(rng, 3, 3), h = random_pq_poly(rng, 3, 3);
    CHECK(moyal_bracket(f, star_product(g, h)) ==
          star_product(moyal_bracket(f, g), h) + star_product(g, moyal_bracket(f, h)));
    CHECK(moyal_bracket(f, g) == -moyal_bracket(g, f));
    CHECK(poisson_bracket(f, g * h) == poisson_bracket(f, g) * h + g * poisson_bracket(f, h));
  }
}

TEST_CASE("classical limit") {
  std::mt19937 rng(45);
  for (int trial = 0; trial < 20; ++trial) {
    RatSymbol f = random_pq_poly(rng, 4, 4), g = random_pq_poly(rng, 4, 4);
    CHECK(at_hbar_zero(star_product(f, g)) == f * g);
    RatSymbol reduced = moyal_bracket(f, g) / ihbar;
    CHECK(at_hbar_zero(reduced) == poisson_bracket(f, g));
  }
}

TEST_CASE("truncation and non-terminating series") {
  RatSymbol f = parse("1/(1+gamma*p)");
  RatSymbol g = parse("1/(1+gamma*q)");
  CHECK_THROWS_AS(star_product(f, g), Error);
  RatSymbol t0 = star_product(f, g, 0u);
  CHECK(t0 == f * g);
  RatSymbol t1 = star_product(f, g, 1u);
  CHECK(t1 - t0 == (ihbar / RatSymbol(2)) * bidiff_power(f, g, 1));
  // One polynomial operand terminates the series structurally.
  CHECK_NOTHROW(star_product(f, parse("q^2")));
}

TEST_CASE("canonical pair check") {
  BracketReport r = check_canonical_pair(parse("p/(1+gamma*p)"), parse("q*(1+gamma*p)^2"), 2, 8u);
  CHECK(r.is_canonical);
  CHECK(r.poisson == RatSymbol(-1));
  CHECK(!r.first_nonvanishing_correction.has_value());
  REQUIRE(r.moyal_terms.size() == 3);
  CHECK(r.moyal_terms[0].second == -ihbar);
  CHECK(r.moyal_terms[1].second.is_zero());
  CHECK(r.moyal_terms[2].second.is_zero());

  BracketReport exact = check_canonical_pair(parse("p/(1+gamma*p)"), parse("q*(1+gamma*p)^2"), 2);
  CHECK(exact.is_canonical);

  BracketReport cubic = check_canonical_pair(parse("p"), parse("q + p^2*q^2"), 2);
  CHECK(!cubic.is_canonical);

  BracketReport corrected = check_canonical_pair(parse("p + q^3"), parse("q + p^3"), 2);
  CHECK(!corrected.is_canonical);

  BracketReport linear = check_canonical_pair(parse("2*p + q"), parse("p + q"), 2);
  CHECK(linear.is_canonical);

  CHECK_THROWS_AS(check_canonical_pair(parse("p + hbar"), parse("q"), 2), Error);
}

TEST_CASE("series star product agrees with expanded rational one") {
  RatSymbol f = parse("p/(1+gamma*p)");
  RatSymbol g = parse("q*(1+gamma*p)^2");
  GammaSeries lhs = star_product(series_expand(f, 5), series_expand(g, 5));
  CHECK(lhs == series_expand(star_product(f, g), 5));
}
