#include <random>

#include "doctest.h"
#include "moyal/errors.hpp"
#include "moyal/parser.hpp"
#include "moyal/star.hpp"
#include "moyal/weyl.hpp"
#include "random_symbols.hpp"

using namespace moyal;
using moyal::testing::random_pq_poly;

// Left shifts act on symbols as f -> f * v, right shifts as f -> v * f.
TEST_CASE("Bopp shifts realize star multiplication") {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 20; ++trial) {
    RatSymbol f = random_pq_poly(rng, 4);
    CHECK(bopp(Side::Left, "p").apply(f) == star_product(f, parse("p")));
    CHECK(bopp(Side::Left, "q").apply(f) == star_product(f, parse("q")));
    CHECK(bopp(Side::Right, "p").apply(f) == star_product(parse("p"), f));
    CHECK(bopp(Side::Right, "q").apply(f) == star_product(parse("q"), f));
  }
  CHECK_THROWS_AS(bopp(Side::Left, "x"), Error);
}

TEST_CASE("Bopp operator commutators") {
  const DiffOperator ihbar = DiffOperator::multiplication(parse("i*hbar"));
  CHECK(operator_commutator(bopp(Side::Left, "p"), bopp(Side::Left, "q")) == ihbar);
  CHECK(operator_commutator(bopp(Side::Right, "p"), bopp(Side::Right, "q")) == -ihbar);
  CHECK(operator_commutator(bopp(Side::Left, "p"), bopp(Side::Right, "q")).is_zero());
  CHECK(operator_commutator(bopp(Side::Left, "q"), bopp(Side::Right, "p")).is_zero());
}

TEST_CASE("composition is associative and distributes") {
  DiffOperator a = DiffOperator::derivative(1, 0, parse("q"));
  DiffOperator b = DiffOperator::derivative(0, 2, parse("p^2"));
  DiffOperator c = DiffOperator::multiplication(parse("p*q + 1"));
  CHECK(compose(compose(a, b), c) == compose(a, compose(b, c)));
  CHECK(compose(a, b + c) == compose(a, b) + compose(a, c));
  std::mt19937 rng(6);
  for (int trial = 0; trial < 10; ++trial) {
    RatSymbol f = random_pq_poly(rng, 5);
    CHECK(apply(compose(a, b), f) == apply(a, apply(b, f)));
    CHECK(apply(b.pow(2), f) == apply(b, apply(b, f)));
  }
  CHECK(DiffOperator::identity().order() == 0);
  CHECK(b.order() == 2);
}

TEST_CASE("S_{2,1} normal form") {
  DiffOperator expected = DiffOperator::derivative(0, 1, parse("2*i*hbar*p*q")) +
                          DiffOperator::derivative(1, 0, parse("-i*hbar*p^2")) +
                          DiffOperator::derivative(1, 2, parse("i*hbar^3/4"));
  CHECK(image_of_monomial(2, 1) == expected);
  CHECK(image_of_monomial(1, 0) == DiffOperator::derivative(0, 1, parse("i*hbar")));
  CHECK(image_of_monomial(0, 1) == DiffOperator::derivative(1, 0, parse("-i*hbar")));
  CHECK(image_of_monomial(0, 0).is_zero());
}

TEST_CASE("S_{m,n} acts as the Moyal bracket with p^m q^n") {
  std::mt19937 rng(7);
  for (unsigned m = 0; m <= 6; ++m)
    for (unsigned n = 0; m + n <= 6; ++n) {
      RatSymbol mono = RatSymbol(Poly::variable("p", m) * Poly::variable("q", n));
      DiffOperator S = image_of_monomial(m, n);
      for (int trial = 0; trial < 3; ++trial) {
        RatSymbol f = random_pq_poly(rng, 5);
        CHECK(S.apply(f) == moyal_bracket(f, mono));
      }
    }
}

TEST_CASE("Lie vector is linear in the generator") {
  using Coeffs = std::map<GeneratorExpansion::Key, RatSymbol>;
  GeneratorExpansion a(Coeffs{{{2, 1}, parse("1")}, {{0, 2}, parse("b", {"b"})}});
  GeneratorExpansion b(Coeffs{{{1, 1}, parse("3")}});
  CHECK(moyal_lie_vector(a + b) == moyal_lie_vector(a) + moyal_lie_vector(b));
  CHECK(moyal_lie_vector(a.scaled(parse("2"))) == moyal_lie_vector(a).scaled(parse("2")));
  CHECK(a.symbol() == parse("p^2*q + b*q^2", {"b"}));
  GeneratorExpansion back = generator_from_symbol(parse("p^2*q + b*q^2", {"b"}));
  CHECK(back.symbol() == a.symbol());
  CHECK_THROWS_AS(generator_from_symbol(parse("1/p")), Error);
}

TEST_CASE("anti-homomorphism") {
  const char* basis[] = {"p^2", "q^2", "p*q", "p^2*q", "p*q^2"};
  for (const char* x : basis)
    for (const char* y : basis) {
      RatSymbol A = parse(x), B = parse(y);
      DiffOperator VA = moyal_lie_vector(generator_from_symbol(A));
      DiffOperator VB = moyal_lie_vector(generator_from_symbol(B));
      DiffOperator Vbr = moyal_lie_vector(generator_from_symbol(moyal_bracket(A, B)));
      CHECK(Vbr == -operator_commutator(VA, VB));
    }
}

TEST_CASE("operator words") {
  CHECK(weyl_symbol_of_word("pq") == parse("p*q - i*hbar/2"));
  CHECK(weyl_symbol_of_word("qp") == parse("p*q + i*hbar/2"));
  CHECK((weyl_symbol_of_word("pq") + weyl_symbol_of_word("qp")) / RatSymbol(2) == parse("p*q"));
  CHECK(weyl_symbol_of_word("pqp") == parse("p^2*q"));
  CHECK(weyl_symbol_of_word("") == RatSymbol(1));
  CHECK_THROWS_AS(weyl_symbol_of_word("px"), Error);
}
