#include <random>

#include "doctest.h"
#include "moyal/errors.hpp"
#include "moyal/exp_symbol.hpp"
#include "moyal/gamma_series.hpp"
#include "random_symbols.hpp"

using namespace moyal;
using moyal::testing::random_poly;
using moyal::testing::random_ratsymbol;

namespace {
const Poly p = Poly::variable("p");
const Poly q = Poly::variable("q");
const Poly g = Poly::variable("gamma");
const Poly a = Poly::variable("a");
}  // namespace

TEST_CASE("gaussian rationals") {
  GaussianRational x(mpq_class(1, 2), mpq_class(-3, 4));
  CHECK(x * x.inverse() == GaussianRational(1));
  CHECK(GaussianRational::i().pow(2) == GaussianRational(-1));
  CHECK(GaussianRational::i().pow(4) == GaussianRational(1));
  CHECK((x + x.conj()).is_real());
  CHECK((x - x.conj()).is_imaginary());
  CHECK_THROWS_AS(GaussianRational(0).inverse(), Error);
  CHECK(GaussianRational::from_strings("6/8", "-2") == GaussianRational(mpq_class(3, 4), -2));
}

TEST_CASE("ring axioms on random polynomials") {
  std::mt19937 rng(1234);
  const std::vector<std::string> vars{"p", "q", "a", "hbar"};
  for (int trial = 0; trial < 60; ++trial) {
    Poly x = random_poly(rng, vars, 3), y = random_poly(rng, vars, 3), z = random_poly(rng, vars, 3);
    CHECK(x + y == y + x);
    CHECK(x * y == y * x);
    CHECK((x * y) * z == x * (y * z));
    CHECK(x * (y + z) == x * y + x * z);
    CHECK((x - x).is_zero());
    CHECK((x * y).derivative("p") == x.derivative("p") * y + x * y.derivative("p"));
  }
}

TEST_CASE("exact division and gcd") {
  std::mt19937 rng(99);
  const std::vector<std::string> vars{"p", "q", "gamma"};
  for (int trial = 0; trial < 30; ++trial) {
    Poly f = random_poly(rng, vars, 2, 4), h = random_poly(rng, vars, 2, 4), c = random_poly(rng, vars, 2, 3);
    if (c.is_zero() || c.is_constant()) continue;
    auto quotient = (f * c).divide_exact(c);
    REQUIRE(quotient.has_value());
    CHECK(*quotient == f);
    Poly d = gcd(f * c, h * c);
    CHECK((d).divide_exact(c.monic()).has_value());
  }
  CHECK(gcd(p * p - q * q, p + q) == (p + q).monic());
  CHECK(gcd(p, q).is_one());
  CHECK(gcd(Poly(), p * q) == (p * q).monic());
}

TEST_CASE("rational functions normalize") {
  auto r = RatSymbol::normalized((Poly(1) + g * p).pow(3) * q, Poly(1) + g * p);
  CHECK(r == RatSymbol(q * (Poly(1) + g * p).pow(2)));
  CHECK(r.is_polynomial());

  auto d = RatSymbol::normalized(p, Poly(1) + g * p).derivative("p");
  CHECK(d == RatSymbol::normalized(Poly(1), (Poly(1) + g * p).pow(2)));

  // Denominator made monic: p/(2q) has den q.
  auto half = RatSymbol::normalized(p, q.scaled(2));
  CHECK(half.den() == q);
  CHECK(half.num() == p.scaled(GaussianRational(mpq_class(1, 2))));

  CHECK_THROWS_AS(RatSymbol::normalized(p, Poly()), Error);
  CHECK_THROWS_AS(RatSymbol(p) / RatSymbol(), Error);
}

TEST_CASE("field axioms on random rational functions") {
  std::mt19937 rng(7);
  const std::vector<std::string> vars{"p", "q", "a"};
  for (int trial = 0; trial < 25; ++trial) {
    RatSymbol x = random_ratsymbol(rng, vars, 2, 1), y = random_ratsymbol(rng, vars, 2, 1);
    RatSymbol z = random_ratsymbol(rng, vars, 1, 1);
    CHECK(x + y == y + x);
    CHECK((x + y) * z == x * z + y * z);
    if (!y.is_zero()) CHECK((x / y) * y == x);
    CHECK((x * y).derivative("q") == x.derivative("q") * y + x * y.derivative("q"));
    CHECK(x.conj().conj() == x);
  }
}

TEST_CASE("substitution") {
  RatSymbol f = RatSymbol::normalized(a * p + q, a);
  CHECK(f.substitute("a", RatSymbol(2)) == RatSymbol((p.scaled(2) + q).scaled(GaussianRational(mpq_class(1, 2)))));
  RatSymbol inv = RatSymbol::normalized(Poly(1), q);
  CHECK(f.substitute("a", inv) == RatSymbol(p) + RatSymbol(q * q));
}

TEST_CASE("gamma series") {
  RatSymbol f = RatSymbol::normalized(p, Poly(1) + g * p);
  GammaSeries s = series_expand(f, 3);
  REQUIRE(s.order() == 3);
  CHECK(s[0] == RatSymbol(p));
  CHECK(s[1] == RatSymbol(-p * p));
  CHECK(s[2] == RatSymbol(p.pow(3)));
  CHECK(s[3] == RatSymbol(-p.pow(4)));

  GammaSeries one_plus = GammaSeries::from_polynomial_in_gamma(RatSymbol(Poly(1) + g * p), 3);
  CHECK((s * one_plus) == GammaSeries::from_polynomial_in_gamma(RatSymbol(p), 3));
  CHECK(s.truncated(1).order() == 1);
  CHECK_THROWS_AS(series_expand(RatSymbol::normalized(p, g), 2), Error);
  try {
    series_expand(RatSymbol::normalized(p, g * q), 2);
  } catch (const Error& e) {
    CHECK(e.code() == Errc::NotGammaAdicUnit);
  }
}

TEST_CASE("prefactor canonical form") {
  RatSymbol c = RatSymbol::variable("c");
  Prefactor x = Prefactor::sqrt_of(c) * Prefactor::sqrt_of(c);
  CHECK(x == Prefactor(c));
  Prefactor y = Prefactor::sqrt_of(RatSymbol(8));
  CHECK(y.numeric_radicand() == 2);
  CHECK(y.rational_part() == RatSymbol(2));
  CHECK(Prefactor::phase(4) == Prefactor(RatSymbol(-1)));
  CHECK(Prefactor::phase(2) == Prefactor(RatSymbol::imaginary_unit()));
  CHECK(Prefactor::two_pi_hbar(1) * Prefactor::two_pi_hbar(-1) == Prefactor());
}

TEST_CASE("exponential symbols") {
  RatSymbol e = RatSymbol::normalized(Poly(GaussianRational::i()) * p * p, Poly::variable("hbar"));
  ExpSymbol u(Prefactor{}, e);
  ExpSymbol du = u.derivative("p");
  CHECK(du.exponent() == e);
  CHECK(du.rational_part() == e.derivative("p"));
  CHECK(u.times(RatSymbol()).is_zero());
  CHECK(((u + u) - u.times(RatSymbol(2))).is_zero());
  ExpSymbol v(Prefactor{}, RatSymbol(q));
  CHECK_THROWS_AS(u + v, Error);
  CHECK((u * u).exponent() == e + e);
}
