#include <functional>
#include <random>

#include "doctest.h"
#include "moyal/errors.hpp"
#include "moyal/format.hpp"
#include "moyal/genfun.hpp"
#include "moyal/parser.hpp"

using namespace moyal;

namespace {

const std::vector<std::string> abcd{"a", "b", "c", "d"};

RatSymbol P_(const char* s) { return parse(s, abcd); }

Errc code_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an error");
  return Errc::InvalidArgument;
}

RatSymbol random_rational(std::mt19937& rng) {
  std::uniform_int_distribution<int> num(-6, 6), den(1, 5);
  int n = 0;
  while (n == 0) n = num(rng);
  return RatSymbol(GaussianRational(mpq_class(n, den(rng))));
}

}  // namespace

TEST_CASE("identity") {
  CanonicalPair id = CanonicalPair::identity();
  GenfunReport r = genfun_pipeline(id);
  CHECK(r.T.is_zero());
  CHECK(r.hbar_independent);
  CHECK(r.residual_Q.is_zero());
  CHECK(r.residual_P.is_zero());
  Kernel k = kernel_transform(r.u, KernelKind::Position);
  REQUIRE(k.delta.has_value());
  CHECK(*k.delta == parse("x - y", {"x", "y"}));
  CHECK(k.body.prefactor().is_one());
}

TEST_CASE("linear potential") {
  CanonicalPair ct(P_("p"), P_("q + a*p^2"));
  auto [gp, gq] = gradient_T(ct);
  CHECK(gp == P_("-a*p^2/2"));
  CHECK(gq.is_zero());
  RatSymbol T = integrate_gradient(gp, gq);
  CHECK(T == P_("-a*p^3/6"));
  ExpSymbol u = build_u(T);
  CHECK(to_plain(u) == "exp(-(1/3)*i*a*p^3/hbar)");
  auto [rq, rp] = star_eigen_residuals(u, ct);
  CHECK(rq.is_zero());
  CHECK(rp.is_zero());
  CHECK(covariance_condition_check(u, ct));

  Kernel mixed = kernel_transform(u, KernelKind::Mixed);
  CHECK(!mixed.delta.has_value());
  RatSymbol F = extract_generating_function(mixed);
  CHECK(F == parse("a*p^3/3 - Q*p", {"a", "Q"}));
  CHECK(classical_genfun_check(F, KernelKind::Mixed, ct));
  CHECK(code_of([&] { kernel_transform(u, KernelKind::Position); }) == Errc::UnsupportedExponentDegree);
}

TEST_CASE("symbolic SL2") {
  Relation rel = ParameterRelation::sl2_solve_d();
  CanonicalPair ct = CanonicalPair::linear(P_("a"), P_("b"), P_("c"), P_("d"));
  CHECK(ct.is_canonical(rel));
  CHECK(!ct.is_canonical());
  GenfunReport r = genfun_pipeline(ct, rel);
  RatSymbol expected = reduce(P_("-(c*p^2 - b*q^2 - (a-d)*p*q)/(a+d+2)"), rel);
  CHECK(r.T == expected);
  CHECK(r.hbar_independent);

  ExpSymbol u = reduce(sl2_u(P_("a"), P_("b"), P_("c"), P_("d")), rel);
  auto [rq, rp] = star_eigen_residuals(u, ct, rel);
  CHECK(rq.is_zero());
  CHECK(rp.is_zero());
  CHECK(covariance_condition_check(u, ct, rel));

  Kernel k = kernel_transform(u, KernelKind::Position, rel);
  Prefactor pre = Prefactor::sqrt_of(P_("c"), -1) * Prefactor::phase(-1) * Prefactor::two_pi_hbar(-1);
  CHECK(k.body.prefactor() == pre);
  CHECK(classical_genfun_check(k, ct, rel));
  Kernel mixed = kernel_transform(u, KernelKind::Mixed, rel);
  CHECK(classical_genfun_check(mixed, ct, rel));
}

TEST_CASE("random rational SL2 instances") {
  std::mt19937 rng(2718);
  int done = 0;
  while (done < 20) {
    RatSymbol a = random_rational(rng), b = random_rational(rng), c = random_rational(rng);
    RatSymbol d = (RatSymbol(1) + b * c) / a;
    if ((a + d + RatSymbol(2)).is_zero()) continue;
    CanonicalPair ct = CanonicalPair::linear(a, b, c, d);
    REQUIRE(ct.is_canonical());
    ExpSymbol u = sl2_u(a, b, c, d);
    auto [rq, rp] = star_eigen_residuals(u, ct);
    CHECK(rq.is_zero());
    CHECK(rp.is_zero());
    Kernel k = kernel_transform(u, KernelKind::Position);
    RatSymbol F = extract_generating_function(k);
    CHECK(classical_genfun_check(F, KernelKind::Position, ct));
    GenfunReport r = genfun_pipeline(ct);
    CHECK(r.T == parse(("-(" + to_plain(c) + "*p^2 - (" + to_plain(b) + ")*q^2 - (" + to_plain(a - d) +
                        ")*p*q)/(" + to_plain(a + d + RatSymbol(2)) + ")").c_str()));
    ++done;
  }
}

TEST_CASE("quadratic shear has an exact generator") {
  CanonicalPair ct(P_("p + b*q^2"), P_("q"));
  GenfunReport r = genfun_pipeline(ct);
  CHECK(r.hbar_independent);
  CHECK(r.residual_Q.is_zero());
  CHECK(r.residual_P.is_zero());
}

TEST_CASE("inverse partials") {
  InversePartials ip = inverse_partials(CanonicalPair(P_("2*p + q"), P_("p + q")));
  CHECK(ip.p_P == RatSymbol(1));
  CHECK(ip.q_Q == RatSymbol(2));
  CHECK(ip.q_P == RatSymbol(-1));
  CHECK(ip.p_Q == RatSymbol(-1));
}

TEST_CASE("the gamma pair has no exact gradient") {
  CanonicalPair ct(parse("p/(1+gamma*p)"), parse("q*(1+gamma*p)^2"));
  CHECK(ct.is_canonical());
  CHECK(code_of([&] { genfun_pipeline(ct); }) == Errc::ExactnessFailure);
}

TEST_CASE("error conditions") {
  CHECK(code_of([] { CanonicalPair(parse("p + hbar"), parse("q")); }) == Errc::HbarDependentInput);
  CHECK(code_of([] { gradient_T(CanonicalPair(parse("2*p"), parse("q"))); }) == Errc::NotCanonical);
  CHECK(code_of([] { gradient_T(CanonicalPair(parse("-p"), parse("-q"))); }) == Errc::SingularDenominator);
  CHECK(code_of([] { sl2_u(RatSymbol(-1), RatSymbol(), RatSymbol(), RatSymbol(-1)); }) ==
        Errc::TracePlusTwoSingular);
  CHECK(code_of([] { build_u(parse("hbar*p")); }) == Errc::HbarDependentT);
  CHECK(code_of([] { integrate_gradient(parse("q"), parse("0")); }) == Errc::ExactnessFailure);
  CHECK(code_of([] { integrate_gradient(parse("1/p"), parse("0")); }) == Errc::NonPolynomialAntiderivative);
  CHECK(code_of([] { kernel_kind_from_string("sideways"); }) == Errc::InvalidArgument);
  Kernel bad{KernelKind::Position, ExpSymbol(Prefactor(), parse("x*y", {"x", "y"})), std::nullopt};
  CHECK(code_of([&] { extract_generating_function(bad); }) == Errc::HbarResidue);
}

TEST_CASE("kernel kinds round-trip by name") {
  for (KernelKind k : {KernelKind::Position, KernelKind::Mixed, KernelKind::Momentum, KernelKind::Mixed2})
    CHECK(kernel_kind_from_string(kernel_kind_name(k)) == k);
}

TEST_CASE("momentum kernels of a numeric rotation") {
  CanonicalPair ct = CanonicalPair::linear(RatSymbol(2), RatSymbol(1), RatSymbol(1), RatSymbol(1));
  ExpSymbol u = sl2_u(RatSymbol(2), RatSymbol(1), RatSymbol(1), RatSymbol(1));
  for (KernelKind kind : {KernelKind::Momentum, KernelKind::Mixed2}) {
    Kernel k = kernel_transform(u, kind);
    CHECK(!k.delta.has_value());
    RatSymbol F = extract_generating_function(k);
    CHECK(!F.depends_on("hbar"));
    CHECK(code_of([&] { classical_genfun_check(F, kind, ct); }) == Errc::InvalidArgument);
  }
}
