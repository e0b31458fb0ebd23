#include <string_view>

#include "doctest.h"
#include "moyal/errors.hpp"
#include "moyal/flows.hpp"
#include "moyal/parser.hpp"
#include "moyal/star.hpp"

using namespace moyal;

namespace {

const DiffOperator S21 = image_of_monomial(2, 1);

Poly truncated_in(const RatSymbol& f, std::uint32_t degree) {
  const std::string_view names[] = {"s", "t"};
  return f.num().truncate_total_degree(names, degree);
}

}  // namespace

TEST_CASE("flow oracle for p^2 q") {
  FlowResult P = flow(S21, parse("p"), 8, -1);
  CHECK(P.hbar_free);
  CHECK(compare_closed_form(P, parse("p/(1+gamma*p)")));
  FlowResult Q = flow(S21, parse("q"), 8, -1);
  CHECK(Q.hbar_free);
  CHECK(compare_closed_form(Q, parse("q*(1+gamma*p)^2")));
  CHECK(flow_invariant(P.series, Q.series, 2, 1).is_zero());
  CHECK(!flow_invariant(P.series, Q.series, 1, 1).is_zero());
}

TEST_CASE("frozen flow terms") {
  FlowResult P = flow(S21, parse("p"), 4, -1);
  CHECK(P.series[1] == parse("-p^2"));
  CHECK(P.series[4] == parse("p^5"));
  FlowResult Q = flow(S21, parse("q"), 4, -1);
  CHECK(Q.series[1] == parse("2*p*q"));
  CHECK(Q.series[2] == parse("p^2*q"));
  CHECK(Q.series[3].is_zero());
  FlowResult flipped = flow(S21, parse("p"), 3, 1);
  CHECK(compare_closed_form(flipped, parse("p/(1-gamma*p)")));
}

TEST_CASE("translations") {
  FlowResult r = flow(image_of_monomial(0, 1), parse("p"), 3, -1);
  CHECK(compare_closed_form(r, parse("p - gamma")));
  FlowResult s = flow(image_of_monomial(1, 0), parse("q^2"), 4, -1);
  CHECK(compare_closed_form(s, parse("(q + gamma)^2")));
}

TEST_CASE("flows preserve canonicality") {
  const char* generators[] = {"p^2*q", "p*q^2", "p^3", "p*q"};
  for (const char* g : generators) {
    DiffOperator V = moyal_lie_vector(generator_from_symbol(parse(g)));
    FlowResult P = flow(V, parse("p"), 5, -1);
    FlowResult Q = flow(V, parse("q"), 5, -1);
    CHECK(P.hbar_free);
    CHECK(Q.hbar_free);
    BracketReport r = check_canonical_pair(P.series, Q.series, 2);
    CHECK_MESSAGE(r.is_canonical, g);
  }
}

TEST_CASE("group law") {
  const std::uint32_t N = 5;
  for (const char* f0 : {"p", "q", "p*q"}) {
    RatSymbol f = parse(f0);
    RatSymbol once = flow_polynomial(S21, f, N, -1, "s");
    RatSymbol twice = flow_polynomial(S21, once, N, -1, "t");
    RatSymbol joint = once.substitute("s", parse("s + t", {"s", "t"}));
    CHECK(truncated_in(twice, N) == truncated_in(joint, N));
  }
}

TEST_CASE("flow errors") {
  CHECK_THROWS_AS(flow(S21, parse("p"), 3, 0), Error);
  CHECK_THROWS_AS(flow(S21, parse("gamma*p"), 3, -1), Error);
  try {
    flow(DiffOperator::derivative(1, 0), parse("p"), 2, -1);
    FAIL("no throw");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::ResidualHbarPole);
  }
}
