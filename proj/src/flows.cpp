#include "moyal/flows.hpp"

#include <vector>

#include "moyal/errors.hpp"

namespace moyal {

namespace {

std::vector<RatSymbol> flow_coefficients(const DiffOperator& V, const RatSymbol& f, std::uint32_t order,
                                         int sign) {
  if (sign != 1 && sign != -1) throw Error(Errc::InvalidArgument, "flow sign must be +1 or -1");
  if (V.depends_on(kGamma) || f.depends_on(kGamma))
    throw Error(Errc::InvalidArgument, "flow generator and initial symbol must be free of gamma");
  const RatSymbol step = RatSymbol::normalized(Poly(GaussianRational(0, sign)), Poly::variable(kHbar));
  std::vector<RatSymbol> coeffs;
  RatSymbol vn = f;      // V^n f
  RatSymbol factor(1);   // (sign i/ħ)^n / n!
  for (std::uint32_t n = 0; n <= order; ++n) {
    if (n > 0) {
      vn = V.apply(vn);
      factor = (factor * step).scaled(GaussianRational(mpq_class(1, n)));
    }
    RatSymbol c = vn * factor;
    if (c.den().has_var(kHbar))
      throw Error(Errc::ResidualHbarPole, "flow coefficient of order " + std::to_string(n) + " keeps 1/hbar");
    coeffs.push_back(std::move(c));
  }
  return coeffs;
}

}  // namespace

FlowResult flow(const DiffOperator& V, const RatSymbol& f, std::uint32_t order, int sign) {
  auto coeffs = flow_coefficients(V, f, order, sign);
  FlowResult r{GammaSeries(order, std::move(coeffs)), V, true};
  r.hbar_free = !r.series.depends_on(kHbar);
  return r;
}

RatSymbol flow_polynomial(const DiffOperator& V, const RatSymbol& f, std::uint32_t order, int sign,
                          std::string_view param) {
  auto coeffs = flow_coefficients(V, f, order, sign);
  RatSymbol out;
  for (std::uint32_t n = 0; n < coeffs.size(); ++n) out += coeffs[n] * RatSymbol(Poly::variable(param, n));
  return out;
}

bool compare_closed_form(const FlowResult& result, const RatSymbol& closed) {
  return series_expand(closed, result.series.order()) == result.series;
}

GammaSeries flow_invariant(const GammaSeries& P, const GammaSeries& Q, unsigned m, unsigned n) {
  const std::uint32_t order = std::min(P.order(), Q.order());
  GammaSeries base = GammaSeries::from_polynomial_in_gamma(
      RatSymbol(Poly::variable(kP, m) * Poly::variable(kQ, n)), order);
  return P.pow(m) * Q.pow(n) - base;
}

}  // namespace moyal
