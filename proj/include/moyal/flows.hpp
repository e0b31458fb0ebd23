#pragma once

#include <cstdint>
#include <string_view>

#include "moyal/weyl.hpp"

namespace moyal {

struct FlowResult {
  GammaSeries series;
  DiffOperator generator;
  bool hbar_free = false;
};

/// Σ_{n≤order} (sign·iγ/ħ)^n / n! · V^n f. V and f must be free of γ.
/// Throws ResidualHbarPole if a coefficient keeps ħ in its denominator.
FlowResult flow(const DiffOperator& V, const RatSymbol& f, std::uint32_t order, int sign);

/// The same sum with the flow parameter named `param` instead of γ,
/// returned as a polynomial in that parameter.
RatSymbol flow_polynomial(const DiffOperator& V, const RatSymbol& f, std::uint32_t order, int sign,
                          std::string_view param);

/// series_expand(closed, order) agrees with the flow term by term.
bool compare_closed_form(const FlowResult& result, const RatSymbol& closed);

/// P^m Q^n − p^m q^n.
GammaSeries flow_invariant(const GammaSeries& P, const GammaSeries& Q, unsigned m, unsigned n);

}  // namespace moyal
