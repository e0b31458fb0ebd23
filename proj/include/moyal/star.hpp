#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "moyal/exp_symbol.hpp"
#include "moyal/gamma_series.hpp"

namespace moyal {

// Convention: D = (←∂_q)(→∂_p) − (←∂_p)(→∂_q), so {q, p} = 1 and a canonical
// pair has {P, Q} = −1. The star product is f exp((iħ/2) D) g.

/// Total degree in (p, q) when f is polynomial in p and q, else nullopt.
std::optional<unsigned> pq_degree(const RatSymbol& f);

RatSymbol poisson_bracket(const RatSymbol& f, const RatSymbol& g);
GammaSeries poisson_bracket(const GammaSeries& f, const GammaSeries& g);

/// f D^n g by the binomial rule.
RatSymbol bidiff_power(const RatSymbol& f, const RatSymbol& g, unsigned n);
GammaSeries bidiff_power(const GammaSeries& f, const GammaSeries& g, unsigned n);

/// Sums the exponential series through ħ^truncation. Without a truncation the
/// series must terminate structurally: one operand polynomial in (p, q)
/// (for ExpSymbol operands, the other one). Throws NonTerminatingSeries.
RatSymbol star_product(const RatSymbol& f, const RatSymbol& g, std::optional<unsigned> truncation = {});
GammaSeries star_product(const GammaSeries& f, const GammaSeries& g, std::optional<unsigned> truncation = {});
ExpSymbol star_product(const ExpSymbol& u, const RatSymbol& g, std::optional<unsigned> truncation = {});
ExpSymbol star_product(const RatSymbol& f, const ExpSymbol& u, std::optional<unsigned> truncation = {});

/// f ⋆ g − g ⋆ f.
RatSymbol moyal_bracket(const RatSymbol& f, const RatSymbol& g, std::optional<unsigned> truncation = {});
GammaSeries moyal_bracket(const GammaSeries& f, const GammaSeries& g, std::optional<unsigned> truncation = {});
ExpSymbol moyal_bracket(const ExpSymbol& u, const RatSymbol& g, std::optional<unsigned> truncation = {});

struct BracketReport {
  RatSymbol poisson;
  /// (k, term_k) with term_k = 2 (iħ/2)^{2k+1}/(2k+1)! · P D^{2k+1} Q. For
  /// series input the term is the truncated γ-polynomial.
  std::vector<std::pair<unsigned, RatSymbol>> moyal_terms;
  bool is_canonical = false;
  std::optional<unsigned> first_nonvanishing_correction;
  std::optional<std::uint32_t> gamma_order;
};

/// Throws HbarDependentInput when P or Q depends on ħ. With gamma_order set,
/// P and Q are expanded in γ first and every term is computed on the series.
BracketReport check_canonical_pair(const RatSymbol& P, const RatSymbol& Q, unsigned k_max,
                                   std::optional<std::uint32_t> gamma_order = {});
BracketReport check_canonical_pair(const GammaSeries& P, const GammaSeries& Q, unsigned k_max);

}  // namespace moyal
