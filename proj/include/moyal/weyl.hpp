#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "moyal/exp_symbol.hpp"
#include "moyal/gamma_series.hpp"

namespace moyal {

/// Σ c_{j,k}(p,q,...) ∂_p^j ∂_q^k with every derivative to the right of its
/// coefficient. Zero coefficients are never stored, so equality of normal
/// forms is equality of operators.
class DiffOperator {
 public:
  using Orders = std::pair<unsigned, unsigned>;  // (j, k): ∂_p^j ∂_q^k
  using TermMap = std::map<Orders, RatSymbol>;

  DiffOperator() = default;
  /// Multiplication by f.
  static DiffOperator multiplication(const RatSymbol& f);
  static DiffOperator identity() { return multiplication(RatSymbol(1)); }
  /// c ∂_p^j ∂_q^k.
  static DiffOperator derivative(unsigned j, unsigned k, const RatSymbol& c = RatSymbol(1));

  const TermMap& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  /// Highest total derivative order.
  unsigned order() const noexcept;
  bool depends_on(std::string_view name) const noexcept;

  friend DiffOperator operator+(const DiffOperator& a, const DiffOperator& b);
  friend DiffOperator operator-(const DiffOperator& a, const DiffOperator& b);
  friend DiffOperator operator-(const DiffOperator& a) { return a.scaled(RatSymbol(-1)); }
  /// Operator composition a ∘ b.
  friend DiffOperator operator*(const DiffOperator& a, const DiffOperator& b);
  friend bool operator==(const DiffOperator& a, const DiffOperator& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const DiffOperator& a, const DiffOperator& b) { return !(a == b); }

  /// Left multiplication of every coefficient by a scalar function.
  DiffOperator scaled(const RatSymbol& c) const;
  DiffOperator pow(unsigned n) const;

  RatSymbol apply(const RatSymbol& f) const;
  GammaSeries apply(const GammaSeries& f) const;
  ExpSymbol apply(const ExpSymbol& u) const;

 private:
  void add_term(const Orders& o, const RatSymbol& c);
  TermMap terms_;
};

enum class Side { Left, Right };

/// p_L = p + (iħ/2)∂_q, p_R = p − (iħ/2)∂_q, q_L = q − (iħ/2)∂_p, q_R = q + (iħ/2)∂_p.
/// On symbols p_L f = f ⋆ p and p_R f = p ⋆ f, likewise for q.
DiffOperator bopp(Side side, std::string_view var);

DiffOperator compose(const DiffOperator& a, const DiffOperator& b);
DiffOperator operator_commutator(const DiffOperator& a, const DiffOperator& b);

RatSymbol apply(const DiffOperator& a, const RatSymbol& f);
GammaSeries apply(const DiffOperator& a, const GammaSeries& f);
ExpSymbol apply(const DiffOperator& a, const ExpSymbol& u);

/// Image S_{m,n} of the symmetrically ordered monomial t_{m,n}: the Weyl
/// symmetrization of p^m q^n built from left Bopp operators minus the same
/// built from right ones. Acting on a symbol f it gives f ⋆ p^m q^n − p^m q^n ⋆ f.
DiffOperator image_of_monomial(unsigned m, unsigned n);

/// A = Σ a_{m,n} t_{m,n}. Coefficients may be parameters or ħ, never p or q.
class GeneratorExpansion {
 public:
  using Key = std::pair<unsigned, unsigned>;

  GeneratorExpansion() = default;
  explicit GeneratorExpansion(std::map<Key, RatSymbol> coeffs);

  const std::map<Key, RatSymbol>& coeffs() const noexcept { return coeffs_; }
  bool empty() const noexcept { return coeffs_.empty(); }

  friend GeneratorExpansion operator+(const GeneratorExpansion& a, const GeneratorExpansion& b);
  GeneratorExpansion scaled(const RatSymbol& c) const;
  /// Σ a_{m,n} p^m q^n.
  RatSymbol symbol() const;

 private:
  std::map<Key, RatSymbol> coeffs_;
};

/// Reads the polynomial coefficients of p^m q^n off a symbol polynomial in p, q.
/// Throws InvalidArgument when f is not polynomial in p and q.
GeneratorExpansion generator_from_symbol(const RatSymbol& f);

DiffOperator moyal_lie_vector(const GeneratorExpansion& a);

/// ⋆-product of the letters' symbols in order; letters are 'p' and 'q'.
RatSymbol weyl_symbol_of_word(std::string_view word);

}  // namespace moyal
