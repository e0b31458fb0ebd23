#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "moyal/rat_symbol.hpp"

namespace moyal {

/// Truncated power series c_0 + c_1 γ + ... + c_N γ^N.
///
/// Coefficients are γ-free rational functions (usually polynomials). All
/// arithmetic drops terms beyond γ^N; binary operations on series of
/// different order truncate to the smaller one.
class GammaSeries {
 public:
  GammaSeries() : coeffs_(1) {}
  explicit GammaSeries(std::uint32_t order) : coeffs_(order + 1) {}
  GammaSeries(std::uint32_t order, std::vector<RatSymbol> coeffs);

  /// Promotes a rational function whose denominator is free of γ.
  static GammaSeries from_polynomial_in_gamma(const RatSymbol& f, std::uint32_t order);

  std::uint32_t order() const noexcept { return static_cast<std::uint32_t>(coeffs_.size() - 1); }
  const std::vector<RatSymbol>& coeffs() const noexcept { return coeffs_; }
  const RatSymbol& operator[](std::size_t k) const { return coeffs_.at(k); }

  bool is_zero() const noexcept;
  bool depends_on(std::string_view name) const noexcept;

  friend GammaSeries operator+(const GammaSeries& a, const GammaSeries& b);
  friend GammaSeries operator-(const GammaSeries& a, const GammaSeries& b);
  friend GammaSeries operator*(const GammaSeries& a, const GammaSeries& b);
  friend GammaSeries operator-(const GammaSeries& a);
  friend bool operator==(const GammaSeries& a, const GammaSeries& b) { return a.coeffs_ == b.coeffs_; }
  friend bool operator!=(const GammaSeries& a, const GammaSeries& b) { return !(a == b); }

  GammaSeries scaled(const RatSymbol& factor) const;
  GammaSeries pow(unsigned exponent) const;
  /// Coefficient-wise derivative in a variable other than γ.
  GammaSeries derivative(std::string_view name) const;
  GammaSeries map(const std::function<RatSymbol(const RatSymbol&)>& fn) const;
  GammaSeries truncated(std::uint32_t order) const;

  /// Σ c_k γ^k as a rational function.
  RatSymbol to_ratsymbol() const;

 private:
  std::vector<RatSymbol> coeffs_;
};

/// Taylor expansion about γ = 0 through γ^order.
/// Throws Error(NotGammaAdicUnit) when den(f) vanishes at γ = 0.
GammaSeries series_expand(const RatSymbol& f, std::uint32_t order);

}  // namespace moyal
