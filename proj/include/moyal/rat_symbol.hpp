#pragma once

#include <string>
#include <string_view>

#include "moyal/polynomial.hpp"

namespace moyal {

/// Normalized fraction num/den of polynomials.
///
/// Invariants: den != 0, gcd(num, den) = 1, den is monic in the lex order of
/// Poly, and a zero numerator always carries den = 1. Equal rational
/// functions therefore have identical representations.
class RatSymbol {
 public:
  RatSymbol() : den_(1) {}
  RatSymbol(Poly num) : num_(std::move(num)), den_(1) {}  // NOLINT: polynomial embedding
  RatSymbol(const GaussianRational& c) : RatSymbol(Poly(c)) {}  // NOLINT
  RatSymbol(long c) : RatSymbol(Poly(c)) {}  // NOLINT

  /// Throws Error(ZeroDenominator) when den is zero.
  static RatSymbol normalized(Poly num, Poly den);
  static RatSymbol variable(std::string_view name) { return RatSymbol(Poly::variable(name)); }
  static RatSymbol imaginary_unit() { return RatSymbol(GaussianRational::i()); }

  const Poly& num() const noexcept { return num_; }
  const Poly& den() const noexcept { return den_; }

  bool is_zero() const noexcept { return num_.is_zero(); }
  bool is_polynomial() const noexcept { return den_.is_one(); }
  bool is_constant() const noexcept { return num_.is_constant() && den_.is_constant(); }
  GaussianRational constant_value() const;
  bool depends_on(std::string_view name) const noexcept {
    return num_.has_var(name) || den_.has_var(name);
  }
  /// Union of the variables of numerator and denominator, canonical order.
  std::vector<std::string> variables() const;

  RatSymbol& operator+=(const RatSymbol& rhs) { return *this = *this + rhs; }
  RatSymbol& operator-=(const RatSymbol& rhs) { return *this = *this - rhs; }
  RatSymbol& operator*=(const RatSymbol& rhs) { return *this = *this * rhs; }
  RatSymbol& operator/=(const RatSymbol& rhs) { return *this = *this / rhs; }

  friend RatSymbol operator+(const RatSymbol& a, const RatSymbol& b);
  friend RatSymbol operator-(const RatSymbol& a, const RatSymbol& b);
  friend RatSymbol operator*(const RatSymbol& a, const RatSymbol& b);
  friend RatSymbol operator/(const RatSymbol& a, const RatSymbol& b);
  friend RatSymbol operator-(const RatSymbol& a) { return RatSymbol(-a.num_, a.den_); }
  friend bool operator==(const RatSymbol& a, const RatSymbol& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const RatSymbol& a, const RatSymbol& b) { return !(a == b); }

  RatSymbol scaled(const GaussianRational& c) const;
  /// Integer power; negative exponents require a nonzero base.
  RatSymbol pow(int exponent) const;
  RatSymbol derivative(std::string_view name) const;
  /// Replaces `name` by `value` everywhere.
  RatSymbol substitute(std::string_view name, const RatSymbol& value) const;
  RatSymbol conj() const { return RatSymbol(num_.conj(), den_.conj()); }

 private:
  RatSymbol(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {}

  Poly num_;
  Poly den_;
};

/// Quotient-rule derivative, normalized.
RatSymbol partial(const RatSymbol& f, std::string_view name);
/// gcd-reduced canonical fraction num/den.
RatSymbol ratfunc_normalize(const Poly& num, const Poly& den);

int compare(const RatSymbol& a, const RatSymbol& b);

}  // namespace moyal
