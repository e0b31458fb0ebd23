#pragma once

#include <gmpxx.h>

#include <string_view>
#include <utility>
#include <vector>

#include "moyal/rat_symbol.hpp"

namespace moyal {

/// Constant factor in front of an exponential:
///
///   rational_part · √m · Π B_j^{±1/2} · e^{iπ·phase/4} · (2πħ)^{k/2}
///
/// Radical bases B_j are monic, pairwise coprime polynomials. Symbolic
/// bases are taken to be positive (this fixes the branch of every square
/// root, including the Gaussian-integral phases). Numeric signs are tracked
/// exactly through the phase. After canonicalization phase is 0, 1 or 7
/// (i.e. e^{0}, e^{iπ/4}, e^{-iπ/4}) and the integer m has no small square
/// factors.
class Prefactor {
 public:
  struct Radical {
    Poly base;
    int sign;  // +1 for B^{1/2}, -1 for B^{-1/2}
    friend bool operator==(const Radical&, const Radical&) = default;
  };

  Prefactor() = default;
  explicit Prefactor(RatSymbol rational) : rational_(std::move(rational)) {}

  /// base^{sign/2}.
  static Prefactor sqrt_of(const RatSymbol& base, int sign = 1);
  static Prefactor phase(int eighths);
  static Prefactor two_pi_hbar(int half_power);

  const RatSymbol& rational_part() const noexcept { return rational_; }
  const mpz_class& numeric_radicand() const noexcept { return radicand_; }
  const std::vector<Radical>& radicals() const noexcept { return radicals_; }
  int phase_eighths() const noexcept { return phase_; }
  int two_pi_hbar_power() const noexcept { return two_pi_hbar_; }

  bool is_one() const;
  bool depends_on(std::string_view name) const noexcept;
  /// Everything except the rational part agrees.
  bool same_irrational_part(const Prefactor& other) const;
  Prefactor with_rational_part(RatSymbol r) const;

  friend Prefactor operator*(const Prefactor& a, const Prefactor& b);
  friend bool operator==(const Prefactor& a, const Prefactor& b) {
    return a.same_irrational_part(b) && a.rational_ == b.rational_;
  }
  friend bool operator!=(const Prefactor& a, const Prefactor& b) { return !(a == b); }

  Prefactor substitute(std::string_view name, const RatSymbol& value) const;
  Prefactor conj() const;

 private:
  void insert_radical(const Poly& base, int exponent);
  void insert_numeric(const GaussianRational& c, int exponent);
  void absorb_radicand(mpz_class factor);
  void normalize_phase();

  RatSymbol rational_{1};
  mpz_class radicand_{1};
  std::vector<Radical> radicals_;
  int phase_ = 0;
  int two_pi_hbar_ = 0;
};

/// prefactor · exp(Φ). Derivatives stay in this form; products add exponents.
class ExpSymbol {
 public:
  ExpSymbol() = default;
  ExpSymbol(Prefactor prefactor, RatSymbol exponent)
      : prefactor_(std::move(prefactor)), exponent_(std::move(exponent)) {}
  explicit ExpSymbol(RatSymbol plain) : prefactor_(std::move(plain)) {}

  const Prefactor& prefactor() const noexcept { return prefactor_; }
  const RatSymbol& exponent() const noexcept { return exponent_; }
  const RatSymbol& rational_part() const noexcept { return prefactor_.rational_part(); }

  bool is_zero() const noexcept { return prefactor_.rational_part().is_zero(); }
  bool depends_on(std::string_view name) const noexcept {
    return prefactor_.depends_on(name) || exponent_.depends_on(name);
  }

  /// Same exponent and irrational prefactor, so sums stay in this form.
  bool compatible(const ExpSymbol& other) const {
    return exponent_ == other.exponent_ && prefactor_.same_irrational_part(other.prefactor_);
  }

  ExpSymbol derivative(std::string_view name) const;
  ExpSymbol times(const RatSymbol& r) const;
  ExpSymbol substitute(std::string_view name, const RatSymbol& value) const;
  ExpSymbol conj() const { return {prefactor_.conj(), exponent_.conj()}; }

  friend ExpSymbol operator*(const ExpSymbol& a, const ExpSymbol& b) {
    return {a.prefactor_ * b.prefactor_, a.exponent_ + b.exponent_};
  }
  /// Throws Error(IncompatibleOperands) unless the operands are compatible
  /// (a zero operand is compatible with anything).
  friend ExpSymbol operator+(const ExpSymbol& a, const ExpSymbol& b);
  friend ExpSymbol operator-(const ExpSymbol& a, const ExpSymbol& b);
  friend bool operator==(const ExpSymbol& a, const ExpSymbol& b) {
    if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
    return a.prefactor_ == b.prefactor_ && a.exponent_ == b.exponent_;
  }
  friend bool operator!=(const ExpSymbol& a, const ExpSymbol& b) { return !(a == b); }

 private:
  Prefactor prefactor_;
  RatSymbol exponent_;
};

}  // namespace moyal
