#pragma once

#include <gmpxx.h>

#include <string>

namespace moyal {

/// Exact complex number re + im*i with arbitrary-precision rational parts.
/// Both parts are kept in GMP canonical form (reduced, positive denominator).
class GaussianRational {
 public:
  GaussianRational() = default;
  GaussianRational(long value) : re_(value) {}  // NOLINT: implicit on purpose
  GaussianRational(mpq_class re, mpq_class im = 0);

  static GaussianRational i() { return {0, 1}; }
  /// Parses "n" or "n/d" for each part; throws Error(JsonFormat) otherwise.
  static GaussianRational from_strings(const std::string& re, const std::string& im);

  const mpq_class& re() const noexcept { return re_; }
  const mpq_class& im() const noexcept { return im_; }

  bool is_zero() const noexcept { return sgn(re_) == 0 && sgn(im_) == 0; }
  bool is_real() const noexcept { return sgn(im_) == 0; }
  bool is_imaginary() const noexcept { return sgn(re_) == 0; }
  bool is_one() const noexcept { return is_real() && re_ == 1; }

  GaussianRational conj() const { return {re_, -im_}; }
  GaussianRational inverse() const;

  GaussianRational& operator+=(const GaussianRational& rhs);
  GaussianRational& operator-=(const GaussianRational& rhs);
  GaussianRational& operator*=(const GaussianRational& rhs);
  GaussianRational& operator/=(const GaussianRational& rhs);

  friend GaussianRational operator+(GaussianRational lhs, const GaussianRational& rhs) {
    return lhs += rhs;
  }
  friend GaussianRational operator-(GaussianRational lhs, const GaussianRational& rhs) {
    return lhs -= rhs;
  }
  friend GaussianRational operator*(GaussianRational lhs, const GaussianRational& rhs) {
    return lhs *= rhs;
  }
  friend GaussianRational operator/(GaussianRational lhs, const GaussianRational& rhs) {
    return lhs /= rhs;
  }
  friend GaussianRational operator-(const GaussianRational& x) { return {-x.re_, -x.im_}; }

  friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }
  friend bool operator!=(const GaussianRational& a, const GaussianRational& b) {
    return !(a == b);
  }

  GaussianRational pow(unsigned exponent) const;

  /// Debug representation, e.g. "3/2+1/5i".
  std::string debug_string() const;

 private:
  mpq_class re_{0};
  mpq_class im_{0};
};

/// Total order used only to sort data deterministically.
int compare(const GaussianRational& a, const GaussianRational& b);

/// "n/d" with d >= 1, the serialization form of a rational.
std::string rational_to_fraction_string(const mpq_class& x);

}  // namespace moyal
