#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "moyal/gaussian_rational.hpp"

namespace moyal {

/// Reserved variable names of the phase-space calculus.
inline constexpr std::string_view kP = "p";
inline constexpr std::string_view kQ = "q";
inline constexpr std::string_view kHbar = "hbar";
inline constexpr std::string_view kGamma = "gamma";

/// Canonical variable order: p, q, hbar, gamma, then everything else by name.
bool var_less(std::string_view a, std::string_view b) noexcept;

/// True for names of the form [A-Za-z_][A-Za-z0-9_]*.
bool is_identifier(std::string_view name) noexcept;

using Exponents = std::vector<std::uint32_t>;

/// Sparse multivariate polynomial over Q(i).
///
/// vars() is sorted by var_less and lists exactly the variables that occur
/// with a nonzero exponent; every exponent vector in terms() is aligned with
/// it. No zero coefficient is ever stored, so equal polynomials compare equal
/// member-wise. Terms are ordered lexicographically on the exponent vector;
/// the last term is the lex-leading one.
class Poly {
 public:
  using TermMap = std::map<Exponents, GaussianRational>;

  Poly() = default;
  Poly(const GaussianRational& constant);  // NOLINT: implicit constant embedding
  Poly(long constant) : Poly(GaussianRational(constant)) {}  // NOLINT

  static Poly variable(std::string_view name, std::uint32_t power = 1);
  /// Builds from an arbitrary (possibly unsorted, untrimmed) description.
  static Poly from_terms(std::vector<std::string> vars, const TermMap& terms);

  const std::vector<std::string>& vars() const noexcept { return vars_; }
  const TermMap& terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }

  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_constant() const noexcept { return vars_.empty(); }
  bool is_one() const noexcept;
  /// Coefficient of the empty monomial.
  GaussianRational constant_term() const;
  bool has_var(std::string_view name) const noexcept;
  std::uint32_t degree(std::string_view name) const noexcept;
  /// Maximal total degree counting only the listed variables.
  std::uint32_t total_degree(std::span<const std::string_view> names) const;
  std::uint32_t total_degree() const;
  GaussianRational leading_coefficient() const;

  Poly& operator+=(const Poly& rhs);
  Poly& operator-=(const Poly& rhs);
  Poly& operator*=(const Poly& rhs);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator-(const Poly& a);
  friend bool operator==(const Poly& a, const Poly& b) {
    return a.vars_ == b.vars_ && a.terms_ == b.terms_;
  }
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

  Poly scaled(const GaussianRational& factor) const;
  Poly pow(unsigned exponent) const;
  Poly derivative(std::string_view name) const;
  /// Dense view in `name`: degree -> coefficient (free of `name`).
  std::map<std::uint32_t, Poly> coefficients_in(std::string_view name) const;
  static Poly from_coefficients(std::string_view name, const std::map<std::uint32_t, Poly>& coeffs);
  Poly substitute(std::string_view name, const Poly& value) const;
  Poly conj() const;

  /// Divides by the lex-leading coefficient.
  Poly monic() const;
  /// Exact quotient, or nullopt when `divisor` does not divide *this.
  std::optional<Poly> divide_exact(const Poly& divisor) const;
  /// Componentwise minimum exponent over all terms, as a monomial.
  Poly monomial_content() const;
  bool is_monomial() const noexcept { return terms_.size() == 1; }

  /// Keeps only terms whose total degree in `names` is at most `max_degree`.
  Poly truncate_total_degree(std::span<const std::string_view> names, std::uint32_t max_degree) const;

 private:
  Poly(std::vector<std::string> vars, TermMap terms)
      : vars_(std::move(vars)), terms_(std::move(terms)) {}
  void trim();
  TermMap remapped(const std::vector<std::string>& superset) const;
  std::optional<std::size_t> index_of(std::string_view name) const noexcept;

  std::vector<std::string> vars_;
  TermMap terms_;

  friend Poly combine(const Poly& a, const Poly& b, bool subtract);
};

/// Structural total order (deterministic sorting of containers of polynomials).
int compare(const Poly& a, const Poly& b);

/// Monic greatest common divisor over Q(i); gcd(0, 0) = 0.
Poly gcd(const Poly& a, const Poly& b);

}  // namespace moyal
