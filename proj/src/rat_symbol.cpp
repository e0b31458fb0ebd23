#include "moyal/rat_symbol.hpp"

#include <algorithm>

#include "moyal/errors.hpp"

namespace moyal {

namespace {

Poly exact(const Poly& a, const Poly& b) {
  auto q = a.divide_exact(b);
  if (!q) throw Error(Errc::InvalidArgument, "internal: inexact division");
  return *q;
}

}  // namespace

RatSymbol RatSymbol::normalized(Poly num, Poly den) {
  if (den.is_zero()) throw Error(Errc::ZeroDenominator, "rational function with zero denominator");
  if (num.is_zero()) return RatSymbol();
  if (!den.is_constant()) {
    Poly g = gcd(num, den);
    if (!g.is_one()) {
      num = exact(num, g);
      den = exact(den, g);
    }
  }
  GaussianRational lc = den.leading_coefficient();
  if (!lc.is_one()) {
    GaussianRational inv = lc.inverse();
    num = num.scaled(inv);
    den = den.scaled(inv);
  }
  return RatSymbol(std::move(num), std::move(den));
}

GaussianRational RatSymbol::constant_value() const {
  if (!is_constant()) throw Error(Errc::InvalidArgument, "rational function is not constant");
  return num_.constant_term();
}

std::vector<std::string> RatSymbol::variables() const {
  std::vector<std::string> out;
  std::set_union(num_.vars().begin(), num_.vars().end(), den_.vars().begin(), den_.vars().end(),
                 std::back_inserter(out),
                 [](const std::string& x, const std::string& y) { return var_less(x, y); });
  return out;
}

RatSymbol operator+(const RatSymbol& a, const RatSymbol& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  if (a.den_ == b.den_) {
    if (a.den_.is_one()) return RatSymbol(a.num_ + b.num_, a.den_);
    return RatSymbol::normalized(a.num_ + b.num_, a.den_);
  }
  if (a.den_.is_one()) return RatSymbol(a.num_ * b.den_ + b.num_, b.den_);
  if (b.den_.is_one()) return RatSymbol(a.num_ + b.num_ * a.den_, a.den_);
  Poly g = gcd(a.den_, b.den_);
  Poly da = exact(a.den_, g);
  Poly db = exact(b.den_, g);
  Poly num = a.num_ * db + b.num_ * da;
  if (num.is_zero()) return RatSymbol();
  // Only factors of g can cancel against the new numerator.
  Poly h = gcd(num, g);
  if (!h.is_one()) {
    num = exact(num, h);
    g = exact(g, h);
  }
  Poly den = da * db * g;
  GaussianRational lc = den.leading_coefficient();
  if (!lc.is_one()) {
    num = num.scaled(lc.inverse());
    den = den.scaled(lc.inverse());
  }
  return RatSymbol(std::move(num), std::move(den));
}

RatSymbol operator-(const RatSymbol& a, const RatSymbol& b) { return a + (-b); }

RatSymbol operator*(const RatSymbol& a, const RatSymbol& b) {
  if (a.is_zero() || b.is_zero()) return RatSymbol();
  if (a.den_.is_one() && b.den_.is_one()) return RatSymbol(a.num_ * b.num_);
  Poly g1 = gcd(a.num_, b.den_);
  Poly g2 = gcd(b.num_, a.den_);
  Poly num = exact(a.num_, g1) * exact(b.num_, g2);
  Poly den = exact(a.den_, g2) * exact(b.den_, g1);
  GaussianRational lc = den.leading_coefficient();
  if (!lc.is_one()) {
    num = num.scaled(lc.inverse());
    den = den.scaled(lc.inverse());
  }
  return RatSymbol(std::move(num), std::move(den));
}

RatSymbol operator/(const RatSymbol& a, const RatSymbol& b) {
  if (b.is_zero()) throw Error(Errc::ZeroDenominator, "division by zero rational function");
  if (a.is_zero()) return RatSymbol();
  // b^{-1} = den/num, made monic.
  GaussianRational lc = b.num_.leading_coefficient().inverse();
  RatSymbol inv(b.den_.scaled(lc), b.num_.scaled(lc));
  return a * inv;
}

RatSymbol RatSymbol::scaled(const GaussianRational& c) const {
  if (c.is_zero()) return RatSymbol();
  return RatSymbol(num_.scaled(c), den_);
}

RatSymbol RatSymbol::pow(int exponent) const {
  if (exponent < 0) {
    if (is_zero()) throw Error(Errc::ZeroDenominator, "negative power of zero");
    return RatSymbol(1) / pow(-exponent);
  }
  auto e = static_cast<unsigned>(exponent);
  // Powers of coprime polynomials stay coprime; den^e stays monic.
  return RatSymbol(num_.pow(e), den_.pow(e));
}

RatSymbol RatSymbol::derivative(std::string_view name) const {
  if (!den_.has_var(name)) {
    if (den_.is_one()) return RatSymbol(num_.derivative(name));
    return normalized(num_.derivative(name), den_);
  }
  Poly dn = num_.derivative(name);
  Poly dd = den_.derivative(name);
  return normalized(dn * den_ - num_ * dd, den_ * den_);
}

RatSymbol RatSymbol::substitute(std::string_view name, const RatSymbol& value) const {
  if (!depends_on(name)) return *this;
  if (value.is_polynomial()) {
    Poly n = num_.substitute(name, value.num_);
    Poly d = den_.substitute(name, value.num_);
    if (d.is_zero()) throw Error(Errc::ZeroDenominator, "substitution makes the denominator vanish");
    if (den_.is_one()) return RatSymbol(std::move(n));
    return normalized(std::move(n), std::move(d));
  }
  // Homogenize both numerator and denominator with the same power of value.den.
  const std::uint32_t top = std::max(num_.degree(name), den_.degree(name));
  auto homogenized = [&](const Poly& f) {
    Poly out;
    for (const auto& [d, c] : f.coefficients_in(name))
      out += c * value.num_.pow(d) * value.den_.pow(top - d);
    return out;
  };
  Poly n = homogenized(num_);
  Poly d = homogenized(den_);
  if (d.is_zero()) throw Error(Errc::ZeroDenominator, "substitution makes the denominator vanish");
  return normalized(std::move(n), std::move(d));
}

RatSymbol partial(const RatSymbol& f, std::string_view name) { return f.derivative(name); }

RatSymbol ratfunc_normalize(const Poly& num, const Poly& den) {
  return RatSymbol::normalized(num, den);
}

int compare(const RatSymbol& a, const RatSymbol& b) {
  if (int c = compare(a.num(), b.num()); c != 0) return c;
  return compare(a.den(), b.den());
}

}  // namespace moyal
