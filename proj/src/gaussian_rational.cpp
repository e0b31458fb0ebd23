#include "moyal/gaussian_rational.hpp"

#include <cctype>

#include "moyal/errors.hpp"

namespace moyal {

namespace {

mpq_class parse_fraction(const std::string& text) {
  // Accept [-]digits or [-]digits/digits with a nonzero denominator.
  auto digits = [](const std::string& s, std::size_t from, std::size_t to) {
    if (from >= to) return false;
    for (std::size_t k = from; k < to; ++k)
      if (!std::isdigit(static_cast<unsigned char>(s[k]))) return false;
    return true;
  };
  std::size_t start = (!text.empty() && text[0] == '-') ? 1 : 0;
  auto slash = text.find('/');
  bool ok = slash == std::string::npos
                ? digits(text, start, text.size())
                : digits(text, start, slash) && digits(text, slash + 1, text.size());
  if (!ok) throw Error(Errc::JsonFormat, "malformed rational literal '" + text + "'");
  mpq_class value;
  value.set_str(text, 10);
  if (sgn(value.get_den()) == 0) throw Error(Errc::ZeroDenominator, "rational literal with zero denominator");
  value.canonicalize();
  return value;
}

}  // namespace

GaussianRational::GaussianRational(mpq_class re, mpq_class im)
    : re_(std::move(re)), im_(std::move(im)) {
  re_.canonicalize();
  im_.canonicalize();
}

GaussianRational GaussianRational::from_strings(const std::string& re, const std::string& im) {
  return {parse_fraction(re), parse_fraction(im)};
}

GaussianRational GaussianRational::inverse() const {
  if (is_zero()) throw Error(Errc::ZeroDenominator, "division by zero");
  if (is_real()) return {1 / re_, 0};
  mpq_class norm = re_ * re_ + im_ * im_;
  return {re_ / norm, -im_ / norm};
}

GaussianRational& GaussianRational::operator+=(const GaussianRational& rhs) {
  re_ += rhs.re_;
  if (sgn(rhs.im_) != 0) im_ += rhs.im_;
  return *this;
}

GaussianRational& GaussianRational::operator-=(const GaussianRational& rhs) {
  re_ -= rhs.re_;
  if (sgn(rhs.im_) != 0) im_ -= rhs.im_;
  return *this;
}

GaussianRational& GaussianRational::operator*=(const GaussianRational& rhs) {
  if (is_real() && rhs.is_real()) {
    re_ *= rhs.re_;
    return *this;
  }
  mpq_class re = re_ * rhs.re_ - im_ * rhs.im_;
  mpq_class im = re_ * rhs.im_ + im_ * rhs.re_;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

GaussianRational& GaussianRational::operator/=(const GaussianRational& rhs) {
  if (rhs.is_zero()) throw Error(Errc::ZeroDenominator, "division by zero");
  if (rhs.is_real()) {
    re_ /= rhs.re_;
    if (sgn(im_) != 0) im_ /= rhs.re_;
    return *this;
  }
  return *this *= rhs.inverse();
}

GaussianRational GaussianRational::pow(unsigned exponent) const {
  GaussianRational result(1);
  GaussianRational base = *this;
  while (exponent != 0) {
    if (exponent & 1U) result *= base;
    exponent >>= 1U;
    if (exponent != 0) base *= base;
  }
  return result;
}

std::string GaussianRational::debug_string() const {
  if (is_real()) return re_.get_str();
  if (is_imaginary()) return im_.get_str() + "i";
  return re_.get_str() + (sgn(im_) > 0 ? "+" : "") + im_.get_str() + "i";
}

int compare(const GaussianRational& a, const GaussianRational& b) {
  int c = cmp(a.re(), b.re());
  if (c != 0) return c < 0 ? -1 : 1;
  c = cmp(a.im(), b.im());
  return c < 0 ? -1 : (c > 0 ? 1 : 0);
}

std::string rational_to_fraction_string(const mpq_class& x) {
  return x.get_num().get_str() + "/" + x.get_den().get_str();
}

}  // namespace moyal
