#include "moyal/gamma_series.hpp"

#include <algorithm>

#include "moyal/errors.hpp"

namespace moyal {

GammaSeries::GammaSeries(std::uint32_t order, std::vector<RatSymbol> coeffs) : coeffs_(std::move(coeffs)) {
  for (const auto& c : coeffs_)
    if (c.depends_on(kGamma)) throw Error(Errc::InvalidArgument, "series coefficient depends on gamma");
  coeffs_.resize(order + 1);
}

GammaSeries GammaSeries::from_polynomial_in_gamma(const RatSymbol& f, std::uint32_t order) {
  if (f.den().has_var(kGamma)) return series_expand(f, order);
  GammaSeries out(order);
  for (const auto& [k, c] : f.num().coefficients_in(kGamma))
    if (k <= order) out.coeffs_[k] = RatSymbol::normalized(c, f.den());
  return out;
}

bool GammaSeries::is_zero() const noexcept {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const RatSymbol& c) { return c.is_zero(); });
}

bool GammaSeries::depends_on(std::string_view name) const noexcept {
  return std::any_of(coeffs_.begin(), coeffs_.end(), [&](const RatSymbol& c) { return c.depends_on(name); });
}

GammaSeries operator+(const GammaSeries& a, const GammaSeries& b) {
  GammaSeries out(std::min(a.order(), b.order()));
  for (std::size_t k = 0; k < out.coeffs_.size(); ++k) out.coeffs_[k] = a.coeffs_[k] + b.coeffs_[k];
  return out;
}

GammaSeries operator-(const GammaSeries& a, const GammaSeries& b) {
  GammaSeries out(std::min(a.order(), b.order()));
  for (std::size_t k = 0; k < out.coeffs_.size(); ++k) out.coeffs_[k] = a.coeffs_[k] - b.coeffs_[k];
  return out;
}

GammaSeries operator-(const GammaSeries& a) {
  GammaSeries out = a;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

GammaSeries operator*(const GammaSeries& a, const GammaSeries& b) {
  GammaSeries out(std::min(a.order(), b.order()));
  const std::size_t n = out.coeffs_.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (a.coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; i + j < n; ++j)
      if (!b.coeffs_[j].is_zero()) out.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return out;
}

GammaSeries GammaSeries::scaled(const RatSymbol& factor) const {
  if (factor.depends_on(kGamma)) return *this * from_polynomial_in_gamma(factor, order());
  return map([&](const RatSymbol& c) { return c * factor; });
}

GammaSeries GammaSeries::pow(unsigned exponent) const {
  GammaSeries result(order());
  result.coeffs_[0] = RatSymbol(1);
  GammaSeries base = *this;
  while (exponent > 0) {
    if (exponent & 1U) result = result * base;
    exponent >>= 1U;
    if (exponent > 0) base = base * base;
  }
  return result;
}

GammaSeries GammaSeries::derivative(std::string_view name) const {
  if (name == kGamma) throw Error(Errc::InvalidArgument, "series derivative in gamma is not supported");
  return map([&](const RatSymbol& c) { return c.derivative(name); });
}

GammaSeries GammaSeries::map(const std::function<RatSymbol(const RatSymbol&)>& fn) const {
  GammaSeries out(order());
  for (std::size_t k = 0; k < coeffs_.size(); ++k) out.coeffs_[k] = fn(coeffs_[k]);
  return out;
}

GammaSeries GammaSeries::truncated(std::uint32_t order) const {
  GammaSeries out = *this;
  out.coeffs_.resize(std::min<std::size_t>(order + 1, coeffs_.size()));
  return out;
}

RatSymbol GammaSeries::to_ratsymbol() const {
  RatSymbol out;
  for (std::size_t k = 0; k < coeffs_.size(); ++k)
    if (!coeffs_[k].is_zero())
      out += coeffs_[k] * RatSymbol(Poly::variable(kGamma, static_cast<std::uint32_t>(k)));
  return out;
}

GammaSeries series_expand(const RatSymbol& f, std::uint32_t order) {
  auto num = f.num().coefficients_in(kGamma);
  auto den = f.den().coefficients_in(kGamma);
  auto d0 = den.find(0);
  if (d0 == den.end()) throw Error(Errc::NotGammaAdicUnit, "denominator vanishes at gamma = 0");
  const RatSymbol inv_d0 = RatSymbol(1) / RatSymbol(d0->second);
  std::vector<RatSymbol> s(order + 1);
  for (std::uint32_t k = 0; k <= order; ++k) {
    RatSymbol acc;
    if (auto it = num.find(k); it != num.end()) acc = RatSymbol(it->second);
    for (const auto& [j, dj] : den) {
      if (j == 0 || j > k) continue;
      if (!s[k - j].is_zero()) acc -= RatSymbol(dj) * s[k - j];
    }
    s[k] = acc * inv_d0;
  }
  return GammaSeries(order, std::move(s));
}

}  // namespace moyal
