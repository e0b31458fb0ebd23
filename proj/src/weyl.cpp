#include "moyal/weyl.hpp"

#include <algorithm>

#include "moyal/errors.hpp"
#include "moyal/star.hpp"

namespace moyal {

namespace {

GaussianRational binomial(unsigned n, unsigned k) {
  mpz_class b;
  mpz_bin_uiui(b.get_mpz_t(), n, k);
  return GaussianRational(mpq_class(b));
}

template <class T>
T nth_derivative(T f, unsigned j, unsigned k) {
  for (unsigned s = 0; s < j && !f.is_zero(); ++s) f = f.derivative(kP);
  for (unsigned t = 0; t < k && !f.is_zero(); ++t) f = f.derivative(kQ);
  return f;
}

}  // namespace

DiffOperator DiffOperator::multiplication(const RatSymbol& f) { return derivative(0, 0, f); }

DiffOperator DiffOperator::derivative(unsigned j, unsigned k, const RatSymbol& c) {
  DiffOperator d;
  d.add_term({j, k}, c);
  return d;
}

void DiffOperator::add_term(const Orders& o, const RatSymbol& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(o, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

unsigned DiffOperator::order() const noexcept {
  unsigned n = 0;
  for (const auto& [o, c] : terms_) n = std::max(n, o.first + o.second);
  return n;
}

bool DiffOperator::depends_on(std::string_view name) const noexcept {
  return std::any_of(terms_.begin(), terms_.end(), [&](const auto& t) { return t.second.depends_on(name); });
}

DiffOperator operator+(const DiffOperator& a, const DiffOperator& b) {
  DiffOperator out = a;
  for (const auto& [o, c] : b.terms_) out.add_term(o, c);
  return out;
}

DiffOperator operator-(const DiffOperator& a, const DiffOperator& b) {
  DiffOperator out = a;
  for (const auto& [o, c] : b.terms_) out.add_term(o, -c);
  return out;
}

DiffOperator operator*(const DiffOperator& a, const DiffOperator& b) {
  // (c1 ∂_p^j1 ∂_q^k1)(c2 ∂_p^j2 ∂_q^k2) by the Leibniz rule on c2.
  DiffOperator out;
  for (const auto& [oa, ca] : a.terms_) {
    const auto [j1, k1] = oa;
    for (const auto& [ob, cb] : b.terms_) {
      const auto [j2, k2] = ob;
      for (unsigned s = 0; s <= j1; ++s) {
        RatSymbol ds = nth_derivative(cb, s, 0);
        if (ds.is_zero()) break;
        for (unsigned t = 0; t <= k1; ++t) {
          RatSymbol dst = nth_derivative(ds, 0, t);
          if (dst.is_zero()) break;
          GaussianRational w = binomial(j1, s) * binomial(k1, t);
          out.add_term({j1 - s + j2, k1 - t + k2}, (ca * dst).scaled(w));
        }
      }
    }
  }
  return out;
}

DiffOperator DiffOperator::scaled(const RatSymbol& c) const {
  DiffOperator out;
  for (const auto& [o, coeff] : terms_) out.add_term(o, c * coeff);
  return out;
}

DiffOperator DiffOperator::pow(unsigned n) const {
  DiffOperator out = identity();
  for (unsigned k = 0; k < n; ++k) out = out * *this;
  return out;
}

RatSymbol DiffOperator::apply(const RatSymbol& f) const {
  RatSymbol out;
  for (const auto& [o, c] : terms_) {
    RatSymbol d = nth_derivative(f, o.first, o.second);
    if (!d.is_zero()) out += c * d;
  }
  return out;
}

GammaSeries DiffOperator::apply(const GammaSeries& f) const {
  GammaSeries out(f.order());
  for (const auto& [o, c] : terms_) {
    GammaSeries d = nth_derivative(f, o.first, o.second);
    if (!d.is_zero()) out = out + d.scaled(c);
  }
  return out;
}

ExpSymbol DiffOperator::apply(const ExpSymbol& u) const {
  ExpSymbol out = u.times(RatSymbol());
  for (const auto& [o, c] : terms_) out = out + nth_derivative(u, o.first, o.second).times(c);
  return out;
}

DiffOperator bopp(Side side, std::string_view var) {
  const RatSymbol half_i_hbar = RatSymbol(Poly::variable(kHbar).scaled(GaussianRational(0, mpq_class(1, 2))));
  if (var == kP) {
    RatSymbol c = side == Side::Left ? half_i_hbar : -half_i_hbar;
    return DiffOperator::multiplication(RatSymbol::variable(kP)) + DiffOperator::derivative(0, 1, c);
  }
  if (var == kQ) {
    RatSymbol c = side == Side::Left ? -half_i_hbar : half_i_hbar;
    return DiffOperator::multiplication(RatSymbol::variable(kQ)) + DiffOperator::derivative(1, 0, c);
  }
  throw Error(Errc::InvalidArgument, "Bopp shift is defined for p and q only");
}

DiffOperator compose(const DiffOperator& a, const DiffOperator& b) { return a * b; }

DiffOperator operator_commutator(const DiffOperator& a, const DiffOperator& b) { return a * b - b * a; }

RatSymbol apply(const DiffOperator& a, const RatSymbol& f) { return a.apply(f); }
GammaSeries apply(const DiffOperator& a, const GammaSeries& f) { return a.apply(f); }
ExpSymbol apply(const DiffOperator& a, const ExpSymbol& u) { return a.apply(u); }

namespace {

// 2^{-n} Σ_k C(n,k) q^k p^m q^{n-k} over one side's Bopp operators.
DiffOperator symmetrized(Side side, unsigned m, unsigned n) {
  const DiffOperator P = bopp(side, kP);
  const DiffOperator Q = bopp(side, kQ);
  const DiffOperator pm = P.pow(m);
  std::vector<DiffOperator> qpow{DiffOperator::identity()};
  for (unsigned k = 1; k <= n; ++k) qpow.push_back(qpow.back() * Q);
  DiffOperator out;
  for (unsigned k = 0; k <= n; ++k) out = out + (qpow[k] * pm * qpow[n - k]).scaled(RatSymbol(binomial(n, k)));
  return out.scaled(RatSymbol(GaussianRational(mpq_class(1, 1) / mpq_class(mpz_class(1) << n))));
}

}  // namespace

DiffOperator image_of_monomial(unsigned m, unsigned n) {
  return symmetrized(Side::Left, m, n) - symmetrized(Side::Right, m, n);
}

GeneratorExpansion::GeneratorExpansion(std::map<Key, RatSymbol> coeffs) {
  for (auto& [k, c] : coeffs) {
    if (c.depends_on(kP) || c.depends_on(kQ))
      throw Error(Errc::InvalidArgument, "generator coefficients must not depend on p or q");
    if (!c.is_zero()) coeffs_.emplace(k, std::move(c));
  }
}

GeneratorExpansion operator+(const GeneratorExpansion& a, const GeneratorExpansion& b) {
  std::map<GeneratorExpansion::Key, RatSymbol> out = a.coeffs_;
  for (const auto& [k, c] : b.coeffs_) out[k] += c;
  return GeneratorExpansion(std::move(out));
}

GeneratorExpansion GeneratorExpansion::scaled(const RatSymbol& c) const {
  std::map<Key, RatSymbol> out;
  for (const auto& [k, v] : coeffs_) out.emplace(k, v * c);
  return GeneratorExpansion(std::move(out));
}

RatSymbol GeneratorExpansion::symbol() const {
  RatSymbol out;
  for (const auto& [k, c] : coeffs_)
    out += c * RatSymbol(Poly::variable(kP, k.first) * Poly::variable(kQ, k.second));
  return out;
}

GeneratorExpansion generator_from_symbol(const RatSymbol& f) {
  if (f.den().has_var(kP) || f.den().has_var(kQ))
    throw Error(Errc::InvalidArgument, "generator symbol must be polynomial in p and q");
  std::map<GeneratorExpansion::Key, RatSymbol> out;
  for (const auto& [m, cp] : f.num().coefficients_in(kP))
    for (const auto& [n, cq] : cp.coefficients_in(kQ)) out.emplace(std::pair{m, n}, RatSymbol::normalized(cq, f.den()));
  return GeneratorExpansion(std::move(out));
}

DiffOperator moyal_lie_vector(const GeneratorExpansion& a) {
  DiffOperator out;
  for (const auto& [k, c] : a.coeffs()) out = out + image_of_monomial(k.first, k.second).scaled(c);
  return out;
}

RatSymbol weyl_symbol_of_word(std::string_view word) {
  RatSymbol out(1);
  for (char ch : word) {
    if (ch != 'p' && ch != 'q') throw Error(Errc::InvalidArgument, std::string("word letters must be p or q, got '") + ch + "'");
    out = star_product(out, RatSymbol::variable(ch == 'p' ? kP : kQ));
  }
  return out;
}

}  // namespace moyal
