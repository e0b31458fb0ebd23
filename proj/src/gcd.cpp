// Multivariate gcd over Q(i): monomial content split, recursive content in a
// main variable, and the subresultant PRS on primitive parts.

#include <algorithm>
#include <string>
#include <vector>

#include "moyal/errors.hpp"
#include "moyal/polynomial.hpp"

namespace moyal {

namespace {

// Dense univariate view: index = degree in the main variable.
using UPoly = std::vector<Poly>;

void trim(UPoly& u) {
  while (!u.empty() && u.back().is_zero()) u.pop_back();
}

int deg(const UPoly& u) { return static_cast<int>(u.size()) - 1; }

UPoly to_upoly(const Poly& f, const std::string& x) {
  auto coeffs = f.coefficients_in(x);
  UPoly u(coeffs.empty() ? 0 : coeffs.rbegin()->first + 1);
  for (auto& [d, c] : coeffs) u[d] = c;
  return u;
}

Poly from_upoly(const UPoly& u, const std::string& x) {
  Poly r;
  for (std::size_t d = 0; d < u.size(); ++d)
    if (!u[d].is_zero()) r += u[d] * Poly::variable(x, static_cast<std::uint32_t>(d));
  return r;
}

Poly exact(const Poly& a, const Poly& b) {
  auto q = a.divide_exact(b);
  if (!q) throw Error(Errc::InvalidArgument, "internal: inexact division in gcd");
  return *q;
}

UPoly prem(UPoly a, const UPoly& b) {
  const int db = deg(b);
  const Poly& lb = b.back();
  int e = deg(a) - db + 1;
  while (!a.empty() && deg(a) >= db) {
    Poly la = a.back();
    const int shift = deg(a) - db;
    for (auto& c : a) c = c * lb;
    for (int k = 0; k <= db; ++k) a[k + shift] -= la * b[k];
    trim(a);
    --e;
  }
  if (e > 0) {
    Poly f = lb.pow(static_cast<unsigned>(e));
    for (auto& c : a) c = c * f;
  }
  return a;
}

Poly content_in(const Poly& f, const std::string& x) {
  Poly g;
  for (const auto& [d, c] : f.coefficients_in(x)) {
    g = gcd(g, c);
    if (g.is_one()) break;
  }
  return g;
}

Poly subresultant_gcd(const Poly& pa, const Poly& pb, const std::string& x) {
  UPoly a = to_upoly(pa, x);
  UPoly b = to_upoly(pb, x);
  if (deg(a) < deg(b)) std::swap(a, b);
  Poly g(1);
  Poly h(1);
  while (true) {
    const int d = deg(a) - deg(b);
    UPoly r = prem(a, b);
    if (r.empty()) break;
    if (deg(r) == 0) return Poly(1);
    a = std::move(b);
    Poly div = g * h.pow(static_cast<unsigned>(d));
    for (auto& c : r) c = exact(c, div);
    b = std::move(r);
    g = a.back();
    if (d > 0) h = exact(g.pow(static_cast<unsigned>(d)), h.pow(static_cast<unsigned>(d - 1)));
  }
  Poly last = from_upoly(b, x);
  return exact(last, content_in(last, x));
}

Poly monomial_gcd(const Poly& ma, const Poly& mb) {
  // Both arguments are monic monomials.
  Poly r(1);
  for (const auto& v : ma.vars()) {
    auto e = std::min(ma.degree(v), mb.degree(v));
    if (e > 0) r = r * Poly::variable(v, e);
  }
  return r;
}

}  // namespace

Poly gcd(const Poly& a, const Poly& b) {
  if (a.is_zero()) return b.monic();
  if (b.is_zero()) return a.monic();
  if (a.is_constant() || b.is_constant()) return Poly(1);

  const Poly ma = a.monomial_content();
  const Poly mb = b.monomial_content();
  const Poly gm = monomial_gcd(ma, mb);
  const Poly a1 = exact(a, ma);
  const Poly b1 = exact(b, mb);
  if (a1.is_constant() || b1.is_constant()) return gm;

  if (a1.size() <= b1.size()) {
    if (b1.divide_exact(a1)) return (gm * a1).monic();
  } else if (a1.divide_exact(b1)) {
    return (gm * b1).monic();
  }

  const std::string* main = nullptr;
  for (const auto& v : a1.vars()) {
    if (b1.has_var(v)) {
      main = &v;
      break;
    }
  }
  if (main == nullptr) return gm;
  const std::string x = *main;

  const Poly ca = content_in(a1, x);
  const Poly cb = content_in(b1, x);
  const Poly c = gcd(ca, cb);
  const Poly g = subresultant_gcd(exact(a1, ca), exact(b1, cb), x);
  return (gm * c * g).monic();
}

}  // namespace moyal
