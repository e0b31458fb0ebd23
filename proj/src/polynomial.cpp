#include "moyal/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <utility>

#include "moyal/errors.hpp"

namespace moyal {

namespace {

int var_rank(std::string_view name) noexcept {
  if (name == kP) return 0;
  if (name == kQ) return 1;
  if (name == kHbar) return 2;
  if (name == kGamma) return 3;
  return 4;
}

std::vector<std::string> union_vars(const std::vector<std::string>& a,
                                    const std::vector<std::string>& b) {
  std::vector<std::string> out;
  out.reserve(a.size() + b.size());
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out),
                 [](const std::string& x, const std::string& y) { return var_less(x, y); });
  return out;
}

void add_term(Poly::TermMap& map, const Exponents& e, const GaussianRational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = map.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) map.erase(it);
  }
}

void sub_term(Poly::TermMap& map, const Exponents& e, const GaussianRational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = map.try_emplace(e, -c);
  if (!inserted) {
    it->second -= c;
    if (it->second.is_zero()) map.erase(it);
  }
}

}  // namespace

bool var_less(std::string_view a, std::string_view b) noexcept {
  int ra = var_rank(a);
  int rb = var_rank(b);
  if (ra != rb) return ra < rb;
  return a < b;
}

bool is_identifier(std::string_view name) noexcept {
  if (name.empty()) return false;
  auto first = static_cast<unsigned char>(name.front());
  if (!(std::isalpha(first) || first == '_')) return false;
  return std::all_of(name.begin(), name.end(), [](char ch) {
    auto u = static_cast<unsigned char>(ch);
    return u < 128 && (std::isalnum(u) || u == '_');
  });
}

Poly::Poly(const GaussianRational& constant) {
  if (!constant.is_zero()) terms_.emplace(Exponents{}, constant);
}

Poly Poly::variable(std::string_view name, std::uint32_t power) {
  if (!is_identifier(name)) throw Error(Errc::InvalidArgument, "invalid variable name '" + std::string(name) + "'");
  if (power == 0) return Poly(1);
  TermMap terms;
  terms.emplace(Exponents{power}, GaussianRational(1));
  return Poly({std::string(name)}, std::move(terms));
}

Poly Poly::from_terms(std::vector<std::string> vars, const TermMap& terms) {
  for (const auto& v : vars)
    if (!is_identifier(v)) throw Error(Errc::InvalidArgument, "invalid variable name '" + v + "'");
  std::vector<std::size_t> order(vars.size());
  for (std::size_t k = 0; k < order.size(); ++k) order[k] = k;
  std::sort(order.begin(), order.end(),
            [&](std::size_t x, std::size_t y) { return var_less(vars[x], vars[y]); });
  std::vector<std::string> sorted;
  for (auto k : order) {
    if (!sorted.empty() && sorted.back() == vars[k])
      throw Error(Errc::InvalidArgument, "duplicate variable '" + vars[k] + "'");
    sorted.push_back(vars[k]);
  }
  TermMap out;
  for (const auto& [e, c] : terms) {
    if (e.size() != vars.size()) throw Error(Errc::InvalidArgument, "exponent vector length mismatch");
    Exponents se(e.size());
    for (std::size_t k = 0; k < order.size(); ++k) se[k] = e[order[k]];
    add_term(out, se, c);
  }
  Poly p(std::move(sorted), std::move(out));
  p.trim();
  return p;
}

void Poly::trim() {
  if (vars_.empty()) return;
  std::vector<bool> used(vars_.size(), false);
  for (const auto& [e, c] : terms_)
    for (std::size_t k = 0; k < e.size(); ++k)
      if (e[k] != 0) used[k] = true;
  if (std::all_of(used.begin(), used.end(), [](bool u) { return u; })) return;
  std::vector<std::string> vars;
  for (std::size_t k = 0; k < vars_.size(); ++k)
    if (used[k]) vars.push_back(vars_[k]);
  TermMap terms;
  for (const auto& [e, c] : terms_) {
    Exponents ne;
    ne.reserve(vars.size());
    for (std::size_t k = 0; k < e.size(); ++k)
      if (used[k]) ne.push_back(e[k]);
    terms.emplace(std::move(ne), c);
  }
  vars_ = std::move(vars);
  terms_ = std::move(terms);
}

Poly::TermMap Poly::remapped(const std::vector<std::string>& superset) const {
  if (superset == vars_) return terms_;
  std::vector<std::size_t> pos(vars_.size());
  std::size_t j = 0;
  for (std::size_t k = 0; k < vars_.size(); ++k) {
    while (superset[j] != vars_[k]) ++j;
    pos[k] = j;
  }
  TermMap out;
  for (const auto& [e, c] : terms_) {
    Exponents ne(superset.size(), 0);
    for (std::size_t k = 0; k < e.size(); ++k) ne[pos[k]] = e[k];
    out.emplace_hint(out.end(), std::move(ne), c);
  }
  return out;
}

std::optional<std::size_t> Poly::index_of(std::string_view name) const noexcept {
  for (std::size_t k = 0; k < vars_.size(); ++k)
    if (vars_[k] == name) return k;
  return std::nullopt;
}

bool Poly::is_one() const noexcept {
  return vars_.empty() && terms_.size() == 1 && terms_.begin()->second.is_one();
}

GaussianRational Poly::constant_term() const {
  if (terms_.empty()) return GaussianRational(0);
  const auto& [e, c] = *terms_.begin();
  for (auto x : e)
    if (x != 0) return GaussianRational(0);
  return c;
}

bool Poly::has_var(std::string_view name) const noexcept { return index_of(name).has_value(); }

std::uint32_t Poly::degree(std::string_view name) const noexcept {
  auto idx = index_of(name);
  if (!idx) return 0;
  std::uint32_t d = 0;
  for (const auto& [e, c] : terms_) d = std::max(d, e[*idx]);
  return d;
}

std::uint32_t Poly::total_degree(std::span<const std::string_view> names) const {
  std::vector<std::size_t> idx;
  for (auto n : names)
    if (auto k = index_of(n)) idx.push_back(*k);
  std::uint32_t d = 0;
  for (const auto& [e, c] : terms_) {
    std::uint32_t s = 0;
    for (auto k : idx) s += e[k];
    d = std::max(d, s);
  }
  return d;
}

std::uint32_t Poly::total_degree() const {
  std::uint32_t d = 0;
  for (const auto& [e, c] : terms_) {
    std::uint32_t s = 0;
    for (auto x : e) s += x;
    d = std::max(d, s);
  }
  return d;
}

GaussianRational Poly::leading_coefficient() const {
  if (terms_.empty()) return GaussianRational(0);
  return terms_.rbegin()->second;
}

Poly combine(const Poly& a, const Poly& b, bool subtract) {
  if (a.vars_ == b.vars_) {
    Poly::TermMap out = a.terms_;
    for (const auto& [e, c] : b.terms_) subtract ? sub_term(out, e, c) : add_term(out, e, c);
    Poly r(a.vars_, std::move(out));
    r.trim();
    return r;
  }
  auto vars = union_vars(a.vars_, b.vars_);
  Poly::TermMap out = a.remapped(vars);
  for (const auto& [e, c] : b.remapped(vars)) subtract ? sub_term(out, e, c) : add_term(out, e, c);
  Poly r(std::move(vars), std::move(out));
  r.trim();
  return r;
}

Poly& Poly::operator+=(const Poly& rhs) {
  if (rhs.is_zero()) return *this;
  if (is_zero()) return *this = rhs;
  return *this = combine(*this, rhs, false);
}

Poly& Poly::operator-=(const Poly& rhs) {
  if (rhs.is_zero()) return *this;
  return *this = combine(*this, rhs, true);
}

Poly& Poly::operator*=(const Poly& rhs) { return *this = *this * rhs; }

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return Poly();
  if (b.is_constant()) return a.scaled(b.terms_.begin()->second);
  if (a.is_constant()) return b.scaled(a.terms_.begin()->second);
  auto vars = a.vars_ == b.vars_ ? a.vars_ : union_vars(a.vars_, b.vars_);
  const Poly::TermMap ta = a.remapped(vars);
  const Poly::TermMap tb = b.remapped(vars);
  Poly::TermMap out;
  Exponents e(vars.size());
  for (const auto& [ea, ca] : ta) {
    for (const auto& [eb, cb] : tb) {
      for (std::size_t k = 0; k < e.size(); ++k) e[k] = ea[k] + eb[k];
      add_term(out, e, ca * cb);
    }
  }
  Poly r(std::move(vars), std::move(out));
  r.trim();
  return r;
}

Poly operator-(const Poly& a) {
  Poly r = a;
  for (auto& [e, c] : r.terms_) c = -c;
  return r;
}

Poly Poly::scaled(const GaussianRational& factor) const {
  if (factor.is_zero()) return Poly();
  if (factor.is_one()) return *this;
  Poly r = *this;
  for (auto& [e, c] : r.terms_) c *= factor;
  return r;
}

Poly Poly::pow(unsigned exponent) const {
  Poly result(1);
  Poly base = *this;
  while (exponent != 0) {
    if (exponent & 1U) result = result * base;
    exponent >>= 1U;
    if (exponent != 0) base = base * base;
  }
  return result;
}

Poly Poly::derivative(std::string_view name) const {
  auto idx = index_of(name);
  if (!idx) return Poly();
  TermMap out;
  for (const auto& [e, c] : terms_) {
    if (e[*idx] == 0) continue;
    Exponents ne = e;
    --ne[*idx];
    out.emplace(std::move(ne), c * GaussianRational(static_cast<long>(e[*idx])));
  }
  Poly r(vars_, std::move(out));
  r.trim();
  return r;
}

std::map<std::uint32_t, Poly> Poly::coefficients_in(std::string_view name) const {
  std::map<std::uint32_t, Poly> out;
  auto idx = index_of(name);
  if (!idx) {
    if (!is_zero()) out.emplace(0, *this);
    return out;
  }
  std::vector<std::string> rest;
  for (std::size_t k = 0; k < vars_.size(); ++k)
    if (k != *idx) rest.push_back(vars_[k]);
  std::map<std::uint32_t, TermMap> parts;
  for (const auto& [e, c] : terms_) {
    Exponents ne;
    ne.reserve(rest.size());
    for (std::size_t k = 0; k < e.size(); ++k)
      if (k != *idx) ne.push_back(e[k]);
    parts[e[*idx]].emplace(std::move(ne), c);
  }
  for (auto& [d, tm] : parts) {
    Poly p(rest, std::move(tm));
    p.trim();
    out.emplace(d, std::move(p));
  }
  return out;
}

Poly Poly::from_coefficients(std::string_view name, const std::map<std::uint32_t, Poly>& coeffs) {
  Poly result;
  for (const auto& [d, c] : coeffs) {
    if (c.has_var(name)) throw Error(Errc::InvalidArgument, "coefficient depends on the main variable");
    result += c * Poly::variable(name, d);
  }
  return result;
}

Poly Poly::substitute(std::string_view name, const Poly& value) const {
  if (!has_var(name)) return *this;
  auto coeffs = coefficients_in(name);
  // Horner from the top degree down.
  Poly result;
  std::uint32_t current = coeffs.rbegin()->first;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) {
    while (current > it->first) {
      result = result * value;
      --current;
    }
    result += it->second;
  }
  while (current > 0) {
    result = result * value;
    --current;
  }
  return result;
}

Poly Poly::conj() const {
  Poly r = *this;
  for (auto& [e, c] : r.terms_) c = c.conj();
  return r;
}

Poly Poly::monic() const {
  if (is_zero()) return *this;
  auto lc = leading_coefficient();
  if (lc.is_one()) return *this;
  return scaled(lc.inverse());
}

std::optional<Poly> Poly::divide_exact(const Poly& divisor) const {
  if (divisor.is_zero()) throw Error(Errc::ZeroDenominator, "polynomial division by zero");
  if (is_zero()) return Poly();
  if (divisor.is_constant()) return scaled(divisor.terms_.begin()->second.inverse());
  for (const auto& v : divisor.vars_)
    if (!has_var(v)) return std::nullopt;
  if (*this == divisor) return Poly(1);
  // vars(divisor) is a subset of vars(*this) here.
  const std::vector<std::string>& vars = vars_;
  const TermMap tb = divisor.remapped(vars);
  const auto& [lead_e, lead_c] = *tb.rbegin();
  const GaussianRational lead_inv = lead_c.inverse();
  TermMap rem = terms_;
  TermMap quot;
  Exponents qe(vars.size());
  Exponents te(vars.size());
  while (!rem.empty()) {
    const auto& [re, rc] = *rem.rbegin();
    for (std::size_t k = 0; k < vars.size(); ++k) {
      if (re[k] < lead_e[k]) return std::nullopt;
      qe[k] = re[k] - lead_e[k];
    }
    GaussianRational qc = rc * lead_inv;
    for (const auto& [be, bc] : tb) {
      for (std::size_t k = 0; k < vars.size(); ++k) te[k] = be[k] + qe[k];
      sub_term(rem, te, qc * bc);
    }
    quot.emplace(qe, std::move(qc));
  }
  Poly q(vars, std::move(quot));
  q.trim();
  return q;
}

Poly Poly::monomial_content() const {
  if (terms_.empty()) return Poly();
  Exponents m = terms_.begin()->first;
  for (const auto& [e, c] : terms_)
    for (std::size_t k = 0; k < m.size(); ++k) m[k] = std::min(m[k], e[k]);
  TermMap t;
  t.emplace(std::move(m), GaussianRational(1));
  Poly r(vars_, std::move(t));
  r.trim();
  return r;
}

Poly Poly::truncate_total_degree(std::span<const std::string_view> names,
                                 std::uint32_t max_degree) const {
  std::vector<std::size_t> idx;
  for (auto n : names)
    if (auto k = index_of(n)) idx.push_back(*k);
  TermMap out;
  for (const auto& [e, c] : terms_) {
    std::uint32_t s = 0;
    for (auto k : idx) s += e[k];
    if (s <= max_degree) out.emplace(e, c);
  }
  Poly r(vars_, std::move(out));
  r.trim();
  return r;
}

int compare(const Poly& a, const Poly& b) {
  if (a.vars() != b.vars()) {
    return std::lexicographical_compare(a.vars().begin(), a.vars().end(), b.vars().begin(),
                                        b.vars().end(),
                                        [](const std::string& x, const std::string& y) {
                                          return var_less(x, y);
                                        })
               ? -1
               : 1;
  }
  auto ia = a.terms().begin();
  auto ib = b.terms().begin();
  for (; ia != a.terms().end() && ib != b.terms().end(); ++ia, ++ib) {
    if (ia->first != ib->first) return ia->first < ib->first ? -1 : 1;
    if (int c = compare(ia->second, ib->second); c != 0) return c;
  }
  if (ia == a.terms().end() && ib == b.terms().end()) return 0;
  return ia == a.terms().end() ? -1 : 1;
}

}  // namespace moyal
