#include "moyal/star.hpp"

#include <map>

#include "moyal/errors.hpp"

namespace moyal {

namespace {

// Memoized mixed partials ∂_q^a ∂_p^b of one operand.
template <class T>
class Partials {
 public:
  explicit Partials(const T& f) { table_.emplace(std::pair{0U, 0U}, f); }

  const T& get(unsigned dq, unsigned dp) {
    const auto key = std::pair{dq, dp};
    if (auto it = table_.find(key); it != table_.end()) return it->second;
    T v = dp > 0 ? get(dq, dp - 1).derivative(kP) : get(dq - 1, dp).derivative(kQ);
    return table_.emplace(key, std::move(v)).first->second;
  }

 private:
  std::map<std::pair<unsigned, unsigned>, T> table_;
};

GaussianRational binomial(unsigned n, unsigned k) {
  mpz_class b;
  mpz_bin_uiui(b.get_mpz_t(), n, k);
  return GaussianRational(mpq_class(b));
}

// (iħ/2)^n / n!
RatSymbol star_coefficient(unsigned n) {
  mpz_class fact;
  mpz_fac_ui(fact.get_mpz_t(), n);
  GaussianRational c = (GaussianRational::i() / GaussianRational(2)).pow(n) / GaussianRational(mpq_class(fact));
  return RatSymbol(Poly::variable(kHbar, n).scaled(c));
}

RatSymbol scale(const RatSymbol& x, const RatSymbol& c) { return x * c; }
GammaSeries scale(const GammaSeries& x, const RatSymbol& c) { return x.scaled(c); }
ExpSymbol scale(const ExpSymbol& x, const RatSymbol& c) { return x.times(c); }

RatSymbol times(const RatSymbol& a, const RatSymbol& b) { return a * b; }
GammaSeries times(const GammaSeries& a, const GammaSeries& b) { return a * b; }
ExpSymbol times(const ExpSymbol& a, const RatSymbol& b) { return a.times(b); }
ExpSymbol times(const RatSymbol& a, const ExpSymbol& b) { return b.times(a); }

template <class R, class A, class B>
R bidiff(Partials<A>& fa, Partials<B>& gb, unsigned n, R acc) {
  for (unsigned k = 0; k <= n; ++k) {
    const A& a = fa.get(n - k, k);
    if (a.is_zero()) continue;
    const B& b = gb.get(k, n - k);
    if (b.is_zero()) continue;
    GaussianRational c = binomial(n, k);
    if (k % 2 == 1) c = -c;
    acc = acc + scale(times(a, b), RatSymbol(c));
  }
  return acc;
}

template <class R, class A, class B>
R star_sum(const A& f, const B& g, unsigned n_max, R acc) {
  Partials<A> fa(f);
  Partials<B> gb(g);
  for (unsigned n = 0; n <= n_max; ++n) {
    R zero = scale(acc, RatSymbol(0));
    R term = bidiff(fa, gb, n, zero);
    if (!term.is_zero()) acc = acc + scale(term, star_coefficient(n));
  }
  return acc;
}

std::optional<unsigned> pq_degree(const GammaSeries& s) {
  unsigned d = 0;
  for (const auto& c : s.coeffs()) {
    auto dc = pq_degree(c);
    if (!dc) return std::nullopt;
    d = std::max(d, *dc);
  }
  return d;
}

unsigned series_bound(std::optional<unsigned> df, std::optional<unsigned> dg,
                      std::optional<unsigned> truncation) {
  std::optional<unsigned> bound;
  if (df) bound = df;
  if (dg) bound = bound ? std::min(*bound, *dg) : *dg;
  if (truncation) bound = bound ? std::min(*bound, *truncation) : *truncation;
  if (!bound)
    throw Error(Errc::NonTerminatingSeries,
                "star product does not terminate: no operand is polynomial in p, q and no truncation was given");
  return *bound;
}

}  // namespace

std::optional<unsigned> pq_degree(const RatSymbol& f) {
  if (f.den().has_var(kP) || f.den().has_var(kQ)) return std::nullopt;
  static constexpr std::string_view pq[] = {kP, kQ};
  return f.num().total_degree(pq);
}

RatSymbol poisson_bracket(const RatSymbol& f, const RatSymbol& g) {
  return f.derivative(kQ) * g.derivative(kP) - f.derivative(kP) * g.derivative(kQ);
}

GammaSeries poisson_bracket(const GammaSeries& f, const GammaSeries& g) {
  return f.derivative(kQ) * g.derivative(kP) - f.derivative(kP) * g.derivative(kQ);
}

RatSymbol bidiff_power(const RatSymbol& f, const RatSymbol& g, unsigned n) {
  Partials<RatSymbol> fa(f);
  Partials<RatSymbol> gb(g);
  return bidiff(fa, gb, n, RatSymbol());
}

GammaSeries bidiff_power(const GammaSeries& f, const GammaSeries& g, unsigned n) {
  Partials<GammaSeries> fa(f);
  Partials<GammaSeries> gb(g);
  return bidiff(fa, gb, n, GammaSeries(std::min(f.order(), g.order())));
}

RatSymbol star_product(const RatSymbol& f, const RatSymbol& g, std::optional<unsigned> truncation) {
  const unsigned n = series_bound(pq_degree(f), pq_degree(g), truncation);
  return star_sum(f, g, n, RatSymbol());
}

GammaSeries star_product(const GammaSeries& f, const GammaSeries& g, std::optional<unsigned> truncation) {
  const unsigned n = series_bound(pq_degree(f), pq_degree(g), truncation);
  return star_sum(f, g, n, GammaSeries(std::min(f.order(), g.order())));
}

ExpSymbol star_product(const ExpSymbol& u, const RatSymbol& g, std::optional<unsigned> truncation) {
  const unsigned n = series_bound(std::nullopt, pq_degree(g), truncation);
  return star_sum(u, g, n, u.times(RatSymbol()));
}

ExpSymbol star_product(const RatSymbol& f, const ExpSymbol& u, std::optional<unsigned> truncation) {
  const unsigned n = series_bound(pq_degree(f), std::nullopt, truncation);
  return star_sum(f, u, n, u.times(RatSymbol()));
}

RatSymbol moyal_bracket(const RatSymbol& f, const RatSymbol& g, std::optional<unsigned> truncation) {
  return star_product(f, g, truncation) - star_product(g, f, truncation);
}

GammaSeries moyal_bracket(const GammaSeries& f, const GammaSeries& g, std::optional<unsigned> truncation) {
  return star_product(f, g, truncation) - star_product(g, f, truncation);
}

ExpSymbol moyal_bracket(const ExpSymbol& u, const RatSymbol& g, std::optional<unsigned> truncation) {
  return star_product(u, g, truncation) - star_product(g, u, truncation);
}

namespace {

// 2 (iħ/2)^{2k+1} / (2k+1)!
RatSymbol bracket_term_coefficient(unsigned k) { return star_coefficient(2 * k + 1).scaled(2); }

void finish(BracketReport& r) {
  r.is_canonical = r.poisson == RatSymbol(-1);
  for (const auto& [k, term] : r.moyal_terms) {
    if (k >= 1 && !term.is_zero()) {
      r.is_canonical = false;
      if (!r.first_nonvanishing_correction) r.first_nonvanishing_correction = k;
    }
  }
}

}  // namespace

BracketReport check_canonical_pair(const RatSymbol& P, const RatSymbol& Q, unsigned k_max,
                                   std::optional<std::uint32_t> gamma_order) {
  if (P.depends_on(kHbar) || Q.depends_on(kHbar))
    throw Error(Errc::HbarDependentInput, "canonical-pair check requires hbar-free P and Q");
  if (gamma_order) return check_canonical_pair(series_expand(P, *gamma_order), series_expand(Q, *gamma_order), k_max);
  BracketReport r;
  r.poisson = poisson_bracket(P, Q);
  Partials<RatSymbol> pa(P);
  Partials<RatSymbol> qb(Q);
  for (unsigned k = 0; k <= k_max; ++k)
    r.moyal_terms.emplace_back(k, bidiff(pa, qb, 2 * k + 1, RatSymbol()) * bracket_term_coefficient(k));
  finish(r);
  return r;
}

BracketReport check_canonical_pair(const GammaSeries& P, const GammaSeries& Q, unsigned k_max) {
  if (P.depends_on(kHbar) || Q.depends_on(kHbar))
    throw Error(Errc::HbarDependentInput, "canonical-pair check requires hbar-free P and Q");
  BracketReport r;
  r.gamma_order = std::min(P.order(), Q.order());
  r.poisson = poisson_bracket(P, Q).to_ratsymbol();
  Partials<GammaSeries> pa(P);
  Partials<GammaSeries> qb(Q);
  for (unsigned k = 0; k <= k_max; ++k) {
    GammaSeries t = bidiff(pa, qb, 2 * k + 1, GammaSeries(*r.gamma_order));
    r.moyal_terms.emplace_back(k, t.scaled(bracket_term_coefficient(k)).to_ratsymbol());
  }
  finish(r);
  return r;
}

}  // namespace moyal
