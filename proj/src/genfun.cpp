#include "moyal/genfun.hpp"

#include <vector>

#include "moyal/errors.hpp"
#include "moyal/star.hpp"

namespace moyal {

namespace {

RatSymbol var(std::string_view name) { return RatSymbol::variable(name); }

RatSymbol half_i_hbar() {
  return RatSymbol(Poly::variable(kHbar).scaled(GaussianRational(0, mpq_class(1, 2))));
}

RatSymbol i_over_hbar() { return RatSymbol::normalized(Poly(GaussianRational::i()), Poly::variable(kHbar)); }

bool is_zero_reduced(const ExpSymbol& r, const Relation& rel) { return reduce(r.rational_part(), rel).is_zero(); }

// ∫ f d(name) with zero constant term; f must be polynomial in `name`.
RatSymbol antiderivative(const RatSymbol& f, std::string_view name) {
  if (f.den().has_var(name))
    throw Error(Errc::NonPolynomialAntiderivative,
                "antiderivative in " + std::string(name) + " leaves the rational-function ring");
  std::map<std::uint32_t, Poly> out;
  for (const auto& [k, c] : f.num().coefficients_in(name))
    out.emplace(k + 1, c.scaled(GaussianRational(mpq_class(1, k + 1))));
  return RatSymbol::normalized(Poly::from_coefficients(name, out), f.den());
}

}  // namespace

ParameterRelation ParameterRelation::sl2_solve_d() {
  return {"d", RatSymbol::normalized(Poly(1) + Poly::variable("b") * Poly::variable("c"), Poly::variable("a"))};
}

ParameterRelation ParameterRelation::sl2_solve_a() {
  return {"a", RatSymbol::normalized(Poly(1) + Poly::variable("b") * Poly::variable("c"), Poly::variable("d"))};
}

RatSymbol reduce(const RatSymbol& f, const Relation& rel) { return rel ? rel->reduce(f) : f; }
ExpSymbol reduce(const ExpSymbol& u, const Relation& rel) { return rel ? rel->reduce(u) : u; }

CanonicalPair::CanonicalPair(RatSymbol P, RatSymbol Q) : P_(std::move(P)), Q_(std::move(Q)) {
  if (P_.depends_on(kHbar) || Q_.depends_on(kHbar))
    throw Error(Errc::HbarDependentInput, "canonical pair must not depend on hbar");
}

CanonicalPair CanonicalPair::identity() { return {var(kP), var(kQ)}; }

CanonicalPair CanonicalPair::linear(const RatSymbol& a, const RatSymbol& b, const RatSymbol& c,
                                    const RatSymbol& d) {
  return {a * var(kP) + b * var(kQ), c * var(kP) + d * var(kQ)};
}

RatSymbol CanonicalPair::jacobian(const Relation& rel) const {
  return reduce(P_.derivative(kP) * Q_.derivative(kQ) - P_.derivative(kQ) * Q_.derivative(kP), rel);
}

CanonicalPair CanonicalPair::reduced(const Relation& rel) const { return {reduce(P_, rel), reduce(Q_, rel)}; }

InversePartials inverse_partials(const CanonicalPair& ct) {
  return {ct.Q().derivative(kQ), ct.P().derivative(kP), -ct.Q().derivative(kP), -ct.P().derivative(kQ)};
}

std::pair<ExpSymbol, ExpSymbol> star_eigen_residuals(const ExpSymbol& u, const CanonicalPair& ct,
                                                     const Relation& rel) {
  const CanonicalPair c = ct.reduced(rel);
  const ExpSymbol ur = reduce(u, rel);
  const RatSymbol h = half_i_hbar();
  ExpSymbol rq = star_product(ur, c.Q()) - (ur.times(var(kQ)) + ur.derivative(kP).times(h));
  ExpSymbol rp = star_product(ur, c.P()) - (ur.times(var(kP)) - ur.derivative(kQ).times(h));
  return {reduce(rq, rel), reduce(rp, rel)};
}

std::pair<RatSymbol, RatSymbol> gradient_T(const CanonicalPair& ct, const Relation& rel) {
  const CanonicalPair c = ct.reduced(rel);
  if (!c.is_canonical(rel))
    throw Error(Errc::NotCanonical, "Jacobian determinant is not 1; inverse partials are undefined");
  const InversePartials ip = inverse_partials(c);
  const RatSymbol den = reduce(RatSymbol(2) + ip.p_P + ip.q_Q, rel);
  if (den.is_zero())
    throw Error(Errc::SingularDenominator, "2 + dp/dP + dq/dQ vanishes identically (trace -2 family)");
  const RatSymbol u1 = var(kQ) - c.Q();
  const RatSymbol u2 = c.P() - var(kP);
  RatSymbol gp = ((RatSymbol(1) + ip.q_Q) * u1 - ip.q_P * u2) / den;
  RatSymbol gq = ((RatSymbol(1) + ip.p_P) * u2 - ip.p_Q * u1) / den;
  return {reduce(gp, rel), reduce(gq, rel)};
}

RatSymbol integrate_gradient(const RatSymbol& gp, const RatSymbol& gq, const Relation& rel) {
  const RatSymbol mixed = reduce(gp.derivative(kQ) - gq.derivative(kP), rel);
  if (!mixed.is_zero())
    throw Error(Errc::ExactnessFailure, "gradient is not exact: mixed partials differ");
  RatSymbol T = antiderivative(gp, kP);
  RatSymbol rest = reduce(gq - T.derivative(kQ), rel);
  if (rest.depends_on(kP)) throw Error(Errc::ExactnessFailure, "gradient is not exact");
  T += antiderivative(rest, kQ);
  return reduce(T, rel);
}

ExpSymbol build_u(const RatSymbol& T) {
  if (T.depends_on(kHbar)) throw Error(Errc::HbarDependentT, "T depends on hbar");
  return {Prefactor(), T * i_over_hbar().scaled(2)};
}

ExpSymbol sl2_u(const RatSymbol& a, const RatSymbol& b, const RatSymbol& c, const RatSymbol& d) {
  const RatSymbol t = a + d + RatSymbol(2);
  if (t.is_zero()) throw Error(Errc::TracePlusTwoSingular, "a + d + 2 = 0: trace -2 is not supported");
  const RatSymbol p = var(kP);
  const RatSymbol q = var(kQ);
  const RatSymbol T = -(c * p * p - b * q * q - (a - d) * p * q) / t;
  ExpSymbol u = build_u(T);
  return {Prefactor(RatSymbol(2)) * Prefactor::sqrt_of(t, -1), u.exponent()};
}

std::string kernel_kind_name(KernelKind kind) {
  switch (kind) {
    case KernelKind::Position: return "position";
    case KernelKind::Mixed: return "mixed";
    case KernelKind::Momentum: return "momentum";
    case KernelKind::Mixed2: return "mixed2";
  }
  return {};
}

KernelKind kernel_kind_from_string(const std::string& name) {
  if (name == "position") return KernelKind::Position;
  if (name == "mixed") return KernelKind::Mixed;
  if (name == "momentum") return KernelKind::Momentum;
  if (name == "mixed2") return KernelKind::Mixed2;
  throw Error(Errc::InvalidArgument, "unknown kernel kind '" + name + "'");
}

namespace {

struct Integrand {
  ExpSymbol body;
  std::vector<RatSymbol> deltas;
};

// κ = lc · M with M assumed positive; returns 1/|κ| as a rational function.
RatSymbol inverse_abs(const RatSymbol& kappa) {
  const GaussianRational lc = kappa.num().leading_coefficient();
  if (!lc.is_real()) throw Error(Errc::UnsupportedIntegrand, "delta constraint with a complex slope");
  const RatSymbol monic = kappa.scaled(lc.inverse());
  return RatSymbol(1) / monic.scaled(GaussianRational(abs(lc.re())));
}

RatSymbol canonical_delta(const RatSymbol& arg) {
  const GaussianRational lc = arg.num().leading_coefficient();
  return arg.scaled(lc.inverse());
}

void integrate(Integrand& in, std::string_view v, const Relation& rel) {
  for (auto it = in.deltas.begin(); it != in.deltas.end(); ++it) {
    if (!it->depends_on(v)) continue;
    const RatSymbol arg = *it;
    if (arg.den().has_var(v) || arg.num().degree(v) != 1)
      throw Error(Errc::UnsupportedIntegrand, "delta constraint is not linear in " + std::string(v));
    auto coeffs = arg.num().coefficients_in(v);
    const RatSymbol kappa = RatSymbol::normalized(coeffs[1], arg.den());
    const RatSymbol r = RatSymbol::normalized(coeffs.count(0) != 0 ? coeffs[0] : Poly(), arg.den());
    const RatSymbol root = -r / kappa;
    in.deltas.erase(it);
    in.body = reduce(in.body.substitute(v, root).times(inverse_abs(kappa)), rel);
    for (auto& d : in.deltas) d = reduce(d.substitute(v, root), rel);
    return;
  }

  const ExpSymbol& e = in.body;
  if (e.prefactor().depends_on(v))
    throw Error(Errc::UnsupportedIntegrand, "prefactor depends on the integration variable " + std::string(v));
  const RatSymbol& phi = e.exponent();
  if (phi.den().has_var(v))
    throw Error(Errc::UnsupportedIntegrand, "exponent is not polynomial in " + std::string(v));
  auto coeffs = phi.num().coefficients_in(v);
  const std::uint32_t deg = phi.num().degree(v);
  auto part = [&](std::uint32_t k) {
    auto it = coeffs.find(k);
    return it == coeffs.end() ? RatSymbol() : RatSymbol::normalized(it->second, phi.den());
  };
  const RatSymbol hbar = var(kHbar);
  if (deg >= 3)
    throw Error(Errc::UnsupportedExponentDegree,
                "exponent has degree " + std::to_string(deg) + " in " + std::string(v) + "; only Gaussian and linear integrals are supported");
  if (deg == 2) {
    const RatSymbol A = part(2);
    const RatSymbol B = part(1);
    const RatSymbol C = part(0);
    // ∫ e^{Av²+Bv+C} dv = √(π/(−A)) e^{C − B²/4A},  √π = (2πħ)^{1/2} (2ħ)^{-1/2}
    const RatSymbol W = reduce(A * hbar.scaled(-2), rel);
    if (W.depends_on(kHbar))
      throw Error(Errc::UnsupportedIntegrand, "Gaussian width depends on hbar");
    Prefactor pre = e.prefactor() * Prefactor::sqrt_of(W, -1) * Prefactor::two_pi_hbar(1);
    RatSymbol exponent = reduce(C - B * B / A.scaled(4), rel);
    in.body = ExpSymbol(pre, exponent);
    return;
  }
  if (deg == 1) {
    // ∫ e^{i k v} dv = 2π δ(k) = 2πħ δ(ħ k)
    const RatSymbol k = part(1).scaled(-GaussianRational::i());
    in.deltas.push_back(reduce(k * hbar, rel));
    in.body = ExpSymbol(e.prefactor() * Prefactor::two_pi_hbar(2), part(0));
    return;
  }
  throw Error(Errc::UnsupportedIntegrand, "integral over " + std::string(v) + " diverges");
}

Kernel run_kernel(KernelKind kind, Integrand in, const std::vector<std::vector<std::string_view>>& orders,
                  const Relation& rel) {
  Error last(Errc::UnsupportedIntegrand, "no integration order succeeded");
  for (const auto& order : orders) {
    try {
      Integrand work = in;
      for (auto v : order) integrate(work, v, rel);
      std::optional<RatSymbol> delta;
      if (work.deltas.size() > 1) throw Error(Errc::UnsupportedIntegrand, "more than one delta constraint remains");
      if (!work.deltas.empty()) delta = canonical_delta(work.deltas.front());
      if (delta) {
        const GaussianRational lc = work.deltas.front().num().leading_coefficient();
        if (!lc.is_real()) throw Error(Errc::UnsupportedIntegrand, "delta constraint with a complex slope");
        work.body = work.body.times(RatSymbol(GaussianRational(1 / abs(lc.re()))));
      }
      return {kind, reduce(work.body, rel), delta};
    } catch (const Error& e) {
      if (e.code() != Errc::UnsupportedExponentDegree && e.code() != Errc::UnsupportedIntegrand) throw;
      last = e;
    }
  }
  throw last;
}

}  // namespace

Kernel kernel_transform(const ExpSymbol& u, KernelKind kind, const Relation& rel) {
  for (auto name : {kX, kY, kPx, kPy})
    if (u.depends_on(name))
      throw Error(Errc::InvalidArgument, "symbol uses the kernel variable '" + std::string(name) + "'");
  const RatSymbol p = var(kP), q = var(kQ), x = var(kX), y = var(kY), px = var(kPx), py = var(kPy);
  const RatSymbol ih = i_over_hbar();
  const RatSymbol half(GaussianRational(mpq_class(1, 2)));
  Integrand in;
  switch (kind) {
    case KernelKind::Position: {
      ExpSymbol b = u.substitute(kQ, (x + y) * half);
      in.body = ExpSymbol(b.prefactor() * Prefactor::two_pi_hbar(-2), b.exponent() - ih * p * (x - y));
      return run_kernel(kind, in, {{kP}}, rel);
    }
    case KernelKind::Mixed: {
      ExpSymbol b = u.substitute(kQ, (x + y) * half);
      in.body = ExpSymbol(b.prefactor() * Prefactor::two_pi_hbar(-2),
                          b.exponent() - ih * p * (x - y) + ih * x * px);
      return run_kernel(kind, in, {{kX, kP}, {kP, kX}}, rel);
    }
    case KernelKind::Momentum: {
      ExpSymbol b = u.substitute(kP, (py + px) * half);
      in.body = ExpSymbol(b.prefactor(), b.exponent() - ih * q * (px - py));
      return run_kernel(kind, in, {{kQ}}, rel);
    }
    case KernelKind::Mixed2: {
      ExpSymbol b = u.substitute(kP, (py + px) * half);
      in.body = ExpSymbol(b.prefactor() * Prefactor::two_pi_hbar(-2),
                          b.exponent() - ih * q * (px - py) - ih * x * px);
      return run_kernel(kind, in, {{kQ, kPx}, {kPx, kQ}}, rel);
    }
  }
  throw Error(Errc::InvalidArgument, "unknown kernel kind");
}

namespace {

std::pair<std::string_view, std::string_view> classical_names(KernelKind kind) {
  switch (kind) {
    case KernelKind::Position: return {"Q", kQ};
    case KernelKind::Mixed: return {"Q", kP};
    case KernelKind::Momentum: return {"P", kP};
    case KernelKind::Mixed2: return {"P", kQ};
  }
  return {};
}

std::pair<std::string_view, std::string_view> kernel_names(KernelKind kind) {
  switch (kind) {
    case KernelKind::Position: return {kY, kX};
    case KernelKind::Mixed: return {kY, kPx};
    case KernelKind::Momentum: return {kPy, kPx};
    case KernelKind::Mixed2: return {kPy, kX};
  }
  return {};
}

}  // namespace

RatSymbol extract_generating_function(const Kernel& k) {
  if (k.delta) throw Error(Errc::UnsupportedIntegrand, "kernel is a delta distribution; no generating function");
  const auto [new_name, old_name] = classical_names(k.kind);
  const auto [knew, kold] = kernel_names(k.kind);
  // Rename via a temporary to avoid clashes such as px -> p while p is live.
  RatSymbol F = k.body.exponent().scaled(GaussianRational::i()) * var(kHbar);
  F = F.substitute(kold, var("__old")).substitute(knew, var("__new"));
  F = F.substitute("__old", var(old_name)).substitute("__new", var(new_name));
  if (F.depends_on(kHbar)) throw Error(Errc::HbarResidue, "generating function depends on hbar");
  return F;
}

bool classical_genfun_check(const RatSymbol& F, KernelKind kind, const CanonicalPair& ct, const Relation& rel) {
  if (F.depends_on(kHbar)) throw Error(Errc::HbarResidue, "generating function depends on hbar");
  if (kind != KernelKind::Position && kind != KernelKind::Mixed)
    throw Error(Errc::InvalidArgument, "classical relations are checked for position (F1) and mixed (F3) kernels");
  const CanonicalPair c = ct.reduced(rel);
  auto at = [&](const RatSymbol& f) { return reduce(f.substitute("Q", c.Q()), rel); };
  const RatSymbol new_momentum = c.P() + at(F.derivative("Q"));  // P = −∂F/∂Q
  if (kind == KernelKind::Position)  // p = ∂F1/∂q
    return (var(kP) - at(F.derivative(kQ))).is_zero() && new_momentum.is_zero();
  // q = −∂F3/∂p
  return (var(kQ) + at(F.derivative(kP))).is_zero() && new_momentum.is_zero();
}

bool classical_genfun_check(const Kernel& k, const CanonicalPair& ct, const Relation& rel) {
  return classical_genfun_check(extract_generating_function(k), k.kind, ct, rel);
}

bool hbar_independence_check(const RatSymbol& T) { return !T.depends_on(kHbar); }

bool covariance_condition_check(const ExpSymbol& u, const CanonicalPair& ct, const Relation& rel) {
  const CanonicalPair c = ct.reduced(rel);
  const InversePartials ip = inverse_partials(c);
  const RatSymbol den = reduce(RatSymbol(2) + ip.p_P + ip.q_Q, rel);
  if (den.is_zero())
    throw Error(Errc::SingularDenominator, "2 + dp/dP + dq/dQ vanishes identically (trace -2 family)");
  const ExpSymbol ur = reduce(u, rel);
  const ExpSymbol up = ur.derivative(kP);
  const ExpSymbol uq = ur.derivative(kQ);
  const ExpSymbol dP = up.times(ip.p_P) + uq.times(ip.q_P);
  const ExpSymbol dQ = up.times(ip.p_Q) + uq.times(ip.q_Q);
  const RatSymbol h = half_i_hbar();
  ExpSymbol r1 = (ur.times(c.Q()) - dP.times(h)) - (ur.times(var(kQ)) + up.times(h));
  ExpSymbol r2 = (ur.times(c.P()) + dQ.times(h)) - (ur.times(var(kP)) - uq.times(h));
  return is_zero_reduced(r1, rel) && is_zero_reduced(r2, rel);
}

GenfunReport genfun_pipeline(const CanonicalPair& ct, const Relation& rel) {
  GenfunReport r;
  std::tie(r.dT_dp, r.dT_dq) = gradient_T(ct, rel);
  r.T = integrate_gradient(r.dT_dp, r.dT_dq, rel);
  r.hbar_independent = hbar_independence_check(r.T);
  r.u = build_u(r.T);
  std::tie(r.residual_Q, r.residual_P) = star_eigen_residuals(r.u, ct, rel);
  return r;
}

}  // namespace moyal
