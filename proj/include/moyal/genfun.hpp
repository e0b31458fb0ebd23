#pragma once

#include <optional>
#include <string>
#include <utility>

#include "moyal/exp_symbol.hpp"

namespace moyal {

/// A single algebraic relation among parameters, applied by substitution
/// `var := value` before zero tests.
struct ParameterRelation {
  std::string var;
  RatSymbol value;

  RatSymbol reduce(const RatSymbol& f) const { return f.substitute(var, value); }
  ExpSymbol reduce(const ExpSymbol& u) const { return u.substitute(var, value); }

  /// ad − bc = 1 solved as d = (1 + bc)/a.
  static ParameterRelation sl2_solve_d();
  /// ad − bc = 1 solved as a = (1 + bc)/d, for when a may vanish.
  static ParameterRelation sl2_solve_a();
};

using Relation = std::optional<ParameterRelation>;

RatSymbol reduce(const RatSymbol& f, const Relation& rel);
ExpSymbol reduce(const ExpSymbol& u, const Relation& rel);

/// (p, q) ↦ (P, Q), both free of ħ (HbarDependentInput otherwise).
class CanonicalPair {
 public:
  CanonicalPair(RatSymbol P, RatSymbol Q);
  static CanonicalPair identity();
  /// (a p + b q, c p + d q).
  static CanonicalPair linear(const RatSymbol& a, const RatSymbol& b, const RatSymbol& c, const RatSymbol& d);

  const RatSymbol& P() const noexcept { return P_; }
  const RatSymbol& Q() const noexcept { return Q_; }

  /// det ∂(P,Q)/∂(p,q), reduced.
  RatSymbol jacobian(const Relation& rel = {}) const;
  bool is_canonical(const Relation& rel = {}) const { return jacobian(rel) == RatSymbol(1); }
  CanonicalPair reduced(const Relation& rel) const;

 private:
  RatSymbol P_;
  RatSymbol Q_;
};

/// Inverse-map partials from the adjugate of the forward Jacobian (det = 1).
struct InversePartials {
  RatSymbol p_P;  // ∂p/∂P =  ∂Q/∂q
  RatSymbol q_Q;  // ∂q/∂Q =  ∂P/∂p
  RatSymbol q_P;  // ∂q/∂P = −∂Q/∂p
  RatSymbol p_Q;  // ∂p/∂Q = −∂P/∂q
};
InversePartials inverse_partials(const CanonicalPair& ct);

/// (u ⋆ Q − (q + (iħ/2)∂_p) u,  u ⋆ P − (p − (iħ/2)∂_q) u), reduced.
std::pair<ExpSymbol, ExpSymbol> star_eigen_residuals(const ExpSymbol& u, const CanonicalPair& ct,
                                                     const Relation& rel = {});

/// (∂_p T, ∂_q T) from the Lagrange-bracket closed form. Throws NotCanonical
/// if det ≠ 1 after reduction and SingularDenominator when 2 + ∂_P p + ∂_Q q = 0.
std::pair<RatSymbol, RatSymbol> gradient_T(const CanonicalPair& ct, const Relation& rel = {});

/// T with the given gradient and T(0,0) = 0. Throws ExactnessFailure or
/// NonPolynomialAntiderivative.
RatSymbol integrate_gradient(const RatSymbol& gp, const RatSymbol& gq, const Relation& rel = {});

/// exp(2iT/ħ); throws HbarDependentT.
ExpSymbol build_u(const RatSymbol& T);

/// Symbol of the metaplectic operator of g = [[a, b], [c, d]]:
/// (2/√(a+d+2)) exp(2iT/ħ) with T = −[c p² − b q² − (a−d) p q]/(a+d+2).
/// Throws TracePlusTwoSingular.
ExpSymbol sl2_u(const RatSymbol& a, const RatSymbol& b, const RatSymbol& c, const RatSymbol& d);

enum class KernelKind { Position, Mixed, Momentum, Mixed2 };

std::string kernel_kind_name(KernelKind kind);
/// Accepts position, mixed, momentum, mixed2; throws InvalidArgument.
KernelKind kernel_kind_from_string(const std::string& name);

/// Kernel variables: y and x (positions), px and py (momenta).
inline constexpr std::string_view kY = "y";
inline constexpr std::string_view kX = "x";
inline constexpr std::string_view kPx = "px";
inline constexpr std::string_view kPy = "py";

/// body, times δ(delta) when the integral collapsed onto a constraint.
struct Kernel {
  KernelKind kind;
  ExpSymbol body;
  std::optional<RatSymbol> delta;
};

/// Evaluates the kernel integral of the given kind. Quadratic exponents are
/// done by completing the square on the principal branch (symbolic factors
/// are taken positive); linear ones collapse to a delta constraint.
/// Throws UnsupportedExponentDegree (cubic or higher) or UnsupportedIntegrand.
Kernel kernel_transform(const ExpSymbol& u, KernelKind kind, const Relation& rel = {});

/// F = iħ Φ for a kernel body e^{Φ}, with kernel variables renamed to the
/// classical ones: position y→Q, x→q; mixed y→Q, px→p; momentum py→P, px→p;
/// mixed2 py→P, x→q. Throws HbarResidue if F keeps ħ.
RatSymbol extract_generating_function(const Kernel& k);

/// Classical relations of F1(Q, q) (position) or F3(Q, p) (mixed) against ct;
/// other kinds throw InvalidArgument.
bool classical_genfun_check(const RatSymbol& F, KernelKind kind, const CanonicalPair& ct, const Relation& rel = {});
bool classical_genfun_check(const Kernel& k, const CanonicalPair& ct, const Relation& rel = {});

bool hbar_independence_check(const RatSymbol& T);

/// (Q − (iħ/2)∂_P) u = (q + (iħ/2)∂_p) u and (P + (iħ/2)∂_Q) u = (p − (iħ/2)∂_q) u.
bool covariance_condition_check(const ExpSymbol& u, const CanonicalPair& ct, const Relation& rel = {});

/// gradient → T → u → residuals.
struct GenfunReport {
  RatSymbol dT_dp;
  RatSymbol dT_dq;
  RatSymbol T;
  ExpSymbol u;
  ExpSymbol residual_Q;
  ExpSymbol residual_P;
  bool hbar_independent = false;
};
GenfunReport genfun_pipeline(const CanonicalPair& ct, const Relation& rel = {});

}  // namespace moyal
