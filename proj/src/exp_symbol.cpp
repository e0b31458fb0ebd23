#include "moyal/exp_symbol.hpp"

#include <algorithm>

#include "moyal/errors.hpp"

namespace moyal {

namespace {

int mod8(int k) { return ((k % 8) + 8) % 8; }

// Splits n = s^2 * r, trying small primes and a final perfect-square test.
std::pair<mpz_class, mpz_class> split_square(mpz_class n) {
  mpz_class s = 1;
  for (unsigned long pr = 2; pr < 2000 && n > 1; ++pr) {
    const unsigned long sq = pr * pr;
    while (mpz_divisible_ui_p(n.get_mpz_t(), sq) != 0) {
      n /= sq;
      s *= pr;
    }
  }
  if (n > 1 && mpz_perfect_square_p(n.get_mpz_t()) != 0) {
    mpz_class root;
    mpz_sqrt(root.get_mpz_t(), n.get_mpz_t());
    s *= root;
    n = 1;
  }
  return {s, n};
}

}  // namespace

Prefactor Prefactor::sqrt_of(const RatSymbol& base, int sign) {
  if (base.is_zero()) throw Error(Errc::ZeroDenominator, "square root of zero in prefactor");
  Prefactor out;
  out.insert_radical(base.num(), sign);
  out.insert_radical(base.den(), -sign);
  return out;
}

Prefactor Prefactor::phase(int eighths) {
  Prefactor out;
  out.phase_ = mod8(eighths);
  out.normalize_phase();
  return out;
}

Prefactor Prefactor::two_pi_hbar(int half_power) {
  Prefactor out;
  out.two_pi_hbar_ = half_power;
  return out;
}

bool Prefactor::is_one() const {
  return rational_ == RatSymbol(1) && radicand_ == 1 && radicals_.empty() && phase_ == 0 &&
         two_pi_hbar_ == 0;
}

bool Prefactor::depends_on(std::string_view name) const noexcept {
  if (name == kHbar && two_pi_hbar_ != 0) return true;
  if (rational_.depends_on(name)) return true;
  return std::any_of(radicals_.begin(), radicals_.end(),
                     [&](const Radical& r) { return r.base.has_var(name); });
}

bool Prefactor::same_irrational_part(const Prefactor& other) const {
  return radicand_ == other.radicand_ && radicals_ == other.radicals_ && phase_ == other.phase_ &&
         two_pi_hbar_ == other.two_pi_hbar_;
}

Prefactor Prefactor::with_rational_part(RatSymbol r) const {
  Prefactor out = *this;
  out.rational_ = std::move(r);
  return out;
}

void Prefactor::normalize_phase() {
  phase_ = mod8(phase_);
  if (phase_ % 2 == 0) {
    rational_ = rational_.scaled(GaussianRational::i().pow(static_cast<unsigned>(phase_ / 2)));
    phase_ = 0;
    return;
  }
  // Keep e^{±iπ/4}; e^{±3iπ/4} = -e^{∓iπ/4}.
  if (phase_ == 3) {
    phase_ = 7;
    rational_ = -rational_;
  } else if (phase_ == 5) {
    phase_ = 1;
    rational_ = -rational_;
  }
}

void Prefactor::absorb_radicand(mpz_class factor) {
  auto [s, r] = split_square(radicand_ * factor);
  radicand_ = r;
  if (s != 1) rational_ = rational_.scaled(GaussianRational(mpq_class(s)));
}

void Prefactor::insert_numeric(const GaussianRational& c, int exponent) {
  // c^{exponent/2} with exponent = ±1.
  mpq_class magnitude;
  int quarter_turns = 0;  // c = |c| * i^quarter_turns
  if (c.is_real()) {
    magnitude = abs(c.re());
    quarter_turns = sgn(c.re()) < 0 ? 2 : 0;
  } else if (c.is_imaginary()) {
    magnitude = abs(c.im());
    quarter_turns = sgn(c.im()) < 0 ? 3 : 1;
  } else {
    throw Error(Errc::UnsupportedIntegrand, "square root of a non-axial complex constant");
  }
  // (i^t)^{±1/2} = e^{±iπt/4}
  phase_ = mod8(phase_ + exponent * quarter_turns);
  const mpz_class n = magnitude.get_num();
  const mpz_class d = magnitude.get_den();
  // sqrt(n/d) = sqrt(nd)/d ; 1/sqrt(n/d) = sqrt(nd)/n
  const mpz_class& divisor = exponent > 0 ? d : n;
  rational_ = rational_.scaled(GaussianRational(mpq_class(1, 1) / mpq_class(divisor)));
  absorb_radicand(n * d);
  normalize_phase();
}

void Prefactor::insert_radical(const Poly& base, int exponent) {
  if (base.is_zero()) throw Error(Errc::ZeroDenominator, "square root of zero in prefactor");
  if (exponent == 0) return;
  if (base.is_constant()) {
    GaussianRational c = base.constant_term();
    if (exponent % 2 == 0) {
      rational_ = rational_.scaled(exponent > 0 ? c.pow(exponent / 2) : c.inverse().pow(-exponent / 2));
      return;
    }
    const int s = exponent > 0 ? 1 : -1;
    const int whole = (exponent - s) / 2;
    if (whole != 0) rational_ = rational_.scaled(whole > 0 ? c.pow(whole) : c.inverse().pow(-whole));
    insert_numeric(c, s);
    return;
  }
  const GaussianRational lc = base.leading_coefficient();
  if (!lc.is_one()) insert_radical(Poly(lc), exponent);

  std::vector<std::pair<Poly, int>> work{{base.monic(), exponent}};
  while (!work.empty()) {
    auto [b, e] = work.back();
    work.pop_back();
    if (b.is_constant() || e == 0) continue;
    bool split = false;
    for (auto it = radicals_.begin(); it != radicals_.end(); ++it) {
      Poly g = gcd(b, it->base);
      if (g.is_constant()) continue;
      Poly b1 = *b.divide_exact(g);
      Poly o1 = *it->base.divide_exact(g);
      const int eo = it->sign;
      radicals_.erase(it);
      work.emplace_back(g, e + eo);
      work.emplace_back(b1, e);
      work.emplace_back(o1, eo);
      split = true;
      break;
    }
    if (split) continue;
    if (e % 2 == 0) {
      rational_ *= RatSymbol(b).pow(e / 2);
      continue;
    }
    const int s = e > 0 ? 1 : -1;
    if (e != s) rational_ *= RatSymbol(b).pow((e - s) / 2);
    radicals_.push_back({b, s});
  }
  std::sort(radicals_.begin(), radicals_.end(),
            [](const Radical& x, const Radical& y) { return compare(x.base, y.base) < 0; });
}

Prefactor operator*(const Prefactor& a, const Prefactor& b) {
  Prefactor out = a;
  out.rational_ *= b.rational_;
  out.two_pi_hbar_ += b.two_pi_hbar_;
  out.phase_ += b.phase_;
  out.absorb_radicand(b.radicand_);
  for (const auto& r : b.radicals_) out.insert_radical(r.base, r.sign);
  out.normalize_phase();
  return out;
}

Prefactor Prefactor::substitute(std::string_view name, const RatSymbol& value) const {
  Prefactor out;
  out.rational_ = rational_.substitute(name, value);
  out.radicand_ = radicand_;
  out.phase_ = phase_;
  out.two_pi_hbar_ = two_pi_hbar_;
  for (const auto& r : radicals_) {
    if (!r.base.has_var(name)) {
      out.insert_radical(r.base, r.sign);
    } else {
      out = out * sqrt_of(RatSymbol(r.base).substitute(name, value), r.sign);
    }
  }
  return out;
}

Prefactor Prefactor::conj() const {
  Prefactor out = *this;
  out.rational_ = rational_.conj();
  bool real_bases = true;
  for (auto& r : out.radicals_) {
    r.base = r.base.conj();
    real_bases = real_bases && r.base == r.base.conj();
  }
  if (!real_bases) throw Error(Errc::InvalidArgument, "conjugate of a complex radical base");
  out.phase_ = mod8(-phase_);
  out.normalize_phase();
  return out;
}

ExpSymbol ExpSymbol::derivative(std::string_view name) const {
  for (const auto& r : prefactor_.radicals())
    if (r.base.has_var(name))
      throw Error(Errc::UnsupportedIntegrand, "derivative of a radical prefactor");
  if (name == kHbar && prefactor_.two_pi_hbar_power() != 0)
    throw Error(Errc::UnsupportedIntegrand, "derivative of a (2 pi hbar) prefactor");
  const RatSymbol& r = prefactor_.rational_part();
  RatSymbol dr = r.derivative(name) + r * exponent_.derivative(name);
  return {prefactor_.with_rational_part(std::move(dr)), exponent_};
}

ExpSymbol ExpSymbol::times(const RatSymbol& r) const {
  return {prefactor_.with_rational_part(prefactor_.rational_part() * r), exponent_};
}

ExpSymbol ExpSymbol::substitute(std::string_view name, const RatSymbol& value) const {
  return {prefactor_.substitute(name, value), exponent_.substitute(name, value)};
}

ExpSymbol operator+(const ExpSymbol& a, const ExpSymbol& b) {
  if (b.is_zero()) return a;
  if (a.is_zero()) return b;
  if (!a.compatible(b))
    throw Error(Errc::IncompatibleOperands, "sum of exponential symbols with different phases");
  return {a.prefactor_.with_rational_part(a.rational_part() + b.rational_part()), a.exponent_};
}

ExpSymbol operator-(const ExpSymbol& a, const ExpSymbol& b) { return a + b.times(RatSymbol(-1)); }

}  // namespace moyal
