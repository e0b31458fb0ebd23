#include "moyal/format.hpp"

#include <algorithm>
#include <map>

#include "moyal/errors.hpp"

namespace moyal {

using nlohmann::json;

namespace {

struct TermView {
  std::map<std::string, std::uint32_t> exps;  // alphabetical, nonzero only
  GaussianRational coeff;
  std::uint32_t hbar = 0, gamma = 0, p = 0, q = 0;
  std::vector<std::uint32_t> params;  // aligned with the poly's parameter list
};

std::vector<TermView> ordered_terms(const Poly& f) {
  const auto& vars = f.vars();
  std::vector<TermView> out;
  for (const auto& [e, c] : f.terms()) {
    TermView t;
    t.coeff = c;
    for (std::size_t k = 0; k < vars.size(); ++k) {
      const std::string& v = vars[k];
      if (v == kP) t.p = e[k];
      else if (v == kQ) t.q = e[k];
      else if (v == kHbar) t.hbar = e[k];
      else if (v == kGamma) t.gamma = e[k];
      else t.params.push_back(e[k]);
      if (e[k] != 0) t.exps[v] = e[k];
    }
    out.push_back(std::move(t));
  }
  std::stable_sort(out.begin(), out.end(), [](const TermView& a, const TermView& b) {
    if (a.hbar != b.hbar) return a.hbar < b.hbar;
    if (a.gamma != b.gamma) return a.gamma < b.gamma;
    if (a.p + a.q != b.p + b.q) return a.p + a.q > b.p + b.q;
    if (a.p != b.p) return a.p > b.p;
    return a.params > b.params;
  });
  return out;
}

std::string rational_plain(const mpq_class& x) {
  // x > 0 expected; integers bare, fractions parenthesized.
  if (x.get_den() == 1) return x.get_num().get_str();
  return "(" + x.get_num().get_str() + "/" + x.get_den().get_str() + ")";
}

std::string monomial_plain(const std::map<std::string, std::uint32_t>& exps) {
  std::string out;
  for (const auto& [v, e] : exps) {
    if (!out.empty()) out += "*";
    out += v;
    if (e != 1) out += "^" + std::to_string(e);
  }
  return out;
}

// Coefficient rendered so that a leading '-' can be split off as the sign.
// Returns {negative, magnitude text}; text is empty for a unit real coefficient.
std::pair<bool, std::string> coeff_plain(const GaussianRational& c) {
  if (c.is_real()) {
    const mpq_class m = abs(c.re());
    return {sgn(c.re()) < 0, m == 1 ? "" : rational_plain(m)};
  }
  if (c.is_imaginary()) {
    const mpq_class m = abs(c.im());
    return {sgn(c.im()) < 0, m == 1 ? "i" : rational_plain(m) + "*i"};
  }
  const mpq_class m = abs(c.im());
  std::string im = m == 1 ? "i" : rational_plain(m) + "*i";
  std::string re = sgn(c.re()) < 0 ? "-" + rational_plain(abs(c.re())) : rational_plain(c.re());
  return {false, "(" + re + (sgn(c.im()) < 0 ? " - " : " + ") + im + ")"};
}

std::string term_plain(const TermView& t, bool& negative) {
  auto [neg, coeff] = coeff_plain(t.coeff);
  negative = neg;
  std::string mono = monomial_plain(t.exps);
  if (mono.empty()) {
    if (coeff.empty()) return "1";
    // bare constants: 1/2 rather than (1/2)
    if (t.coeff.is_real() && coeff.front() == '(') return coeff.substr(1, coeff.size() - 2);
    return coeff;
  }
  if (coeff.empty()) return mono;
  return coeff + "*" + mono;
}

std::string join_signed(const std::vector<std::pair<bool, std::string>>& parts) {
  if (parts.empty()) return "0";
  std::string out;
  for (std::size_t k = 0; k < parts.size(); ++k) {
    const auto& [neg, text] = parts[k];
    if (k == 0) out += neg ? "-" + text : text;
    else out += (neg ? " - " : " + ") + text;
  }
  return out;
}

bool is_single_power(const Poly& f) {
  return f.size() == 1 && f.terms().begin()->second.is_one() && f.vars().size() == 1;
}

std::string latex_var(const std::string& v) {
  if (v == kHbar) return "\\hbar";
  if (v == kGamma) return "\\gamma";
  if (v.size() == 1) return v;
  return "\\mathrm{" + v + "}";
}

std::string latex_rational(const mpq_class& x) {
  if (x.get_den() == 1) return x.get_num().get_str();
  return "\\frac{" + x.get_num().get_str() + "}{" + x.get_den().get_str() + "}";
}

std::string term_latex(const TermView& t, bool& negative) {
  std::string mono;
  for (const auto& [v, e] : t.exps) {
    if (!mono.empty()) mono += " ";
    mono += latex_var(v);
    if (e != 1) mono += "^{" + std::to_string(e) + "}";
  }
  const GaussianRational& c = t.coeff;
  std::string coeff;
  negative = false;
  if (c.is_real()) {
    negative = sgn(c.re()) < 0;
    const mpq_class m = abs(c.re());
    if (m != 1 || mono.empty()) coeff = latex_rational(m);
  } else if (c.is_imaginary()) {
    negative = sgn(c.im()) < 0;
    const mpq_class m = abs(c.im());
    coeff = m == 1 ? "i" : latex_rational(m) + " i";
  } else {
    const mpq_class m = abs(c.im());
    coeff = "\\left(" + (sgn(c.re()) < 0 ? "-" : std::string()) + latex_rational(abs(c.re())) +
            (sgn(c.im()) < 0 ? " - " : " + ") + (m == 1 ? "i" : latex_rational(m) + " i") + "\\right)";
  }
  if (mono.empty()) return coeff;
  if (coeff.empty()) return mono;
  return coeff + " " + mono;
}

std::string half_power_plain(int halves) {
  if (halves % 2 == 0) return std::to_string(halves / 2);
  return "(" + std::to_string(halves) + "/2)";
}

std::string half_power_latex(int halves) {
  if (halves % 2 == 0) return std::to_string(halves / 2);
  return (halves < 0 ? "-" : "") + std::string("\\frac{") + std::to_string(std::abs(halves)) + "}{2}";
}

std::string fraction_string(int num, int den) {
  mpq_class x(num, den);
  x.canonicalize();
  return rational_to_fraction_string(x);
}

const json& require(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw Error(Errc::JsonFormat, std::string("missing field '") + key + "'");
  return j.at(key);
}

}  // namespace

Format format_from_string(const std::string& name) {
  if (name == "plain") return Format::Plain;
  if (name == "latex") return Format::Latex;
  if (name == "json") return Format::Json;
  throw Error(Errc::InvalidArgument, "unknown format '" + name + "'");
}

std::string to_plain(const GaussianRational& c) { return to_plain(Poly(c)); }

std::string to_plain(const Poly& f) {
  std::vector<std::pair<bool, std::string>> parts;
  for (const auto& t : ordered_terms(f)) {
    bool neg = false;
    std::string s = term_plain(t, neg);
    parts.emplace_back(neg, std::move(s));
  }
  return join_signed(parts);
}

std::string to_plain(const RatSymbol& f) {
  if (f.is_polynomial()) return to_plain(f.num());
  std::string num = to_plain(f.num());
  if (f.num().size() > 1) num = "(" + num + ")";
  std::string den = to_plain(f.den());
  if (!is_single_power(f.den())) den = "(" + den + ")";
  return num + "/" + den;
}

std::string to_plain(const GammaSeries& s) {
  return to_plain(s.to_ratsymbol()) + " + O(gamma^" + std::to_string(s.order() + 1) + ")";
}

std::string to_plain(const Prefactor& pre) {
  std::vector<std::string> factors;
  const RatSymbol& r = pre.rational_part();
  bool irrational = pre.numeric_radicand() != 1 || !pre.radicals().empty() || pre.phase_eighths() != 0 ||
                    pre.two_pi_hbar_power() != 0;
  if (!(r == RatSymbol(1)) || !irrational) {
    std::string s = to_plain(r);
    if (irrational && (r.num().size() > 1 || !r.is_polynomial())) s = "(" + s + ")";
    factors.push_back(s);
  }
  if (pre.numeric_radicand() != 1) factors.push_back("sqrt(" + pre.numeric_radicand().get_str() + ")");
  for (const auto& rad : pre.radicals()) {
    std::string b = to_plain(rad.base);
    factors.push_back("(" + b + ")^(" + std::to_string(rad.sign) + "/2)");
  }
  if (pre.phase_eighths() == 1) factors.emplace_back("exp(i*pi/4)");
  if (pre.phase_eighths() == 7) factors.emplace_back("exp(-i*pi/4)");
  if (pre.two_pi_hbar_power() != 0)
    factors.push_back("(2*pi*hbar)^" + half_power_plain(pre.two_pi_hbar_power()));
  std::string out;
  for (const auto& f : factors) out += (out.empty() ? "" : " * ") + f;
  return out;
}

std::string to_plain(const ExpSymbol& u) {
  if (u.is_zero()) return "0";
  std::string pre = to_plain(u.prefactor());
  if (u.exponent().is_zero()) return pre;
  std::string e = "exp(" + to_plain(u.exponent()) + ")";
  if (u.prefactor().is_one()) return e;
  return pre + " * " + e;
}

std::string to_latex(const Poly& f) {
  std::vector<std::pair<bool, std::string>> parts;
  for (const auto& t : ordered_terms(f)) {
    bool neg = false;
    std::string s = term_latex(t, neg);
    parts.emplace_back(neg, std::move(s));
  }
  return join_signed(parts);
}

std::string to_latex(const RatSymbol& f) {
  if (f.is_polynomial()) return to_latex(f.num());
  return "\\frac{" + to_latex(f.num()) + "}{" + to_latex(f.den()) + "}";
}

std::string to_latex(const GammaSeries& s) {
  return to_latex(s.to_ratsymbol()) + " + O(\\gamma^{" + std::to_string(s.order() + 1) + "})";
}

std::string to_latex(const Prefactor& pre) {
  std::string out;
  auto add = [&](const std::string& f) { out += (out.empty() ? "" : " \\, ") + f; };
  const RatSymbol& r = pre.rational_part();
  if (!(r == RatSymbol(1))) {
    std::string s = to_latex(r);
    if (r.is_polynomial() && r.num().size() > 1) s = "\\left(" + s + "\\right)";
    add(s);
  }
  if (pre.numeric_radicand() != 1) add("\\sqrt{" + pre.numeric_radicand().get_str() + "}");
  for (const auto& rad : pre.radicals()) {
    if (rad.sign > 0) add("\\sqrt{" + to_latex(rad.base) + "}");
    else add("\\frac{1}{\\sqrt{" + to_latex(rad.base) + "}}");
  }
  if (pre.phase_eighths() == 1) add("e^{i\\pi/4}");
  if (pre.phase_eighths() == 7) add("e^{-i\\pi/4}");
  if (pre.two_pi_hbar_power() != 0)
    add("(2\\pi\\hbar)^{" + half_power_latex(pre.two_pi_hbar_power()) + "}");
  return out.empty() ? "1" : out;
}

std::string to_latex(const ExpSymbol& u) {
  if (u.is_zero()) return "0";
  std::string pre = to_latex(u.prefactor());
  if (u.exponent().is_zero()) return pre;
  std::string e = "e^{" + to_latex(u.exponent()) + "}";
  if (u.prefactor().is_one()) return e;
  return pre + " \\, " + e;
}

json to_json(const GaussianRational& c) {
  return {{"re", rational_to_fraction_string(c.re())}, {"im", rational_to_fraction_string(c.im())}};
}

json to_json(const Poly& f) {
  json terms = json::array();
  for (const auto& [e, c] : f.terms()) terms.push_back({{"coeff", to_json(c)}, {"exps", e}});
  return {{"vars", f.vars()}, {"terms", terms}};
}

json to_json(const RatSymbol& f) { return {{"num", to_json(f.num())}, {"den", to_json(f.den())}}; }

json to_json(const GammaSeries& s) {
  json coeffs = json::array();
  for (const auto& c : s.coeffs()) coeffs.push_back(to_json(c));
  return {{"order", s.order()}, {"coeffs", coeffs}};
}

json to_json(const Prefactor& pre) {
  json radicals = json::array();
  for (const auto& r : pre.radicals())
    radicals.push_back({{"base", to_json(r.base)}, {"exponent", fraction_string(r.sign, 2)}});
  return {{"rational_part", to_json(pre.rational_part())},
          {"numeric_radicand", pre.numeric_radicand().get_str()},
          {"radicals", radicals},
          {"phase_eighths", pre.phase_eighths()},
          {"two_pi_hbar_power", fraction_string(pre.two_pi_hbar_power(), 2)}};
}

json to_json(const ExpSymbol& u) {
  return {{"prefactor", to_json(u.prefactor())}, {"exponent", to_json(u.exponent())}};
}

GaussianRational gaussian_from_json(const json& j) {
  const json& re = require(j, "re");
  const json& im = require(j, "im");
  if (!re.is_string() || !im.is_string()) throw Error(Errc::JsonFormat, "coefficient parts must be strings");
  return GaussianRational::from_strings(re.get<std::string>(), im.get<std::string>());
}

Poly poly_from_json(const json& j) {
  const json& vars = require(j, "vars");
  const json& terms = require(j, "terms");
  if (!vars.is_array() || !terms.is_array()) throw Error(Errc::JsonFormat, "'vars' and 'terms' must be arrays");
  std::vector<std::string> names;
  for (const auto& v : vars) {
    if (!v.is_string() || !is_identifier(v.get<std::string>()))
      throw Error(Errc::JsonFormat, "variable names must be identifiers");
    names.push_back(v.get<std::string>());
  }
  Poly::TermMap map;
  for (const auto& t : terms) {
    const json& exps = require(t, "exps");
    if (!exps.is_array() || exps.size() != names.size())
      throw Error(Errc::JsonFormat, "exponent vector length does not match 'vars'");
    Exponents e;
    for (const auto& x : exps) {
      if (!x.is_number_unsigned()) throw Error(Errc::JsonFormat, "exponents must be non-negative integers");
      e.push_back(x.get<std::uint32_t>());
    }
    GaussianRational c = gaussian_from_json(require(t, "coeff"));
    if (c.is_zero()) continue;
    if (!map.emplace(std::move(e), c).second) throw Error(Errc::JsonFormat, "duplicate exponent vector");
  }
  try {
    return Poly::from_terms(std::move(names), map);
  } catch (const Error& e) {
    throw Error(Errc::JsonFormat, e.what());
  }
}

RatSymbol ratsymbol_from_json(const json& j) {
  if (j.is_object() && j.contains("vars")) return RatSymbol(poly_from_json(j));
  Poly num = poly_from_json(require(j, "num"));
  Poly den = poly_from_json(require(j, "den"));
  RatSymbol r = RatSymbol::normalized(num, den);
  return r;
}

std::string render(const RatSymbol& f, Format format) {
  switch (format) {
    case Format::Plain: return to_plain(f);
    case Format::Latex: return to_latex(f);
    case Format::Json: return to_json(f).dump();
  }
  return {};
}

std::string render(const GammaSeries& s, Format format) {
  switch (format) {
    case Format::Plain: return to_plain(s);
    case Format::Latex: return to_latex(s);
    case Format::Json: return to_json(s).dump();
  }
  return {};
}

std::string render(const ExpSymbol& u, Format format) {
  switch (format) {
    case Format::Plain: return to_plain(u);
    case Format::Latex: return to_latex(u);
    case Format::Json: return to_json(u).dump();
  }
  return {};
}

}  // namespace moyal
