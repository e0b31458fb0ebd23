#include "cli.hpp"

#include <algorithm>
#include <sstream>

#include "CLI11.hpp"
#include "moyal/errors.hpp"
#include "moyal/flows.hpp"
#include "moyal/format.hpp"
#include "moyal/genfun.hpp"
#include "moyal/parser.hpp"
#include "moyal/star.hpp"

namespace moyal::cli {

using nlohmann::json;

namespace {

struct Options {
  std::string lhs, rhs, P, Q, generator, target, closed, word, kind = "position", relation = "none";
  std::string format = "plain";
  std::string bracket_type = "moyal";
  std::vector<std::string> params;
  int sign = -1;
  std::optional<unsigned> order;
  unsigned kmax = 2;
};

// One "key: value" line per entry in plain/latex mode, a JSON object otherwise.
class Emitter {
 public:
  explicit Emitter(Format f) : format_(f) {}

  void add(const std::string& key, const RatSymbol& v) { put(key, render(v, format_), to_json(v)); }
  void add(const std::string& key, const GammaSeries& v) { put(key, render(v, format_), to_json(v)); }
  void add(const std::string& key, const ExpSymbol& v) { put(key, render(v, format_), to_json(v)); }
  void add(const std::string& key, bool v) { put(key, v ? "true" : "false", v); }
  void add(const std::string& key, const std::string& v) { put(key, v, v); }
  void add_json(const std::string& key, const std::string& text, json j) { put(key, text, std::move(j)); }

  const json& payload() const { return payload_; }
  std::string text(bool bare_single) const {
    if (bare_single && lines_.size() == 1) return lines_.front().second + "\n";
    std::string out;
    for (const auto& [k, v] : lines_) out += k + ": " + v + "\n";
    return out;
  }

 private:
  void put(const std::string& key, std::string text, json j) {
    lines_.emplace_back(key, std::move(text));
    payload_[key] = std::move(j);
  }
  Format format_;
  std::vector<std::pair<std::string, std::string>> lines_;
  json payload_ = json::object();
};

std::vector<std::string> param_list(const Options& o) {
  std::vector<std::string> out;
  for (const auto& p : o.params)
    if (!p.empty()) out.push_back(p);
  return out;
}

RatSymbol parse_arg(const std::string& text, const std::string& flag, const Options& o) {
  if (text.empty()) throw CLI::ValidationError(flag, "is required");
  return parse(text, param_list(o));
}

Relation relation_from(const Options& o) {
  if (o.relation == "none") return std::nullopt;
  if (o.relation == "sl2-d") return ParameterRelation::sl2_solve_d();
  if (o.relation == "sl2-a") return ParameterRelation::sl2_solve_a();
  throw CLI::ValidationError("--relation", "expected none, sl2-d or sl2-a");
}

GeneratorExpansion parse_generator(const std::string& spec, const Options& o) {
  if (spec.empty()) throw CLI::ValidationError("--generator", "is required");
  std::map<GeneratorExpansion::Key, RatSymbol> coeffs;
  std::stringstream ss(spec);
  std::string item;
  while (std::getline(ss, item, ';')) {
    if (item.find_first_not_of(" \t") == std::string::npos) continue;
    const auto colon = item.find(':');
    const auto comma = item.find(',');
    if (colon == std::string::npos || comma == std::string::npos || comma > colon)
      throw CLI::ValidationError("--generator", "entries must look like m,n:coeff");
    unsigned m = 0;
    unsigned n = 0;
    try {
      std::size_t used = 0;
      m = static_cast<unsigned>(std::stoul(item.substr(0, comma), &used));
      n = static_cast<unsigned>(std::stoul(item.substr(comma + 1, colon - comma - 1), &used));
    } catch (const std::exception&) {
      throw CLI::ValidationError("--generator", "exponents must be non-negative integers");
    }
    if (m > 16 || n > 16) throw CLI::ValidationError("--generator", "exponents above 16 are not supported");
    coeffs[{m, n}] += parse(item.substr(colon + 1), param_list(o));
  }
  return GeneratorExpansion(std::move(coeffs));
}

// Linear homogeneous (P, Q) in p, q gives the normalized metaplectic symbol.
std::optional<ExpSymbol> linear_symbol(const CanonicalPair& ct) {
  auto coeff = [](const RatSymbol& f, std::string_view v) { return f.derivative(v); };
  const RatSymbol a = coeff(ct.P(), kP), b = coeff(ct.P(), kQ), c = coeff(ct.Q(), kP), d = coeff(ct.Q(), kQ);
  for (const auto& x : {a, b, c, d})
    if (x.depends_on(kP) || x.depends_on(kQ)) return std::nullopt;
  if (!(ct.P() - a * RatSymbol::variable(kP) - b * RatSymbol::variable(kQ)).is_zero()) return std::nullopt;
  if (!(ct.Q() - c * RatSymbol::variable(kP) - d * RatSymbol::variable(kQ)).is_zero()) return std::nullopt;
  return sl2_u(a, b, c, d);
}

void cmd_star(const Options& o, Emitter& e) {
  e.add("result", star_product(parse_arg(o.lhs, "--lhs", o), parse_arg(o.rhs, "--rhs", o), o.order));
}

void cmd_bracket(const Options& o, Emitter& e) {
  RatSymbol f = parse_arg(o.lhs, "--lhs", o);
  RatSymbol g = parse_arg(o.rhs, "--rhs", o);
  if (o.bracket_type == "poisson") e.add("result", poisson_bracket(f, g));
  else if (o.bracket_type == "moyal") e.add("result", moyal_bracket(f, g, o.order));
  else throw CLI::ValidationError("--type", "expected moyal or poisson");
}

void cmd_verify_ct(const Options& o, Emitter& e) {
  RatSymbol P = parse_arg(o.P, "--P", o);
  RatSymbol Q = parse_arg(o.Q, "--Q", o);
  std::optional<std::uint32_t> gamma_order;
  if (o.order) gamma_order = *o.order;
  BracketReport r = check_canonical_pair(P, Q, o.kmax, gamma_order);
  e.add("is_canonical", r.is_canonical);
  e.add("poisson", r.poisson);
  for (const auto& [k, t] : r.moyal_terms) e.add("moyal_term_" + std::to_string(k), t);
  e.add_json("first_nonvanishing_correction",
             r.first_nonvanishing_correction ? std::to_string(*r.first_nonvanishing_correction) : "none",
             r.first_nonvanishing_correction ? json(*r.first_nonvanishing_correction) : json(nullptr));
  if (r.gamma_order) e.add_json("gamma_order", std::to_string(*r.gamma_order), *r.gamma_order);
}

void cmd_flow(const Options& o, Emitter& e) {
  if (o.sign != 1 && o.sign != -1) throw CLI::ValidationError("--sign", "must be 1 or -1");
  DiffOperator V = moyal_lie_vector(parse_generator(o.generator, o));
  RatSymbol f = parse_arg(o.target, "--target", o);
  FlowResult r = flow(V, f, o.order.value_or(4), o.sign);
  e.add("series", r.series);
  e.add("hbar_free", r.hbar_free);
  if (!o.closed.empty()) e.add("matches_closed_form", compare_closed_form(r, parse(o.closed, param_list(o))));
}

void cmd_ordering(const Options& o, Emitter& e) {
  std::string word;
  for (char c : o.word)
    if (c != ' ' && c != '*') word += c;
  if (word.empty()) throw CLI::ValidationError("--word", "is required");
  e.add("result", weyl_symbol_of_word(word));
}

void cmd_genfun(const Options& o, Emitter& e) {
  CanonicalPair ct(parse_arg(o.P, "--P", o), parse_arg(o.Q, "--Q", o));
  Relation rel = relation_from(o);
  GenfunReport r = genfun_pipeline(ct, rel);
  e.add("dT_dp", r.dT_dp);
  e.add("dT_dq", r.dT_dq);
  e.add("T", r.T);
  e.add("u", r.u);
  e.add("residual_Q", r.residual_Q);
  e.add("residual_P", r.residual_P);
  e.add("residuals_zero", r.residual_Q.is_zero() && r.residual_P.is_zero());
  e.add("hbar_independent", r.hbar_independent);
  e.add("covariance_condition", covariance_condition_check(r.u, ct, rel));
}

void cmd_kernel(const Options& o, Emitter& e, Format format) {
  CanonicalPair ct(parse_arg(o.P, "--P", o), parse_arg(o.Q, "--Q", o));
  Relation rel = relation_from(o);
  const KernelKind kind = kernel_kind_from_string(o.kind);
  std::optional<ExpSymbol> u = linear_symbol(ct);
  if (!u) u = genfun_pipeline(ct, rel).u;
  Kernel k = kernel_transform(*u, kind, rel);
  e.add("kind", kernel_kind_name(kind));
  e.add("u", *u);
  e.add_json("prefactor", format == Format::Latex ? to_latex(k.body.prefactor()) : to_plain(k.body.prefactor()),
             to_json(k.body.prefactor()));
  e.add("exponent", k.body.exponent());
  if (k.delta) {
    e.add("delta", *k.delta);
  } else {
    RatSymbol F = extract_generating_function(k);
    e.add("generating_function", F);
    if (kind == KernelKind::Position || kind == KernelKind::Mixed)
      e.add("classical_relations_hold", classical_genfun_check(F, kind, ct, rel));
  }
}

json error_json(const std::string& code, const std::string& message) {
  return {{"schema", 1}, {"status", "error"}, {"error", {{"code", code}, {"message", message}}}};
}

}  // namespace

CommandResult run(const std::vector<std::string>& args) {
  CommandResult result;
  Options o;
  CLI::App app{"Exact phase-space calculus: star products, brackets, flows, generating functions", "moyal"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "Show help for all subcommands");

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--params", o.params, "Parameter names, comma separated")->delimiter(',');
    sub->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"plain", "latex", "json"}));
  };
  auto* star = app.add_subcommand("star", "Star product lhs * rhs");
  star->add_option("--lhs", o.lhs)->required();
  star->add_option("--rhs", o.rhs)->required();
  star->add_option("--order", o.order, "Truncate at this power of hbar");
  add_common(star);

  auto* bracket = app.add_subcommand("bracket", "Moyal (default) or Poisson bracket");
  bracket->add_option("--lhs", o.lhs)->required();
  bracket->add_option("--rhs", o.rhs)->required();
  bracket->add_option("--type", o.bracket_type)->check(CLI::IsMember({"moyal", "poisson"}));
  bracket->add_option("--order", o.order, "Truncate at this power of hbar");
  add_common(bracket);

  auto* verify = app.add_subcommand("verify-ct", "Check that (P, Q) is canonical to all orders in hbar");
  verify->add_option("--P", o.P)->required();
  verify->add_option("--Q", o.Q)->required();
  verify->add_option("--order", o.order, "Expand in gamma to this order first");
  verify->add_option("--kmax", o.kmax, "Highest correction term");
  add_common(verify);

  auto* fl = app.add_subcommand("flow", "Truncated flow exp(sign i gamma V / hbar) f");
  fl->add_option("--generator", o.generator, "Terms m,n:coeff separated by ';'")->required();
  fl->add_option("--target", o.target)->required();
  fl->add_option("--order", o.order, "Truncation order in gamma (default 4)");
  fl->add_option("--sign", o.sign, "+1 or -1 (default -1)");
  fl->add_option("--closed", o.closed, "Closed form to compare against");
  add_common(fl);

  auto* ord = app.add_subcommand("ordering", "Weyl symbol of an operator word such as pqp");
  ord->add_option("--word", o.word)->required();
  add_common(ord);

  auto* gen = app.add_subcommand("genfun", "Solve for T and u = exp(2iT/hbar)");
  gen->add_option("--P", o.P)->required();
  gen->add_option("--Q", o.Q)->required();
  gen->add_option("--relation", o.relation, "none, sl2-d or sl2-a")->check(CLI::IsMember({"none", "sl2-d", "sl2-a"}));
  add_common(gen);

  auto* ker = app.add_subcommand("kernel", "Integral kernel of the transformation");
  ker->add_option("--P", o.P)->required();
  ker->add_option("--Q", o.Q)->required();
  ker->add_option("--kind", o.kind)->check(CLI::IsMember({"position", "mixed", "momentum", "mixed2"}));
  ker->add_option("--relation", o.relation, "none, sl2-d or sl2-a")->check(CLI::IsMember({"none", "sl2-d", "sl2-a"}));
  add_common(ker);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    std::ostringstream out, err;
    result.exit_code = app.exit(e, out, err);
    result.output = out.str();
    result.error_output = err.str();
    if (result.exit_code != 0) {
      result.status = Status::Error;
      result.exit_code = 2;
    }
    return result;
  }

  const Format format = format_from_string(o.format);
  Emitter e(format);
  std::string command;
  for (auto* sub : app.get_subcommands()) command = sub->get_name();
  try {
    if (command == "star") cmd_star(o, e);
    else if (command == "bracket") cmd_bracket(o, e);
    else if (command == "verify-ct") cmd_verify_ct(o, e);
    else if (command == "flow") cmd_flow(o, e);
    else if (command == "ordering") cmd_ordering(o, e);
    else if (command == "genfun") cmd_genfun(o, e);
    else if (command == "kernel") cmd_kernel(o, e, format);
  } catch (const CLI::ValidationError& err) {
    result.status = Status::Error;
    result.exit_code = 2;
    result.diagnostics.push_back(err.what());
    result.error_output = std::string("usage error: ") + err.what() + "\n";
    if (format == Format::Json) result.output = error_json("UsageError", err.what()).dump() + "\n";
    return result;
  } catch (const Error& err) {
    result.status = Status::Error;
    result.exit_code = 1;
    const std::string code(errc_name(err.code()));
    result.diagnostics.push_back(code + ": " + err.what());
    result.error_output = "error: " + code + ": " + err.what() + "\n";
    if (format == Format::Json) result.output = error_json(code, err.what()).dump() + "\n";
    return result;
  }

  result.payload = e.payload();
  if (format == Format::Json) {
    json doc = {{"schema", 1}, {"status", "ok"}, {"command", command}, {"payload", result.payload}, {"diagnostics", json::array()}};
    result.output = doc.dump() + "\n";
  } else {
    result.output = e.text(command == "star" || command == "bracket" || command == "ordering");
  }
  return result;
}

}  // namespace moyal::cli
