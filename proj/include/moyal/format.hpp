#pragma once

#include <string>

#include "json.hpp"
#include "moyal/exp_symbol.hpp"
#include "moyal/gamma_series.hpp"

namespace moyal {

enum class Format { Plain, Latex, Json };

/// Parses "plain", "latex" or "json"; throws Error(InvalidArgument).
Format format_from_string(const std::string& name);

// Plain output is accepted by parse() and reproduces the input exactly.
// Terms are ordered by ascending hbar degree, ascending gamma degree,
// descending (p, q) total degree, descending p degree, then parameters.
std::string to_plain(const Poly& f);
std::string to_plain(const RatSymbol& f);
std::string to_plain(const GaussianRational& c);
std::string to_plain(const GammaSeries& s);
std::string to_plain(const Prefactor& pre);
std::string to_plain(const ExpSymbol& u);

std::string to_latex(const Poly& f);
std::string to_latex(const RatSymbol& f);
std::string to_latex(const GammaSeries& s);
std::string to_latex(const Prefactor& pre);
std::string to_latex(const ExpSymbol& u);

nlohmann::json to_json(const GaussianRational& c);
nlohmann::json to_json(const Poly& f);
nlohmann::json to_json(const RatSymbol& f);
nlohmann::json to_json(const GammaSeries& s);
nlohmann::json to_json(const Prefactor& pre);
nlohmann::json to_json(const ExpSymbol& u);

// Inverse of to_json; throw Error(JsonFormat) on malformed documents.
GaussianRational gaussian_from_json(const nlohmann::json& j);
Poly poly_from_json(const nlohmann::json& j);
RatSymbol ratsymbol_from_json(const nlohmann::json& j);

std::string render(const RatSymbol& f, Format format);
std::string render(const GammaSeries& s, Format format);
std::string render(const ExpSymbol& u, Format format);

}  // namespace moyal
