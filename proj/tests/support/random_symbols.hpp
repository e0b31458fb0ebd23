#pragma once

#include <random>
#include <string>
#include <vector>

#include "moyal/rat_symbol.hpp"

namespace moyal::testing {

inline GaussianRational random_coeff(std::mt19937& rng, bool complex = true) {
  std::uniform_int_distribution<int> num(-5, 5), den(1, 4), coin(0, 3);
  mpq_class re(num(rng), den(rng));
  re.canonicalize();
  mpq_class im(0);
  if (complex && coin(rng) == 0) {
    im = mpq_class(num(rng), den(rng));
    im.canonicalize();
  }
  return {re, im};
}

/// Random polynomial of total degree ≤ max_degree in the given variables.
inline Poly random_poly(std::mt19937& rng, const std::vector<std::string>& vars, unsigned max_degree,
                        unsigned max_terms = 6, bool complex = true) {
  std::uniform_int_distribution<unsigned> nterms(1, max_terms), deg(0, max_degree), pick(0, vars.size() - 1);
  Poly out;
  const unsigned n = nterms(rng);
  for (unsigned t = 0; t < n; ++t) {
    Poly mono(random_coeff(rng, complex));
    const unsigned d = deg(rng);
    for (unsigned k = 0; k < d; ++k) mono *= Poly::variable(vars[pick(rng)]);
    out += mono;
  }
  return out;
}

inline RatSymbol random_pq_poly(std::mt19937& rng, unsigned max_degree, unsigned max_terms = 6) {
  return RatSymbol(random_poly(rng, {"p", "q"}, max_degree, max_terms));
}

inline RatSymbol random_ratsymbol(std::mt19937& rng, const std::vector<std::string>& vars, unsigned num_degree,
                                  unsigned den_degree) {
  Poly den;
  do den = random_poly(rng, vars, den_degree, 3);
  while (den.is_zero());
  return RatSymbol::normalized(random_poly(rng, vars, num_degree, 5), den);
}

}  // namespace moyal::testing
