#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

#include "moyal/rat_symbol.hpp"

namespace moyal {

struct ExprAST {
  // Sum and Product are n-ary: ops[k] ('+'/'-' or '*'/'/') joins children[k]
  // to what precedes it; ops[0] is unused.
  enum class Kind { Number, ImaginaryUnit, Symbol, Negate, Sum, Product, Pow, Group };

  Kind kind;
  std::size_t offset = 0;  // byte offset of the node's first token
  mpz_class number;        // Number
  std::string name;        // Symbol
  std::uint32_t exponent = 0;  // Pow
  std::vector<char> ops;       // Sum, Product
  std::vector<std::unique_ptr<ExprAST>> children;
};

/// Limits that keep hostile input from exhausting the stack or memory.
inline constexpr std::size_t kMaxNestingDepth = 200;
inline constexpr std::uint32_t kMaxExponent = 4096;

/// Names that can never be declared as parameters.
bool is_reserved_name(std::string_view name) noexcept;

/// Parses without lowering. Throws ParseError (SyntaxError, UnknownSymbol,
/// NegativeExponent); `params` must be identifiers outside the reserved set.
std::unique_ptr<ExprAST> parse_ast(std::string_view text, const std::vector<std::string>& params = {});

/// Lowers an AST into its canonical rational function.
RatSymbol lower(const ExprAST& ast);

RatSymbol parse(std::string_view text, const std::vector<std::string>& params = {});

}  // namespace moyal
