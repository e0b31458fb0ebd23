// Recursive-descent parser for the expression grammar in docs/grammar.md.

#include "moyal/parser.hpp"

#include <algorithm>
#include <cctype>

#include "moyal/errors.hpp"

namespace moyal {

namespace {

enum class Tok { Number, Ident, Plus, Minus, Star, Slash, Caret, LParen, RParen, End };

struct Token {
  Tok kind;
  std::size_t offset;
  std::string_view text;
};

std::string describe(const Token& t) {
  if (t.kind == Tok::End) return "end of input";
  return "'" + std::string(t.text) + "'";
}

class Parser {
 public:
  Parser(std::string_view text, const std::vector<std::string>& params) : text_(text), params_(params) {
    advance();
  }

  std::unique_ptr<ExprAST> run() {
    if (tok_.kind == Tok::End) fail(tok_.offset, "empty expression");
    auto e = expr();
    if (tok_.kind != Tok::End) {
      if (tok_.kind == Tok::RParen) fail(tok_.offset, "unmatched ')'");
      fail(tok_.offset, "expected operator before " + describe(tok_));
    }
    return e;
  }

 private:
  [[noreturn]] void fail(std::size_t offset, const std::string& message, Errc code = Errc::SyntaxError) const {
    std::size_t line = 1;
    std::size_t col = 1;
    for (std::size_t k = 0; k < offset && k < text_.size(); ++k) {
      if (text_[k] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw ParseError(code, offset, line, col, message);
  }

  void advance() {
    std::size_t k = pos_;
    while (k < text_.size() && (text_[k] == ' ' || text_[k] == '\t' || text_[k] == '\n' || text_[k] == '\r'))
      ++k;
    if (k >= text_.size()) {
      tok_ = {Tok::End, text_.size(), {}};
      pos_ = k;
      return;
    }
    const auto c = static_cast<unsigned char>(text_[k]);
    const std::size_t start = k;
    if (std::isdigit(c) != 0) {
      while (k < text_.size() && std::isdigit(static_cast<unsigned char>(text_[k])) != 0) ++k;
      if (k < text_.size() && (text_[k] == '.' || text_[k] == 'e' || text_[k] == 'E'))
        fail(start, "decimal literals are not supported; write a fraction such as 3/2");
      if (k < text_.size() && (std::isalpha(static_cast<unsigned char>(text_[k])) != 0 || text_[k] == '_'))
        fail(k, "implicit multiplication is not allowed; use '*'");
      tok_ = {Tok::Number, start, text_.substr(start, k - start)};
    } else if (std::isalpha(c) != 0 || c == '_') {
      while (k < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[k])) != 0 || text_[k] == '_'))
        ++k;
      tok_ = {Tok::Ident, start, text_.substr(start, k - start)};
    } else {
      ++k;
      Tok kind;
      switch (c) {
        case '+': kind = Tok::Plus; break;
        case '-': kind = Tok::Minus; break;
        case '*': kind = Tok::Star; break;
        case '/': kind = Tok::Slash; break;
        case '^': kind = Tok::Caret; break;
        case '(': kind = Tok::LParen; break;
        case ')': kind = Tok::RParen; break;
        default: {
          std::string shown = (c >= 0x20 && c < 0x7f) ? std::string(1, static_cast<char>(c))
                                                      : "\\x" + to_hex(c);
          fail(start, "unexpected character '" + shown + "'");
        }
      }
      tok_ = {kind, start, text_.substr(start, 1)};
    }
    pos_ = k;
  }

  static std::string to_hex(unsigned char c) {
    const char* digits = "0123456789abcdef";
    return {digits[c >> 4U], digits[c & 15U]};
  }

  void enter(std::size_t offset) {
    if (++depth_ > kMaxNestingDepth) fail(offset, "expression nested too deeply");
  }

  static std::unique_ptr<ExprAST> node(ExprAST::Kind kind, std::size_t offset) {
    auto n = std::make_unique<ExprAST>();
    n->kind = kind;
    n->offset = offset;
    return n;
  }

  std::unique_ptr<ExprAST> expr() {
    enter(tok_.offset);
    auto first = term();
    if (tok_.kind != Tok::Plus && tok_.kind != Tok::Minus) {
      --depth_;
      return first;
    }
    auto n = node(ExprAST::Kind::Sum, first->offset);
    n->ops.push_back('+');
    n->children.push_back(std::move(first));
    while (tok_.kind == Tok::Plus || tok_.kind == Tok::Minus) {
      n->ops.push_back(tok_.kind == Tok::Plus ? '+' : '-');
      advance();
      n->children.push_back(term());
    }
    --depth_;
    return n;
  }

  std::unique_ptr<ExprAST> term() {
    auto first = unary();
    if (tok_.kind != Tok::Star && tok_.kind != Tok::Slash) return first;
    auto n = node(ExprAST::Kind::Product, first->offset);
    n->ops.push_back('*');
    n->children.push_back(std::move(first));
    while (tok_.kind == Tok::Star || tok_.kind == Tok::Slash) {
      n->ops.push_back(tok_.kind == Tok::Star ? '*' : '/');
      advance();
      n->children.push_back(unary());
    }
    return n;
  }

  std::unique_ptr<ExprAST> unary() {
    if (tok_.kind == Tok::Minus) {
      const std::size_t at = tok_.offset;
      enter(at);
      advance();
      auto n = node(ExprAST::Kind::Negate, at);
      n->children.push_back(unary());
      --depth_;
      return n;
    }
    return power();
  }

  std::unique_ptr<ExprAST> power() {
    auto base = primary();
    if (tok_.kind != Tok::Caret) return base;
    advance();
    if (tok_.kind == Tok::Minus)
      fail(tok_.offset, "negative exponents are not allowed; write a division", Errc::NegativeExponent);
    if (tok_.kind != Tok::Number) fail(tok_.offset, "expected integer exponent, found " + describe(tok_));
    mpz_class e(std::string(tok_.text), 10);
    if (e > kMaxExponent) fail(tok_.offset, "exponent exceeds " + std::to_string(kMaxExponent));
    auto n = node(ExprAST::Kind::Pow, base->offset);
    n->exponent = static_cast<std::uint32_t>(e.get_ui());
    n->children.push_back(std::move(base));
    advance();
    if (tok_.kind == Tok::Caret) fail(tok_.offset, "chained '^' is ambiguous; add parentheses");
    return n;
  }

  std::unique_ptr<ExprAST> primary() {
    const Token t = tok_;
    switch (t.kind) {
      case Tok::Number: {
        auto n = node(ExprAST::Kind::Number, t.offset);
        n->number = mpz_class(std::string(t.text), 10);
        advance();
        reject_juxtaposition();
        return n;
      }
      case Tok::Ident: {
        std::unique_ptr<ExprAST> n;
        if (t.text == "i") {
          n = node(ExprAST::Kind::ImaginaryUnit, t.offset);
        } else if (t.text == kP || t.text == kQ || t.text == kHbar || t.text == kGamma ||
                   std::find(params_.begin(), params_.end(), t.text) != params_.end()) {
          n = node(ExprAST::Kind::Symbol, t.offset);
          n->name = std::string(t.text);
        } else {
          fail(t.offset, "unknown symbol '" + std::string(t.text) + "'", Errc::UnknownSymbol);
        }
        advance();
        reject_juxtaposition();
        return n;
      }
      case Tok::LParen: {
        enter(t.offset);
        advance();
        auto n = node(ExprAST::Kind::Group, t.offset);
        if (tok_.kind == Tok::RParen) fail(tok_.offset, "empty parentheses");
        n->children.push_back(expr());
        if (tok_.kind != Tok::RParen) fail(tok_.offset, "expected ')' before " + describe(tok_));
        advance();
        --depth_;
        reject_juxtaposition();
        return n;
      }
      case Tok::RParen:
        fail(t.offset, "unexpected ')'");
      case Tok::End:
        fail(t.offset, "unexpected end of input");
      default:
        fail(t.offset, "expected operand, found " + describe(t));
    }
  }

  void reject_juxtaposition() {
    if (tok_.kind == Tok::Number || tok_.kind == Tok::Ident || tok_.kind == Tok::LParen)
      fail(tok_.offset, "implicit multiplication is not allowed; use '*'");
  }

  std::string_view text_;
  const std::vector<std::string>& params_;
  std::size_t pos_ = 0;
  std::size_t depth_ = 0;
  Token tok_{Tok::End, 0, {}};
};

}  // namespace

bool is_reserved_name(std::string_view name) noexcept {
  return name == kP || name == kQ || name == kHbar || name == kGamma || name == "i";
}

std::unique_ptr<ExprAST> parse_ast(std::string_view text, const std::vector<std::string>& params) {
  for (const auto& name : params) {
    if (!is_identifier(name)) throw Error(Errc::InvalidArgument, "invalid parameter name '" + name + "'");
    if (is_reserved_name(name)) throw Error(Errc::InvalidArgument, "parameter name '" + name + "' is reserved");
  }
  return Parser(text, params).run();
}

RatSymbol lower(const ExprAST& ast) {
  using K = ExprAST::Kind;
  switch (ast.kind) {
    case K::Number: return RatSymbol(GaussianRational(mpq_class(ast.number)));
    case K::ImaginaryUnit: return RatSymbol::imaginary_unit();
    case K::Symbol: return RatSymbol::variable(ast.name);
    case K::Negate: return -lower(*ast.children[0]);
    case K::Group: return lower(*ast.children[0]);
    case K::Sum: {
      RatSymbol acc = lower(*ast.children[0]);
      for (std::size_t k = 1; k < ast.children.size(); ++k) {
        if (ast.ops[k] == '+') acc += lower(*ast.children[k]);
        else acc -= lower(*ast.children[k]);
      }
      return acc;
    }
    case K::Product: {
      RatSymbol acc = lower(*ast.children[0]);
      for (std::size_t k = 1; k < ast.children.size(); ++k) {
        RatSymbol f = lower(*ast.children[k]);
        if (ast.ops[k] == '*') {
          acc *= f;
        } else {
          if (f.is_zero()) throw Error(Errc::ZeroDenominator, "division by zero");
          acc /= f;
        }
      }
      return acc;
    }
    case K::Pow: return lower(*ast.children[0]).pow(static_cast<int>(ast.exponent));
  }
  throw Error(Errc::InvalidArgument, "malformed expression tree");
}

RatSymbol parse(std::string_view text, const std::vector<std::string>& params) {
  return lower(*parse_ast(text, params));
}

}  // namespace moyal
