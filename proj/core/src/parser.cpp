#include "chernob/parser.hpp"

#include <cctype>
#include <map>
#include <optional>

#include "chernob/errors.hpp"

namespace chernob {

namespace {

enum class TokKind { Nat, Ident, Plus, Minus, Star, Slash, Caret, LParen, RParen, End };

struct Token {
  TokKind kind;
  std::string text;
  std::size_t pos;
};

class Lexer {
 public:
  explicit Lexer(std::string_view text) : text_(text) { advance(); }

  const Token& peek() const { return current_; }

  Token next() {
    Token t = current_;
    advance();
    return t;
  }

 private:
  void advance() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (pos_ >= text_.size()) {
      current_ = Token{TokKind::End, "", pos_};
      return;
    }
    const std::size_t start = pos_;
    const char c = text_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      current_ = Token{TokKind::Nat, std::string(text_.substr(start, pos_ - start)), start};
      return;
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
        ++pos_;
      }
      current_ = Token{TokKind::Ident, std::string(text_.substr(start, pos_ - start)), start};
      return;
    }
    ++pos_;
    switch (c) {
      case '+': current_ = Token{TokKind::Plus, "+", start}; return;
      case '-': current_ = Token{TokKind::Minus, "-", start}; return;
      case '*': current_ = Token{TokKind::Star, "*", start}; return;
      case '/': current_ = Token{TokKind::Slash, "/", start}; return;
      case '^': current_ = Token{TokKind::Caret, "^", start}; return;
      case '(': current_ = Token{TokKind::LParen, "(", start}; return;
      case ')': current_ = Token{TokKind::RParen, ")", start}; return;
      default:
        throw ParseError("syntax error: unexpected character '" + std::string(1, c) + "'", start);
    }
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  Token current_{TokKind::End, "", 0};
};

class Parser {
 public:
  Parser(std::string_view text, std::span<const std::string> variables)
      : lexer_(text), n_(static_cast<int>(variables.size())) {
    for (int i = 0; i < n_; ++i) {
      const std::string& name = variables[static_cast<std::size_t>(i)];
      if (name.empty() || !std::isalpha(static_cast<unsigned char>(name.front()))) {
        throw ValidationError("invalid variable name '" + name + "'");
      }
      if (!index_.emplace(name, i).second) {
        throw ValidationError("duplicate variable name '" + name + "'");
      }
    }
    // A name "d<v>" with <v> declared would be ambiguous against the
    // differential syntax.
    for (const auto& [name, idx] : index_) {
      (void)idx;
      if (name.size() > 1 && name.front() == 'd' && index_.count(name.substr(1)) > 0) {
        throw ValidationError("variable name '" + name +
                              "' collides with the differential of '" + name.substr(1) + "'");
      }
    }
  }

  Polynomial parse_poly_toplevel() {
    Polynomial p = parse_poly();
    expect_end();
    return p;
  }

  OneForm parse_form_toplevel() {
    form_context_ = true;
    std::vector<Polynomial> coeffs(static_cast<std::size_t>(n_), Polynomial::zero(n_));
    bool negative = accept(TokKind::Minus);
    for (;;) {
      auto [coeff, var] = parse_fterm();
      const Polynomial signed_coeff = negative ? -coeff : coeff;
      coeffs[static_cast<std::size_t>(var)] = coeffs[static_cast<std::size_t>(var)] + signed_coeff;
      if (accept(TokKind::Plus)) {
        negative = false;
      } else if (accept(TokKind::Minus)) {
        negative = true;
      } else {
        break;
      }
    }
    expect_end();
    return OneForm(std::move(coeffs));
  }

 private:
  Polynomial parse_poly() {
    bool negative = accept(TokKind::Minus);
    Polynomial sum = parse_term();
    if (negative) sum = -sum;
    for (;;) {
      if (accept(TokKind::Plus)) {
        sum = sum + parse_term();
      } else if (accept(TokKind::Minus)) {
        sum = sum - parse_term();
      } else {
        return sum;
      }
    }
  }

  Polynomial parse_term() {
    Polynomial prod = parse_factor();
    while (accept(TokKind::Star)) prod = prod * parse_factor();
    return prod;
  }

  Polynomial parse_factor() {
    const Token t = lexer_.peek();
    switch (t.kind) {
      case TokKind::Nat:
        return Polynomial::constant(n_, parse_rational());
      case TokKind::Ident: {
        lexer_.next();
        const int var = lookup_variable(t);
        std::uint32_t power = 1;
        if (accept(TokKind::Caret)) power = parse_exponent();
        return Polynomial::from_term(Rational(1), Monomial::variable(n_, var, power));
      }
      case TokKind::LParen: {
        lexer_.next();
        Polynomial inner = parse_poly();
        if (!accept(TokKind::RParen)) {
          throw ParseError("syntax error: expected ')'", lexer_.peek().pos);
        }
        return inner;
      }
      default:
        throw ParseError("syntax error: expected a factor", t.pos);
    }
  }

  Rational parse_rational() {
    const Token numTok = lexer_.next();
    BigInt numerator(numTok.text);
    if (accept(TokKind::Slash)) {
      const Token denTok = lexer_.peek();
      if (denTok.kind != TokKind::Nat) {
        throw ParseError("syntax error: expected a natural number after '/'", denTok.pos);
      }
      lexer_.next();
      BigInt denominator(denTok.text);
      if (denominator == 0) throw ParseError("zero denominator in rational literal", denTok.pos);
      return Rational(numerator, denominator);
    }
    return Rational(numerator);
  }

  std::uint32_t parse_exponent() {
    const Token t = lexer_.peek();
    if (t.kind != TokKind::Nat) {
      throw ParseError("exponent must be a non-negative integer literal", t.pos);
    }
    lexer_.next();
    unsigned long value = 0;
    try {
      value = std::stoul(t.text);
    } catch (const std::exception&) {
      throw ParseError("exponent out of range", t.pos);
    }
    if (value > 1'000'000) throw ParseError("exponent out of range", t.pos);
    return static_cast<std::uint32_t>(value);
  }

  // An fterm is (factor "*")* "d" variable; returns the accumulated
  // coefficient and the variable index of the trailing differential.
  std::pair<Polynomial, int> parse_fterm() {
    Polynomial coeff = Polynomial::constant(n_, 1);
    for (;;) {
      const Token t = lexer_.peek();
      if (t.kind == TokKind::Ident) {
        if (auto var = differential_variable(t.text)) {
          lexer_.next();
          return {coeff, *var};
        }
      }
      coeff = coeff * parse_factor();
      if (!accept(TokKind::Star)) {
        throw ParseError("syntax error: expected a differential to end the term",
                         lexer_.peek().pos);
      }
    }
  }

  std::optional<int> differential_variable(const std::string& name) const {
    if (name.size() < 2 || name.front() != 'd') return std::nullopt;
    auto it = index_.find(name.substr(1));
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }

  int lookup_variable(const Token& t) const {
    auto it = index_.find(t.text);
    if (it != index_.end()) return it->second;
    if (form_context_ && t.text.size() > 1 && t.text.front() == 'd') {
      throw ParseError("differential of unknown variable '" + t.text.substr(1) + "'", t.pos);
    }
    throw ParseError("unknown identifier '" + t.text + "'", t.pos);
  }

  bool accept(TokKind kind) {
    if (lexer_.peek().kind != kind) return false;
    lexer_.next();
    return true;
  }

  void expect_end() {
    if (lexer_.peek().kind != TokKind::End) {
      throw ParseError("syntax error: unexpected trailing input", lexer_.peek().pos);
    }
  }

  Lexer lexer_;
  int n_;
  bool form_context_ = false;
  std::map<std::string, int> index_;
};

}  // namespace

Polynomial parse_polynomial(std::string_view text, std::span<const std::string> variables) {
  return Parser(text, variables).parse_poly_toplevel();
}

OneForm parse_one_form(std::string_view text, std::span<const std::string> variables) {
  return Parser(text, variables).parse_form_toplevel();
}

}  // namespace chernob
