#include "poly_parse.hpp"

#include <cctype>
#include <ostream>

namespace varembed {

namespace {

constexpr std::uint32_t kMaxExponent = 1u << 30;
constexpr int kMaxNesting = 500;

struct Lexer {
  std::string_view text;
  std::size_t pos = 0;
  std::size_t line = 1, col = 1;

  void skip_ws() {
    while (pos < text.size()) {
      char c = text[pos];
      if (c == '\n') { ++line; col = 1; ++pos; }
      else if (c == ' ' || c == '\t' || c == '\r') { ++col; ++pos; }
      else break;
    }
  }
  bool eof() { skip_ws(); return pos == text.size(); }
  char peek() { skip_ws(); return pos < text.size() ? text[pos] : '\0'; }
  void advance(std::size_t n) { pos += n; col += n; }

  [[noreturn]] void fail(const std::string& what) {
    skip_ws();
    throw ParseError(what, line, col);
  }

  bool eat(char c) {
    if (peek() == c) { advance(1); return true; }
    return false;
  }

  // Unsigned decimal literal.
  Int integer() {
    skip_ws();
    std::size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
      ++pos;
    if (pos == start) fail("expected a number");
    col += pos - start;
    return Int(std::string(text.substr(start, pos - start)), 10);
  }

  std::string ident() {
    skip_ws();
    std::size_t start = pos;
    if (pos < text.size() &&
        (std::isalpha(static_cast<unsigned char>(text[pos])))) {
      ++pos;
      while (pos < text.size() &&
             (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_'))
        ++pos;
    }
    if (pos == start) fail("expected an identifier");
    col += pos - start;
    return std::string(text.substr(start, pos - start));
  }
};

struct Parser {
  Lexer lex;
  VarContextPtr ctx;
  int depth = 0;

  Polynomial expr() {
    if (++depth > kMaxNesting) lex.fail("expression nested too deeply");
    bool negate = lex.eat('-');
    std::vector<Polynomial> addends;
    addends.push_back(term());
    if (negate) addends.back() = -addends.back();
    for (;;) {
      if (lex.eat('+')) addends.push_back(term());
      else if (lex.eat('-')) addends.push_back(-term());
      else break;
    }
    --depth;
    return sum(std::move(addends));
  }

  // Long canonical strings are a flat sum of single-term products; collapsing
  // those through one sort avoids quadratic merge chains.
  Polynomial sum(std::vector<Polynomial> addends) {
    if (addends.size() == 1) return std::move(addends[0]);
    bool all_simple = true;
    std::size_t total = 0;
    for (const Polynomial& p : addends) {
      total += p.term_count();
      if (p.term_count() > 1) all_simple = false;
    }
    if (all_simple) {
      std::vector<Polynomial::Term> terms;
      terms.reserve(total);
      for (Polynomial& p : addends)
        if (!p.is_zero()) terms.push_back(p.terms()[0]);
      return Polynomial::from_terms(ctx, std::move(terms));
    }
    // Balanced pairwise folding keeps repeated merging near linearithmic.
    while (addends.size() > 1) {
      std::vector<Polynomial> next;
      next.reserve((addends.size() + 1) / 2);
      for (std::size_t i = 0; i + 1 < addends.size(); i += 2)
        next.push_back(addends[i] + addends[i + 1]);
      if (addends.size() % 2) next.push_back(std::move(addends.back()));
      addends = std::move(next);
    }
    return std::move(addends[0]);
  }

  Polynomial term() {
    Polynomial p = factor();
    while (lex.eat('*')) p = p * factor();
    return p;
  }

  Polynomial factor() {
    Polynomial p = base();
    if (lex.eat('^')) {
      if (!std::isdigit(static_cast<unsigned char>(lex.peek())))
        lex.fail("exponent must be an unsigned integer");
      Int e = lex.integer();
      if (e > kMaxExponent) lex.fail("exponent too large");
      p = p.pow(std::uint32_t(e.get_ui()));
    }
    return p;
  }

  Polynomial base() {
    char c = lex.peek();
    if (std::isdigit(static_cast<unsigned char>(c))) {
      Int num = lex.integer();
      if (lex.peek() == '/') {
        std::size_t l = lex.line, co = lex.col;
        lex.advance(1);
        if (!std::isdigit(static_cast<unsigned char>(lex.peek())))
          lex.fail("expected a denominator");
        Int den = lex.integer();
        if (den == 0) throw ParseError("zero denominator", l, co);
        Rational r(num, den);
        r.canonicalize();
        return Polynomial::constant(ctx, r);
      }
      return Polynomial::constant(ctx, Rational(num));
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t l = lex.line, co = lex.col;
      std::string name = lex.ident();
      auto idx = ctx->index_of(name);
      if (!idx)
        throw Error(Errc::UnknownVariable,
                    "unknown variable '" + name + "' (line " + std::to_string(l) +
                        ", column " + std::to_string(co) + ")");
      return Polynomial::variable(ctx, *idx);
    }
    if (c == '(') {
      lex.advance(1);
      Polynomial p = expr();
      if (!lex.eat(')')) lex.fail("expected ')'");
      return p;
    }
    if (c == '\0') lex.fail("unexpected end of input");
    lex.fail(std::string("unexpected character '") + c + "'");
  }

  Polynomial run() {
    Polynomial p = expr();
    if (!lex.eof()) lex.fail("unexpected trailing input");
    return p;
  }
};

}  // namespace

Polynomial parse_polynomial(std::string_view text, VarContextPtr ctx) {
  Parser parser{Lexer{text}, std::move(ctx)};
  return parser.run();
}

Polynomial parse_polynomial(std::string_view text) {
  // Collect identifiers in order of first appearance.
  std::vector<std::string> names;
  for (std::size_t i = 0; i < text.size();) {
    char c = text[i];
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t start = i++;
      while (i < text.size() &&
             (std::isalnum(static_cast<unsigned char>(text[i])) || text[i] == '_'))
        ++i;
      std::string name(text.substr(start, i - start));
      bool seen = false;
      for (const std::string& n : names) seen = seen || n == name;
      if (!seen) names.push_back(std::move(name));
    } else {
      ++i;
    }
  }
  return parse_polynomial(text, VarContext::make(std::move(names)));
}

std::string format_polynomial(const Polynomial& p) {
  if (p.is_zero()) return "0";
  const VarContext& ctx = *p.context();
  std::string out;
  out.reserve(p.term_count() * 8);
  bool first = true;
  Rational abs;
  for (const auto& t : p.terms()) {
    bool neg = t.coeff < 0;
    if (first) {
      if (neg) out += '-';
      first = false;
    } else {
      out += neg ? " - " : " + ";
    }
    abs = neg ? Rational(-t.coeff) : t.coeff;
    if (t.mono.is_one()) {
      out += to_string(abs);
    } else {
      if (abs != 1) {
        out += to_string(abs);
        out += '*';
      }
      bool first_factor = true;
      for (const auto& f : t.mono.factors()) {
        if (!first_factor) out += '*';
        first_factor = false;
        out += ctx.name(f.var);
        if (f.exp != 1) {
          out += '^';
          out += std::to_string(f.exp);
        }
      }
    }
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const Polynomial& p) {
  return os << format_polynomial(p);
}

}  // namespace varembed
