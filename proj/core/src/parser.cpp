#include "finitype/parser.hpp"

#include <cctype>
#include <string>

#include "finitype/errors.hpp"

namespace finitype {
namespace {

class Parser {
 public:
  Parser(std::string_view text, std::size_t n, std::string_view univariate = {})
      : text_(text), n_(n), univariate_(univariate) {}

  Poly parse_all() {
    Poly p = expr();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected character '" + std::string(1, text_[pos_]) + "'");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const { throw ParseError("syntax error: " + what, pos_); }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool peek(char c) {
    skip_ws();
    return pos_ < text_.size() && text_[pos_] == c;
  }

  bool accept(char c) {
    if (!peek(c)) return false;
    ++pos_;
    return true;
  }

  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }

  bool at_digit() {
    skip_ws();
    return pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]));
  }

  mpz_class natural() {
    if (!at_digit()) fail("expected natural number");
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    return mpz_class(std::string(text_.substr(start, pos_ - start)));
  }

  unsigned small_natural() {
    std::size_t start = pos_;
    mpz_class v = natural();
    if (v > 1000000) throw ParseError("exponent too large", start);
    return static_cast<unsigned>(v.get_ui());
  }

  std::string identifier() {
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isalpha(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  Poly expr() {
    Poly acc = term();
    while (true) {
      if (accept('+')) {
        acc += term();
      } else if (accept('-')) {
        acc -= term();
      } else {
        return acc;
      }
    }
  }

  Poly term() {
    if (accept('-')) return -term();
    Poly acc = factor();
    while (accept('*')) acc = acc * factor();
    return acc;
  }

  Poly factor() {
    Poly b = base();
    if (accept('^')) b = b.pow(small_natural());
    return b;
  }

  Poly base() {
    skip_ws();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    const char c = text_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c))) return rational();
    if (c == '(') {
      ++pos_;
      Poly inner = expr();
      expect(')');
      return inner;
    }
    if (c == '|') {
      ++pos_;
      Poly inner = expr();
      expect('|');
      std::size_t at = pos_;
      expect('^');
      unsigned e = small_natural();
      if (e == 0 || e % 2 != 0) throw ParseError("modulus must be raised to an even power", at);
      return (inner * inner.conj_swap()).pow(e / 2);
    }
    if (std::isalpha(static_cast<unsigned char>(c))) return named();
    fail("unexpected character '" + std::string(1, c) + "'");
  }

  Poly rational() {
    mpz_class num = natural();
    mpz_class den = 1;
    if (accept('/')) {
      std::size_t at = pos_;
      den = natural();
      if (den == 0) throw ParseError("zero denominator", at);
    }
    mpq_class q(num, den);
    q.canonicalize();
    return Poly::constant(n_, GaussianRational(q));
  }

  Poly named() {
    const std::size_t start = pos_;
    std::string id = identifier();
    if (!univariate_.empty()) {
      if (id == univariate_) return Poly::variable(1, 0);
      if (id == "i") return Poly::constant(n_, GaussianRational::i());
      throw ParseError("unknown identifier '" + id + "'", start);
    }
    if (id == "i") return Poly::constant(n_, GaussianRational::i());
    if (id == "Re" || id == "Im") {
      expect('(');
      Poly inner = expr();
      expect(')');
      Poly conj = inner.conj_swap();
      if (id == "Re") return (inner + conj) * GaussianRational(mpq_class(1, 2));
      // (e - ē)/(2i) = -i/2 · (e - ē)
      return (inner - conj) * GaussianRational(0, mpq_class(-1, 2));
    }
    if (id == "z" || id == "zb") {
      if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
        throw ParseError("variable needs an index", pos_);
      }
      mpz_class idx = natural();
      if (idx == 0 || idx > n_) {
        throw ParseError("variable index out of range: " + id + idx.get_str() + " with n=" + std::to_string(n_),
                         start);
      }
      std::size_t j = idx.get_ui() - 1;
      return id == "z" ? Poly::variable(n_, j) : Poly::conj_variable(n_, j);
    }
    throw ParseError("unknown identifier '" + id + "'", start);
  }

  std::string_view text_;
  std::size_t n_;
  std::string_view univariate_;
  std::size_t pos_ = 0;
};

}  // namespace

Poly parse_expression(std::string_view text, std::size_t n) { return Parser(text, n).parse_all(); }

RealPoly parse_poly(std::string_view text, std::size_t n) { return RealPoly(parse_expression(text, n)); }

HoloPoly parse_holo_poly(std::string_view text, std::size_t n) { return HoloPoly(parse_expression(text, n)); }

GaussianRational parse_scalar(std::string_view text) {
  Poly p = parse_expression(text, 0);
  return p.constant_term();
}

Point parse_point(std::string_view text, std::size_t n) {
  std::size_t b = text.find_first_not_of(" \t\n");
  std::size_t e = text.find_last_not_of(" \t\n");
  if (b == std::string_view::npos) throw ParseError("empty point", 0);
  if (text[b] != '(' || text[e] != ')') throw ParseError("point must be written as (c1, ..., cn)", b);
  Point out;
  std::size_t depth = 0;
  std::size_t start = b + 1;
  for (std::size_t i = b + 1; i <= e; ++i) {
    char c = text[i];
    if (c == '(') ++depth;
    if ((c == ',' && depth == 0) || i == e) {
      std::string_view piece = text.substr(start, i - start);
      try {
        out.push_back(parse_scalar(piece));
      } catch (const ParseError& err) {
        throw ParseError("bad coordinate '" + std::string(piece) + "'", start + err.position());
      }
      start = i + 1;
    }
    if (c == ')' && depth > 0) --depth;
  }
  if (out.size() != n) {
    throw InputError("point " + std::string(text) + " has " + std::to_string(out.size()) + " coordinates, expected " +
                     std::to_string(n));
  }
  return out;
}

std::vector<GaussianRational> parse_univariate(std::string_view text, std::string_view symbol) {
  Poly p = Parser(text, 1, symbol).parse_all();
  if (!p.is_holomorphic()) throw InputError("curve component must be holomorphic in " + std::string(symbol));
  std::vector<GaussianRational> out(static_cast<std::size_t>(std::max(p.degree(), 0)) + 1);
  for (const auto& [m, c] : p.terms()) out[m.holo(0)] = c;
  while (out.size() > 1 && out.back().is_zero()) out.pop_back();
  return out;
}

std::size_t max_variable_index(std::string_view text) {
  std::size_t best = 0;
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] != 'z') continue;
    if (i > 0 && std::isalpha(static_cast<unsigned char>(text[i - 1]))) continue;
    std::size_t j = i + 1;
    if (j < text.size() && text[j] == 'b') ++j;
    std::size_t v = 0;
    bool any = false;
    while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) {
      v = v * 10 + static_cast<std::size_t>(text[j] - '0');
      any = true;
      ++j;
    }
    if (any) best = std::max(best, v);
  }
  return best;
}

}  // namespace finitype
