#include "qball/parse.hpp"

#include <cctype>
#include <optional>

#include "qball/error.hpp"
#include "qball/polmat.hpp"
#include "qball/qmatrix.hpp"

namespace qball {

const char* to_string(AtomFamily f) noexcept {
  switch (f) {
    case AtomFamily::scalar: return "scalar";
    case AtomFamily::pol: return "pol";
    case AtomFamily::boundary: return "boundary";
    case AtomFamily::square: return "square";
  }
  return "?";
}

namespace {

struct Token {
  enum Kind { ident, number, punct, end } kind;
  std::string text;
  std::size_t pos;
};

[[noreturn]] void fail_at(std::size_t pos, const std::string& msg) {
  throw Error(ErrorKind::parse, "at " + std::to_string(pos + 1) + ": " + msg);
}

std::vector<Token> tokenize(const std::string& s) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < s.size()) {
    const unsigned char c = static_cast<unsigned char>(s[i]);
    if (std::isspace(c)) {
      ++i;
    } else if (std::isalpha(c)) {
      const std::size_t start = i;
      while (i < s.size() && std::isalpha(static_cast<unsigned char>(s[i]))) ++i;
      out.push_back({Token::ident, s.substr(start, i - start), start});
    } else if (std::isdigit(c)) {
      const std::size_t start = i;
      while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
      out.push_back({Token::number, s.substr(start, i - start), start});
    } else if (std::string("+-*^()[],/").find(static_cast<char>(c)) != std::string::npos) {
      out.push_back({Token::punct, std::string(1, static_cast<char>(c)), i});
      ++i;
    } else {
      fail_at(i, std::string("unexpected character '") + static_cast<char>(c) + "'");
    }
  }
  out.push_back({Token::end, "", s.size()});
  return out;
}

std::optional<GenClass> generator_class(const std::string& name) {
  if (name == "z") return GenClass::z;
  if (name == "zs") return GenClass::zs;
  if (name == "zeta") return GenClass::zeta;
  if (name == "zetas") return GenClass::zetas;
  if (name == "t") return GenClass::t;
  return std::nullopt;
}

AtomFamily family_of(GenClass c) {
  switch (c) {
    case GenClass::z:
    case GenClass::zs: return AtomFamily::pol;
    case GenClass::zeta:
    case GenClass::zetas: return AtomFamily::boundary;
    case GenClass::t: return AtomFamily::square;
  }
  return AtomFamily::scalar;
}

class Parser {
 public:
  Parser(std::vector<Token> toks, int n, AlgebraPtr alg)
      : toks_(std::move(toks)), n_(n), alg_(std::move(alg)) {}

  NCPoly parse_all() {
    NCPoly p = expr();
    if (peek().kind != Token::end) fail_at(peek().pos, "unexpected '" + peek().text + "'");
    return p;
  }

 private:
  const Token& peek() const { return toks_[pos_]; }
  const Token& next() { return toks_[pos_++]; }
  bool at_punct(char c) const { return peek().kind == Token::punct && peek().text[0] == c; }
  void expect(char c) {
    if (!at_punct(c)) fail_at(peek().pos, std::string("expected '") + c + "'");
    ++pos_;
  }

  static bool scalar_only(const NCPoly& p) {
    return p.is_zero() || (p.size() == 1 && p.begin()->first.empty());
  }

  NCPoly mul(const NCPoly& a, const NCPoly& b) const {
    if (scalar_only(a)) return b * a.scalar_part();
    if (scalar_only(b)) return a * b.scalar_part();
    return alg_->multiply(a, b);
  }

  NCPoly expr() {
    bool neg = false;
    if (at_punct('+') || at_punct('-')) neg = next().text[0] == '-';
    NCPoly acc = term();
    if (neg) acc = -acc;
    while (at_punct('+') || at_punct('-')) {
      const bool minus = next().text[0] == '-';
      const NCPoly t = term();
      acc = minus ? acc - t : acc + t;
    }
    return acc;
  }

  NCPoly term() {
    NCPoly acc = factor();
    while (at_punct('*')) {
      ++pos_;
      acc = mul(acc, factor());
    }
    return acc;
  }

  long integer() {
    if (peek().kind != Token::number) fail_at(peek().pos, "expected an integer");
    const Token& t = next();
    if (t.text.size() > 9) fail_at(t.pos, "integer too large");
    return std::stol(t.text);
  }

  NCPoly factor() {
    const std::size_t at = peek().pos;
    NCPoly base = atom();
    if (!at_punct('^')) return base;
    ++pos_;
    bool neg = false;
    if (at_punct('+') || at_punct('-')) neg = next().text[0] == '-';
    const long e = integer();
    if (!neg) {
      if (scalar_only(base)) return NCPoly(base.scalar_part().pow(static_cast<int>(e)));
      return alg_->power(base, static_cast<int>(e));
    }
    if (!scalar_only(base)) fail_at(at, "negative exponent on a non-scalar");
    if (base.is_zero()) throw Error(ErrorKind::division_by_zero, "0 raised to a negative power");
    return NCPoly(base.scalar_part().pow(-static_cast<int>(e)));
  }

  NCPoly atom() {
    const Token& t = peek();
    if (t.kind == Token::number) {
      ++pos_;
      mpq_class value(mpz_class(t.text));
      if (at_punct('/')) {
        ++pos_;
        if (peek().kind != Token::number) fail_at(peek().pos, "expected a denominator");
        const mpz_class den(next().text);
        if (den == 0) throw Error(ErrorKind::division_by_zero, "zero denominator");
        value /= den;
      }
      return NCPoly(VScalar(value));
    }
    if (at_punct('(')) {
      ++pos_;
      NCPoly inner = expr();
      expect(')');
      return inner;
    }
    if (t.kind != Token::ident) fail_at(t.pos, t.kind == Token::end ? "unexpected end of input" : "unexpected '" + t.text + "'");
    ++pos_;
    if (t.text == "q") return NCPoly(VScalar::q_pow(1));
    if (t.text == "v") return NCPoly(VScalar::v_pow(1));
    const auto cls = generator_class(t.text);
    if (!cls) fail_at(t.pos, "unknown symbol '" + t.text + "'");
    expect('[');
    const long i = integer();
    expect(',');
    const long j = integer();
    expect(']');
    const long bound = *cls == GenClass::t ? 2L * n_ : n_;
    if (i < 1 || i > bound || j < 1 || j > bound) {
      throw Error(ErrorKind::index_range, "index out of range in " + t.text + "[" + std::to_string(i) +
                                              "," + std::to_string(j) + "] for n = " + std::to_string(n_));
    }
    return alg_->generator_poly({*cls, static_cast<int>(i), static_cast<int>(j)});
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  int n_;
  AlgebraPtr alg_;
};

}  // namespace

ParsedExpr parse_expr(const std::string& text, int n) {
  if (n < 1) throw Error(ErrorKind::precondition, "n must be positive");
  std::vector<Token> toks = tokenize(text);
  ParsedExpr out;
  for (const Token& t : toks) {
    if (t.kind != Token::ident) continue;
    const auto cls = generator_class(t.text);
    if (!cls) continue;
    const AtomFamily f = family_of(*cls);
    if (out.family != AtomFamily::scalar && out.family != f) {
      fail_at(t.pos, std::string("cannot mix ") + to_string(out.family) + " and " + to_string(f) + " atoms");
    }
    out.family = f;
  }
  switch (out.family) {
    case AtomFamily::scalar: break;
    case AtomFamily::pol: out.algebra = pol_algebra(n, PolFamily::domain); break;
    case AtomFamily::boundary: out.algebra = pol_algebra(n, PolFamily::boundary); break;
    case AtomFamily::square: out.algebra = mat_algebra(2 * n, 2 * n, GenClass::t); break;
  }
  Parser p(std::move(toks), n, out.algebra);
  out.value = p.parse_all();
  return out;
}

std::string render(const ParsedExpr& e) {
  if (!e.algebra) return e.value.scalar_part().to_string();
  return e.algebra->render(e.value);
}

}  // namespace qball
