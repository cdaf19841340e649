#include "colink/parse.hpp"

#include <fmt/format.h>

#include <cctype>
#include <optional>

#include "colink/casimir.hpp"
#include "colink/homspace.hpp"
#include "colink/pol.hpp"
#include "colink/uq.hpp"

namespace colink {

namespace {

struct Lexer {
  std::string_view text;
  size_t pos = 0;

  void skipSpace() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos])))
      ++pos;
  }
  bool atEnd() {
    skipSpace();
    return pos >= text.size();
  }
  char peek() {
    skipSpace();
    return pos < text.size() ? text[pos] : '\0';
  }
  bool consume(char c) {
    if (peek() != c) return false;
    ++pos;
    return true;
  }
  void expect(char c) {
    if (!consume(c))
      throw ParseError(fmt::format("expected '{}'", c), pos);
  }

  std::optional<std::string> ident() {
    skipSpace();
    size_t start = pos;
    auto alpha = [&](char c) {
      return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
    };
    auto alnum = [&](char c) {
      return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
    };
    if (pos >= text.size() || !alpha(text[pos])) return std::nullopt;
    while (pos < text.size() && alnum(text[pos])) ++pos;
    return std::string(text.substr(start, pos - start));
  }

  std::optional<Int> integer() {
    skipSpace();
    size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
      ++pos;
    if (pos == start) return std::nullopt;
    return Int(std::string(text.substr(start, pos - start)), 10);
  }

  // signed exponent after '^'; must fit in int
  int exponent() {
    skipSpace();
    size_t at = pos;
    bool neg = consume('-');
    if (!neg) consume('+');
    auto n = integer();
    if (!n) throw ParseError("expected an integer exponent", pos);
    if (!n->fits_sint_p()) throw ParseError("exponent out of range", at);
    int k = static_cast<int>(n->get_si());
    return neg ? -k : k;
  }
};

// inverse partner of a generator, when the presentation declares one:
// Ki renders as K^-1 (negExp with powBase K), so K pairs with Ki and back
std::optional<GenId> inverseGen(const PresPtr& ctx, GenId g) {
  const Generator& gen = ctx->gen(g);
  if (gen.negExp) return ctx->genByName(gen.powBase);
  for (GenId h = 0; h < ctx->genCount(); ++h) {
    const Generator& cand = ctx->gen(h);
    if (cand.negExp && cand.powBase == gen.name) return h;
  }
  return std::nullopt;
}

class ExprParser {
 public:
  ExprParser(PresPtr ctx, std::string_view text) : ctx_(std::move(ctx)), lx_{text} {}

  Poly parse() {
    Poly r = expr();
    if (!lx_.atEnd())
      throw ParseError(fmt::format("unexpected '{}'", lx_.peek()), lx_.pos);
    return r;
  }

 private:
  Poly expr() {
    Poly acc = term();
    for (;;) {
      if (lx_.consume('+'))
        acc += term();
      else if (lx_.consume('-'))
        acc -= term();
      else
        return acc;
    }
  }

  Poly term() {
    Poly acc = factor();
    for (;;) {
      if (lx_.consume('*')) {
        acc = acc * factor();
      } else if (lx_.consume('/')) {
        size_t at = lx_.pos;
        Poly d = factor();
        if (!(d.termCount() == 1 && d.terms().begin()->first.empty()))
          throw ParseError(d.isZero() ? "division by zero"
                                      : "division by a non-scalar expression",
                           at);
        acc.scaleBy(d.constantTerm().inverse());
      } else {
        return acc;
      }
    }
  }

  Poly factor() {
    if (lx_.consume('-')) return -factor();
    Poly base = atom();
    if (lx_.consume('^')) {
      size_t at = lx_.pos;
      return power(base, lx_.exponent(), at);
    }
    return base;
  }

  Poly atom() {
    char c = lx_.peek();
    if (c == '(') {
      lx_.expect('(');
      Poly r = expr();
      lx_.expect(')');
      return r;
    }
    size_t at = lx_.pos;
    if (auto n = lx_.integer())
      return Poly::constant(ctx_, Scalar(Rational(std::move(*n))));
    if (auto name = lx_.ident()) {
      if (*name == "q") return Poly::constant(ctx_, Scalar::qPow(1));
      if (*name == "s") return Poly::constant(ctx_, Scalar::sPow(1));
      if (auto g = ctx_->genByName(*name)) return Poly::genPoly(ctx_, *g);
      throw ParseError(
          fmt::format("unknown generator '{}' in {}", *name, ctx_->id()), at);
    }
    throw ParseError(c == '\0' ? std::string("unexpected end of expression")
                               : fmt::format("unexpected '{}'", c),
                     at);
  }

  Poly power(const Poly& base, int k, size_t at) {
    if (k >= 0) {
      Poly r = Poly::one(ctx_);
      for (int i = 0; i < k; ++i) r = r * base;
      return r;
    }
    if (base.isZero())
      throw ParseError("zero raised to a negative power", at);
    const auto& [w, c] = *base.terms().begin();
    if (base.termCount() == 1 && w.empty())
      return Poly::constant(ctx_, c.pow(k));
    if (base.termCount() == 1 && w.size() == 1 && c.isOne()) {
      if (auto h = inverseGen(ctx_, w[0]))
        return Poly::fromWord(ctx_, Word(static_cast<size_t>(-k), *h));
      throw ParseError(fmt::format("negative power on non-invertible generator {}",
                                   ctx_->gen(w[0]).name),
                       at);
    }
    throw ParseError("negative power on a non-scalar expression", at);
  }

  PresPtr ctx_;
  Lexer lx_;
};

int labelArg(Lexer& lx) {
  lx.skipSpace();
  size_t at = lx.pos;
  std::string tok;
  while (lx.pos < lx.text.size()) {
    char c = lx.text[lx.pos];
    if (c == ',' || c == ';' || c == ')' ||
        std::isspace(static_cast<unsigned char>(c)))
      break;
    tok.push_back(c);
    ++lx.pos;
  }
  try {
    return parseLabel(tok);
  } catch (const ParseError& e) {
    throw ParseError(e.what(), at);
  }
}

Rational tauArg(Lexer& lx) {
  lx.skipSpace();
  size_t at = lx.pos;
  std::string tok;
  while (lx.pos < lx.text.size()) {
    char c = lx.text[lx.pos];
    if (c == ')' || std::isspace(static_cast<unsigned char>(c))) break;
    tok.push_back(c);
    ++lx.pos;
  }
  try {
    return rationalFromString(tok);
  } catch (const Error& e) {
    throw ParseError(e.what(), at);
  }
}

}  // namespace

PresPtr parseContext(std::string_view text) {
  Lexer lx{text};
  auto family = lx.ident();
  if (!family) throw ParseError("expected a context family name", lx.pos);

  if (*family == "Pol") {
    lx.expect('(');
    lx.skipSpace();
    size_t at = lx.pos;
    std::string tok;
    while (lx.pos < lx.text.size() && lx.text[lx.pos] != ')') {
      if (!std::isspace(static_cast<unsigned char>(lx.text[lx.pos])))
        tok.push_back(lx.text[lx.pos]);
      ++lx.pos;
    }
    lx.expect(')');
    if (!lx.atEnd()) throw ParseError("trailing input after context", lx.pos);
    try {
      return makePol(parsePolVariant(tok));
    } catch (const ParseError& e) {
      throw ParseError(e.what(), at);
    }
  }

  bool wantsTau = *family == "A" || *family == "B" || *family == "D";
  if (*family != "Uq" && !wantsTau)
    throw ParseError(fmt::format("unknown context family '{}'", *family), 0);

  lx.expect('(');
  int mu = labelArg(lx);
  lx.expect(',');
  int nu = labelArg(lx);
  Rational tau(0);
  if (wantsTau) {
    lx.expect(';');
    tau = tauArg(lx);
  }
  lx.expect(')');
  if (!lx.atEnd()) throw ParseError("trailing input after context", lx.pos);

  if (*family == "Uq") return makeUq(mu, nu);
  if (*family == "A") return makeQuotient(mu, nu, tau);
  if (*family == "B") return makeB(mu, nu, tau);
  return makeD(mu, nu, tau);
}

std::vector<std::string> contextFamilies() {
  return {
      "Uq(mu,nu)     quantized enveloping algebra; generators F K K^-1 E",
      "A(mu,nu;tau)  Casimir quotient; generators K K^-1 F E",
      "B(mu,nu;tau)  quantum homogeneous space; generators x xs z",
      "D(mu,nu;tau)  mirror homogeneous space; generators u us w",
      "Pol(+|-|0|sl2c)  function algebra; generators a d b c or a0 a0s b0 b0s",
  };
}

Poly parseExpression(const PresPtr& ctx, std::string_view text) {
  return ExprParser(ctx, text).parse();
}

}  // namespace colink
