#include "colink/scalar.hpp"

#include <fmt/format.h>

#include <algorithm>

namespace colink {

Rational rationalFromString(const std::string& text) {
  if (text.empty()) throw DomainError("empty rational literal");
  Rational r;
  if (r.set_str(text, 10) != 0)
    throw DomainError(fmt::format("bad rational literal '{}'", text));
  if (r.get_den() == 0) throw DomainError("rational with zero denominator");
  r.canonicalize();
  return r;
}

std::string rationalToString(const Rational& r) {
  Rational c(r);
  c.canonicalize();
  return c.get_str();
}

bool rationalSqrt(const Rational& v, Rational& root) {
  if (v < 0) return false;
  Rational c(v);
  c.canonicalize();
  Int n = c.get_num(), d = c.get_den();
  Int rn, rd;
  mpz_sqrt(rn.get_mpz_t(), n.get_mpz_t());
  mpz_sqrt(rd.get_mpz_t(), d.get_mpz_t());
  if (rn * rn != n || rd * rd != d) return false;
  root = Rational(rn, rd);
  root.canonicalize();
  return true;
}

// ---------------------------------------------------------------- IntPoly

IntPoly::IntPoly(const Int& n) {
  if (n != 0) c_.push_back(n);
}

IntPoly IntPoly::monomial(const Int& coeff, unsigned exp) {
  IntPoly p;
  if (coeff != 0) {
    p.c_.assign(exp + 1, Int(0));
    p.c_[exp] = coeff;
  }
  return p;
}

void IntPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

const Int& IntPoly::coeff(size_t k) const {
  static const Int zero(0);
  return k < c_.size() ? c_[k] : zero;
}

const Int& IntPoly::leading() const {
  if (c_.empty()) throw DomainError("leading coefficient of zero polynomial");
  return c_.back();
}

size_t IntPoly::termCount() const {
  size_t n = 0;
  for (const auto& x : c_)
    if (x != 0) ++n;
  return n;
}

bool IntPoly::evenOnly() const {
  for (size_t k = 1; k < c_.size(); k += 2)
    if (c_[k] != 0) return false;
  return true;
}

IntPoly operator+(const IntPoly& a, const IntPoly& b) {
  IntPoly r;
  r.c_.resize(std::max(a.c_.size(), b.c_.size()), Int(0));
  for (size_t k = 0; k < r.c_.size(); ++k) r.c_[k] = a.coeff(k) + b.coeff(k);
  r.trim();
  return r;
}

IntPoly operator-(const IntPoly& a, const IntPoly& b) {
  IntPoly r;
  r.c_.resize(std::max(a.c_.size(), b.c_.size()), Int(0));
  for (size_t k = 0; k < r.c_.size(); ++k) r.c_[k] = a.coeff(k) - b.coeff(k);
  r.trim();
  return r;
}

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
  if (a.isZero() || b.isZero()) return IntPoly();
  IntPoly r;
  r.c_.assign(a.c_.size() + b.c_.size() - 1, Int(0));
  for (size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    for (size_t j = 0; j < b.c_.size(); ++j)
      if (b.c_[j] != 0) r.c_[i + j] += a.c_[i] * b.c_[j];
  }
  r.trim();
  return r;
}

IntPoly IntPoly::operator-() const {
  IntPoly r(*this);
  for (auto& x : r.c_) x = -x;
  return r;
}

Int IntPoly::content() const {
  Int g(0);
  for (const auto& x : c_) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
  if (!c_.empty() && c_.back() < 0) g = -g;
  return g;
}

IntPoly IntPoly::primitivePart() const {
  if (isZero()) return IntPoly();
  Int g = content();
  IntPoly r(*this);
  for (auto& x : r.c_) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
  return r;
}

IntPoly IntPoly::divExact(const IntPoly& d) const {
  if (d.isZero()) throw DomainError("polynomial division by zero");
  if (isZero()) return IntPoly();
  if (degree() < d.degree()) throw DomainError("inexact polynomial division");
  IntPoly rem(*this), q;
  q.c_.assign(degree() - d.degree() + 1, Int(0));
  while (!rem.isZero() && rem.degree() >= d.degree()) {
    Int& qk = q.c_[rem.degree() - d.degree()];
    if (!mpz_divisible_p(rem.leading().get_mpz_t(), d.leading().get_mpz_t()))
      throw DomainError("inexact polynomial division");
    Int c = rem.leading() / d.leading();
    qk = c;
    rem = rem - IntPoly::monomial(c, rem.degree() - d.degree()) * d;
  }
  if (!rem.isZero()) throw DomainError("inexact polynomial division");
  q.trim();
  return q;
}

namespace {
// pseudo-remainder of a by b, b nonzero
IntPoly prem(IntPoly a, const IntPoly& b) {
  IntPoly lb(b.leading());
  while (!a.isZero() && a.degree() >= b.degree()) {
    IntPoly shifted = IntPoly::monomial(a.leading(), a.degree() - b.degree()) * b;
    a = a * lb - shifted;
  }
  return a;
}
}  // namespace

IntPoly IntPoly::gcd(const IntPoly& a, const IntPoly& b) {
  if (a.isZero() && b.isZero()) return IntPoly();
  if (a.isZero() || b.isZero()) {
    IntPoly g = a.isZero() ? b : a;
    if (g.leading() < 0) g = -g;
    return g;
  }
  Int cg;
  mpz_gcd(cg.get_mpz_t(), a.content().get_mpz_t(), b.content().get_mpz_t());
  cg = abs(cg);
  IntPoly u = a.primitivePart(), v = b.primitivePart();
  if (u.degree() < v.degree()) std::swap(u, v);
  while (!v.isZero()) {
    IntPoly r = prem(u, v);
    u = std::move(v);
    v = r.isZero() ? IntPoly() : r.primitivePart();
  }
  if (u.leading() < 0) u = -u;
  return u * IntPoly(cg);
}

IntPoly IntPoly::pow(unsigned n) const {
  IntPoly r(1), base(*this);
  while (n) {
    if (n & 1u) r = r * base;
    base = base * base;
    n >>= 1u;
  }
  return r;
}

Rational IntPoly::evalAt(const Rational& s0) const {
  Rational acc(0);
  for (size_t k = c_.size(); k-- > 0;) acc = acc * s0 + Rational(c_[k]);
  return acc;
}

std::optional<Rational> IntPoly::evalEven(const Rational& q0) const {
  if (!evenOnly()) return std::nullopt;
  if (isZero()) return Rational(0);
  // Horner in q over the even-slot coefficients
  size_t m = (c_.size() - 1) / 2;  // top q-exponent
  Rational acc(0);
  for (size_t j = m + 1; j-- > 0;) acc = acc * q0 + Rational(coeff(2 * j));
  return acc;
}

std::string IntPoly::str(bool useQ) const {
  if (isZero()) return "0";
  std::string out;
  bool first = true;
  for (size_t k = c_.size(); k-- > 0;) {
    if (c_[k] == 0) continue;
    Int a = c_[k];
    bool neg = a < 0;
    if (first) {
      if (neg) out += "-";
    } else {
      out += neg ? " - " : " + ";
    }
    Int mag = abs(a);
    unsigned exp = useQ ? static_cast<unsigned>(k / 2) : static_cast<unsigned>(k);
    const char* var = useQ ? "q" : "s";
    if (exp == 0) {
      out += mag.get_str();
    } else {
      if (mag != 1) out += mag.get_str() + "*";
      out += var;
      if (exp != 1) out += fmt::format("^{}", exp);
    }
    first = false;
  }
  return out;
}

// ----------------------------------------------------------------- Scalar

Scalar::Scalar(const Rational& r) {
  Rational c(r);
  c.canonicalize();
  num_ = IntPoly(Int(c.get_num()));
  den_ = IntPoly(Int(c.get_den()));
}

Scalar::Scalar(IntPoly num, IntPoly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.isZero()) throw DomainError("scalar with zero denominator");
  reduce();
}

Scalar Scalar::sPow(int k) {
  if (k >= 0) return Scalar(IntPoly::monomial(1, static_cast<unsigned>(k)), IntPoly(1));
  return Scalar(IntPoly(1), IntPoly::monomial(1, static_cast<unsigned>(-k)));
}

Scalar Scalar::qPow(int k) { return sPow(2 * k); }

Scalar Scalar::lambda() {
  return Scalar(IntPoly::monomial(1, 2), IntPoly::monomial(1, 4) - IntPoly(1));
}

void Scalar::reduce() {
  if (num_.isZero()) {
    den_ = IntPoly(1);
    return;
  }
  IntPoly g = IntPoly::gcd(num_, den_);
  if (!g.isOne()) {
    num_ = num_.divExact(g);
    den_ = den_.divExact(g);
  }
  if (den_.leading() < 0) {
    num_ = -num_;
    den_ = -den_;
  }
}

size_t Scalar::complexity() const {
  return static_cast<size_t>(num_.degree() + den_.degree() + 2) + termCount();
}

Scalar& Scalar::operator+=(const Scalar& o) {
  num_ = num_ * o.den_ + o.num_ * den_;
  den_ = den_ * o.den_;
  reduce();
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  num_ = num_ * o.den_ - o.num_ * den_;
  den_ = den_ * o.den_;
  reduce();
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  num_ = num_ * o.num_;
  den_ = den_ * o.den_;
  reduce();
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) {
  if (o.isZero()) throw DomainError("scalar division by zero");
  num_ = num_ * o.den_;
  den_ = den_ * o.num_;
  reduce();
  return *this;
}

Scalar Scalar::operator-() const {
  Scalar r(*this);
  r.num_ = -r.num_;
  return r;
}

Scalar Scalar::inverse() const {
  if (isZero()) throw DomainError("inverse of zero scalar");
  return Scalar(den_, num_);
}

Scalar Scalar::pow(int n) const {
  if (n < 0) return inverse().pow(-n);
  Scalar r(1), base(*this);
  unsigned m = static_cast<unsigned>(n);
  while (m) {
    if (m & 1u) r *= base;
    base *= base;
    m >>= 1u;
  }
  return r;
}

Rational Scalar::evalAtQ(const Rational& q0) const {
  if (q0 <= 0 || q0 >= 1)
    throw DomainError("evaluation point must satisfy 0 < q0 < 1");
  auto evalPoly = [&](const IntPoly& p) -> Rational {
    if (auto v = p.evalEven(q0)) return *v;
    Rational s0;
    if (!rationalSqrt(q0, s0))
      throw DomainError("odd powers of s present and q0 is not a rational square");
    return p.evalAt(s0);
  };
  Rational d = evalPoly(den_);
  if (d == 0) throw DomainError("denominator vanishes at evaluation point");
  Rational n = evalPoly(num_);
  Rational r = n / d;
  r.canonicalize();
  return r;
}

std::string Scalar::str() const {
  bool useQ = num_.evenOnly() && den_.evenOnly();
  std::string n = num_.str(useQ);
  if (den_.isOne()) return n;
  std::string d = den_.str(useQ);
  if (num_.termCount() > 1) n = "(" + n + ")";
  if (den_.termCount() > 1)
    d = "(" + d + ")";
  else if (den_.leading() != 1 && d.find('*') != std::string::npos)
    d = "(" + d + ")";  // e.g. 2*q: parenthesize so /2*q is unambiguous
  return n + "/" + d;
}

// -------------------------------------------------------------- ExtScalar

ExtScalar& ExtScalar::operator+=(const ExtScalar& o) {
  base_ += o.base_;
  ext_ += o.ext_;
  return *this;
}

ExtScalar& ExtScalar::operator-=(const ExtScalar& o) {
  base_ -= o.base_;
  ext_ -= o.ext_;
  return *this;
}

ExtScalar& ExtScalar::operator*=(const ExtScalar& o) {
  // (a + b rt)(c + d rt) = ac + bd (1+s^4) + (ad + bc) rt
  static const Scalar rt2 =
      Scalar(IntPoly::monomial(1, 4) + IntPoly(1), IntPoly(1));
  Scalar a = base_, b = ext_;
  base_ = a * o.base_ + b * o.ext_ * rt2;
  ext_ = a * o.ext_ + b * o.base_;
  return *this;
}

ExtScalar ExtScalar::inverse() const {
  static const Scalar rt2 =
      Scalar(IntPoly::monomial(1, 4) + IntPoly(1), IntPoly(1));
  Scalar n = base_ * base_ - ext_ * ext_ * rt2;
  if (n.isZero()) throw DomainError("non-invertible extension scalar");
  Scalar ni = n.inverse();
  return ExtScalar(base_ * ni, -(ext_ * ni));
}

ExtScalar& ExtScalar::operator/=(const ExtScalar& o) {
  *this *= o.inverse();
  return *this;
}

std::string ExtScalar::str() const {
  if (ext_.isZero()) return base_.str();
  std::string e = ext_.isOne() ? "rt" : "(" + ext_.str() + ")*rt";
  if (base_.isZero()) return e;
  return base_.str() + " + " + e;
}

}  // namespace colink
