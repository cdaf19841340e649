// Exact coefficient arithmetic in Q(s), q = s^2, plus the quadratic extension
// adjoining rt = (1+q^2)^(1/2).  Scalars are reduced fractions of integer
// polynomials in s; equality is structural.
#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace colink {

using Int = mpz_class;
using Rational = mpq_class;

struct Error : std::runtime_error {
  explicit Error(const std::string& m) : std::runtime_error(m) {}
};
// invalid arguments, division by zero, mismatched algebras
struct DomainError : Error {
  using Error::Error;
};
// rewriting step budget exhausted
struct BudgetError : Error {
  using Error::Error;
};
// truncated representation left its index window
struct WindowError : Error {
  using Error::Error;
};
// CLI/expression syntax errors
struct ParseError : Error {
  size_t pos;
  ParseError(const std::string& m, size_t at) : Error(m), pos(at) {}
};

Rational rationalFromString(const std::string& text);
std::string rationalToString(const Rational& r);
// true iff v = root^2 for rational root >= 0
bool rationalSqrt(const Rational& v, Rational& root);

// Integer-coefficient polynomial in s, dense, no trailing zero coefficients.
class IntPoly {
 public:
  IntPoly() = default;  // zero
  IntPoly(long n) : IntPoly(Int(n)) {}
  explicit IntPoly(const Int& n);
  static IntPoly monomial(const Int& coeff, unsigned exp);

  int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
  bool isZero() const { return c_.empty(); }
  bool isOne() const { return c_.size() == 1 && c_[0] == 1; }
  const Int& coeff(size_t k) const;
  const Int& leading() const;
  size_t termCount() const;
  bool evenOnly() const;  // only even powers of s occur

  friend IntPoly operator+(const IntPoly& a, const IntPoly& b);
  friend IntPoly operator-(const IntPoly& a, const IntPoly& b);
  friend IntPoly operator*(const IntPoly& a, const IntPoly& b);
  IntPoly operator-() const;
  bool operator==(const IntPoly&) const = default;

  Int content() const;  // gcd of coefficients, sign of the leading one
  IntPoly primitivePart() const;
  static IntPoly gcd(const IntPoly& a, const IntPoly& b);
  IntPoly divExact(const IntPoly& d) const;  // requires d | *this
  IntPoly pow(unsigned n) const;

  Rational evalAt(const Rational& s0) const;
  // substitute s^2 = q0; nullopt if an odd power occurs
  std::optional<Rational> evalEven(const Rational& q0) const;

  std::string str(bool useQ) const;

 private:
  std::vector<Int> c_;  // c_[k] multiplies s^k
  void trim();
};

// Element of Q(s): num/den reduced, den has positive leading coefficient.
class Scalar {
 public:
  Scalar() : num_(), den_(1) {}
  Scalar(long n) : num_(n), den_(1) {}
  Scalar(const Rational& r);
  Scalar(IntPoly num, IntPoly den);

  static Scalar sPow(int k);  // s^k, k may be negative
  static Scalar qPow(int k);  // q^k = s^(2k)
  static Scalar lambda();     // (q - q^-1)^-1 = s^2/(s^4 - 1)

  bool isZero() const { return num_.isZero(); }
  bool isOne() const { return num_.isOne() && den_.isOne(); }
  const IntPoly& num() const { return num_; }
  const IntPoly& den() const { return den_; }
  // rendering/pivot heuristics
  size_t termCount() const { return num_.termCount() + den_.termCount(); }
  size_t complexity() const;

  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);
  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  Scalar operator-() const;
  Scalar inverse() const;
  Scalar pow(int n) const;
  bool operator==(const Scalar&) const = default;

  // exact substitution s^2 = q0 (see eval_numeric contract)
  Rational evalAtQ(const Rational& q0) const;

  std::string str() const;

 private:
  IntPoly num_, den_;
  void reduce();
};

// base + ext*rt with rt^2 = 1 + s^4; a field since 1+s^4 is not a square.
class ExtScalar {
 public:
  ExtScalar() = default;
  ExtScalar(long n) : base_(n) {}
  ExtScalar(Scalar base) : base_(std::move(base)) {}
  ExtScalar(Scalar base, Scalar ext) : base_(std::move(base)), ext_(std::move(ext)) {}
  static ExtScalar rt() { return ExtScalar(Scalar(0), Scalar(1)); }

  const Scalar& base() const { return base_; }
  const Scalar& ext() const { return ext_; }
  bool isZero() const { return base_.isZero() && ext_.isZero(); }
  bool isOne() const { return base_.isOne() && ext_.isZero(); }
  bool isRationalPart() const { return ext_.isZero(); }

  ExtScalar& operator+=(const ExtScalar& o);
  ExtScalar& operator-=(const ExtScalar& o);
  ExtScalar& operator*=(const ExtScalar& o);
  ExtScalar& operator/=(const ExtScalar& o);
  friend ExtScalar operator+(ExtScalar a, const ExtScalar& b) { return a += b; }
  friend ExtScalar operator-(ExtScalar a, const ExtScalar& b) { return a -= b; }
  friend ExtScalar operator*(ExtScalar a, const ExtScalar& b) { return a *= b; }
  friend ExtScalar operator/(ExtScalar a, const ExtScalar& b) { return a /= b; }
  ExtScalar operator-() const { return ExtScalar(-base_, -ext_); }
  ExtScalar inverse() const;
  bool operator==(const ExtScalar&) const = default;

  size_t termCount() const { return base_.termCount() + ext_.termCount(); }
  size_t complexity() const { return base_.complexity() + ext_.complexity(); }

  std::string str() const;

 private:
  Scalar base_, ext_;
};

inline ExtScalar operator*(const ExtScalar& a, const Scalar& b) {
  return a * ExtScalar(b);
}
inline ExtScalar operator*(const Scalar& a, const ExtScalar& b) {
  return ExtScalar(a) * b;
}

// complex conjugation on coefficients is the identity (real rational functions)
inline Scalar conj(const Scalar& a) { return a; }
inline ExtScalar conj(const ExtScalar& a) { return a; }

}  // namespace colink
