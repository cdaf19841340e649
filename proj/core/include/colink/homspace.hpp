#pragma once

#include <map>
#include <tuple>
#include <vector>

#include "colink/casimir.hpp"

namespace colink {

// B(mu,nu;tau): generators x, xs = x*, z = z*, with normal monomials
// x^k z^m and xs^k z^m.  Cached per parameter tuple.
PresPtr makeB(int mu, int nu, const Rational& tau);
std::tuple<int, int, Rational> bParams(const PresPtr& p);

// Generator images of x, xs, z inside A(mu,nu;tau), in that order.
std::vector<Poly> bImagesInA(int mu, int nu, const Rational& tau);

// The *-embedding of B into the Casimir quotient A with the same
// parameters; relation preservation is re-verified by checkBEmbedding.
Poly embedBInA(const Poly& b);
Report checkBEmbedding(int mu, int nu, const Rational& tau, int samples,
                       int degree, uint64_t seed);

// Truncated representation on basis vectors e(n,m), |n| <= N, |m| <= 2N.
// Operator identities are only asserted on vectors whose whole orbit
// stays inside the window; stepping outside throws WindowError instead
// of silently truncating.
class TruncatedVRep {
 public:
  using Key = std::pair<int, int>;
  using Vec = std::map<Key, Scalar>;

  TruncatedVRep(int mu, int nu, const Rational& tau, int N);

  int window() const { return bound_; }
  Vec basis(int n, int m) const;

  Vec applyX(const Vec& v) const;
  Vec applyY(const Vec& v) const;
  Vec applyW(const Vec& v) const;
  Vec applyWInv(const Vec& v) const;
  Vec applyZ(const Vec& v) const;  // z acts as the square of w

  // g is a generator id of a B presentation: x, xs, z
  Vec applyGen(GenId g, const Vec& v) const;
  Vec applyWord(const Word& w, Vec v) const;
  Vec applyPoly(const Poly& b, const Vec& v) const;

  static bool equal(const Vec& a, const Vec& b);
  static std::string str(const Vec& v);

 private:
  void add(Vec& out, int n, int m, const Scalar& c) const;
  int mu_, nu_, bound_;
  Scalar tau_;
};

// Defining relations represented on the window, independence of the
// monomial families at the tested degrees, invertibility of w on the
// interior, and rejection of the inconsistent reading of the z operator.
Report checkVRep(int mu, int nu, const Rational& tau, int N);

// Closed-form action of Uq(mu,mu) on B, extended from the generator
// table by the coproduct; x acts letter by letter.
Poly actionOnB(const Poly& x, const Poly& b);

// The closed table against the quotient route through embedBInA, plus
// module-*-algebra laws and the K-grading of the monomial basis.
Report checkActionConsistency(int mu, int nu, const Rational& tau,
                              int samples, int degree, uint64_t seed);

// D(mu,nu;tau): the mirror of B inside A(mu,nu;tau), generated by the
// antipode images u, us, w of the B(nu,mu;tau) generators; star acts
// with a twist, u* = q^{-2} us.  Cached per parameter tuple.
PresPtr makeD(int mu, int nu, const Rational& tau);
std::vector<Poly> dImagesInA(int mu, int nu, const Rational& tau);
Poly embedDInA(const Poly& d);

// Theta maps B(nu,mu;tau) anti-multiplicatively onto D(mu,nu;tau).
// thetaMap renames generators abstractly; thetaViaAntipode computes the
// same map through lifts, the antipode, and the quotient projection,
// landing in A(mu,nu;tau).  thetaInverseViaAntipode uses the inverse
// antipode, for the star-exchange identity.
Poly thetaMap(const Poly& b);
Poly thetaViaAntipode(const Poly& b);
Poly thetaInverseViaAntipode(const Poly& b);

// Membership of an A(mu,nu;tau) element in the image of D.
bool inDImage(const Poly& a);

// Antipode fixes the Casimir across the label flip, both Theta routes
// agree, anti-multiplicativity, the star exchange law, equivariance
// against the right action, and restriction of that action to D.
Report checkTheta(int mu, int nu, const Rational& tau, int samples,
                  int degree, uint64_t seed);

}  // namespace colink
