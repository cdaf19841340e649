// The coaction gamma: B -> B (x) Pol_q(mu), its comodule and pairing
// compatibility checks, bounded-degree ergodicity, the spin-1
// corepresentation matrix, coideal embeddings, and the classification of
// equivariant isomorphisms between the B(mu,nu;tau).
#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "colink/homspace.hpp"
#include "colink/pol.hpp"

namespace colink {

// images of x, xs, z (generator order of B); legs are (B, Pol_q(mu)).
// gamma(xs) is built from its own closed formula, not as a star image,
// so the star-compatibility check stays a real cross-check.
std::vector<Tensor2> gammaImages(const PresPtr& b);
std::vector<Tensor2> gammaImages(int mu, int nu, const Rational& tau);

// multiplicative extension of the generator images; p lives in a B algebra
Tensor2 gammaOf(const Poly& p);

// relation preservation on the B rules, unit/counit laws, star
// compatibility, and the quadratic identity gamma(xs)gamma(x) =
// -q^2 nu + tau gamma(z) - mu gamma(z)^2
Report checkGamma(int mu, int nu, const Rational& tau);

// comodule axioms (gamma (x) id)gamma = (id (x) Delta)gamma and
// (id (x) eps)gamma = id on generators and random elements
Report checkComodule(int mu, int nu, const Rational& tau, int samples,
                     int degree, uint64_t seed);

// x |> y = (id (x) <.,x>)gamma(y) against the closed action table, on the
// nine generator pairs and on random elements
Report checkInfinitesimal(int mu, int nu, const Rational& tau, int samples,
                          int degree, uint64_t seed);

// exact kernel of gamma(p) = p (x) 1 on span{x^k z^m, xs^k z^m : k+m <= d};
// passes iff the fixed space is exactly the scalars
Report checkErgodic(int mu, int nu, const Rational& tau, int degree);

// spin-1 corepresentation matrix, rows and columns ordered (-1, 0, 1);
// for the starred variants c = -q mu b*, d = a*; Sl2c uses the literal
// generators
std::array<std::array<XPoly, 3>, 3> spin1Matrix(PolVariant v);

// Delta(M_ij) = sum_k M_ik (x) M_kj, eps(M_ij) = delta_ij, and agreement
// with the matrix transported from the unstarred variant
Report checkSpin1(PolVariant v);

struct CoidealEmbedding {
  bool embeddable = false;
  std::string obstruction;    // set when not embeddable
  std::vector<Poly> images;   // images of x, xs, z in Pol_q(mu)
};

// decision: tau != 0 needs nu <= 0; tau = 0 needs nu = -1.  When
// embeddable, constructs the *-homomorphism pi: B -> Pol_q(mu).
CoidealEmbedding coidealEmbed(int mu, int nu, const Rational& tau);

// decision plus, on the positive side: relations, star, equivariance
// Delta pi = (pi (x) id) gamma, the ExtScalar omega route for mu != 0,
// and linear independence of image monomials up to degree 4
Report checkCoideal(int mu, int nu, const Rational& tau);

struct ClassifyResult {
  std::optional<Rational> theta;  // engaged iff isomorphic
  Report report;
};

// B(mu,nu;tau) ~ B(mu,nu';tau') iff nu = nu' and tau = theta tau' for
// theta in {-1,1} (nu != 0) or theta rational nonzero (nu = 0).  Positive
// decisions are certified constructively; negative ones follow the
// classification criterion and carry no witness.
ClassifyResult classifyIso(int mu, int nu, const Rational& tau, int nuP,
                           const Rational& tauP);

}  // namespace colink
