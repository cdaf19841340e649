#pragma once

#include <tuple>
#include <vector>

#include "colink/uq.hpp"

namespace colink {

// The Casimir element of Uq(mu,nu) in its two standard presentations.
// Both reduce to the same normal form; casimirElement keeps them as
// distinct construction routes so tests can compare the reductions.
enum class CasimirForm { EF, FE };

Poly casimirElement(int mu, int nu, CasimirForm form = CasimirForm::EF);

// Scalar value the Casimir is pinned to in the quotient at level tau.
Scalar casimirLevel(const Rational& tau);

// A(mu,nu;tau) = Uq(mu,nu) / <C - casimirLevel(tau)>, presented directly
// on K, Ki, F, E with normal monomials K^b F^a and K^b E^c.  Cached per
// (mu, nu, tau).  No antipode is attached: on the quotient the antipode
// is a map between different parameter sets, not an endomorphism.
PresPtr makeQuotient(int mu, int nu, const Rational& tau);
std::tuple<int, int, Rational> quotientParams(const PresPtr& p);

// Quotient map and a linear section of it, both acting by renaming
// generators and reducing in the target.
Poly projectToQuotient(const Poly& p, const PresPtr& quot);
Poly liftFromQuotient(const Poly& p);

// Adjoint-type actions of Uq(mu,mu) resp. Uq(nu,nu) on the quotient,
// computed on an arbitrary lift; the result is lift-independent.
Poly quotientActionLeft(const Poly& x, const Poly& y);
Poly quotientActionRight(const Poly& y, const Poly& x);

// Casimir oracles over all label pairs: the two forms agree, C is
// self-adjoint, and C commutes with every generator.
Report checkCasimir(const std::vector<int>& labels);

// Quotient suite: confluence of the presentation, compatibility of the
// projection with product and star, the pin pi(C) = level, independence
// of the action from the chosen lift, and the module-*-algebra laws.
Report checkQuotient(int mu, int nu, const Rational& tau, int samples,
                     int degree, uint64_t seed);

}  // namespace colink
