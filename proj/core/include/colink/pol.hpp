// Function algebras: Pol(SL_q(2,C)) and its *-structured forms Pol_q(+),
// Pol_q(-), plus the quantum E(2) algebra Pol_q(0), each with comultiplication,
// counit, antipode, and PBW normal forms.
#pragma once

#include "colink/report.hpp"
#include "colink/rng.hpp"
#include "colink/tensor.hpp"

namespace colink {

enum class PolVariant { Plus, Minus, Zero, Sl2c };

// generator ids in precedence order.  sl2c and +/- share {a,d,b,c}; normal
// monomials are a^i b^j c^k and d^l b^j c^k with l >= 1.  Variant 0 uses
// {a0, a0s, b0, b0s} with a0s the formal inverse of a0; normal monomials are
// a0^m b0^j b0s^k with m in Z (negative powers print via a0s runs).
namespace polgen {
inline constexpr GenId a = 0, d = 1, b = 2, c = 3;
inline constexpr GenId a0 = 0, a0s = 1, b0 = 2, b0s = 3;
}  // namespace polgen

std::string polVariantStr(PolVariant v);
PolVariant parsePolVariant(std::string_view s);

PresPtr makePol(PolVariant v);  // cached per variant
PolVariant polVariant(const PresPtr& p);

// coproduct images of the four generators, both legs the same algebra
std::vector<Tensor2> polDeltaImages(PolVariant v);

Tensor2 deltaPol(const Poly& p);
Scalar counitPol(const Poly& p);
Poly antipodePol(const Poly& p);  // anti-homomorphic, same algebra

// structural checks per variant: rule confluence, Delta/antipode/star/counit
// respect the defining rules, coassociativity, counit laws, both antipode
// axioms, Delta a *-homomorphism, and S(S(p*)*) = p, on generators and on
// seeded random elements
Report checkPolHopf(PolVariant v, int samples, int degree, uint64_t seed);

// Delta on a0^m b0^k b0s^l is supported on exactly the (k+1)(l+1) keys
// a0^{m-r+l-s} b0^{k-r} b0s^s (x) a0^{m+k-r-s} b0^r b0s^{l-s}, all with
// nonzero coefficients, for 0 <= r <= k and 0 <= s <= l
Report checkDeltaZeroGrid(int mmax, int kmax, int lmax);

}  // namespace colink
