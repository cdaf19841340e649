// The two-parameter quantized enveloping family U_q(mu,nu), its coproducts
// Delta^ups: U_q(mu,nu) -> U_q(mu,ups) (x) U_q(ups,nu), antipodes
// S: U_q(mu,nu) -> U_q(nu,mu), diagonal counits, the co-linking direct sum H
// with its weak-Hopf structure, and the Miyashita-Ulbrich actions.
#pragma once

#include <array>

#include "colink/report.hpp"
#include "colink/rng.hpp"
#include "colink/tensor.hpp"

namespace colink {

// generator ids in precedence order; normal monomials are F^a K^b E^c
// with b in Z encoded as a K-run or a Ki-run
namespace uqgen {
inline constexpr GenId F = 0, Ki = 1, K = 2, E = 3;
}

// labels live in {-1, 0, +1}, printed -, 0, +
std::string labelStr(int l);
int parseLabel(std::string_view s);

PresPtr makeUq(int mu, int nu);  // cached per label pair
std::pair<int, int> uqLabels(const PresPtr& p);

// Delta^ups images of (F, Ki, K, E), legs U_q(mu,ups) and U_q(ups,nu)
std::vector<Tensor2> uqDeltaImages(int mu, int ups, int nu);

Tensor2 deltaUq(const Poly& p, int ups);
Scalar counitUq(const Poly& p);  // diagonal algebras only
Poly antipodeUq(const Poly& p);  // lands in the transposed algebra

// structural checks on generators, exact: rule confluence, relation
// preservation under Delta and S, Delta a *-homomorphism, generalized
// coassociativity, the antipode flip law, counit compatibility, and the
// star-antipode involution S(S(p*)*) = p
Report checkUqHopf(const std::vector<int>& labels);

// S(p_(1))p_(2) = eps(p)1 and p_(1)S(p_(2)) = eps(p)1 for diagonal p,
// with the coproduct leg through ups
Report checkAntipodeIdentities(const Poly& p, int ups);

// ---- direct sum H over a label set, with componentwise product ----

using LPair = std::pair<int, int>;
std::string lpairStr(const LPair& l);

struct HElem {
  std::map<LPair, Poly> comps;  // invariant: no zero components

  bool isZero() const { return comps.empty(); }
  void addComp(const LPair& l, const Poly& p);
  Poly comp(const LPair& l, const PresPtr& pres) const;

  HElem& operator+=(const HElem& o);
  HElem& operator-=(const HElem& o);
  friend HElem operator+(HElem a, const HElem& b) { return a += b; }
  friend HElem operator-(HElem a, const HElem& b) { return a -= b; }
  HElem operator*(const HElem& o) const;  // distinct label pairs annihilate
  template <class C>
  HElem& scaleBy(const C& c) {
    for (auto it = comps.begin(); it != comps.end();) {
      it->second.scaleBy(c);
      it = it->second.isZero() ? comps.erase(it) : std::next(it);
    }
    return *this;
  }
  HElem zeroLike() const { return HElem{}; }
  HElem star() const;
  bool operator==(const HElem& o) const { return comps == o.comps; }
  std::string str() const;
};

struct HTensor2 {
  using Key = std::array<LPair, 2>;
  std::map<Key, Tensor2> comps;

  void addComp(const Key& k, const Tensor2& t);
  HTensor2& operator+=(const HTensor2& o);
  HTensor2 operator*(const HTensor2& o) const;
  bool operator==(const HTensor2& o) const { return comps == o.comps; }
  std::string str() const;
};

struct HTensor3 {
  using Key = std::array<LPair, 3>;
  std::map<Key, Tensor3> comps;

  void addComp(const Key& k, const Tensor3& t);
  HTensor3& operator+=(const HTensor3& o);
  HTensor3 operator*(const HTensor3& o) const;
  bool operator==(const HTensor3& o) const { return comps == o.comps; }
};

class CoLinking {
 public:
  explicit CoLinking(std::vector<int> labels);  // 2 or 3 distinct labels
  const std::vector<int>& labels() const { return labels_; }
  PresPtr pres(int mu, int nu) const;

  HElem unit() const;  // sum of all component units
  HElem embed(const Poly& p) const;

 private:
  std::vector<int> labels_;
};

HElem antipodeH(const HElem& x);
Scalar epsH(const HElem& x);  // diagonal counits, zero off-diagonal

HTensor2 deltaH(const CoLinking& sys, const HElem& x);
HTensor3 deltaH2(const CoLinking& sys, const HElem& x);  // (Delta (x) id)Delta
HTensor2 hTensorOf(const HElem& x, const HElem& y);
HElem contractEpsLeg(const HTensor2& t, size_t leg);

// weak-Hopf axiom suite over generators and seeded random elements
Report checkWeakHopfAxioms(const CoLinking& sys, int samples, int degree,
                           uint64_t seed);

// Miyashita-Ulbrich actions on U_q(mu,nu); x diagonal
Poly muActionLeft(const Poly& x, const Poly& y);
Poly muActionRight(const Poly& y, const Poly& x);

// module-algebra and module-star laws for the left action
Report checkModuleStar(int mu, int nu, int samples, int degree, uint64_t seed);

}  // namespace colink
