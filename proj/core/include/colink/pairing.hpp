// The Hopf *-algebra pairing between U_q(mu) and Pol_q(mu), built from three
// primitive functionals: the character chi = <K, .>, its convolution inverse
// chiInv = <K^-1, .>, and the (chiInv, chi)-twisted derivations <E, .> and
// <F, .>.  Evaluation peels the left letter of the U_q word against the
// memoized coproduct of the Pol word.
#pragma once

#include "colink/pol.hpp"
#include "colink/report.hpp"
#include "colink/uq.hpp"

namespace colink {

PolVariant polVariantForLabel(int mu);
int labelForPolVariant(PolVariant v);  // rejects the unstarred variant

// one evaluation context per label; holds the coproduct and word-pair memos
class Pairing {
 public:
  explicit Pairing(int mu);  // mu in {-1, 0, +1}
  int mu() const { return mu_; }
  const PresPtr& uq() const { return uq_; }
  const PresPtr& pol() const { return pol_; }

  // x in U_q(mu,mu), y in Pol_q(mu)
  Scalar pair(const Poly& x, const Poly& y);
  Scalar pairWords(const Word& wx, const Word& wy);

  // control experiment: drop the E-b primitive, killing every E row
  void dropEb();

 private:
  Scalar primitive(GenId g, const Word& wy) const;
  const Tensor2& deltaOf(const Word& wy);

  int mu_;
  PresPtr uq_, pol_;
  std::array<Scalar, 4> chi_, chiInv_, dE_, dF_;
  std::map<Word, Tensor2> deltaMemo_;
  std::map<std::pair<Word, Word>, Scalar> pairMemo_;
};

Scalar pairUqPol(const Poly& x, const Poly& y);

// rank over the scalar field of the pairing matrix between U_q monomials
// F^f K^b E^e (f, e <= degree, |b| <= degree) and Pol normal monomials of
// length <= 2*degree; degree <= 4
size_t pairingGramRank(int mu, int degree, bool dropEb = false);

// frozen generator and degree-2 oracle tables, duality with product and
// coproduct, both star compatibilities, antipode transpose, character and
// convolution-inverse laws, counit rows, on seeded random elements
Report checkPairing(int mu, int samples, int degree, uint64_t seed);

}  // namespace colink
