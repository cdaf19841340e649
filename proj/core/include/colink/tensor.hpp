// Tensor products over presented algebras: componentwise multiplication and
// componentwise normal forms.  Legs are fixed at compile time (2 or 3 here).
#pragma once

#include <array>
#include <functional>

#include "colink/algebra.hpp"

namespace colink {

template <size_t N, class K = Scalar>
class Tensor {
 public:
  using Key = std::array<Word, N>;

  explicit Tensor(std::array<PresPtr, N> legs) : legs_(std::move(legs)) {}
  static Tensor unit(std::array<PresPtr, N> legs) {
    Tensor t(std::move(legs));
    t.terms_.emplace(Key{}, K(1));
    return t;
  }

  const std::array<PresPtr, N>& legs() const { return legs_; }
  const std::map<Key, K>& terms() const { return terms_; }
  bool isZero() const { return terms_.empty(); }
  size_t termCount() const { return terms_.size(); }
  K coefficientOf(const Key& k) const {
    auto it = terms_.find(k);
    return it == terms_.end() ? K(0) : it->second;
  }

  void addTerm(Key k, K c) {
    if (c.isZero()) return;
    auto [it, fresh] = terms_.try_emplace(std::move(k), std::move(c));
    if (!fresh) {
      it->second += c;
      if (it->second.isZero()) terms_.erase(it);
    }
  }

  Tensor& operator+=(const Tensor& o) {
    requireSameLegs(o);
    for (const auto& [k, c] : o.terms_) addTerm(k, c);
    return *this;
  }
  Tensor& operator-=(const Tensor& o) {
    requireSameLegs(o);
    for (const auto& [k, c] : o.terms_) {
      K neg = K(0);
      neg -= c;
      addTerm(k, std::move(neg));
    }
    return *this;
  }
  friend Tensor operator+(Tensor a, const Tensor& b) { return a += b; }
  friend Tensor operator-(Tensor a, const Tensor& b) { return a -= b; }

  Tensor operator-() const {
    Tensor r(legs_);
    for (const auto& [k, c] : terms_) {
      K neg = K(0);
      neg -= c;
      r.terms_.emplace(k, std::move(neg));
    }
    return r;
  }

  Tensor operator*(const Tensor& o) const {
    requireSameLegs(o);
    Tensor r(legs_);
    for (const auto& [ka, ca] : terms_)
      for (const auto& [kb, cb] : o.terms_) {
        Key k;
        for (size_t i = 0; i < N; ++i) {
          k[i].reserve(ka[i].size() + kb[i].size());
          k[i].insert(k[i].end(), ka[i].begin(), ka[i].end());
          k[i].insert(k[i].end(), kb[i].begin(), kb[i].end());
        }
        K c = ca;
        c *= cb;
        r.addTerm(std::move(k), std::move(c));
      }
    r.normalizeLegs();
    return r;
  }

  template <class C>
  Tensor& scaleBy(const C& c) {
    if (K(c).isZero()) {
      terms_.clear();
      return *this;
    }
    for (auto& [k, v] : terms_) v *= c;
    return *this;
  }

  bool operator==(const Tensor& o) const {
    if (terms_.size() != o.terms_.size()) return false;
    for (size_t i = 0; i < N; ++i)
      if (legs_[i]->id() != o.legs_[i]->id()) return false;
    return terms_ == o.terms_;
  }

  Tensor zeroLike() const { return Tensor(legs_); }

  // componentwise star with coefficient conjugation: (x (x) y)* = x* (x) y*
  Tensor star() const {
    Tensor r(legs_);
    for (const auto& [k, c] : terms_) {
      Key sk;
      K sc = conj(c);
      for (size_t i = 0; i < N; ++i) {
        const Presentation& p = *legs_[i];
        sk[i].reserve(k[i].size());
        for (size_t j = k[i].size(); j-- > 0;) {
          const Generator& g = p.gen(k[i][j]);
          sk[i].push_back(g.starGen);
          sc *= g.starCoeff;
        }
      }
      r.addTerm(std::move(sk), std::move(sc));
    }
    r.normalizeLegs();
    return r;
  }

  Tensor swapped() const
    requires(N == 2)
  {
    Tensor r(std::array<PresPtr, 2>{legs_[1], legs_[0]});
    for (const auto& [k, c] : terms_) r.terms_.emplace(Key{k[1], k[0]}, c);
    return r;
  }

  std::string str() const;

  void normalizeLegs(uint64_t budget = Presentation::kDefaultBudget) {
    for (size_t leg = 0; leg < N; ++leg) {
      std::map<Key, K> next;
      for (auto& [k, c] : terms_) {
        std::map<Word, K> one;
        one.emplace(k[leg], c);
        detail::reduceInPlace(*legs_[leg], one, budget);
        for (auto& [w, rc] : one) {
          Key nk = k;
          nk[leg] = w;
          auto [it, fresh] = next.try_emplace(std::move(nk), std::move(rc));
          if (!fresh) {
            it->second += rc;
            if (it->second.isZero()) next.erase(it);
          }
        }
      }
      terms_ = std::move(next);
    }
  }

 private:
  void requireSameLegs(const Tensor& o) const {
    for (size_t i = 0; i < N; ++i) requireSamePres(legs_[i], o.legs_[i]);
  }
  std::array<PresPtr, N> legs_;
  std::map<Key, K> terms_;
};

using Tensor2 = Tensor<2, Scalar>;
using Tensor3 = Tensor<3, Scalar>;
using XTensor2 = Tensor<2, ExtScalar>;

template <class K>
Tensor<2, K> tensorOf(const BasicPoly<K>& a, const BasicPoly<K>& b) {
  Tensor<2, K> t({a.pres(), b.pres()});
  for (const auto& [wa, ca] : a.terms())
    for (const auto& [wb, cb] : b.terms()) {
      K c = ca;
      c *= cb;
      t.addTerm({wa, wb}, std::move(c));
    }
  return t;
}

template <class K>
Tensor<3, K> tensorOf(const BasicPoly<K>& a, const BasicPoly<K>& b,
                      const BasicPoly<K>& c) {
  Tensor<3, K> t({a.pres(), b.pres(), c.pres()});
  for (const auto& [wa, ca] : a.terms())
    for (const auto& [wb, cb] : b.terms())
      for (const auto& [wc, cc] : c.terms()) {
        K v = ca;
        v *= cb;
        v *= cc;
        t.addTerm({wa, wb, wc}, std::move(v));
      }
  return t;
}

// substitute an M-leg tensor for every generator of one leg (e.g. Δ on a leg);
// genImages[g] and unitImage share the same leg presentations
template <size_t N, size_t M, class K>
Tensor<N + M - 1, K> expandLeg(const Tensor<N, K>& t, size_t leg,
                               const std::vector<Tensor<M, K>>& genImages,
                               const Tensor<M, K>& unitImage) {
  std::array<PresPtr, N + M - 1> legs;
  for (size_t i = 0; i < leg; ++i) legs[i] = t.legs()[i];
  for (size_t i = 0; i < M; ++i) legs[leg + i] = unitImage.legs()[i];
  for (size_t i = leg + 1; i < N; ++i) legs[i + M - 1] = t.legs()[i];
  Tensor<N + M - 1, K> out(legs);
  for (const auto& [k, c] : t.terms()) {
    Tensor<M, K> img = applyWordHom(k[leg], genImages, unitImage);
    for (const auto& [ik, ic] : img.terms()) {
      typename Tensor<N + M - 1, K>::Key nk;
      for (size_t i = 0; i < leg; ++i) nk[i] = k[i];
      for (size_t i = 0; i < M; ++i) nk[leg + i] = ik[i];
      for (size_t i = leg + 1; i < N; ++i) nk[i + M - 1] = k[i];
      K c2 = c;
      c2 *= ic;
      out.addTerm(std::move(nk), std::move(c2));
    }
  }
  return out;
}

// apply a (anti)homomorphism given by per-generator polynomial images to one leg
template <size_t N, class K>
Tensor<N, K> mapLeg(const Tensor<N, K>& t, size_t leg,
                    const std::vector<BasicPoly<K>>& genImages,
                    const PresPtr& target, bool anti = false) {
  std::array<PresPtr, N> legs = t.legs();
  legs[leg] = target;
  Tensor<N, K> out(legs);
  BasicPoly<K> unit = BasicPoly<K>::one(target);
  for (const auto& [k, c] : t.terms()) {
    BasicPoly<K> img = applyWordHom(k[leg], genImages, unit, anti);
    for (const auto& [w, ic] : img.terms()) {
      auto nk = k;
      nk[leg] = w;
      K c2 = c;
      c2 *= ic;
      out.addTerm(std::move(nk), std::move(c2));
    }
  }
  return out;
}

// contract one leg with a linear functional on words (e.g. a counit)
template <class K, class F>
BasicPoly<K> contractLeg2(const Tensor<2, K>& t, size_t leg, F&& f) {
  BasicPoly<K> acc(t.legs()[1 - leg]);
  for (const auto& [k, c] : t.terms()) {
    K v = f(k[leg]);
    if (v.isZero()) continue;
    v *= c;
    std::map<Word, K> one;
    one.emplace(k[1 - leg], std::move(v));
    acc += BasicPoly<K>::fromTerms(t.legs()[1 - leg], std::move(one));
  }
  return acc;
}

template <class K, class F>
Tensor<2, K> contractLeg3(const Tensor<3, K>& t, size_t leg, F&& f) {
  std::array<PresPtr, 2> legs;
  for (size_t i = 0, j = 0; i < 3; ++i)
    if (i != leg) legs[j++] = t.legs()[i];
  Tensor<2, K> out(legs);
  for (const auto& [k, c] : t.terms()) {
    K v = f(k[leg]);
    if (v.isZero()) continue;
    v *= c;
    typename Tensor<2, K>::Key nk;
    for (size_t i = 0, j = 0; i < 3; ++i)
      if (i != leg) nk[j++] = k[i];
    out.addTerm(std::move(nk), std::move(v));
  }
  return out;
}

template <size_t N, class K>
std::string Tensor<N, K>::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [k, c] : terms_) {
    std::string words;
    for (size_t i = 0; i < N; ++i) {
      if (i) words += " (x) ";
      words += legs_[i]->renderWord(k[i]);
    }
    out += detail::renderTermInto(first, c, words);
    first = false;
  }
  return out;
}

}  // namespace colink
