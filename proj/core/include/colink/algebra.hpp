// Noncommutative polynomials over presented *-algebras with oriented-rewriting
// normal forms.  Words are generator-id sequences; the admissible order is
// weighted degree, then lexicographic on ids (declaration order = ascending
// precedence).  Every rule strictly decreases the order, so rewriting
// terminates; confluence is verified separately (see confluence.hpp).
#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "colink/scalar.hpp"

namespace colink {

using GenId = uint8_t;
using Word = std::vector<GenId>;

struct Generator {
  std::string name;
  int weight = 1;
  // star image: g* = starCoeff * starGen (identity pair when no star is set)
  GenId starGen = 0;
  Scalar starCoeff = Scalar(1);
  // rendering of runs: "K^-1 K^-1" prints as K^-2 when negExp is set
  std::string powBase;
  bool negExp = false;
};

struct Rule {
  Word lhs;
  std::vector<std::pair<Word, Scalar>> rhs;
  std::string label;
};

class Presentation {
 public:
  const std::string& id() const { return id_; }
  const std::string& family() const { return family_; }
  const std::vector<Rational>& params() const { return params_; }

  size_t genCount() const { return gens_.size(); }
  const Generator& gen(GenId g) const { return gens_.at(g); }
  std::optional<GenId> genByName(std::string_view n) const;
  const std::vector<Rule>& rules() const { return rules_; }
  bool hasStar() const { return hasStar_; }

  int weightOf(const Word& w) const;
  // admissible word order used for rule validation and rendering
  bool wordLess(const Word& a, const Word& b) const;

  struct Match {
    size_t pos;
    size_t rule;
  };
  // leftmost position, then lowest rule index
  std::optional<Match> findMatch(const Word& w) const;

  static constexpr uint64_t kDefaultBudget = 1'000'000;

  std::string renderWord(const Word& w) const;

 private:
  friend class PresentationBuilder;
  std::string id_, family_;
  std::vector<Rational> params_;
  std::vector<Generator> gens_;
  std::vector<Rule> rules_;
  std::vector<std::vector<uint32_t>> rulesByFirst_;
  bool hasStar_ = false;
};

using PresPtr = std::shared_ptr<const Presentation>;

class PresentationBuilder {
 public:
  explicit PresentationBuilder(std::string family,
                               std::vector<Rational> params = {});
  // declaration order fixes precedence (earlier = smaller); weight >= 1
  GenId addGen(std::string name, int weight = 1);
  void setRender(GenId g, std::string powBase, bool negExp);
  void setStar(GenId g, GenId image, Scalar coeff = Scalar(1));
  void addRule(Word lhs, std::vector<std::pair<Scalar, Word>> rhs,
               std::string label);
  // validates order decrease, star involution, duplicate leading words
  PresPtr build(std::string id);

 private:
  Presentation p_;
  std::vector<std::pair<GenId, std::pair<GenId, Scalar>>> stars_;
};

namespace detail {

// shared rewriting engine; coefficients K support isZero, +=, *= Scalar
template <class K>
void reduceInPlace(const Presentation& pres, std::map<Word, K>& terms,
                   uint64_t budget) {
  std::map<Word, K> agenda = std::move(terms);
  terms.clear();
  uint64_t steps = 0;
  while (!agenda.empty()) {
    auto it = agenda.begin();
    Word w = it->first;
    K c = std::move(it->second);
    agenda.erase(it);
    if (c.isZero()) continue;
    auto m = pres.findMatch(w);
    if (!m) {
      auto [rit, fresh] = terms.try_emplace(std::move(w), std::move(c));
      if (!fresh) {
        rit->second += c;
        if (rit->second.isZero()) terms.erase(rit);
      }
      continue;
    }
    if (++steps > budget)
      throw BudgetError("rewriting budget exceeded on word " +
                        pres.renderWord(w) + " in " + pres.id());
    const Rule& rule = pres.rules()[m->rule];
    for (const auto& [rw, rc] : rule.rhs) {
      Word nw;
      nw.reserve(w.size() - rule.lhs.size() + rw.size());
      nw.insert(nw.end(), w.begin(), w.begin() + static_cast<long>(m->pos));
      nw.insert(nw.end(), rw.begin(), rw.end());
      nw.insert(nw.end(), w.begin() + static_cast<long>(m->pos + rule.lhs.size()),
                w.end());
      K add = c;
      add *= rc;
      auto [ait, fresh] = agenda.try_emplace(std::move(nw), std::move(add));
      if (!fresh) {
        ait->second += add;
        if (ait->second.isZero()) agenda.erase(ait);
      }
    }
  }
}

// renders one summand (sign handling differs for first terms): the word string
// is "" or "1" for the empty word
std::string renderTermInto(bool first, const Scalar& c, const std::string& word);
std::string renderTermInto(bool first, const ExtScalar& c,
                           const std::string& word);

}  // namespace detail

inline void requireSamePres(const PresPtr& a, const PresPtr& b) {
  if (a != b && (!a || !b || a->id() != b->id()))
    throw DomainError("mismatched presentations: " + (a ? a->id() : "null") +
                      " vs " + (b ? b->id() : "null"));
}

// Noncommutative polynomial in normal form (invariant maintained by all ops).
template <class K = Scalar>
class BasicPoly {
 public:
  explicit BasicPoly(PresPtr p) : pres_(std::move(p)) {}
  static BasicPoly one(PresPtr p) { return constant(std::move(p), K(1)); }
  static BasicPoly constant(PresPtr p, K c) {
    BasicPoly r(std::move(p));
    if (!c.isZero()) r.terms_.emplace(Word{}, std::move(c));
    return r;
  }
  static BasicPoly genPoly(PresPtr p, GenId g) {
    return fromWord(std::move(p), Word{g});
  }
  static BasicPoly fromWord(PresPtr p, Word w, K c = K(1),
                            uint64_t budget = Presentation::kDefaultBudget) {
    BasicPoly r(std::move(p));
    if (!c.isZero()) {
      r.terms_.emplace(std::move(w), std::move(c));
      detail::reduceInPlace(*r.pres_, r.terms_, budget);
    }
    return r;
  }
  static BasicPoly fromTerms(PresPtr p, std::map<Word, K> terms,
                             uint64_t budget = Presentation::kDefaultBudget) {
    BasicPoly r(std::move(p));
    r.terms_ = std::move(terms);
    detail::reduceInPlace(*r.pres_, r.terms_, budget);
    return r;
  }

  const PresPtr& pres() const { return pres_; }
  bool isZero() const { return terms_.empty(); }
  bool isOne() const {
    return terms_.size() == 1 && terms_.begin()->first.empty() &&
           terms_.begin()->second.isOne();
  }
  size_t termCount() const { return terms_.size(); }
  const std::map<Word, K>& terms() const { return terms_; }
  K coefficientOf(const Word& w) const {
    auto it = terms_.find(w);
    return it == terms_.end() ? K(0) : it->second;
  }
  K constantTerm() const { return coefficientOf(Word{}); }

  BasicPoly& operator+=(const BasicPoly& o) {
    requireSamePres(pres_, o.pres_);
    for (const auto& [w, c] : o.terms_) addTerm(w, c);
    return *this;
  }
  BasicPoly& operator-=(const BasicPoly& o) {
    requireSamePres(pres_, o.pres_);
    for (const auto& [w, c] : o.terms_) {
      K neg = K(0);
      neg -= c;
      addTerm(w, neg);
    }
    return *this;
  }
  friend BasicPoly operator+(BasicPoly a, const BasicPoly& b) { return a += b; }
  friend BasicPoly operator-(BasicPoly a, const BasicPoly& b) { return a -= b; }

  BasicPoly operator*(const BasicPoly& o) const {
    requireSamePres(pres_, o.pres_);
    BasicPoly r(pres_);
    for (const auto& [wa, ca] : terms_)
      for (const auto& [wb, cb] : o.terms_) {
        Word w;
        w.reserve(wa.size() + wb.size());
        w.insert(w.end(), wa.begin(), wa.end());
        w.insert(w.end(), wb.begin(), wb.end());
        K c = ca;
        c *= cb;
        r.addTermRaw(std::move(w), std::move(c));
      }
    detail::reduceInPlace(*pres_, r.terms_, Presentation::kDefaultBudget);
    return r;
  }

  BasicPoly operator-() const {
    BasicPoly r(pres_);
    for (const auto& [w, c] : terms_) {
      K neg = K(0);
      neg -= c;
      r.terms_.emplace(w, std::move(neg));
    }
    return r;
  }

  template <class C>
  BasicPoly& scaleBy(const C& c) {
    if (K(c).isZero()) {
      terms_.clear();
      return *this;
    }
    for (auto& [w, v] : terms_) v *= c;
    return *this;
  }
  template <class C>
  friend BasicPoly operator*(BasicPoly p, const C& c)
    requires(!std::is_same_v<C, BasicPoly>)
  {
    return p.scaleBy(c);
  }
  template <class C>
  friend BasicPoly operator*(const C& c, BasicPoly p)
    requires(!std::is_same_v<C, BasicPoly>)
  {
    return p.scaleBy(c);
  }

  bool operator==(const BasicPoly& o) const {
    return pres_->id() == o.pres_->id() && terms_ == o.terms_;
  }

  BasicPoly zeroLike() const { return BasicPoly(pres_); }

  // antilinear anti-automorphism from the presentation's star table
  BasicPoly star() const {
    if (!pres_->hasStar())
      throw DomainError("presentation " + pres_->id() + " has no star");
    BasicPoly r(pres_);
    for (const auto& [w, c] : terms_) {
      Word sw;
      sw.reserve(w.size());
      K sc = conj(c);
      for (size_t i = w.size(); i-- > 0;) {
        const Generator& g = pres_->gen(w[i]);
        sw.push_back(g.starGen);
        sc *= g.starCoeff;
      }
      r.addTermRaw(std::move(sw), std::move(sc));
    }
    detail::reduceInPlace(*pres_, r.terms_, Presentation::kDefaultBudget);
    return r;
  }

  std::string str() const;

 private:
  void addTerm(const Word& w, const K& c) {
    if (c.isZero()) return;
    auto [it, fresh] = terms_.try_emplace(w, c);
    if (!fresh) {
      it->second += c;
      if (it->second.isZero()) terms_.erase(it);
    }
  }
  void addTermRaw(Word w, K c) {
    if (c.isZero()) return;
    auto [it, fresh] = terms_.try_emplace(std::move(w), std::move(c));
    if (!fresh) {
      it->second += c;
      if (it->second.isZero()) terms_.erase(it);
    }
  }
  PresPtr pres_;
  std::map<Word, K> terms_;
};

using Poly = BasicPoly<Scalar>;
using XPoly = BasicPoly<ExtScalar>;

// lift Q(s) coefficients into the quadratic extension
inline XPoly liftToExt(const Poly& p) {
  std::map<Word, ExtScalar> t;
  for (const auto& [w, c] : p.terms()) t.emplace(w, ExtScalar(c));
  return XPoly::fromTerms(p.pres(), std::move(t));
}

// map words generator-by-name into another presentation (lift/projection)
template <class K>
BasicPoly<K> transport(const BasicPoly<K>& p, const PresPtr& target) {
  std::map<Word, K> out;
  for (const auto& [w, c] : p.terms()) {
    Word nw;
    nw.reserve(w.size());
    for (GenId g : w) {
      auto t = target->genByName(p.pres()->gen(g).name);
      if (!t)
        throw DomainError("generator " + p.pres()->gen(g).name +
                          " has no counterpart in " + target->id());
      nw.push_back(*t);
    }
    auto [it, fresh] = out.try_emplace(std::move(nw), c);
    if (!fresh) it->second += c;
  }
  return BasicPoly<K>::fromTerms(target, std::move(out));
}

// unital multiplicative (or anti-multiplicative) extension of generator images
template <class Elem>
Elem applyWordHom(const Word& w, const std::vector<Elem>& images,
                  const Elem& unit, bool anti = false) {
  Elem acc = unit;
  for (size_t i = 0; i < w.size(); ++i) {
    GenId g = anti ? w[w.size() - 1 - i] : w[i];
    if (g >= images.size()) throw DomainError("missing generator image");
    acc = acc * images[g];
  }
  return acc;
}

template <class Elem, class K>
Elem applyHom(const BasicPoly<K>& p, const std::vector<Elem>& images,
              const Elem& unit, bool anti = false) {
  Elem acc = unit.zeroLike();
  for (const auto& [w, c] : p.terms()) {
    Elem t = applyWordHom(w, images, unit, anti);
    t.scaleBy(conj(c));  // antilinear in anti mode; conj is the identity here
    acc += t;
  }
  return acc;
}

// checks that generator images satisfy every defining rule of src;
// returns a witness description on the first violated relation
template <class Elem>
std::optional<std::string> checkRelationsPreserved(
    const PresPtr& src, const std::vector<Elem>& images, const Elem& unit,
    bool anti = false) {
  for (const Rule& r : src->rules()) {
    Elem lhs = applyWordHom(r.lhs, images, unit, anti);
    Elem rhs = unit.zeroLike();
    for (const auto& [w, c] : r.rhs) {
      Elem t = applyWordHom(w, images, unit, anti);
      t.scaleBy(c);
      rhs += t;
    }
    if (!(lhs == rhs))
      return "relation " + r.label + ": image of " + src->renderWord(r.lhs) +
             " gives " + lhs.str() + " expected " + rhs.str();
  }
  return std::nullopt;
}

template <class K>
std::string BasicPoly<K>::str() const {
  if (terms_.empty()) return "0";
  std::vector<const std::pair<const Word, K>*> ts;
  ts.reserve(terms_.size());
  for (const auto& t : terms_) ts.push_back(&t);
  std::sort(ts.begin(), ts.end(),
            [&](const auto* a, const auto* b) {
              return pres_->wordLess(b->first, a->first);  // leading term first
            });
  std::string out;
  bool first = true;
  for (const auto* t : ts) {
    out += detail::renderTermInto(first, t->second, pres_->renderWord(t->first));
    first = false;
  }
  return out;
}

extern template class BasicPoly<Scalar>;
extern template class BasicPoly<ExtScalar>;

}  // namespace colink
