#include <fmt/format.h>

#include "colink/algebra.hpp"

namespace colink {

std::optional<GenId> Presentation::genByName(std::string_view n) const {
  for (size_t i = 0; i < gens_.size(); ++i)
    if (gens_[i].name == n) return static_cast<GenId>(i);
  return std::nullopt;
}

int Presentation::weightOf(const Word& w) const {
  int t = 0;
  for (GenId g : w) t += gens_[g].weight;
  return t;
}

bool Presentation::wordLess(const Word& a, const Word& b) const {
  int wa = weightOf(a), wb = weightOf(b);
  if (wa != wb) return wa < wb;
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

std::optional<Presentation::Match> Presentation::findMatch(const Word& w) const {
  for (size_t pos = 0; pos < w.size(); ++pos) {
    for (uint32_t ri : rulesByFirst_[w[pos]]) {
      const Word& l = rules_[ri].lhs;
      if (pos + l.size() <= w.size() &&
          std::equal(l.begin(), l.end(), w.begin() + static_cast<long>(pos)))
        return Match{pos, ri};
    }
  }
  return std::nullopt;
}

std::string Presentation::renderWord(const Word& w) const {
  if (w.empty()) return "1";
  std::string out;
  size_t i = 0;
  while (i < w.size()) {
    size_t j = i;
    while (j < w.size() && w[j] == w[i]) ++j;
    size_t n = j - i;
    const Generator& g = gens_[w[i]];
    if (!out.empty()) out += "*";
    if (g.negExp)
      out += fmt::format("{}^-{}", g.powBase, n);
    else if (n == 1)
      out += g.name;
    else
      out += fmt::format("{}^{}", g.name, n);
    i = j;
  }
  return out;
}

PresentationBuilder::PresentationBuilder(std::string family,
                                         std::vector<Rational> params) {
  p_.family_ = std::move(family);
  p_.params_ = std::move(params);
}

GenId PresentationBuilder::addGen(std::string name, int weight) {
  if (weight < 1)
    throw DomainError(fmt::format("generator {} must have weight >= 1", name));
  if (p_.gens_.size() >= 250) throw DomainError("too many generators");
  for (const auto& g : p_.gens_)
    if (g.name == name) throw DomainError("duplicate generator name " + name);
  Generator g;
  g.name = name;
  g.powBase = name;
  g.weight = weight;
  g.starGen = static_cast<GenId>(p_.gens_.size());
  p_.gens_.push_back(std::move(g));
  return static_cast<GenId>(p_.gens_.size() - 1);
}

void PresentationBuilder::setRender(GenId g, std::string powBase, bool negExp) {
  p_.gens_.at(g).powBase = std::move(powBase);
  p_.gens_.at(g).negExp = negExp;
}

void PresentationBuilder::setStar(GenId g, GenId image, Scalar coeff) {
  stars_.emplace_back(g, std::make_pair(image, std::move(coeff)));
}

void PresentationBuilder::addRule(Word lhs,
                                  std::vector<std::pair<Scalar, Word>> rhs,
                                  std::string label) {
  if (lhs.empty()) throw DomainError("rule with empty leading word");
  Rule r;
  r.lhs = std::move(lhs);
  r.label = std::move(label);
  for (auto& [c, w] : rhs)
    if (!c.isZero()) r.rhs.emplace_back(std::move(w), std::move(c));
  p_.rules_.push_back(std::move(r));
}

PresPtr PresentationBuilder::build(std::string id) {
  p_.id_ = std::move(id);
  // star table: involution check
  if (!stars_.empty()) {
    if (stars_.size() != p_.gens_.size())
      throw DomainError("star table must cover every generator of " + p_.id_);
    for (const auto& [g, im] : stars_) {
      p_.gens_.at(g).starGen = im.first;
      p_.gens_.at(g).starCoeff = im.second;
    }
    for (size_t g = 0; g < p_.gens_.size(); ++g) {
      const Generator& a = p_.gens_[g];
      const Generator& b = p_.gens_[a.starGen];
      if (b.starGen != g || !(a.starCoeff * conj(b.starCoeff)).isOne())
        throw DomainError(
            fmt::format("star table does not square to identity on {} in {}",
                        a.name, p_.id_));
    }
    p_.hasStar_ = true;
  }
  // rule order validation: every rhs word strictly below the lhs
  for (const auto& r : p_.rules_) {
    for (GenId g : r.lhs)
      if (g >= p_.gens_.size()) throw DomainError("rule uses unknown generator");
    for (const auto& [w, c] : r.rhs) {
      if (!p_.wordLess(w, r.lhs))
        throw DomainError(fmt::format(
            "rule {} in {} does not decrease the word order: {} !> {}", r.label,
            p_.id_, p_.renderWord(r.lhs), p_.renderWord(w)));
    }
  }
  // duplicate leading words would make matching order-dependent
  for (size_t i = 0; i < p_.rules_.size(); ++i)
    for (size_t j = i + 1; j < p_.rules_.size(); ++j)
      if (p_.rules_[i].lhs == p_.rules_[j].lhs)
        throw DomainError("duplicate rule leading word in " + p_.id_);
  p_.rulesByFirst_.assign(p_.gens_.size(), {});
  for (size_t i = 0; i < p_.rules_.size(); ++i)
    p_.rulesByFirst_[p_.rules_[i].lhs[0]].push_back(static_cast<uint32_t>(i));
  return std::make_shared<Presentation>(std::move(p_));
}

namespace detail {

namespace {
// (magnitude string, negative?, needs parens when multiplying a word)
struct CoeffParts {
  std::string text;
  bool neg = false;
  bool parens = false;
  bool one = false;
};

CoeffParts partsOf(const Scalar& c) {
  CoeffParts p;
  p.neg = !c.isZero() && c.num().leading() < 0;
  Scalar a = p.neg ? -c : c;
  p.text = a.str();
  p.one = a.isOne();
  p.parens = a.num().termCount() > 1;
  return p;
}

CoeffParts partsOf(const ExtScalar& c) {
  if (c.ext().isZero()) return partsOf(c.base());
  CoeffParts p;
  if (c.base().isZero()) {
    CoeffParts e = partsOf(c.ext());
    p.neg = e.neg;
    ExtScalar a = p.neg ? -c : c;
    p.text = a.str();
    p.parens = a.ext().num().termCount() > 1 || !a.ext().den().isOne();
    return p;
  }
  p.text = c.str();
  p.parens = true;
  return p;
}

template <class K>
std::string renderTermImpl(bool first, const K& c, const std::string& word) {
  CoeffParts p = partsOf(c);
  std::string out;
  if (first)
    out = p.neg ? "-" : "";
  else
    out = p.neg ? " - " : " + ";
  bool unitWord = word.empty() || word == "1";
  if (unitWord) {
    // a signed multi-term magnitude is ambiguous without parentheses
    out += p.parens ? "(" + p.text + ")" : p.text;
    return out;
  }
  if (p.one) {
    out += word;
    return out;
  }
  out += p.parens ? "(" + p.text + ")" : p.text;
  out += "*" + word;
  return out;
}
}  // namespace

std::string renderTermInto(bool first, const Scalar& c, const std::string& word) {
  return renderTermImpl(first, c, word);
}

std::string renderTermInto(bool first, const ExtScalar& c,
                           const std::string& word) {
  return renderTermImpl(first, c, word);
}

}  // namespace detail

template class BasicPoly<Scalar>;
template class BasicPoly<ExtScalar>;

}  // namespace colink
