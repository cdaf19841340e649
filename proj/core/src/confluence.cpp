#include <fmt/format.h>

#include "colink/confluence.hpp"

namespace colink {

namespace {

// apply one rule at a fixed position, then reduce fully
Poly resolveVia(const PresPtr& pres, const Word& w, size_t ruleIdx, size_t pos,
                uint64_t budget) {
  const Rule& r = pres->rules()[ruleIdx];
  std::map<Word, Scalar> terms;
  for (const auto& [rw, rc] : r.rhs) {
    Word nw;
    nw.reserve(w.size() - r.lhs.size() + rw.size());
    nw.insert(nw.end(), w.begin(), w.begin() + static_cast<long>(pos));
    nw.insert(nw.end(), rw.begin(), rw.end());
    nw.insert(nw.end(), w.begin() + static_cast<long>(pos + r.lhs.size()),
              w.end());
    auto [it, fresh] = terms.try_emplace(std::move(nw), rc);
    if (!fresh) it->second += rc;
  }
  return Poly::fromTerms(pres, std::move(terms), budget);
}

}  // namespace

Report checkRuleConfluence(const PresPtr& pres, size_t maxLen, uint64_t budget) {
  Report rep;
  const auto& rules = pres->rules();
  size_t ambiguities = 0, failures = 0;
  std::string witness;
  for (size_t i = 0; i < rules.size(); ++i) {
    const Word& li = rules[i].lhs;
    for (size_t j = 0; j < rules.size(); ++j) {
      const Word& lj = rules[j].lhs;
      // overlap ambiguities: proper suffix of li = proper prefix of lj
      for (size_t k = 1; k < li.size() && k < lj.size(); ++k) {
        if (!std::equal(li.end() - static_cast<long>(k), li.end(), lj.begin()))
          continue;
        Word w(li);
        w.insert(w.end(), lj.begin() + static_cast<long>(k), lj.end());
        if (w.size() > maxLen) continue;
        ++ambiguities;
        Poly a = resolveVia(pres, w, i, 0, budget);
        Poly b = resolveVia(pres, w, j, li.size() - k, budget);
        if (!(a == b)) {
          ++failures;
          if (witness.empty())
            witness = fmt::format("word {}: {} vs {}", pres->renderWord(w),
                                  a.str(), b.str());
        }
      }
      // inclusion ambiguities: lj a proper subword of li
      if (i != j && lj.size() < li.size()) {
        for (size_t pos = 0; pos + lj.size() <= li.size(); ++pos) {
          if (!std::equal(lj.begin(), lj.end(),
                          li.begin() + static_cast<long>(pos)))
            continue;
          ++ambiguities;
          Poly a = resolveVia(pres, li, i, 0, budget);
          Poly b = resolveVia(pres, li, j, pos, budget);
          if (!(a == b)) {
            ++failures;
            if (witness.empty())
              witness = fmt::format("word {}: {} vs {}", pres->renderWord(li),
                                    a.str(), b.str());
          }
        }
      }
    }
  }
  std::string id = "freealg.confluence";
  std::string params = pres->id();
  std::string detail = fmt::format("{} ambiguities resolved", ambiguities);
  if (failures == 0)
    rep.pass(id, params, detail);
  else
    rep.fail(id, params, witness, fmt::format("{} unresolved", failures));
  return rep;
}

Scalar qbinomial(int r, int k) {
  if (k < 0 || k > r) return Scalar(0);
  Scalar num(1), den(1);
  for (int i = 1; i <= k; ++i) {
    num *= Scalar(1) - Scalar::qPow(2 * (r - k + i));
    den *= Scalar(1) - Scalar::qPow(2 * i);
  }
  return num / den;
}

Report qbinomialIdentityCheck(int rmax) {
  Report rep;
  if (rmax < 1) {
    rep.fail("freealg.qbinomial", "", "", "rmax must be >= 1");
    return rep;
  }
  PresentationBuilder b("demo");
  GenId w = b.addGen("w");
  GenId v = b.addGen("v");
  b.addRule({v, w}, {{Scalar::qPow(2), {w, v}}}, "vw");
  PresPtr pres = b.build("demo.qcommuting");
  Poly sum = Poly::genPoly(pres, v) + Poly::genPoly(pres, w);
  Poly power = Poly::one(pres);
  for (int r = 1; r <= rmax; ++r) {
    power = power * sum;
    Poly expected(pres);
    for (int k = 0; k <= r; ++k) {
      Word mono(static_cast<size_t>(k), w);
      mono.insert(mono.end(), static_cast<size_t>(r - k), v);
      expected += Poly::fromWord(pres, std::move(mono), qbinomial(r, k));
    }
    if (power == expected)
      rep.pass("freealg.qbinomial", fmt::format("r={}", r),
               "orientation v*w -> q^2 w*v");
    else
      rep.fail("freealg.qbinomial", fmt::format("r={}", r),
               fmt::format("(v+w)^{} = {}", r, power.str()), "expansion mismatch");
  }
  return rep;
}

}  // namespace colink
