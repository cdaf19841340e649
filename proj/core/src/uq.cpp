#include "colink/uq.hpp"

#include <fmt/format.h>

#include <mutex>

#include "colink/confluence.hpp"

namespace colink {

namespace {

using namespace uqgen;

int ratToLabel(const Rational& r) {
  Rational c = r;
  c.canonicalize();
  if (c.get_den() != 1) throw DomainError("label is not an integer");
  long v = c.get_num().get_si();
  if (v < -1 || v > 1) throw DomainError("label out of range");
  return static_cast<int>(v);
}

void requireLabel(int l) {
  if (l < -1 || l > 1) throw DomainError(fmt::format("bad label {}", l));
}

// eps kills E and F, fixes K and K^-1; multiplicative on normal words
Scalar epsWord(const Word& w) {
  for (GenId g : w)
    if (g == E || g == F) return Scalar(0);
  return Scalar(1);
}

// antipode images of (F, Ki, K, E), landing in U_q(nu,mu)
std::vector<Poly> antipodeImages(int mu, int nu) {
  PresPtr t = makeUq(nu, mu);
  return {Poly::genPoly(t, F) * (-Scalar::qPow(-1)), Poly::genPoly(t, K),
          Poly::genPoly(t, Ki), Poly::genPoly(t, E) * (-Scalar::qPow(1))};
}

std::string uqParams(int mu, int nu) {
  return fmt::format("mu={} nu={}", labelStr(mu), labelStr(nu));
}

}  // namespace

std::string labelStr(int l) {
  switch (l) {
    case -1:
      return "-";
    case 0:
      return "0";
    case 1:
      return "+";
  }
  throw DomainError(fmt::format("bad label {}", l));
}

int parseLabel(std::string_view s) {
  if (s == "-" || s == "-1") return -1;
  if (s == "0") return 0;
  if (s == "+" || s == "+1" || s == "1") return 1;
  throw ParseError(fmt::format("bad label '{}'", s), 0);
}

PresPtr makeUq(int mu, int nu) {
  requireLabel(mu);
  requireLabel(nu);
  static std::mutex m;
  static std::map<std::pair<int, int>, PresPtr> cache;
  std::lock_guard<std::mutex> lock(m);
  auto it = cache.find({mu, nu});
  if (it != cache.end()) return it->second;

  PresentationBuilder b("uq", {Rational(mu), Rational(nu)});
  GenId f = b.addGen("F");
  GenId ki = b.addGen("Ki");
  GenId k = b.addGen("K");
  GenId e = b.addGen("E");
  b.setRender(ki, "K", true);
  b.setStar(f, e);
  b.setStar(e, f);
  b.setStar(k, k);
  b.setStar(ki, ki);
  Scalar lam = Scalar::lambda();
  b.addRule({k, ki}, {{Scalar(1), {}}}, "k.kinv");
  b.addRule({ki, k}, {{Scalar(1), {}}}, "kinv.k");
  b.addRule({e, k}, {{Scalar::qPow(-1), {k, e}}}, "e.k");
  b.addRule({e, ki}, {{Scalar::qPow(1), {ki, e}}}, "e.kinv");
  b.addRule({k, f}, {{Scalar::qPow(-1), {f, k}}}, "k.f");
  b.addRule({ki, f}, {{Scalar::qPow(1), {f, ki}}}, "kinv.f");
  b.addRule({e, f},
            {{Scalar(1), {f, e}},
             {lam * Scalar(mu), {k, k}},
             {-(lam * Scalar(nu)), {ki, ki}}},
            "e.f");
  PresPtr p = b.build(fmt::format("Uq({},{})", labelStr(mu), labelStr(nu)));
  cache.emplace(std::make_pair(mu, nu), p);
  return p;
}

std::pair<int, int> uqLabels(const PresPtr& p) {
  if (p->family() != "uq" || p->params().size() != 2)
    throw DomainError("element does not live in a U_q algebra: " + p->id());
  return {ratToLabel(p->params()[0]), ratToLabel(p->params()[1])};
}

std::vector<Tensor2> uqDeltaImages(int mu, int ups, int nu) {
  PresPtr a = makeUq(mu, ups), b = makeUq(ups, nu);
  auto g = [](const PresPtr& p, GenId id) { return Poly::genPoly(p, id); };
  std::vector<Tensor2> im;
  // the F image is forced by the star-homomorphism property from the E image
  im.push_back(tensorOf(g(a, F), g(b, K)) + tensorOf(g(a, Ki), g(b, F)));
  im.push_back(tensorOf(g(a, Ki), g(b, Ki)));
  im.push_back(tensorOf(g(a, K), g(b, K)));
  im.push_back(tensorOf(g(a, E), g(b, K)) + tensorOf(g(a, Ki), g(b, E)));
  return im;
}

Tensor2 deltaUq(const Poly& p, int ups) {
  requireLabel(ups);
  auto [mu, nu] = uqLabels(p.pres());
  Tensor2 unit = Tensor2::unit({makeUq(mu, ups), makeUq(ups, nu)});
  return applyHom(p, uqDeltaImages(mu, ups, nu), unit);
}

Scalar counitUq(const Poly& p) {
  auto [mu, nu] = uqLabels(p.pres());
  if (mu != nu)
    throw DomainError("counit only lives on diagonal algebras, got " +
                      p.pres()->id());
  Scalar acc(0);
  for (const auto& [w, c] : p.terms()) acc += c * epsWord(w);
  return acc;
}

Poly antipodeUq(const Poly& p) {
  auto [mu, nu] = uqLabels(p.pres());
  return applyHom(p, antipodeImages(mu, nu), Poly::one(makeUq(nu, mu)), true);
}

Report checkUqHopf(const std::vector<int>& labels) {
  Report rep;
  auto gens = [](const PresPtr& p) {
    std::vector<Poly> g;
    for (GenId i = 0; i < 4; ++i) g.push_back(Poly::genPoly(p, i));
    return g;
  };
  for (int mu : labels)
    for (int nu : labels) {
      PresPtr p = makeUq(mu, nu);
      rep.merge(checkRuleConfluence(p));

      // counit respects the defining rules on the diagonal
      if (mu == nu) {
        bool ok = true;
        std::string wit;
        for (const Rule& r : p->rules()) {
          Scalar lhs = epsWord(r.lhs), rhs(0);
          for (const auto& [w, c] : r.rhs) rhs += c * epsWord(w);
          if (!(lhs == rhs)) {
            ok = false;
            wit = fmt::format("rule {}: {} vs {}", r.label, lhs.str(),
                              rhs.str());
            break;
          }
        }
        if (ok)
          rep.pass("uq.counit.relations", uqParams(mu, nu));
        else
          rep.fail("uq.counit.relations", uqParams(mu, nu), wit);
      }

      // star-antipode involution S(S(g*)*) = g
      for (const Poly& g : gens(p)) {
        Poly back = antipodeUq(antipodeUq(g.star()).star());
        if (back == g)
          rep.pass("uq.antipode.invol", uqParams(mu, nu));
        else
          rep.fail("uq.antipode.invol", uqParams(mu, nu),
                   back.str() + " vs " + g.str());
      }

      // antipode sends the relations of U(mu,nu) into U(nu,mu)
      auto bad = checkRelationsPreserved(p, antipodeImages(mu, nu),
                                         Poly::one(makeUq(nu, mu)), true);
      if (!bad)
        rep.pass("uq.antipode.relations", uqParams(mu, nu));
      else
        rep.fail("uq.antipode.relations", uqParams(mu, nu), *bad);

      for (int ups : labels) {
        std::string par =
            fmt::format("{} ups={}", uqParams(mu, nu), labelStr(ups));
        Tensor2 unit = Tensor2::unit({makeUq(mu, ups), makeUq(ups, nu)});
        auto im = uqDeltaImages(mu, ups, nu);
        auto badd = checkRelationsPreserved(p, im, unit);
        if (!badd)
          rep.pass("uq.delta.relations", par);
        else
          rep.fail("uq.delta.relations", par, *badd);

        // Delta is a *-homomorphism on generators
        for (const Poly& g : gens(p)) {
          if (deltaUq(g.star(), ups) == deltaUq(g, ups).star())
            rep.pass("uq.delta.star", par);
          else
            rep.fail("uq.delta.star", par, g.str());
        }

        // counit laws through the diagonal legs
        for (const Poly& g : gens(p)) {
          Poly left = contractLeg2(deltaUq(g, mu), 0, epsWord);
          Poly right = contractLeg2(deltaUq(g, nu), 1, epsWord);
          if (left == g && right == g)
            rep.pass("uq.counit.delta", uqParams(mu, nu));
          else
            rep.fail("uq.counit.delta", uqParams(mu, nu),
                     left.str() + " / " + right.str() + " vs " + g.str());
        }

        // flip law (S (x) S) Delta = swap . Delta . S on generators
        for (const Poly& g : gens(p)) {
          Tensor2 lhs = mapLeg(
              mapLeg(deltaUq(g, ups), 0, antipodeImages(mu, ups),
                     makeUq(ups, mu), true),
              1, antipodeImages(ups, nu), makeUq(nu, ups), true);
          Tensor2 rhs = deltaUq(antipodeUq(g), ups).swapped();
          if (lhs == rhs)
            rep.pass("uq.flip", par);
          else
            rep.fail("uq.flip", par, lhs.str() + " vs " + rhs.str());
        }

        // generalized coassociativity on generators
        for (int om : labels) {
          std::string par4 = fmt::format("{} om={}", par, labelStr(om));
          Tensor2 u1 = Tensor2::unit({makeUq(mu, om), makeUq(om, ups)});
          Tensor2 u2 = Tensor2::unit({makeUq(om, ups), makeUq(ups, nu)});
          bool ok = true;
          std::string wit;
          for (const Poly& g : gens(p)) {
            Tensor3 lhs = expandLeg(deltaUq(g, ups), 0,
                                    uqDeltaImages(mu, om, ups), u1);
            Tensor3 rhs = expandLeg(deltaUq(g, om), 1,
                                    uqDeltaImages(om, ups, nu), u2);
            if (!(lhs == rhs)) {
              ok = false;
              wit = "generator " + g.str();
              break;
            }
          }
          if (ok)
            rep.pass("uq.coassoc", par4);
          else
            rep.fail("uq.coassoc", par4, wit);
        }
      }
    }
  return rep;
}

Report checkAntipodeIdentities(const Poly& p, int ups) {
  auto [mu, nu] = uqLabels(p.pres());
  if (mu != nu) throw DomainError("antipode identities need a diagonal element");
  Report rep;
  std::string par = fmt::format("mu={} ups={} p={}", labelStr(mu),
                                labelStr(ups), p.str());
  Scalar eps = counitUq(p);
  PresPtr pmu = makeUq(mu, ups), pum = makeUq(ups, mu);
  Tensor2 d = deltaUq(p, ups);  // legs U(mu,ups) (x) U(ups,mu)

  Poly left(pum), right(pmu);
  for (const auto& [k, c] : d.terms()) {
    Poly w1 = Poly::fromWord(pmu, k[0]);
    Poly w2 = Poly::fromWord(pum, k[1]);
    left += (antipodeUq(w1) * w2).scaleBy(c);
    right += (w1 * antipodeUq(w2)).scaleBy(c);
  }
  Poly el = Poly::constant(pum, eps), er = Poly::constant(pmu, eps);
  if (left == el)
    rep.pass("uq.lemma.antipode.left", par);
  else
    rep.fail("uq.lemma.antipode.left", par, left.str() + " vs " + el.str());
  if (right == er)
    rep.pass("uq.lemma.antipode.right", par);
  else
    rep.fail("uq.lemma.antipode.right", par, right.str() + " vs " + er.str());
  return rep;
}

// ---- the direct sum H ----

std::string lpairStr(const LPair& l) {
  return fmt::format("({},{})", labelStr(l.first), labelStr(l.second));
}

void HElem::addComp(const LPair& l, const Poly& p) {
  if (p.isZero()) return;
  auto [it, fresh] = comps.try_emplace(l, p);
  if (!fresh) {
    it->second += p;
    if (it->second.isZero()) comps.erase(it);
  }
}

Poly HElem::comp(const LPair& l, const PresPtr& pres) const {
  auto it = comps.find(l);
  return it == comps.end() ? Poly(pres) : it->second;
}

HElem& HElem::operator+=(const HElem& o) {
  for (const auto& [l, p] : o.comps) addComp(l, p);
  return *this;
}

HElem& HElem::operator-=(const HElem& o) {
  for (const auto& [l, p] : o.comps) addComp(l, -p);
  return *this;
}

HElem HElem::operator*(const HElem& o) const {
  HElem r;
  for (const auto& [l, p] : comps) {
    auto it = o.comps.find(l);  // distinct label pairs annihilate
    if (it != o.comps.end()) r.addComp(l, p * it->second);
  }
  return r;
}

HElem HElem::star() const {
  HElem r;
  for (const auto& [l, p] : comps) r.addComp(l, p.star());
  return r;
}

std::string HElem::str() const {
  if (comps.empty()) return "0";
  std::string out;
  for (const auto& [l, p] : comps) {
    if (!out.empty()) out += "; ";
    out += lpairStr(l) + ": " + p.str();
  }
  return out;
}

void HTensor2::addComp(const Key& k, const Tensor2& t) {
  if (t.isZero()) return;
  auto [it, fresh] = comps.try_emplace(k, t);
  if (!fresh) {
    it->second += t;
    if (it->second.isZero()) comps.erase(it);
  }
}

HTensor2& HTensor2::operator+=(const HTensor2& o) {
  for (const auto& [k, t] : o.comps) addComp(k, t);
  return *this;
}

HTensor2 HTensor2::operator*(const HTensor2& o) const {
  HTensor2 r;
  for (const auto& [k, t] : comps) {
    auto it = o.comps.find(k);
    if (it != o.comps.end()) r.addComp(k, t * it->second);
  }
  return r;
}

std::string HTensor2::str() const {
  if (comps.empty()) return "0";
  std::string out;
  for (const auto& [k, t] : comps) {
    if (!out.empty()) out += "; ";
    out += lpairStr(k[0]) + "(x)" + lpairStr(k[1]) + ": " + t.str();
  }
  return out;
}

void HTensor3::addComp(const Key& k, const Tensor3& t) {
  if (t.isZero()) return;
  auto [it, fresh] = comps.try_emplace(k, t);
  if (!fresh) {
    it->second += t;
    if (it->second.isZero()) comps.erase(it);
  }
}

HTensor3& HTensor3::operator+=(const HTensor3& o) {
  for (const auto& [k, t] : o.comps) addComp(k, t);
  return *this;
}

HTensor3 HTensor3::operator*(const HTensor3& o) const {
  HTensor3 r;
  for (const auto& [k, t] : comps) {
    auto it = o.comps.find(k);
    if (it != o.comps.end()) r.addComp(k, t * it->second);
  }
  return r;
}

CoLinking::CoLinking(std::vector<int> labels) : labels_(std::move(labels)) {
  if (labels_.size() < 2 || labels_.size() > 3)
    throw DomainError("label set must contain 2 or 3 labels");
  std::sort(labels_.begin(), labels_.end());
  for (size_t i = 0; i + 1 < labels_.size(); ++i)
    if (labels_[i] == labels_[i + 1])
      throw DomainError("label set must be distinct");
  for (int l : labels_) requireLabel(l);
}

PresPtr CoLinking::pres(int mu, int nu) const {
  for (int l : {mu, nu})
    if (std::find(labels_.begin(), labels_.end(), l) == labels_.end())
      throw DomainError(fmt::format("label {} outside the system", l));
  return makeUq(mu, nu);
}

HElem CoLinking::unit() const {
  HElem u;
  for (int a : labels_)
    for (int b : labels_) u.addComp({a, b}, Poly::one(makeUq(a, b)));
  return u;
}

HElem CoLinking::embed(const Poly& p) const {
  auto [mu, nu] = uqLabels(p.pres());
  pres(mu, nu);  // membership check
  HElem x;
  x.addComp({mu, nu}, p);
  return x;
}

HElem antipodeH(const HElem& x) {
  HElem r;
  for (const auto& [l, p] : x.comps)
    r.addComp({l.second, l.first}, antipodeUq(p));
  return r;
}

Scalar epsH(const HElem& x) {
  Scalar acc(0);
  for (const auto& [l, p] : x.comps)
    if (l.first == l.second) acc += counitUq(p);
  return acc;
}

HTensor2 deltaH(const CoLinking& sys, const HElem& x) {
  HTensor2 r;
  for (const auto& [l, p] : x.comps)
    for (int ups : sys.labels())
      r.addComp({LPair{l.first, ups}, LPair{ups, l.second}}, deltaUq(p, ups));
  return r;
}

HTensor3 deltaH2(const CoLinking& sys, const HElem& x) {
  HTensor3 r;
  HTensor2 d = deltaH(sys, x);
  for (const auto& [k, t] : d.comps) {
    auto [a, b] = k[0];
    for (int ups : sys.labels()) {
      Tensor2 u = Tensor2::unit({makeUq(a, ups), makeUq(ups, b)});
      r.addComp({LPair{a, ups}, LPair{ups, b}, k[1]},
                expandLeg(t, 0, uqDeltaImages(a, ups, b), u));
    }
  }
  return r;
}

HTensor2 hTensorOf(const HElem& x, const HElem& y) {
  HTensor2 r;
  for (const auto& [lx, px] : x.comps)
    for (const auto& [ly, py] : y.comps)
      r.addComp({lx, ly}, tensorOf(px, py));
  return r;
}

HElem contractEpsLeg(const HTensor2& t, size_t leg) {
  HElem r;
  for (const auto& [k, t2] : t.comps) {
    if (k[leg].first != k[leg].second) continue;
    LPair other = k[1 - leg];
    PresPtr op = makeUq(other.first, other.second);
    for (const auto& [words, c] : t2.terms()) {
      Scalar e = epsWord(words[leg]);
      if (e.isZero()) continue;
      r.addComp(other, Poly::fromWord(op, words[1 - leg], c * e));
    }
  }
  return r;
}

namespace {

// (id (x) Delta)Delta, for comparison against deltaH2
HTensor3 deltaH2Right(const CoLinking& sys, const HElem& x) {
  HTensor3 r;
  HTensor2 d = deltaH(sys, x);
  for (const auto& [k, t] : d.comps) {
    auto [c, dd] = k[1];
    for (int ups : sys.labels()) {
      Tensor2 u = Tensor2::unit({makeUq(c, ups), makeUq(ups, dd)});
      r.addComp({k[0], LPair{c, ups}, LPair{ups, dd}},
                expandLeg(t, 1, uqDeltaImages(c, ups, dd), u));
    }
  }
  return r;
}

// x_(1) S(x_(2)) and S(x_(1)) x_(2) from an H-coproduct
HElem mulRightAntipode(const HTensor2& d) {
  HElem acc;
  for (const auto& [k, t] : d.comps) {
    if (!(k[0] == LPair{k[1].second, k[1].first})) continue;
    PresPtr p1 = makeUq(k[0].first, k[0].second);
    PresPtr p2 = makeUq(k[1].first, k[1].second);
    for (const auto& [words, c] : t.terms()) {
      Poly a = Poly::fromWord(p1, words[0]);
      Poly b = antipodeUq(Poly::fromWord(p2, words[1]));
      acc.addComp(k[0], (a * b).scaleBy(c));
    }
  }
  return acc;
}

HElem mulLeftAntipode(const HTensor2& d) {
  HElem acc;
  for (const auto& [k, t] : d.comps) {
    if (!(LPair{k[0].second, k[0].first} == k[1])) continue;
    PresPtr p1 = makeUq(k[0].first, k[0].second);
    PresPtr p2 = makeUq(k[1].first, k[1].second);
    for (const auto& [words, c] : t.terms()) {
      Poly a = antipodeUq(Poly::fromWord(p1, words[0]));
      Poly b = Poly::fromWord(p2, words[1]);
      acc.addComp(k[1], (a * b).scaleBy(c));
    }
  }
  return acc;
}

// S(x_(1)) x_(2) S(x_(3)) from an iterated H-coproduct
HElem sandwichAntipode(const HTensor3& d) {
  HElem acc;
  for (const auto& [k, t] : d.comps) {
    LPair s1{k[0].second, k[0].first}, s3{k[2].second, k[2].first};
    if (!(s1 == k[1] && k[1] == s3)) continue;
    PresPtr p1 = makeUq(k[0].first, k[0].second);
    PresPtr p2 = makeUq(k[1].first, k[1].second);
    PresPtr p3 = makeUq(k[2].first, k[2].second);
    for (const auto& [words, c] : t.terms()) {
      Poly a = antipodeUq(Poly::fromWord(p1, words[0]));
      Poly b = Poly::fromWord(p2, words[1]);
      Poly cc = antipodeUq(Poly::fromWord(p3, words[2]));
      acc.addComp(k[1], (a * b * cc).scaleBy(c));
    }
  }
  return acc;
}

// tensor a unit leg onto an H 2-tensor, on the given side
HTensor3 withUnitLeg(const CoLinking& sys, const HTensor2& t, bool unitLast) {
  HTensor3 r;
  for (const auto& [k, t2] : t.comps)
    for (int a : sys.labels())
      for (int b : sys.labels()) {
        PresPtr up = makeUq(a, b);
        std::array<PresPtr, 3> legs;
        HTensor3::Key key;
        if (unitLast) {
          legs = {t2.legs()[0], t2.legs()[1], up};
          key = {k[0], k[1], LPair{a, b}};
        } else {
          legs = {up, t2.legs()[0], t2.legs()[1]};
          key = {LPair{a, b}, k[0], k[1]};
        }
        Tensor3 t3(legs);
        for (const auto& [words, c] : t2.terms()) {
          if (unitLast)
            t3.addTerm({words[0], words[1], Word{}}, c);
          else
            t3.addTerm({Word{}, words[0], words[1]}, c);
        }
        r.addComp(key, t3);
      }
  return r;
}

Scalar weakMultSide(const CoLinking& sys, const HElem& x, const HElem& y,
                    const HElem& z, bool firstLegWithX) {
  Scalar acc(0);
  HTensor2 d = deltaH(sys, y);
  for (const auto& [k, t] : d.comps) {
    PresPtr p1 = makeUq(k[0].first, k[0].second);
    PresPtr p2 = makeUq(k[1].first, k[1].second);
    for (const auto& [words, c] : t.terms()) {
      HElem w1 = sys.embed(Poly::fromWord(p1, words[0]));
      HElem w2 = sys.embed(Poly::fromWord(p2, words[1]));
      Scalar term = firstLegWithX ? epsH(x * w1) * epsH(w2 * z)
                                  : epsH(x * w2) * epsH(w1 * z);
      acc += c * term;
    }
  }
  return acc;
}

}  // namespace

Report checkWeakHopfAxioms(const CoLinking& sys, int samples, int degree,
                           uint64_t seed) {
  Report rep;
  HElem one = sys.unit();
  std::string sysPar = "labels=";
  for (int l : sys.labels()) sysPar += labelStr(l);

  // the unit coproduct is not grouplike: that failure is the point
  HTensor2 d1 = deltaH(sys, one);
  size_t nlab = sys.labels().size();
  if (!(d1 == hTensorOf(one, one)))
    rep.pass("wh.unit.nongrouplike", sysPar,
             fmt::format("Delta(1) has {} components, 1(x)1 has {}",
                         d1.comps.size(), nlab * nlab * nlab));
  else
    rep.fail("wh.unit.nongrouplike", sysPar, d1.str(),
             "coproduct of the unit collapsed to 1(x)1");

  if (epsH(one) == Scalar(static_cast<long>(nlab)))
    rep.pass("wh.eps.unit", sysPar);
  else
    rep.fail("wh.eps.unit", sysPar, epsH(one).str());

  // comonoidality of the unit, both bracketings
  HTensor3 d2unit = deltaH2(sys, one);
  HTensor3 left = withUnitLeg(sys, d1, true) * withUnitLeg(sys, d1, false);
  HTensor3 right = withUnitLeg(sys, d1, false) * withUnitLeg(sys, d1, true);
  if (left == d2unit)
    rep.pass("wh.unit.comonoid", sysPar);
  else
    rep.fail("wh.unit.comonoid", sysPar, "(Delta(1)(x)1)(1(x)Delta(1))");
  if (right == d2unit)
    rep.pass("wh.unit.comonoid.op", sysPar);
  else
    rep.fail("wh.unit.comonoid.op", sysPar, "(1(x)Delta(1))(Delta(1)(x)1)");

  // per-element laws, on generators and seeded samples
  std::vector<HElem> pool;
  for (int a : sys.labels())
    for (int b : sys.labels()) {
      PresPtr p = makeUq(a, b);
      pool.push_back(sys.embed(Poly::one(p)));
      for (GenId g = 0; g < 4; ++g)
        pool.push_back(sys.embed(Poly::genPoly(p, g)));
    }
  {
    Sampler rng(deriveSeed(seed, "wh.pool"));
    for (int i = 0; i < samples; ++i) {
      int a = sys.labels()[rng.next(nlab)];
      int b = sys.labels()[rng.next(nlab)];
      pool.push_back(sys.embed(rng.randomNonzero(makeUq(a, b), degree)));
    }
  }

  for (const HElem& x : pool) {
    std::string par = sysPar + " x=" + x.str();
    if (deltaH2(sys, x) == deltaH2Right(sys, x))
      rep.pass("wh.coassoc", par);
    else
      rep.fail("wh.coassoc", par, "(Delta(x)id)Delta vs (id(x)Delta)Delta");

    HTensor2 dx = deltaH(sys, x);
    if (contractEpsLeg(dx, 0) == x && contractEpsLeg(dx, 1) == x)
      rep.pass("wh.counit", par);
    else
      rep.fail("wh.counit", par, contractEpsLeg(dx, 0).str() + " / " +
                                     contractEpsLeg(dx, 1).str());

    // A.8: x_(1)S(x_(2)) = (eps (x) id)(Delta(1)(x (x) 1)) and the mirror
    HElem lhsR = mulRightAntipode(dx);
    HElem rhsR = contractEpsLeg(d1 * hTensorOf(x, one), 0);
    if (lhsR == rhsR)
      rep.pass("wh.antipode.right", par);
    else
      rep.fail("wh.antipode.right", par, lhsR.str() + " vs " + rhsR.str());

    HElem lhsL = mulLeftAntipode(dx);
    HElem rhsL = contractEpsLeg(hTensorOf(one, x) * d1, 1);
    if (lhsL == rhsL)
      rep.pass("wh.antipode.left", par);
    else
      rep.fail("wh.antipode.left", par, lhsL.str() + " vs " + rhsL.str());

    // A.9: S(x_(1)) x_(2) S(x_(3)) = S(x)
    HElem nested = sandwichAntipode(deltaH2(sys, x));
    if (nested == antipodeH(x))
      rep.pass("wh.antipode.nested", par);
    else
      rep.fail("wh.antipode.nested", par,
               nested.str() + " vs " + antipodeH(x).str());
  }

  // weak multiplicativity of the counit on sampled triples
  Sampler rng(deriveSeed(seed, "wh.triples"));
  auto draw = [&]() {
    int a = sys.labels()[rng.next(nlab)];
    int b = sys.labels()[rng.next(nlab)];
    return sys.embed(rng.randomNonzero(makeUq(a, b), degree));
  };
  for (int i = 0; i < samples; ++i) {
    HElem x = draw(), y = draw(), z = draw();
    Scalar whole = epsH(x * y * z);
    Scalar split = weakMultSide(sys, x, y, z, true);
    Scalar splitOp = weakMultSide(sys, x, y, z, false);
    std::string par = fmt::format("{} triple#{}", sysPar, i);
    if (split == whole)
      rep.pass("wh.eps.weakmult", par);
    else
      rep.fail("wh.eps.weakmult", par, split.str() + " vs " + whole.str());
    if (splitOp == whole)
      rep.pass("wh.eps.weakmult.op", par);
    else
      rep.fail("wh.eps.weakmult.op", par,
               splitOp.str() + " vs " + whole.str());
  }
  return rep;
}

Poly muActionLeft(const Poly& x, const Poly& y) {
  auto [a, b] = uqLabels(x.pres());
  if (a != b) throw DomainError("left action needs a diagonal element");
  auto [mu, nu] = uqLabels(y.pres());
  if (mu != a) throw DomainError("label mismatch in left action");
  PresPtr pmn = y.pres(), pnm = makeUq(nu, mu);
  Tensor2 d = deltaUq(x, nu);  // legs U(mu,nu) (x) U(nu,mu)
  Poly acc(pmn);
  for (const auto& [k, c] : d.terms()) {
    Poly w1 = Poly::fromWord(pmn, k[0]);
    Poly w2 = Poly::fromWord(pnm, k[1]);
    acc += (w1 * y * antipodeUq(w2)).scaleBy(c);
  }
  return acc;
}

Poly muActionRight(const Poly& y, const Poly& x) {
  auto [a, b] = uqLabels(x.pres());
  if (a != b) throw DomainError("right action needs a diagonal element");
  auto [mu, nu] = uqLabels(y.pres());
  if (nu != a) throw DomainError("label mismatch in right action");
  PresPtr pmn = y.pres(), pnm = makeUq(nu, mu);
  Tensor2 d = deltaUq(x, mu);  // legs U(nu,mu) (x) U(mu,nu)
  Poly acc(pmn);
  for (const auto& [k, c] : d.terms()) {
    Poly w1 = Poly::fromWord(pnm, k[0]);
    Poly w2 = Poly::fromWord(pmn, k[1]);
    acc += (antipodeUq(w1) * y * w2).scaleBy(c);
  }
  return acc;
}

Report checkModuleStar(int mu, int nu, int samples, int degree,
                       uint64_t seed) {
  Report rep;
  PresPtr diag = makeUq(mu, mu), pmn = makeUq(mu, nu), pnn = makeUq(nu, nu);
  std::string par = uqParams(mu, nu);

  std::vector<Poly> xs, ys;
  for (GenId g = 0; g < 4; ++g) {
    xs.push_back(Poly::genPoly(diag, g));
    ys.push_back(Poly::genPoly(pmn, g));
  }
  Sampler rng(deriveSeed(seed, "module"));
  for (int i = 0; i < samples; ++i) {
    xs.push_back(rng.randomNonzero(diag, degree));
    ys.push_back(rng.randomNonzero(pmn, degree));
  }

  for (const Poly& x : xs) {
    // unit laws: x acts on 1 by the counit, 1 acts as identity
    Poly xu = muActionLeft(x, Poly::one(pmn));
    if (xu == Poly::constant(pmn, counitUq(x)))
      rep.pass("mod.unit", par);
    else
      rep.fail("mod.unit", par, xu.str());
    for (const Poly& y : ys) {
      if (muActionLeft(Poly::one(diag), y) == y)
        rep.pass("mod.one", par);
      else
        rep.fail("mod.one", par, y.str());

      // module law through a second diagonal element
      Poly x2 = xs[rng.next(xs.size())];
      Poly both = muActionLeft(x * x2, y);
      Poly nested = muActionLeft(x, muActionLeft(x2, y));
      if (both == nested)
        rep.pass("mod.assoc", par);
      else
        rep.fail("mod.assoc", par, both.str() + " vs " + nested.str());

      // module-algebra law x |> (y z) = (x_(1) |> y)(x_(2) |> z)
      Poly z = ys[rng.next(ys.size())];
      Poly lhs = muActionLeft(x, y * z);
      Tensor2 dx = deltaUq(x, mu);  // diagonal coproduct
      Poly rhs(pmn);
      for (const auto& [k, c] : dx.terms()) {
        Poly x1 = Poly::fromWord(diag, k[0]);
        Poly x2d = Poly::fromWord(diag, k[1]);
        rhs += (muActionLeft(x1, y) * muActionLeft(x2d, z)).scaleBy(c);
      }
      if (lhs == rhs)
        rep.pass("mod.mult", par);
      else
        rep.fail("mod.mult", par, lhs.str() + " vs " + rhs.str());

      // module-star law x |> y* = ((S(x)* ) |> y)*
      Poly starLhs = muActionLeft(x, y.star());
      Poly starRhs = muActionLeft(antipodeUq(x).star(), y).star();
      if (starLhs == starRhs)
        rep.pass("mod.star", par);
      else
        rep.fail("mod.star", par, starLhs.str() + " vs " + starRhs.str());

      // right action: unit and module laws
      Poly xr = rng.randomNonzero(pnn, degree);
      Poly xr2 = rng.randomNonzero(pnn, degree);
      if (muActionRight(y, Poly::one(pnn)) == y)
        rep.pass("mod.right.one", par);
      else
        rep.fail("mod.right.one", par, y.str());
      Poly rboth = muActionRight(y, xr * xr2);
      Poly rnested = muActionRight(muActionRight(y, xr), xr2);
      if (rboth == rnested)
        rep.pass("mod.right.assoc", par);
      else
        rep.fail("mod.right.assoc", par, rboth.str() + " vs " + rnested.str());
    }
  }
  return rep;
}

}  // namespace colink
