#include "colink/casimir.hpp"

#include <fmt/format.h>

#include <map>
#include <mutex>
#include <utility>

#include "colink/confluence.hpp"
#include "colink/rng.hpp"

namespace colink {

namespace {

// generator ids inside the quotient presentation, in declaration order
enum : GenId { aK = 0, aKi = 1, aF = 2, aE = 3 };

int ratLabel(const Rational& r) {
  if (r == -1) return -1;
  if (r == 0) return 0;
  if (r == 1) return 1;
  throw DomainError(fmt::format("label out of range: {}", rationalToString(r)));
}

std::string pairParams(int mu, int nu) {
  return fmt::format("mu={} nu={}", labelStr(mu), labelStr(nu));
}

void requireFamily(const PresPtr& p, std::string_view family) {
  if (p->family() != family)
    throw DomainError(fmt::format("expected a '{}' presentation, got '{}'",
                                  family, p->id()));
}

}  // namespace

Poly casimirElement(int mu, int nu, CasimirForm form) {
  PresPtr p = makeUq(mu, nu);
  Scalar lam2 = Scalar::lambda() * Scalar::lambda();
  Scalar efK = lam2 * Scalar::qPow(-1) * Scalar(mu);
  Scalar efKi = lam2 * Scalar::qPow(1) * Scalar(nu);
  Scalar feK = lam2 * Scalar::qPow(1) * Scalar(mu);
  Scalar feKi = lam2 * Scalar::qPow(-1) * Scalar(nu);
  Poly c = form == CasimirForm::EF
               ? Poly::fromWord(p, {uqgen::E, uqgen::F})
               : Poly::fromWord(p, {uqgen::F, uqgen::E});
  c += Poly::fromWord(p, {uqgen::K, uqgen::K},
                      form == CasimirForm::EF ? efK : feK);
  c += Poly::fromWord(p, {uqgen::Ki, uqgen::Ki},
                      form == CasimirForm::EF ? efKi : feKi);
  return c;
}

Scalar casimirLevel(const Rational& tau) {
  return Scalar(tau) * Scalar::qPow(-1) * Scalar::lambda() * Scalar::lambda();
}

PresPtr makeQuotient(int mu, int nu, const Rational& tau) {
  ratLabel(Rational(mu));
  ratLabel(Rational(nu));
  static std::mutex m;
  static std::map<std::tuple<int, int, Rational>, PresPtr> cache;
  std::lock_guard<std::mutex> lock(m);
  auto key = std::make_tuple(mu, nu, tau);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;

  PresentationBuilder b("casimir", {Rational(mu), Rational(nu), tau});
  GenId k = b.addGen("K");
  GenId ki = b.addGen("Ki");
  GenId f = b.addGen("F", 2);
  GenId e = b.addGen("E", 2);
  b.setRender(ki, "K", true);
  b.setStar(f, e);
  b.setStar(e, f);
  b.setStar(k, k);
  b.setStar(ki, ki);

  Scalar lam2 = Scalar::lambda() * Scalar::lambda();
  Scalar level = casimirLevel(tau);
  b.addRule({k, ki}, {{Scalar(1), {}}}, "k.kinv");
  b.addRule({ki, k}, {{Scalar(1), {}}}, "kinv.k");
  b.addRule({f, k}, {{Scalar::qPow(1), {k, f}}}, "f.k");
  b.addRule({f, ki}, {{Scalar::qPow(-1), {ki, f}}}, "f.kinv");
  b.addRule({e, k}, {{Scalar::qPow(-1), {k, e}}}, "e.k");
  b.addRule({e, ki}, {{Scalar::qPow(1), {ki, e}}}, "e.kinv");
  b.addRule({e, f},
            {{level, {}},
             {-(lam2 * Scalar::qPow(-1) * Scalar(mu)), {k, k}},
             {-(lam2 * Scalar::qPow(1) * Scalar(nu)), {ki, ki}}},
            "e.f");
  b.addRule({f, e},
            {{level, {}},
             {-(lam2 * Scalar::qPow(1) * Scalar(mu)), {k, k}},
             {-(lam2 * Scalar::qPow(-1) * Scalar(nu)), {ki, ki}}},
            "f.e");
  PresPtr p = b.build(fmt::format("A({},{};{})", labelStr(mu), labelStr(nu),
                                  rationalToString(tau)));
  cache.emplace(key, p);
  return p;
}

std::tuple<int, int, Rational> quotientParams(const PresPtr& p) {
  requireFamily(p, "casimir");
  const auto& par = p->params();
  return {ratLabel(par[0]), ratLabel(par[1]), par[2]};
}

Poly projectToQuotient(const Poly& p, const PresPtr& quot) {
  requireFamily(p.pres(), "uq");
  auto [mu, nu, tau] = quotientParams(quot);
  auto src = uqLabels(p.pres());
  if (src != std::make_pair(mu, nu))
    throw DomainError(fmt::format("cannot project {} onto {}", p.pres()->id(),
                                  quot->id()));
  return transport(p, quot);
}

Poly liftFromQuotient(const Poly& p) {
  auto [mu, nu, tau] = quotientParams(p.pres());
  return transport(p, makeUq(mu, nu));
}

Poly quotientActionLeft(const Poly& x, const Poly& y) {
  auto [mu, nu, tau] = quotientParams(y.pres());
  requireFamily(x.pres(), "uq");
  if (uqLabels(x.pres()) != std::make_pair(mu, mu))
    throw DomainError(
        fmt::format("left action needs x in Uq({0},{0})", labelStr(mu)));
  return projectToQuotient(muActionLeft(x, liftFromQuotient(y)), y.pres());
}

Poly quotientActionRight(const Poly& y, const Poly& x) {
  auto [mu, nu, tau] = quotientParams(y.pres());
  requireFamily(x.pres(), "uq");
  if (uqLabels(x.pres()) != std::make_pair(nu, nu))
    throw DomainError(
        fmt::format("right action needs x in Uq({0},{0})", labelStr(nu)));
  return projectToQuotient(muActionRight(liftFromQuotient(y), x), y.pres());
}

Report checkCasimir(const std::vector<int>& labels) {
  Report rep;
  for (int mu : labels) {
    for (int nu : labels) {
      std::string par = pairParams(mu, nu);
      PresPtr p = makeUq(mu, nu);
      Poly cef = casimirElement(mu, nu, CasimirForm::EF);
      Poly cfe = casimirElement(mu, nu, CasimirForm::FE);
      if (cef == cfe)
        rep.pass("casimir.forms", par);
      else
        rep.fail("casimir.forms", par, cef.str() + " vs " + cfe.str());
      if (cef.star() == cef)
        rep.pass("casimir.star", par);
      else
        rep.fail("casimir.star", par, cef.star().str());
      for (GenId g = 0; g < 4; ++g) {
        Poly gp = Poly::genPoly(p, g);
        Poly comm = cef * gp - gp * cef;
        std::string gpar = par + " g=" + p->gen(g).name;
        if (comm.isZero())
          rep.pass("casimir.central", gpar);
        else
          rep.fail("casimir.central", gpar, comm.str());
      }
      if (mu == 0 && nu == 0) {
        if (cef == Poly::fromWord(p, {uqgen::E, uqgen::F}))
          rep.pass("casimir.zero.pair", par);
        else
          rep.fail("casimir.zero.pair", par, cef.str());
      }
    }
  }
  return rep;
}

Report checkQuotient(int mu, int nu, const Rational& tau, int samples,
                     int degree, uint64_t seed) {
  Report rep;
  PresPtr quot = makeQuotient(mu, nu, tau);
  PresPtr uq = makeUq(mu, nu);
  PresPtr diag = makeUq(mu, mu), pnn = makeUq(nu, nu);
  std::string par =
      fmt::format("{} tau={}", pairParams(mu, nu), rationalToString(tau));
  Scalar level = casimirLevel(tau);

  rep.merge(checkRuleConfluence(quot));

  // the defining relation: the Casimir is pinned to its level
  Poly pinned = projectToQuotient(casimirElement(mu, nu), quot);
  if (pinned == Poly::constant(quot, level))
    rep.pass("casimir.quotient.pin", par);
  else
    rep.fail("casimir.quotient.pin", par, pinned.str());

  // the projected EF monomial against its closed form, built directly
  Scalar lam2 = Scalar::lambda() * Scalar::lambda();
  Poly efClosed = Poly::constant(quot, level);
  efClosed += Poly::fromWord(quot, {aK, aK},
                             -(lam2 * Scalar::qPow(-1) * Scalar(mu)));
  efClosed += Poly::fromWord(quot, {aKi, aKi},
                             -(lam2 * Scalar::qPow(1) * Scalar(nu)));
  Poly efProj =
      projectToQuotient(Poly::fromWord(uq, {uqgen::E, uqgen::F}), quot);
  if (efProj == efClosed)
    rep.pass("casimir.quotient.ef", par);
  else
    rep.fail("casimir.quotient.ef", par, efProj.str() + " vs " + efClosed.str());

  if (projectToQuotient(Poly::one(uq), quot) == Poly::one(quot))
    rep.pass("casimir.quotient.one", par);
  else
    rep.fail("casimir.quotient.one", par, "unit not preserved");

  // frozen lift-independence example: lifts of FK differing by an
  // ideal element give the same E-action
  {
    Poly xE = Poly::genPoly(diag, uqgen::E);
    Poly lift1 = Poly::fromWord(uq, {uqgen::F, uqgen::K});
    Poly ideal = (casimirElement(mu, nu) - Poly::constant(uq, level)) *
                 Poly::genPoly(uq, uqgen::K);
    Poly lift2 = lift1 + ideal;
    Poly a1 = projectToQuotient(muActionLeft(xE, lift1), quot);
    Poly a2 = projectToQuotient(muActionLeft(xE, lift2), quot);
    if (a1 == a2)
      rep.pass("casimir.action.lift", par);
    else
      rep.fail("casimir.action.lift", par, a1.str() + " vs " + a2.str());
  }

  // frozen action oracle on the quotient
  {
    Poly lhs = quotientActionLeft(Poly::genPoly(diag, uqgen::E),
                                  Poly::fromWord(quot, {aK, aK}));
    Poly rhs = Poly::fromWord(quot, {aK, aE},
                              Scalar::qPow(-1) - Scalar::qPow(1));
    if (lhs == rhs)
      rep.pass("casimir.action.oracle", par);
    else
      rep.fail("casimir.action.oracle", par, lhs.str() + " vs " + rhs.str());
  }

  Sampler rng(deriveSeed(seed, "quotient"));
  std::vector<Poly> xs, ys;
  for (GenId g = 0; g < 4; ++g) {
    xs.push_back(Poly::genPoly(diag, g));
    ys.push_back(Poly::genPoly(quot, g));
  }
  for (int i = 0; i < samples; ++i) {
    xs.push_back(rng.randomNonzero(diag, degree));
    ys.push_back(rng.randomNonzero(quot, degree));
  }

  // the projection is a *-algebra map; checked on random pairs of lifts
  for (int i = 0; i < samples + 2; ++i) {
    Poly a = rng.randomNonzero(uq, degree);
    Poly b = rng.randomNonzero(uq, degree);
    if (projectToQuotient(a * b, quot) ==
        projectToQuotient(a, quot) * projectToQuotient(b, quot))
      rep.pass("casimir.quotient.hom", par);
    else
      rep.fail("casimir.quotient.hom", par, (a * b).str());
    if (projectToQuotient(a.star(), quot) == projectToQuotient(a, quot).star())
      rep.pass("casimir.quotient.starmap", par);
    else
      rep.fail("casimir.quotient.starmap", par, a.str());

    // lift-independence on random data: perturb the lift by a random
    // two-sided multiple of the defining relation
    Poly y = ys[rng.next(ys.size())];
    Poly x = xs[rng.next(xs.size())];
    Poly u = rng.randomPoly(uq, 2);
    Poly v = rng.randomPoly(uq, 2);
    Poly lift2 = liftFromQuotient(y) +
                 u * (casimirElement(mu, nu) - Poly::constant(uq, level)) * v;
    if (projectToQuotient(muActionLeft(x, lift2), quot) ==
        quotientActionLeft(x, y))
      rep.pass("casimir.action.liftfree", par);
    else
      rep.fail("casimir.action.liftfree", par,
               x.str() + " acting on " + y.str());
  }

  // module-*-algebra laws for the descended actions
  for (const Poly& x : xs) {
    Poly xu = quotientActionLeft(x, Poly::one(quot));
    if (xu == Poly::constant(quot, counitUq(x)))
      rep.pass("casimir.mod.unit", par);
    else
      rep.fail("casimir.mod.unit", par, xu.str());
    for (const Poly& y : ys) {
      if (quotientActionLeft(Poly::one(diag), y) == y)
        rep.pass("casimir.mod.one", par);
      else
        rep.fail("casimir.mod.one", par, y.str());

      Poly x2 = xs[rng.next(xs.size())];
      Poly both = quotientActionLeft(x * x2, y);
      Poly nested = quotientActionLeft(x, quotientActionLeft(x2, y));
      if (both == nested)
        rep.pass("casimir.mod.assoc", par);
      else
        rep.fail("casimir.mod.assoc", par, both.str() + " vs " + nested.str());

      Poly z = ys[rng.next(ys.size())];
      Poly lhs = quotientActionLeft(x, y * z);
      Tensor2 dx = deltaUq(x, mu);
      Poly rhs(quot);
      for (const auto& [k, c] : dx.terms()) {
        Poly x1 = Poly::fromWord(diag, k[0]);
        Poly x2d = Poly::fromWord(diag, k[1]);
        rhs += (quotientActionLeft(x1, y) * quotientActionLeft(x2d, z))
                   .scaleBy(c);
      }
      if (lhs == rhs)
        rep.pass("casimir.mod.mult", par);
      else
        rep.fail("casimir.mod.mult", par, lhs.str() + " vs " + rhs.str());

      Poly starLhs = quotientActionLeft(x, y.star());
      Poly starRhs = quotientActionLeft(antipodeUq(x).star(), y).star();
      if (starLhs == starRhs)
        rep.pass("casimir.mod.star", par);
      else
        rep.fail("casimir.mod.star", par,
                 starLhs.str() + " vs " + starRhs.str());

      Poly xr = rng.randomNonzero(pnn, degree);
      Poly xr2 = rng.randomNonzero(pnn, degree);
      if (quotientActionRight(y, Poly::one(pnn)) == y)
        rep.pass("casimir.mod.right.one", par);
      else
        rep.fail("casimir.mod.right.one", par, y.str());
      Poly rboth = quotientActionRight(y, xr * xr2);
      Poly rnested = quotientActionRight(quotientActionRight(y, xr), xr2);
      if (rboth == rnested)
        rep.pass("casimir.mod.right.assoc", par);
      else
        rep.fail("casimir.mod.right.assoc", par,
                 rboth.str() + " vs " + rnested.str());
    }
  }
  return rep;
}

}  // namespace colink
