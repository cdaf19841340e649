#include "colink/homspace.hpp"

#include <fmt/format.h>

#include <mutex>
#include <set>
#include <utility>

#include "colink/confluence.hpp"
#include "colink/rng.hpp"

namespace colink {

namespace {

// generator ids: B presentations use x=0, xs=1, z=2; the mirror D uses
// u=0, us=1, w=2; the ambient quotient uses K=0, Ki=1, F=2, E=3
enum : GenId { bX = 0, bXs = 1, bZ = 2 };
enum : GenId { qK = 0, qKi = 1, qF = 2, qE = 3 };

int ratLabel(const Rational& r) {
  if (r == -1) return -1;
  if (r == 0) return 0;
  if (r == 1) return 1;
  throw DomainError(fmt::format("label out of range: {}", rationalToString(r)));
}

std::string tupleParams(int mu, int nu, const Rational& tau) {
  return fmt::format("mu={} nu={} tau={}", labelStr(mu), labelStr(nu),
                     rationalToString(tau));
}

// scale of the x and xs images in A
Scalar embedScale() {
  return Scalar::sPow(1) * (Scalar::qPow(-1) - Scalar::qPow(1));
}

std::tuple<int, int, Rational> familyParams(const PresPtr& p,
                                            std::string_view family) {
  if (p->family() != family)
    throw DomainError(fmt::format("expected a '{}' presentation, got '{}'",
                                  family, p->id()));
  const auto& par = p->params();
  return {ratLabel(par[0]), ratLabel(par[1]), par[2]};
}

}  // namespace

PresPtr makeB(int mu, int nu, const Rational& tau) {
  static std::mutex m;
  static std::map<std::tuple<int, int, Rational>, PresPtr> cache;
  std::lock_guard<std::mutex> lock(m);
  auto key = std::make_tuple(mu, nu, tau);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;

  PresentationBuilder b("bspace", {Rational(mu), Rational(nu), tau});
  GenId x = b.addGen("x", 2);
  GenId xs = b.addGen("xs", 2);
  GenId z = b.addGen("z");
  b.setStar(x, xs);
  b.setStar(xs, x);
  b.setStar(z, z);
  Scalar muS(mu), nuS(nu), tauS(tau);
  b.addRule({z, x}, {{Scalar::qPow(-2), {x, z}}}, "z.x");
  b.addRule({z, xs}, {{Scalar::qPow(2), {xs, z}}}, "z.xs");
  b.addRule({xs, x},
            {{-(Scalar::qPow(2) * nuS), {}}, {tauS, {z}}, {-muS, {z, z}}},
            "xs.x");
  b.addRule({x, xs},
            {{-(Scalar::qPow(2) * nuS), {}},
             {Scalar::qPow(2) * tauS, {z}},
             {-(Scalar::qPow(4) * muS), {z, z}}},
            "x.xs");
  PresPtr p = b.build(fmt::format("B({},{};{})", labelStr(mu), labelStr(nu),
                                  rationalToString(tau)));
  cache.emplace(key, p);
  return p;
}

std::tuple<int, int, Rational> bParams(const PresPtr& p) {
  return familyParams(p, "bspace");
}

std::vector<Poly> bImagesInA(int mu, int nu, const Rational& tau) {
  PresPtr a = makeQuotient(mu, nu, tau);
  Scalar c = embedScale();
  return {Poly::fromWord(a, {qF, qK}, c), Poly::fromWord(a, {qK, qE}, c),
          Poly::fromWord(a, {qK, qK})};
}

Poly embedBInA(const Poly& b) {
  auto [mu, nu, tau] = bParams(b.pres());
  PresPtr a = makeQuotient(mu, nu, tau);
  return applyHom(b, bImagesInA(mu, nu, tau), Poly::one(a), false);
}

TruncatedVRep::TruncatedVRep(int mu, int nu, const Rational& tau, int N)
    : mu_(mu), nu_(nu), bound_(N), tau_(tau) {
  labelStr(mu);
  labelStr(nu);
  if (N < 2) throw DomainError("window bound must be at least 2");
}

void TruncatedVRep::add(Vec& out, int n, int m, const Scalar& c) const {
  if (c.isZero()) return;
  if (n < -bound_ || n > bound_ || m < -2 * bound_ || m > 2 * bound_)
    throw WindowError(fmt::format("e({},{}) escapes the window N={}", n, m,
                                  bound_));
  out[{n, m}] += c;
}

TruncatedVRep::Vec TruncatedVRep::basis(int n, int m) const {
  Vec v;
  add(v, n, m, Scalar(1));
  return v;
}

namespace {
void dropZeros(TruncatedVRep::Vec& v) {
  for (auto it = v.begin(); it != v.end();)
    it = it->second.isZero() ? v.erase(it) : std::next(it);
}
}  // namespace

TruncatedVRep::Vec TruncatedVRep::applyX(const Vec& v) const {
  Vec out;
  Scalar front = -(Scalar::qPow(2) * Scalar(nu_));
  for (const auto& [k, c] : v) {
    auto [n, m] = k;
    if (n >= 0) {
      add(out, n + 1, m, c);
    } else {
      add(out, n + 1, m, front * c);
      add(out, n + 1, m + 2, Scalar::qPow(-2 * n) * tau_ * c);
      add(out, n + 1, m + 4, -(Scalar::qPow(-4 * n) * Scalar(mu_)) * c);
    }
  }
  dropZeros(out);
  return out;
}

TruncatedVRep::Vec TruncatedVRep::applyY(const Vec& v) const {
  Vec out;
  Scalar front = -(Scalar::qPow(2) * Scalar(nu_));
  for (const auto& [k, c] : v) {
    auto [n, m] = k;
    if (n <= 0) {
      add(out, n - 1, m, c);
    } else {
      add(out, n - 1, m, front * c);
      add(out, n - 1, m + 2, Scalar::qPow(-2 * (n - 1)) * tau_ * c);
      add(out, n - 1, m + 4, -(Scalar::qPow(-4 * (n - 1)) * Scalar(mu_)) * c);
    }
  }
  dropZeros(out);
  return out;
}

TruncatedVRep::Vec TruncatedVRep::applyW(const Vec& v) const {
  Vec out;
  for (const auto& [k, c] : v) add(out, k.first, k.second + 1,
                                   Scalar::qPow(-k.first) * c);
  dropZeros(out);
  return out;
}

TruncatedVRep::Vec TruncatedVRep::applyWInv(const Vec& v) const {
  Vec out;
  for (const auto& [k, c] : v) add(out, k.first, k.second - 1,
                                   Scalar::qPow(k.first) * c);
  dropZeros(out);
  return out;
}

TruncatedVRep::Vec TruncatedVRep::applyZ(const Vec& v) const {
  return applyW(applyW(v));
}

TruncatedVRep::Vec TruncatedVRep::applyGen(GenId g, const Vec& v) const {
  switch (g) {
    case bX:
      return applyX(v);
    case bXs:
      return applyY(v);
    case bZ:
      return applyZ(v);
  }
  throw DomainError(fmt::format("no operator for generator id {}", g));
}

TruncatedVRep::Vec TruncatedVRep::applyWord(const Word& w, Vec v) const {
  for (size_t i = w.size(); i-- > 0;) v = applyGen(w[i], v);
  return v;
}

TruncatedVRep::Vec TruncatedVRep::applyPoly(const Poly& b, const Vec& v) const {
  bParams(b.pres());
  Vec out;
  for (const auto& [w, c] : b.terms()) {
    Vec part = applyWord(w, v);
    for (const auto& [k, pc] : part) {
      Scalar s = c * pc;
      if (!s.isZero()) out[k] += s;
    }
  }
  dropZeros(out);
  return out;
}

bool TruncatedVRep::equal(const Vec& a, const Vec& b) { return a == b; }

std::string TruncatedVRep::str(const Vec& v) {
  if (v.empty()) return "0";
  std::string out;
  for (const auto& [k, c] : v) {
    if (!out.empty()) out += " + ";
    out += fmt::format("({})*e({},{})", c.str(), k.first, k.second);
  }
  return out;
}

Report checkVRep(int mu, int nu, const Rational& tau, int N) {
  if (N < 4) throw DomainError("relation checking needs a window of at least 4");
  Report rep;
  PresPtr b = makeB(mu, nu, tau);
  TruncatedVRep rho(mu, nu, tau, N);
  std::string base = tupleParams(mu, nu, tau) + fmt::format(" N={}", N);

  for (const auto& rule : b->rules()) {
    size_t checked = 0;
    bool ok = true;
    std::string witness;
    for (int n = -N; n <= N && ok; ++n)
      for (int m = -2 * N; m <= 2 * N && ok; ++m) {
        try {
          TruncatedVRep::Vec lhs = rho.applyWord(rule.lhs, rho.basis(n, m));
          TruncatedVRep::Vec rhs;
          for (const auto& [w, c] : rule.rhs) {
            TruncatedVRep::Vec part = rho.applyWord(w, rho.basis(n, m));
            for (const auto& [k, pc] : part) rhs[k] += c * pc;
          }
          for (auto it = rhs.begin(); it != rhs.end();)
            it = it->second.isZero() ? rhs.erase(it) : std::next(it);
          ++checked;
          if (!TruncatedVRep::equal(lhs, rhs)) {
            ok = false;
            witness = fmt::format("e({},{}): {} vs {}", n, m,
                                  TruncatedVRep::str(lhs),
                                  TruncatedVRep::str(rhs));
          }
        } catch (const WindowError&) {
        }
      }
    std::string par = base + " rule=" + rule.label;
    if (ok && checked > 0)
      rep.pass("vrep.relation", par, fmt::format("checked {} vectors", checked));
    else
      rep.fail("vrep.relation", par,
               checked == 0 ? "no in-window instances" : witness);
  }

  // w is invertible wherever both steps stay inside the window
  {
    bool ok = true;
    std::string witness;
    for (int n = -N; n <= N && ok; ++n)
      for (int m = -2 * N; m < 2 * N && ok; ++m) {
        TruncatedVRep::Vec e = rho.basis(n, m);
        if (!TruncatedVRep::equal(rho.applyWInv(rho.applyW(e)), e)) {
          ok = false;
          witness = fmt::format("e({},{})", n, m);
        }
      }
    for (int n = -N; n <= N && ok; ++n)
      for (int m = -2 * N + 1; m <= 2 * N && ok; ++m) {
        TruncatedVRep::Vec e = rho.basis(n, m);
        if (!TruncatedVRep::equal(rho.applyW(rho.applyWInv(e)), e)) {
          ok = false;
          witness = fmt::format("e({},{})", n, m);
        }
      }
    if (ok)
      rep.pass("vrep.winv", base);
    else
      rep.fail("vrep.winv", base, witness);
  }

  // the monomial families hit pairwise distinct basis vectors
  {
    std::set<TruncatedVRep::Key> seen;
    bool ok = true;
    std::string witness;
    for (int k = 0; k <= N && ok; ++k)
      for (int m = 0; m <= 2 * N && ok; ++m) {
        Word xw(k, bX);
        TruncatedVRep::Vec v = rho.basis(0, 0);
        for (int i = 0; i < m; ++i) v = rho.applyW(v);
        TruncatedVRep::Vec vx = rho.applyWord(xw, v);
        if (!TruncatedVRep::equal(vx, rho.basis(k, m))) {
          ok = false;
          witness = fmt::format("x^{} w^{}: {}", k, m, TruncatedVRep::str(vx));
          break;
        }
        seen.insert({k, m});
        Word yw(k, bXs);
        TruncatedVRep::Vec vy = rho.applyWord(yw, v);
        if (!TruncatedVRep::equal(vy, rho.basis(-k, m))) {
          ok = false;
          witness = fmt::format("xs^{} w^{}: {}", k, m, TruncatedVRep::str(vy));
          break;
        }
        seen.insert({-k, m});
      }
    size_t expect = size_t(2 * N + 1) * size_t(2 * N + 1);
    if (ok && seen.size() == expect)
      rep.pass("vrep.independence", base,
               fmt::format("{} distinct vectors", seen.size()));
    else
      rep.fail("vrep.independence", base,
               witness.empty() ? fmt::format("{} of {} vectors distinct",
                                             seen.size(), expect)
                               : witness);
  }

  // z must act as the square of w: the quartic reading breaks the
  // defining relations whenever it can be distinguished at all
  if (tau != 0 || mu != 0) {
    TruncatedVRep::Vec lhs = rho.applyX(rho.basis(0, 0));
    lhs = rho.applyY(lhs);
    TruncatedVRep::Vec alt;
    auto addScaled = [&](const TruncatedVRep::Vec& v, const Scalar& c) {
      for (const auto& [k, pc] : v) alt[k] += c * pc;
    };
    TruncatedVRep::Vec e = rho.basis(0, 0);
    addScaled(e, -(Scalar::qPow(2) * Scalar(nu)));
    TruncatedVRep::Vec w4 = rho.applyW(rho.applyW(rho.applyW(rho.applyW(e))));
    addScaled(w4, Scalar(tau));
    TruncatedVRep::Vec w8 = w4;
    for (int i = 0; i < 4; ++i) w8 = rho.applyW(w8);
    addScaled(w8, -Scalar(mu));
    for (auto it = alt.begin(); it != alt.end();)
      it = it->second.isZero() ? alt.erase(it) : std::next(it);
    if (!TruncatedVRep::equal(lhs, alt))
      rep.pass("vrep.convention", base, "quartic reading rejected");
    else
      rep.fail("vrep.convention", base, TruncatedVRep::str(lhs));
  } else {
    rep.skip("vrep.convention", base, "degenerate parameters: readings agree");
  }

  return rep;
}

namespace {

// closed action table of the diagonal generators on x, z, xs
Poly tableEntry(const PresPtr& b, GenId uqg, GenId bg) {
  auto [mu, nu, tau] = bParams(b);
  Scalar muS(mu), tauS(tau);
  Scalar round = Scalar(1) + Scalar::qPow(2);
  Poly zero(b);
  switch (uqg) {
    case uqgen::E:
      if (bg == bX)
        return Poly::constant(b, Scalar::sPow(1) * tauS) +
               Poly::genPoly(b, bZ) * (-(Scalar::sPow(1) * round * muS));
      if (bg == bZ) return Poly::genPoly(b, bXs) * Scalar::sPow(-1);
      return zero;
    case uqgen::K:
      if (bg == bX) return Poly::genPoly(b, bX) * Scalar::qPow(-1);
      if (bg == bZ) return Poly::genPoly(b, bZ);
      return Poly::genPoly(b, bXs) * Scalar::qPow(1);
    case uqgen::Ki:
      if (bg == bX) return Poly::genPoly(b, bX) * Scalar::qPow(1);
      if (bg == bZ) return Poly::genPoly(b, bZ);
      return Poly::genPoly(b, bXs) * Scalar::qPow(-1);
    case uqgen::F:
      if (bg == bX) return zero;
      if (bg == bZ) return Poly::genPoly(b, bX) * (-Scalar::sPow(-3));
      return Poly::constant(b, -(Scalar::sPow(-1) * tauS)) +
             Poly::genPoly(b, bZ) * (Scalar::sPow(-1) * round * muS);
  }
  throw DomainError(fmt::format("no table row for generator id {}", uqg));
}

Poly actLetterWord(const PresPtr& b, GenId g, const Word& w, size_t from) {
  if (from == w.size()) {
    if (g == uqgen::K || g == uqgen::Ki) return Poly::one(b);
    return Poly(b);
  }
  GenId h = w[from];
  if (g == uqgen::K || g == uqgen::Ki)
    return tableEntry(b, g, h) * actLetterWord(b, g, w, from + 1);
  // E and F are twisted by K on the left leg, Ki on the right
  return tableEntry(b, g, h) * actLetterWord(b, uqgen::K, w, from + 1) +
         tableEntry(b, uqgen::Ki, h) * actLetterWord(b, g, w, from + 1);
}

Poly actLetter(GenId g, const Poly& b) {
  Poly acc(b.pres());
  for (const auto& [w, c] : b.terms())
    acc += actLetterWord(b.pres(), g, w, 0).scaleBy(c);
  return acc;
}

}  // namespace

Poly actionOnB(const Poly& x, const Poly& b) {
  auto [mu, nu, tau] = bParams(b.pres());
  if (x.pres()->family() != "uq" ||
      uqLabels(x.pres()) != std::make_pair(mu, mu))
    throw DomainError(
        fmt::format("action needs x in Uq({0},{0})", labelStr(mu)));
  Poly acc(b.pres());
  for (const auto& [w, c] : x.terms()) {
    Poly cur = b;
    for (size_t i = w.size(); i-- > 0;) cur = actLetter(w[i], cur);
    acc += cur.scaleBy(c);
  }
  return acc;
}

Report checkActionConsistency(int mu, int nu, const Rational& tau, int samples,
                              int degree, uint64_t seed) {
  Report rep;
  PresPtr b = makeB(mu, nu, tau);
  PresPtr diag = makeUq(mu, mu);
  std::string base = tupleParams(mu, nu, tau);

  // table route against the quotient route, on all generator pairs
  for (GenId g = 0; g < 4; ++g)
    for (GenId bg = 0; bg < 3; ++bg) {
      Poly gp = Poly::genPoly(diag, g);
      Poly bp = Poly::genPoly(b, bg);
      Poly table = embedBInA(actionOnB(gp, bp));
      Poly quot = quotientActionLeft(gp, embedBInA(bp));
      std::string par = fmt::format("{} g={} b={}", base, diag->gen(g).name,
                                    b->gen(bg).name);
      if (table == quot)
        rep.pass("homspace.action.table", par);
      else
        rep.fail("homspace.action.table", par,
                 table.str() + " vs " + quot.str());
    }

  // K-grading of the two monomial families
  for (GenId fam : {bX, bXs}) {
    bool ok = true;
    std::string witness;
    Poly kp = Poly::genPoly(diag, uqgen::K);
    for (int k = 0; k <= 6 && ok; ++k)
      for (int m = 0; m <= 6 && ok; ++m) {
        Word w(k, fam);
        w.insert(w.end(), m, bZ);
        Poly mono = Poly::fromWord(b, w);
        Poly expect = mono * Scalar::qPow(fam == bX ? -k : k);
        if (actionOnB(kp, mono) != expect) {
          ok = false;
          witness = fmt::format("k={} m={}", k, m);
        }
      }
    std::string par = fmt::format("{} family={}", base, b->gen(fam).name);
    if (ok)
      rep.pass("homspace.grading", par, "k,m <= 6");
    else
      rep.fail("homspace.grading", par, witness);
  }

  Sampler rng(deriveSeed(seed, "homspace.action"));
  std::vector<Poly> xs, ys;
  for (GenId g = 0; g < 4; ++g) xs.push_back(Poly::genPoly(diag, g));
  for (GenId g = 0; g < 3; ++g) ys.push_back(Poly::genPoly(b, g));
  for (int i = 0; i < samples; ++i) {
    xs.push_back(rng.randomNonzero(diag, degree));
    ys.push_back(rng.randomNonzero(b, degree));
  }

  // the two routes agree on random elements too
  for (int i = 0; i < samples; ++i) {
    Poly x = xs[rng.next(xs.size())];
    Poly y = ys[rng.next(ys.size())];
    if (embedBInA(actionOnB(x, y)) == quotientActionLeft(x, embedBInA(y)))
      rep.pass("homspace.action.random", base);
    else
      rep.fail("homspace.action.random", base,
               x.str() + " acting on " + y.str());
  }

  for (const Poly& x : xs) {
    Poly xu = actionOnB(x, Poly::one(b));
    if (xu == Poly::constant(b, counitUq(x)))
      rep.pass("homspace.mod.unit", base);
    else
      rep.fail("homspace.mod.unit", base, xu.str());
    for (const Poly& y : ys) {
      if (actionOnB(Poly::one(diag), y) == y)
        rep.pass("homspace.mod.one", base);
      else
        rep.fail("homspace.mod.one", base, y.str());

      Poly x2 = xs[rng.next(xs.size())];
      Poly both = actionOnB(x * x2, y);
      Poly nested = actionOnB(x, actionOnB(x2, y));
      if (both == nested)
        rep.pass("homspace.mod.assoc", base);
      else
        rep.fail("homspace.mod.assoc", base, both.str() + " vs " + nested.str());

      Poly z = ys[rng.next(ys.size())];
      Poly lhs = actionOnB(x, y * z);
      Tensor2 dx = deltaUq(x, mu);
      Poly rhs(b);
      for (const auto& [k, c] : dx.terms()) {
        Poly x1 = Poly::fromWord(diag, k[0]);
        Poly x2d = Poly::fromWord(diag, k[1]);
        rhs += (actionOnB(x1, y) * actionOnB(x2d, z)).scaleBy(c);
      }
      if (lhs == rhs)
        rep.pass("homspace.mod.mult", base);
      else
        rep.fail("homspace.mod.mult", base, lhs.str() + " vs " + rhs.str());

      Poly starLhs = actionOnB(x, y.star());
      Poly starRhs = actionOnB(antipodeUq(x).star(), y).star();
      if (starLhs == starRhs)
        rep.pass("homspace.mod.star", base);
      else
        rep.fail("homspace.mod.star", base,
                 starLhs.str() + " vs " + starRhs.str());
    }
  }
  return rep;
}

Report checkBEmbedding(int mu, int nu, const Rational& tau, int samples,
                       int degree, uint64_t seed) {
  Report rep;
  PresPtr b = makeB(mu, nu, tau);
  PresPtr a = makeQuotient(mu, nu, tau);
  std::string base = tupleParams(mu, nu, tau);
  std::vector<Poly> img = bImagesInA(mu, nu, tau);

  rep.merge(checkRuleConfluence(b));

  if (auto bad = checkRelationsPreserved(b, img, Poly::one(a), false))
    rep.fail("homspace.embed.relations", base, *bad);
  else
    rep.pass("homspace.embed.relations", base);

  for (GenId g = 0; g < 3; ++g) {
    Poly gp = Poly::genPoly(b, g);
    if (embedBInA(gp.star()) == embedBInA(gp).star())
      rep.pass("homspace.embed.star", base + " g=" + b->gen(g).name);
    else
      rep.fail("homspace.embed.star", base + " g=" + b->gen(g).name,
               embedBInA(gp.star()).str());
  }

  if (embedBInA(Poly::one(b)) == Poly::one(a))
    rep.pass("homspace.embed.unit", base);
  else
    rep.fail("homspace.embed.unit", base, "unit not preserved");

  // xs x lands on -q^2 nu + tau K^2 - mu K^4
  {
    Poly expect = Poly::constant(a, -(Scalar::qPow(2) * Scalar(nu)));
    expect += Poly::fromWord(a, {qK, qK}, Scalar(tau));
    expect += Poly::fromWord(a, {qK, qK, qK, qK}, -Scalar(mu));
    Poly got = embedBInA(Poly::fromWord(b, {bXs, bX}));
    if (got == expect)
      rep.pass("homspace.embed.xsx", base);
    else
      rep.fail("homspace.embed.xsx", base, got.str() + " vs " + expect.str());
  }

  // the q-commutation relation collapses in the ambient algebra
  {
    Poly comm = img[bX] * img[bZ] - img[bZ] * img[bX] * Scalar::qPow(2);
    if (comm.isZero())
      rep.pass("homspace.embed.qcomm", base);
    else
      rep.fail("homspace.embed.qcomm", base, comm.str());
  }

  // abstract commutator identity
  {
    Poly comm = Poly::fromWord(b, {bX, bXs}) - Poly::fromWord(b, {bXs, bX});
    Poly expect =
        Poly::genPoly(b, bZ) * ((Scalar::qPow(2) - Scalar(1)) * Scalar(tau));
    expect += Poly::fromWord(b, {bZ, bZ},
                             -((Scalar::qPow(4) - Scalar(1)) * Scalar(mu)));
    if (comm == expect)
      rep.pass("homspace.b.commutator", base);
    else
      rep.fail("homspace.b.commutator", base, comm.str());
  }

  Sampler rng(deriveSeed(seed, "homspace.embed"));
  for (int i = 0; i < samples; ++i) {
    Poly p = rng.randomNonzero(b, degree);
    Poly r = rng.randomNonzero(b, degree);
    if (embedBInA(p * r) == embedBInA(p) * embedBInA(r))
      rep.pass("homspace.embed.hom", base);
    else
      rep.fail("homspace.embed.hom", base, (p * r).str());
    if (embedBInA(p.star()) == embedBInA(p).star())
      rep.pass("homspace.embed.starmap", base);
    else
      rep.fail("homspace.embed.starmap", base, p.str());
  }
  return rep;
}

PresPtr makeD(int mu, int nu, const Rational& tau) {
  static std::mutex m;
  static std::map<std::tuple<int, int, Rational>, PresPtr> cache;
  std::lock_guard<std::mutex> lock(m);
  auto key = std::make_tuple(mu, nu, tau);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;

  PresentationBuilder b("dspace", {Rational(mu), Rational(nu), tau});
  GenId u = b.addGen("u", 2);
  GenId us = b.addGen("us", 2);
  GenId w = b.addGen("w");
  b.setStar(u, us, Scalar::qPow(-2));
  b.setStar(us, u, Scalar::qPow(2));
  b.setStar(w, w);
  Scalar muS(mu), nuS(nu), tauS(tau);
  b.addRule({w, u}, {{Scalar::qPow(2), {u, w}}}, "w.u");
  b.addRule({w, us}, {{Scalar::qPow(-2), {us, w}}}, "w.us");
  b.addRule({us, u},
            {{-(Scalar::qPow(2) * muS), {}},
             {Scalar::qPow(2) * tauS, {w}},
             {-(Scalar::qPow(4) * nuS), {w, w}}},
            "us.u");
  b.addRule({u, us},
            {{-(Scalar::qPow(2) * muS), {}}, {tauS, {w}}, {-nuS, {w, w}}},
            "u.us");
  PresPtr p = b.build(fmt::format("D({},{};{})", labelStr(mu), labelStr(nu),
                                  rationalToString(tau)));
  cache.emplace(key, p);
  return p;
}

std::vector<Poly> dImagesInA(int mu, int nu, const Rational& tau) {
  PresPtr a = makeQuotient(mu, nu, tau);
  Scalar c = embedScale();
  return {Poly::fromWord(a, {qKi, qF}, -(Scalar::qPow(-1) * c)),
          Poly::fromWord(a, {qKi, qE}, -(Scalar::qPow(2) * c)),
          Poly::fromWord(a, {qKi, qKi})};
}

Poly embedDInA(const Poly& d) {
  auto [mu, nu, tau] = familyParams(d.pres(), "dspace");
  PresPtr a = makeQuotient(mu, nu, tau);
  return applyHom(d, dImagesInA(mu, nu, tau), Poly::one(a), false);
}

Poly thetaMap(const Poly& b) {
  auto [alpha, beta, tau] = bParams(b.pres());
  PresPtr d = makeD(beta, alpha, tau);
  std::vector<Poly> img = {Poly::genPoly(d, 0), Poly::genPoly(d, 1),
                           Poly::genPoly(d, 2)};
  return applyHom(b, img, Poly::one(d), true);
}

Poly thetaViaAntipode(const Poly& b) {
  auto [alpha, beta, tau] = bParams(b.pres());
  Poly lifted = liftFromQuotient(embedBInA(b));
  return projectToQuotient(antipodeUq(lifted), makeQuotient(beta, alpha, tau));
}

Poly thetaInverseViaAntipode(const Poly& b) {
  auto [alpha, beta, tau] = bParams(b.pres());
  Poly lifted = liftFromQuotient(embedBInA(b));
  Poly sInv = antipodeUq(lifted.star()).star();
  return projectToQuotient(sInv, makeQuotient(beta, alpha, tau));
}

bool inDImage(const Poly& a) {
  quotientParams(a.pres());
  for (const auto& [w, c] : a.terms()) {
    int counts[4] = {0, 0, 0, 0};
    for (GenId g : w) ++counts[g];
    if (counts[qK] > 0) return false;
    int k = counts[qF] + counts[qE];
    int j = counts[qKi];
    if (j < k || (j - k) % 2 != 0) return false;
  }
  return true;
}

Report checkTheta(int mu, int nu, const Rational& tau, int samples, int degree,
                  uint64_t seed) {
  Report rep;
  PresPtr bsrc = makeB(nu, mu, tau);
  PresPtr d = makeD(mu, nu, tau);
  PresPtr atgt = makeQuotient(mu, nu, tau);
  PresPtr unm = makeUq(nu, mu);
  PresPtr diag = makeUq(nu, nu);
  std::string base = tupleParams(mu, nu, tau);

  rep.merge(checkRuleConfluence(d));

  // the antipode exchanges the two Casimirs, so it descends
  if (antipodeUq(casimirElement(nu, mu)) == casimirElement(mu, nu))
    rep.pass("homspace.theta.casimir", base);
  else
    rep.fail("homspace.theta.casimir", base,
             antipodeUq(casimirElement(nu, mu)).str());

  std::vector<Poly> dImg = dImagesInA(mu, nu, tau);
  if (auto bad = checkRelationsPreserved(d, dImg, Poly::one(atgt), false))
    rep.fail("homspace.d.relations", base, *bad);
  else
    rep.pass("homspace.d.relations", base);

  for (GenId g = 0; g < 3; ++g) {
    Poly gp = Poly::genPoly(d, g);
    if (embedDInA(gp.star()) == embedDInA(gp).star())
      rep.pass("homspace.d.star", base + " g=" + d->gen(g).name);
    else
      rep.fail("homspace.d.star", base + " g=" + d->gen(g).name,
               embedDInA(gp.star()).str());
  }

  // generator images; z goes to the inverse square
  for (GenId g = 0; g < 3; ++g) {
    Poly viaS = thetaViaAntipode(Poly::genPoly(bsrc, g));
    if (viaS == dImg[g])
      rep.pass("homspace.theta.gen", base + " g=" + bsrc->gen(g).name);
    else
      rep.fail("homspace.theta.gen", base + " g=" + bsrc->gen(g).name,
               viaS.str() + " vs " + dImg[g].str());
  }
  if (thetaViaAntipode(Poly::one(bsrc)) == Poly::one(atgt))
    rep.pass("homspace.theta.unit", base);
  else
    rep.fail("homspace.theta.unit", base, "unit not preserved");

  Sampler rng(deriveSeed(seed, "homspace.theta"));
  std::vector<Poly> bs, xs;
  for (GenId g = 0; g < 3; ++g) bs.push_back(Poly::genPoly(bsrc, g));
  for (GenId g = 0; g < 4; ++g) xs.push_back(Poly::genPoly(diag, g));
  for (int i = 0; i < samples; ++i) {
    bs.push_back(rng.randomNonzero(bsrc, degree));
    xs.push_back(rng.randomNonzero(diag, degree));
  }

  for (const Poly& p : bs) {
    if (embedDInA(thetaMap(p)) == thetaViaAntipode(p))
      rep.pass("homspace.theta.routes", base);
    else
      rep.fail("homspace.theta.routes", base, p.str());

    Poly r = bs[rng.next(bs.size())];
    if (thetaViaAntipode(p * r) == thetaViaAntipode(r) * thetaViaAntipode(p))
      rep.pass("homspace.theta.anti", base);
    else
      rep.fail("homspace.theta.anti", base, (p * r).str());

    if (thetaViaAntipode(p.star()) == thetaInverseViaAntipode(p).star())
      rep.pass("homspace.theta.star", base);
    else
      rep.fail("homspace.theta.star", base, p.str());
  }

  // Theta intertwines the left action with the right action twisted by
  // the antipode
  for (const Poly& x : xs)
    for (const Poly& y : bs) {
      Poly lhs = thetaViaAntipode(actionOnB(x, y));
      Poly rhs = quotientActionRight(thetaViaAntipode(y), antipodeUq(x));
      if (lhs == rhs)
        rep.pass("homspace.theta.equivariance", base);
      else
        rep.fail("homspace.theta.equivariance", base,
                 lhs.str() + " vs " + rhs.str());
    }

  // well-definedness: the defining ideal is killed after the antipode
  Poly rel = casimirElement(nu, mu) -
             Poly::constant(unm, casimirLevel(tau));
  for (int i = 0; i < samples + 2; ++i) {
    Poly u = rng.randomPoly(unm, 2);
    Poly v = rng.randomPoly(unm, 2);
    if (projectToQuotient(antipodeUq(u * rel * v), atgt).isZero())
      rep.pass("homspace.theta.ideal", base);
    else
      rep.fail("homspace.theta.ideal", base, (u * rel * v).str());
  }

  // the right action of the diagonal algebra stays inside D
  std::vector<Poly> ds;
  for (GenId g = 0; g < 3; ++g) ds.push_back(Poly::genPoly(d, g));
  ds.push_back(Poly::fromWord(d, {0, 2}));
  ds.push_back(Poly::fromWord(d, {1, 2, 2}));
  for (GenId g = 0; g < 4; ++g)
    for (const Poly& dp : ds) {
      Poly acted = quotientActionRight(embedDInA(dp), Poly::genPoly(diag, g));
      std::string par =
          fmt::format("{} g={} d={}", base, diag->gen(g).name, dp.str());
      if (inDImage(acted))
        rep.pass("homspace.d.restrict", par);
      else
        rep.fail("homspace.d.restrict", par, acted.str());
    }

  return rep;
}

}  // namespace colink
