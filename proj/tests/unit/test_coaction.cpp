#include <colink/coaction.hpp>
#include <colink/pairing.hpp>
#include <colink/uq.hpp>
#include <doctest.h>

#include <set>

using namespace colink;

namespace {

Poly gen(const PresPtr& p, GenId g) { return Poly::genPoly(p, g); }

Scalar epsGrouplike(const Word& w) {
  for (GenId g : w)
    if (g >= 2) return Scalar(0);
  return Scalar(1);
}

}  // namespace

TEST_CASE("gamma generator images match the closed formulas") {
  auto g1 = gammaImages(1, -1, Rational(1));
  CHECK(g1[0].str() ==
        "1 (x) a*b + x (x) a^2 - q*xs (x) b^2 - (q^2 + 1)*z (x) a*b");
  CHECK(g1[1].str() ==
        "-1 (x) d*c - 1/q*x (x) c^2 + xs (x) d^2 + (q^2 + 1)*z (x) d*c");
  CHECK(g1[2].str() ==
        "-1/q*1 (x) b*c - 1/q^2*x (x) a*c + xs (x) d*b + z (x) 1 + "
        "((q^2 + 1)/q)*z (x) b*c");

  auto g0 = gammaImages(0, -1, Rational(2));
  CHECK(g0[0].str() == "2*1 (x) a0*b0 + x (x) a0^2");
  CHECK(g0[0].termCount() == 2);
  CHECK(g0[2].str() ==
        "2*1 (x) b0*b0s + 1/q*x (x) a0*b0s + xs (x) a0^-1*b0 + z (x) 1");

  auto gm = gammaImages(-1, 0, Rational(0));
  CHECK(gm[2].str() ==
        "1/q^2*x (x) a*c + xs (x) d*b + z (x) 1 + ((q^2 + 1)/q)*z (x) b*c");

  PresPtr bp = makeB(1, -1, Rational(1));
  CHECK(gammaImages(bp)[0] == g1[0]);
}

TEST_CASE("the x leg of gamma(z) carries b*a") {
  for (int mu : {-1, 0, 1}) {
    PresPtr bp = makeB(mu, -1, Rational(1));
    PresPtr pp = makePol(polVariantForLabel(mu));
    Tensor2 gz = gammaImages(bp)[2];
    Poly want = gen(pp, polgen::b).star() * gen(pp, polgen::a);
    Poly got(pp);
    for (const auto& [k, c] : gz.terms())
      if (k[0] == Word{0}) {
        std::map<Word, Scalar> t;
        t.emplace(k[1], c);
        got += Poly::fromTerms(pp, std::move(t));
      }
    CHECK(got == want);
  }
}

TEST_CASE("gamma preserves the B relations and the quadratic identity") {
  for (auto [mu, nu, tl] : {std::tuple<int, int, long>{1, -1, 2},
                            {-1, 1, -1},
                            {0, 1, 1},
                            {1, 0, 0}}) {
    Rational tau(tl);
    Report rep = checkGamma(mu, nu, tau);
    CAPTURE(rep.text());
    CHECK(rep.allPassed());
    CHECK(rep.entries().size() == 6);
  }

  PresPtr bp = makeB(1, -1, Rational(2));
  PresPtr pp = makePol(PolVariant::Plus);
  auto gam = gammaImages(bp);
  Tensor2 lhs = gam[1] * gam[0];
  Tensor2 rhs = Tensor2::unit({bp, pp});
  rhs.scaleBy(Scalar::qPow(2));  // -q^2 nu with nu = -1
  Tensor2 tz = gam[2];
  tz.scaleBy(Scalar(2));
  rhs += tz;
  Tensor2 z2 = gam[2] * gam[2];
  z2.scaleBy(Scalar(-1));
  rhs += z2;
  CHECK(lhs == rhs);
}

TEST_CASE("gamma unit, counit, and star laws") {
  PresPtr bp = makeB(-1, -1, Rational(1));
  PresPtr pp = makePol(PolVariant::Minus);
  CHECK(gammaOf(Poly::one(bp)) == Tensor2::unit({bp, pp}));
  for (GenId g = 0; g < 3; ++g) {
    Poly p = gen(bp, g);
    CHECK(contractLeg2(gammaOf(p), 1, epsGrouplike) == p);
    CHECK(gammaOf(p.star()) == gammaOf(p).star());
  }
  Poly mix = gen(bp, 0) * gen(bp, 2) - gen(bp, 1).scaleBy(Scalar::qPow(3));
  CHECK(gammaOf(mix.star()) == gammaOf(mix).star());
}

TEST_CASE("gamma rejects polynomials from other algebras") {
  PresPtr pp = makePol(PolVariant::Plus);
  CHECK_THROWS_AS(gammaOf(gen(pp, polgen::a)), DomainError);
}

TEST_CASE("comodule axioms hold on generators and random elements") {
  for (auto [mu, nu, tl] : {std::tuple<int, int, long>{1, 1, 1},
                            {-1, 0, 2},
                            {0, -1, -2}}) {
    Report rep = checkComodule(mu, nu, Rational(tl), 4, 3, 2026);
    CAPTURE(rep.text());
    CHECK(rep.allPassed());
    CHECK(rep.entries().size() == 2);
  }

  // the z instance expands to a genuinely large identity
  PresPtr bp = makeB(1, -1, Rational(1));
  PresPtr pp = makePol(PolVariant::Plus);
  auto gam = gammaImages(bp);
  auto dim = polDeltaImages(PolVariant::Plus);
  Tensor2 gz = gam[2];
  Tensor3 lhs = expandLeg(gz, 0, gam, Tensor2::unit({bp, pp}));
  Tensor3 rhs = expandLeg(gz, 1, dim, Tensor2::unit({pp, pp}));
  CHECK(lhs == rhs);
  CHECK(lhs.termCount() >= 12);
}

TEST_CASE("infinitesimal action agrees with pairing against gamma") {
  for (auto [mu, nu, tl] : {std::tuple<int, int, long>{1, -1, 1},
                            {-1, -1, 0},
                            {0, 0, 2}}) {
    Report rep = checkInfinitesimal(mu, nu, Rational(tl), 5, 3, 77);
    CAPTURE(rep.text());
    CHECK(rep.allPassed());
  }

  // contraction route reproduces the closed action values
  PresPtr bp = makeB(1, -1, Rational(1));
  Pairing pr(1);
  PresPtr up = pr.uq();
  auto act = [&](GenId g, GenId b) {
    return contractLeg2(gammaOf(gen(bp, b)), 1, [&](const Word& wp) {
      return pr.pairWords(Word{g}, wp);
    });
  };
  Poly xsP = gen(bp, 1);
  xsP.scaleBy(Scalar::sPow(-1));
  CHECK(act(uqgen::E, 2) == xsP);   // E on z -> q^{-1/2} xs
  Poly xP = gen(bp, 0);
  xP.scaleBy(Scalar::qPow(-1));
  CHECK(act(uqgen::K, 0) == xP);    // K on x -> q^{-1} x
  CHECK(act(uqgen::F, 0).isZero());  // F kills x
  Poly fz = gen(bp, 0);
  fz.scaleBy(-Scalar::sPow(-3));
  CHECK(act(uqgen::F, 2) == fz);    // F on z -> -q^{-3/2} x
}

TEST_CASE("ergodicity: the fixed space is the scalars") {
  Report deep = checkErgodic(1, -1, Rational(1), 6);
  CAPTURE(deep.text());
  CHECK(deep.allPassed());
  bool sawDim = false;
  for (const CheckEntry& e : deep.entries())
    if (e.id == "coaction.ergodic.dim") {
      sawDim = true;
      CHECK(e.detail.find("49-monomial") != std::string::npos);
    }
  CHECK(sawDim);

  CHECK(checkErgodic(0, 1, Rational(2), 6).allPassed());
  CHECK(checkErgodic(0, 0, Rational(0), 6).allPassed());

  for (int mu : {-1, 1})
    for (long tl : {-2L, 0L, 1L})
      CHECK(checkErgodic(mu, mu, Rational(tl), 3).allPassed());

  CHECK_THROWS_AS(checkErgodic(1, 1, Rational(1), 1), DomainError);
}

TEST_CASE("spin-1 matrix entries and corepresentation laws") {
  auto M = spin1Matrix(PolVariant::Plus);
  CHECK(M[0][0].str() == "d^2");
  CHECK(M[0][1].str() == "rt*d*b");
  CHECK(M[1][1].str() == "((q^2 + 1)/q)*b*c + 1");
  CHECK(M[2][2].str() == "a^2");

  auto MZ = spin1Matrix(PolVariant::Zero);
  CHECK(MZ[1][0].isZero());
  CHECK(MZ[1][1].str() == "1");
  CHECK(MZ[0][1].str() == "rt*a0^-1*b0");

  for (PolVariant v : {PolVariant::Plus, PolVariant::Minus, PolVariant::Zero,
                       PolVariant::Sl2c}) {
    Report rep = checkSpin1(v);
    CAPTURE(rep.text());
    CHECK(rep.allPassed());
    CHECK(rep.entries().size() == (v == PolVariant::Sl2c ? 2u : 4u));
  }
}

TEST_CASE("spin-1 corner entry expands by the q-relations") {
  // Delta(a^2) = a^2 (x) a^2 + (1+q^2) ca (x) ba + c^2 (x) b^2
  PresPtr pp = makePol(PolVariant::Plus);
  XPoly a = XPoly::genPoly(pp, polgen::a);
  XPoly b = XPoly::genPoly(pp, polgen::b);
  XPoly c = XPoly::genPoly(pp, polgen::c);
  std::vector<XTensor2> dim;
  for (const Tensor2& t : polDeltaImages(PolVariant::Plus)) {
    XTensor2 x(t.legs());
    for (const auto& [k, co] : t.terms()) x.addTerm(k, ExtScalar(co));
    dim.push_back(std::move(x));
  }
  XTensor2 lhs = applyHom(a * a, dim, XTensor2::unit({pp, pp}));
  XTensor2 rhs = tensorOf(a * a, a * a) +
                 tensorOf((c * a).scaleBy(ExtScalar(Scalar(1) + Scalar::qPow(2))),
                          b * a) +
                 tensorOf(c * c, b * b);
  CHECK(lhs == rhs);
}

TEST_CASE("coideal embeddings: constructions on the admissible points") {
  CoidealEmbedding e0 = coidealEmbed(0, -1, Rational(1));
  REQUIRE(e0.embeddable);
  CHECK(e0.images[0].str() == "a0*b0 + q*a0^2");
  CHECK(e0.images[1].str() == "q*a0^-1*b0s + q*a0^-2");

  CoidealEmbedding e1 = coidealEmbed(1, -1, Rational(1));
  REQUIRE(e1.embeddable);
  CHECK(e1.images[0].str() == "-q*a^2 + a*b + q^2*b^2");
  CHECK(e1.images[2].str() == "-q*d*b + 1/q*a*c - 1/q*b*c");

  CoidealEmbedding em = coidealEmbed(-1, 0, Rational(1));
  REQUIRE(em.embeddable);
  CHECK(em.images[0].str() == "a*b");
  CHECK(em.images[2].str() == "1/q*b*c");
  CHECK(em.images[1].str() == "d*c");

  for (auto [mu, nu, tl] : {std::tuple<int, int, long>{0, -1, 1},
                            {1, -1, 1},
                            {-1, -1, -2},
                            {0, -1, 0},
                            {1, -1, 0},
                            {-1, 0, 2},
                            {0, 0, -1}}) {
    Report rep = checkCoideal(mu, nu, Rational(tl));
    CAPTURE(rep.text());
    CHECK(rep.allPassed());
    CHECK(rep.entries().size() == (mu == 0 ? 5u : 6u));
  }
}

TEST_CASE("coideal embeddings: decision table over the grid") {
  for (int mu : {-1, 0, 1})
    for (int nu : {-1, 0, 1})
      for (long tl = -2; tl <= 2; ++tl) {
        Rational tau(tl);
        bool expected = (tl != 0 && nu <= 0) || (tl == 0 && nu == -1);
        CoidealEmbedding emb = coidealEmbed(mu, nu, tau);
        CAPTURE(mu);
        CAPTURE(nu);
        CAPTURE(tl);
        CHECK(emb.embeddable == expected);
        if (!expected) {
          CHECK(emb.images.empty());
          CHECK(!emb.obstruction.empty());
        }
      }
  CHECK(coidealEmbed(1, 1, Rational(1)).obstruction.find("no real solution") !=
        std::string::npos);
  CHECK(coidealEmbed(-1, 0, Rational(0)).obstruction.find("r = s = t = 0") !=
        std::string::npos);
}

TEST_CASE("classification: decision table matches the criterion") {
  for (int nu : {-1, 0, 1})
    for (int nuP : {-1, 0, 1})
      for (long t = -2; t <= 2; ++t)
        for (long tP = -2; tP <= 2; ++tP) {
          ClassifyResult r = classifyIso(1, nu, Rational(t), nuP, Rational(tP));
          bool expected =
              nu == nuP && (nu != 0 ? (t == tP || t == -tP)
                                    : ((t == 0) == (tP == 0)));
          CAPTURE(nu);
          CAPTURE(nuP);
          CAPTURE(t);
          CAPTURE(tP);
          CHECK(r.theta.has_value() == expected);
          CHECK(r.report.allPassed());
          CHECK(r.report.entries().size() == (expected ? 5u : 1u));
        }
}

TEST_CASE("classification: witnesses and constructions") {
  ClassifyResult a = classifyIso(1, -1, Rational(1), -1, Rational(-1));
  REQUIRE(a.theta.has_value());
  CHECK(*a.theta == Rational(-1));
  CHECK(a.report.allPassed());

  ClassifyResult b = classifyIso(-1, 0, Rational(2), 0, Rational(3));
  REQUIRE(b.theta.has_value());
  CHECK(*b.theta == Rational(2, 3));
  CHECK(b.report.allPassed());

  ClassifyResult c = classifyIso(0, 0, Rational(0), 0, Rational(0));
  REQUIRE(c.theta.has_value());
  CHECK(*c.theta == Rational(1));

  CHECK(!classifyIso(1, 1, Rational(1), -1, Rational(1)).theta.has_value());
  CHECK(!classifyIso(1, -1, Rational(2), -1, Rational(1)).theta.has_value());
  CHECK(!classifyIso(1, 0, Rational(0), 0, Rational(2)).theta.has_value());

  for (int mu : {-1, 0, 1}) {
    ClassifyResult r = classifyIso(mu, -1, Rational(2), -1, Rational(-2));
    REQUIRE(r.theta.has_value());
    CAPTURE(r.report.text());
    CHECK(r.report.allPassed());
  }
}

TEST_CASE("suite output is deterministic") {
  Report a = checkComodule(1, -1, Rational(1), 3, 3, 99);
  Report b = checkComodule(1, -1, Rational(1), 3, 3, 99);
  CHECK(a.text() == b.text());
  Report c = checkInfinitesimal(-1, 1, Rational(2), 3, 3, 99);
  Report d = checkInfinitesimal(-1, 1, Rational(2), 3, 3, 99);
  CHECK(c.text() == d.text());
}
