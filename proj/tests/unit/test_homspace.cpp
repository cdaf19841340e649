#include <doctest.h>

#include <colink/confluence.hpp>
#include <colink/homspace.hpp>

using namespace colink;

namespace {
const Scalar kQ2 = Scalar::qPow(2);
Scalar embedCoeff() {
  return Scalar::sPow(1) * (Scalar::qPow(-1) - Scalar::qPow(1));
}
}  // namespace

TEST_SUITE("homspace") {
  TEST_CASE("B presentation shape") {
    PresPtr b = makeB(1, -1, Rational(2));
    CHECK(b->id() == "B(+,-;2)");
    CHECK(b->family() == "bspace");
    CHECK(b->genCount() == 3);
    CHECK(b == makeB(1, -1, Rational(2)));
    auto [mu, nu, tau] = bParams(b);
    CHECK(mu == 1);
    CHECK(nu == -1);
    CHECK(tau == Rational(2));
    CHECK_THROWS_AS(bParams(makeUq(0, 0)), DomainError);
    CHECK(checkRuleConfluence(b).allPassed());
  }

  TEST_CASE("defining relations reduce as stated") {
    PresPtr b = makeB(1, -1, Rational(2));
    // xs x -> -q^2 nu + tau z - mu z^2
    Poly expect = Poly::constant(b, kQ2);  // nu = -1
    expect += Poly::genPoly(b, 2) * Scalar(2);
    expect += Poly::fromWord(b, {2, 2}, Scalar(-1));
    CHECK(Poly::fromWord(b, {1, 0}) == expect);
    // commutator picks up the derived closed form
    Poly comm = Poly::fromWord(b, {0, 1}) - Poly::fromWord(b, {1, 0});
    Poly cexp = Poly::genPoly(b, 2) * ((kQ2 - Scalar(1)) * Scalar(2));
    cexp += Poly::fromWord(b, {2, 2}, -(Scalar::qPow(4) - Scalar(1)));
    CHECK(comm == cexp);
    // star swaps the mixed products
    CHECK(Poly::fromWord(b, {1, 0}).star() == Poly::fromWord(b, {1, 0}));
    CHECK(Poly::genPoly(b, 0).star() == Poly::genPoly(b, 1));
    // q-commutation
    CHECK(Poly::fromWord(b, {0, 2}) * kQ2 ==
          Poly::fromWord(b, {2, 0}) * Scalar::qPow(4));
  }

  TEST_CASE("normal monomials avoid mixed letter families") {
    PresPtr b = makeB(0, 1, Rational(1));
    Poly p = Poly::fromWord(b, {0, 1, 2, 0}) + Poly::fromWord(b, {2, 1, 1});
    for (const auto& [w, c] : p.terms()) {
      bool sawX = false, sawXs = false;
      GenId prev = 0;
      for (GenId g : w) {
        CHECK(g >= prev);
        prev = g;
        sawX |= g == 0;
        sawXs |= g == 1;
      }
      CHECK_FALSE((sawX && sawXs));
    }
  }

  TEST_CASE("embedding oracles") {
    int mu = 1, nu = -1;
    Rational tau(2);
    PresPtr b = makeB(mu, nu, tau);
    PresPtr a = makeQuotient(mu, nu, tau);
    // xs x image
    Poly expect = Poly::constant(a, -(kQ2 * Scalar(nu)));
    expect += Poly::fromWord(a, {0, 0}, Scalar(tau));
    expect += Poly::fromWord(a, {0, 0, 0, 0}, -Scalar(mu));
    CHECK(embedBInA(Poly::fromWord(b, {1, 0})) == expect);
    // q-commutation collapses in A
    auto img = bImagesInA(mu, nu, tau);
    CHECK((img[0] * img[2] - img[2] * img[0] * kQ2).isZero());
    CHECK(embedBInA(Poly::one(b)) == Poly::one(a));
    CHECK(embedBInA(Poly::genPoly(b, 0)).star() ==
          embedBInA(Poly::genPoly(b, 1)));
  }

  TEST_CASE("embedding suite over sample parameters") {
    Report rep = checkBEmbedding(1, -1, Rational(2), 3, 2, 0xB0B);
    CHECK_MESSAGE(rep.allPassed(), rep.text());
    Report rep2 = checkBEmbedding(0, 0, Rational(0), 2, 2, 0xB0B);
    CHECK_MESSAGE(rep2.allPassed(), rep2.text());
  }

  TEST_CASE("truncated representation formulas") {
    TruncatedVRep rho(1, -1, Rational(2), 4);
    auto e = [&](int n, int m) { return rho.basis(n, m); };
    CHECK(TruncatedVRep::equal(rho.applyX(e(0, 0)), e(1, 0)));
    CHECK(TruncatedVRep::equal(rho.applyW(e(0, 0)), e(0, 1)));
    // yx on e00, with z realized as w^2
    TruncatedVRep::Vec yx = rho.applyY(rho.applyX(e(0, 0)));
    TruncatedVRep::Vec expect;
    expect[{0, 0}] = kQ2;  // -q^2 nu, nu = -1
    expect[{0, 2}] = Scalar(2);
    expect[{0, 4}] = Scalar(-1);
    CHECK(TruncatedVRep::equal(yx, expect));
    // xy on e00
    TruncatedVRep::Vec xy = rho.applyX(rho.applyY(e(0, 0)));
    TruncatedVRep::Vec expect2;
    expect2[{0, 0}] = kQ2;
    expect2[{0, 2}] = kQ2 * Scalar(2);
    expect2[{0, 4}] = -Scalar::qPow(4);
    CHECK(TruncatedVRep::equal(xy, expect2));
    // relation xz = q^2 zx on e00: both sides land on e(1,2)
    TruncatedVRep::Vec zx = rho.applyZ(rho.applyX(e(0, 0)));
    TruncatedVRep::Vec xz = rho.applyX(rho.applyZ(e(0, 0)));
    CHECK(TruncatedVRep::equal(xz, e(1, 2)));
    TruncatedVRep::Vec scaled;
    for (const auto& [k, c] : zx) scaled[k] = kQ2 * c;
    CHECK(TruncatedVRep::equal(xz, scaled));
  }

  TEST_CASE("window violations are flagged") {
    TruncatedVRep rho(1, 1, Rational(1), 4);
    CHECK_THROWS_AS(rho.applyX(rho.basis(4, 0)), WindowError);
    CHECK_THROWS_AS(rho.applyW(rho.basis(0, 8)), WindowError);
    CHECK_THROWS_AS(rho.basis(5, 0), WindowError);
    CHECK_THROWS_AS(TruncatedVRep(1, 1, Rational(1), 1), DomainError);
  }

  TEST_CASE("representation suite certifies relations and independence") {
    Report rep = checkVRep(1, -1, Rational(2), 4);
    CHECK_MESSAGE(rep.allPassed(), rep.text());
    CHECK(rep.entries().size() == 7);
    bool sawIndep = false;
    for (const auto& e : rep.entries())
      if (e.id == "vrep.independence") {
        sawIndep = true;
        CHECK(e.detail == "81 distinct vectors");
      }
    CHECK(sawIndep);
    // degenerate parameters still represent, convention check skips
    Report rep2 = checkVRep(0, 0, Rational(0), 4);
    CHECK(rep2.failCount() == 0);
    CHECK(rep2.skipCount() == 1);
    CHECK_THROWS_AS(checkVRep(1, 1, Rational(1), 3), DomainError);
  }

  TEST_CASE("closed action table") {
    int mu = 1;
    Rational tau(2);
    PresPtr b = makeB(mu, -1, tau);
    PresPtr diag = makeUq(mu, mu);
    Poly E = Poly::genPoly(diag, uqgen::E), F = Poly::genPoly(diag, uqgen::F);
    Poly K = Poly::genPoly(diag, uqgen::K), Ki = Poly::genPoly(diag, uqgen::Ki);
    Poly x = Poly::genPoly(b, 0), xs = Poly::genPoly(b, 1),
         z = Poly::genPoly(b, 2);
    Scalar s = Scalar::sPow(1), round = Scalar(1) + kQ2;
    CHECK(actionOnB(E, x) ==
          Poly::constant(b, s * Scalar(2)) + z * (-(s * round)));
    CHECK(actionOnB(E, z) == xs * Scalar::sPow(-1));
    CHECK(actionOnB(E, xs).isZero());
    CHECK(actionOnB(K, x) == x * Scalar::qPow(-1));
    CHECK(actionOnB(K, z) == z);
    CHECK(actionOnB(K, xs) == xs * Scalar::qPow(1));
    CHECK(actionOnB(Ki, x) == x * Scalar::qPow(1));
    CHECK(actionOnB(F, x).isZero());
    CHECK(actionOnB(F, z) == x * (-Scalar::sPow(-3)));
    CHECK(actionOnB(F, xs) ==
          Poly::constant(b, -(Scalar::sPow(-1) * Scalar(2))) +
              z * (Scalar::sPow(-1) * round));
    CHECK(actionOnB(Poly::one(diag), x * z - xs) == x * z - xs);
    // K grading on a sample monomial
    Poly mono = Poly::fromWord(b, {0, 0, 2, 2, 2});
    CHECK(actionOnB(K, mono) == mono * Scalar::qPow(-2));
    CHECK_THROWS_AS(actionOnB(Poly::genPoly(makeUq(-1, -1), uqgen::E), x),
                    DomainError);
  }

  TEST_CASE("table route equals quotient route on generator pairs") {
    int mu = 1, nu = -1;
    Rational tau(2);
    PresPtr b = makeB(mu, nu, tau);
    PresPtr diag = makeUq(mu, mu);
    Poly E = Poly::genPoly(diag, uqgen::E);
    Poly F = Poly::genPoly(diag, uqgen::F);
    Poly Ki = Poly::genPoly(diag, uqgen::Ki);
    Poly x = Poly::genPoly(b, 0), z = Poly::genPoly(b, 2);
    CHECK(embedBInA(actionOnB(E, z)) ==
          quotientActionLeft(E, embedBInA(z)));
    // and the explicit value: q^{-1/2} times the xs image
    CHECK(quotientActionLeft(E, embedBInA(z)) ==
          Poly::fromWord(makeQuotient(mu, nu, tau), {0, 3},
                         Scalar::sPow(-1) * embedCoeff()));
    CHECK(quotientActionLeft(F, embedBInA(x)).isZero());
    CHECK(actionOnB(F, x).isZero());
    CHECK(embedBInA(actionOnB(Ki, x)) ==
          quotientActionLeft(Ki, embedBInA(x)));
    CHECK(actionOnB(Ki, x) == x * Scalar::qPow(1));
  }

  TEST_CASE("action consistency suite") {
    Report rep = checkActionConsistency(1, -1, Rational(2), 2, 2, 0xAC7);
    CHECK_MESSAGE(rep.allPassed(), rep.text());
    Report rep2 = checkActionConsistency(0, 1, Rational(-1) / 2, 2, 2, 0xAC7);
    CHECK_MESSAGE(rep2.allPassed(), rep2.text());
  }

  TEST_CASE("mirror presentation and embedding") {
    PresPtr d = makeD(1, -1, Rational(2));
    CHECK(d->id() == "D(+,-;2)");
    CHECK(checkRuleConfluence(d).allPassed());
    // twisted star: u* = q^{-2} us
    Poly u = Poly::genPoly(d, 0), us = Poly::genPoly(d, 1);
    CHECK(u.star() == us * Scalar::qPow(-2));
    CHECK(u.star().star() == u);
    auto img = dImagesInA(1, -1, Rational(2));
    CHECK(embedDInA(u).star() == embedDInA(u.star()));
    CHECK(img[2] == Poly::fromWord(makeQuotient(1, -1, Rational(2)), {1, 1}));
  }

  TEST_CASE("theta routes and frozen images") {
    int mu = 1, nu = -1;
    Rational tau(2);
    PresPtr bsrc = makeB(nu, mu, tau);
    PresPtr atgt = makeQuotient(mu, nu, tau);
    Poly x = Poly::genPoly(bsrc, 0), xs = Poly::genPoly(bsrc, 1),
         z = Poly::genPoly(bsrc, 2);
    // the antipode exchanges the Casimirs
    CHECK(antipodeUq(casimirElement(nu, mu)) == casimirElement(mu, nu));
    // z lands on the inverse square
    CHECK(thetaViaAntipode(z) == Poly::fromWord(atgt, {1, 1}));
    CHECK(thetaViaAntipode(x) ==
          Poly::fromWord(atgt, {1, 2}, -(Scalar::qPow(-1) * embedCoeff())));
    CHECK(thetaViaAntipode(xs) ==
          Poly::fromWord(atgt, {1, 3}, -(kQ2 * embedCoeff())));
    CHECK(thetaViaAntipode(Poly::one(bsrc)) == Poly::one(atgt));
    // abstract route matches
    CHECK(embedDInA(thetaMap(x * z)) == thetaViaAntipode(x * z));
    // anti-multiplicative
    CHECK(thetaViaAntipode(x * z) ==
          thetaViaAntipode(z) * thetaViaAntipode(x));
    // star exchange
    CHECK(thetaViaAntipode(x.star()) == thetaInverseViaAntipode(x).star());
  }

  TEST_CASE("membership predicate for the mirror image") {
    PresPtr a = makeQuotient(1, -1, Rational(2));
    CHECK(inDImage(Poly::one(a)));
    CHECK(inDImage(Poly::fromWord(a, {1, 1})));
    CHECK(inDImage(Poly::fromWord(a, {1, 2})));          // Ki F
    CHECK(inDImage(Poly::fromWord(a, {1, 1, 1, 3})));    // Ki^3 E
    CHECK_FALSE(inDImage(Poly::genPoly(a, 0)));          // K
    CHECK_FALSE(inDImage(Poly::genPoly(a, 1)));          // bare Ki
    CHECK_FALSE(inDImage(Poly::fromWord(a, {1, 2, 2}))); // Ki F^2
    CHECK_FALSE(inDImage(Poly::genPoly(a, 2)));          // bare F
  }

  TEST_CASE("theta suite") {
    Report rep = checkTheta(1, -1, Rational(2), 2, 2, 0x7E7A);
    CHECK_MESSAGE(rep.allPassed(), rep.text());
    Report rep2 = checkTheta(0, 1, Rational(1), 2, 2, 0x7E7A);
    CHECK_MESSAGE(rep2.allPassed(), rep2.text());
  }
}
