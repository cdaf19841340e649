#include <colink/homspace.hpp>
#include <colink/parse.hpp>
#include <colink/pol.hpp>
#include <colink/rng.hpp>
#include <colink/uq.hpp>
#include <doctest.h>

using namespace colink;

TEST_CASE("commutator and quadratic relation examples") {
  PresPtr uq = parseContext("Uq(+,-)");
  Poly comm = parseExpression(uq, "E*F - F*E");
  Poly lam = Poly::fromWord(uq, Word(2, uqgen::K)) +
             Poly::fromWord(uq, Word(2, uqgen::Ki));
  lam.scaleBy(Scalar::lambda());
  CHECK(comm == lam);

  PresPtr bp = parseContext("B(+,+;1)");
  Poly xsx = parseExpression(bp, "xs*x");
  Poly want = Poly::genPoly(bp, 2) - Poly::constant(bp, Scalar::qPow(2));
  want -= Poly::genPoly(bp, 2) * Poly::genPoly(bp, 2);
  CHECK(xsx == want);

  for (const char* c : {"Uq(0,0)", "A(-,+;2)", "B(0,-;0)", "D(+,+;1)",
                        "Pol(sl2c)"})
    CHECK(parseExpression(parseContext(c), "1").isOne());
}

TEST_CASE("context descriptors") {
  CHECK(parseContext("Uq(+,-)") == makeUq(1, -1));
  CHECK(parseContext(" B( 0 , + ; -2 ) ") == makeB(0, 1, Rational(-2)));
  CHECK(parseContext("D(-,-;1/2)") == makeD(-1, -1, Rational(1, 2)));
  CHECK(parseContext("A(+,0;3)") == makeQuotient(1, 0, Rational(3)));
  CHECK(parseContext("Pol(0)") == makePol(PolVariant::Zero));
  CHECK(parseContext("Pol(sl2c)") == makePol(PolVariant::Sl2c));

  CHECK_THROWS_AS(parseContext("Q(+,-)"), ParseError);
  CHECK_THROWS_AS(parseContext("B(+,-)"), ParseError);      // tau missing
  CHECK_THROWS_AS(parseContext("Uq(+,2)"), ParseError);     // bad label
  CHECK_THROWS_AS(parseContext("Uq(+,-) x"), ParseError);   // trailing
  CHECK_THROWS_AS(parseContext("A(+,-;1/0)"), ParseError);  // zero denominator
  CHECK_THROWS_AS(parseContext("Pol(su2)"), ParseError);
  CHECK(contextFamilies().size() == 5);
}

TEST_CASE("scalar literals, powers, and division") {
  PresPtr uq = parseContext("Uq(0,+)");
  CHECK(parseExpression(uq, "q^-3") == Poly::constant(uq, Scalar::qPow(-3)));
  CHECK(parseExpression(uq, "s^5") == Poly::constant(uq, Scalar::sPow(5)));
  CHECK(parseExpression(uq, "(q + q^-1)^2") ==
        Poly::constant(uq, (Scalar::qPow(1) + Scalar::qPow(-1)).pow(2)));
  CHECK(parseExpression(uq, "3/2") == Poly::constant(uq, Scalar(Rational(3, 2))));
  CHECK(parseExpression(uq, "E/(q^2 - 1)") ==
        Poly::genPoly(uq, uqgen::E) * (Scalar::qPow(2) - Scalar(1)).inverse());

  CHECK(parseExpression(uq, "K^-2") == Poly::fromWord(uq, Word(2, uqgen::Ki)));
  CHECK(parseExpression(uq, "Ki^-1") == Poly::genPoly(uq, uqgen::K));
  CHECK(parseExpression(uq, "K*K^-1").isOne());

  PresPtr pz = parseContext("Pol(0)");
  CHECK(parseExpression(pz, "a0^-1") == Poly::genPoly(pz, polgen::a0s));
  CHECK(parseExpression(pz, "a0^0").isOne());

  CHECK(parseExpression(uq, "-E^2") == -(Poly::genPoly(uq, uqgen::E) *
                                         Poly::genPoly(uq, uqgen::E)));
  CHECK(parseExpression(uq, "2*E - -F") ==
        Poly::genPoly(uq, uqgen::E).scaleBy(Scalar(2)) +
            Poly::genPoly(uq, uqgen::F));
}

TEST_CASE("syntax errors carry positions") {
  PresPtr uq = parseContext("Uq(+,-)");
  auto posOf = [&](const char* e) {
    try {
      parseExpression(uq, e);
    } catch (const ParseError& pe) {
      return pe.pos;
    }
    return size_t(9999);
  };
  CHECK(posOf("E + w") == 4);
  CHECK(posOf("E^-1") == 2);
  CHECK(posOf("E*") == 2);
  CHECK(posOf("(q+1") == 4);
  CHECK(posOf("q^(2)") == 2);
  CHECK(posOf("E/F") == 2);
  CHECK(posOf("E/0") == 2);
  CHECK(posOf("(E+F)^-1") == 6);
  CHECK(posOf("0^-1") == 2);
  CHECK_THROWS_AS(parseExpression(uq, "q^99999999999999999999"), ParseError);
}

TEST_CASE("parse inverts rendering on random elements") {
  for (const char* c : {"Uq(+,-)", "Uq(0,0)", "A(+,0;2)", "B(-,+;-1)",
                        "D(0,0;1/2)", "Pol(+)", "Pol(-)", "Pol(0)",
                        "Pol(sl2c)"}) {
    PresPtr p = parseContext(c);
    Sampler smp(deriveSeed(2026, c));
    for (int i = 0; i < 200; ++i) {
      Poly r = smp.randomPoly(p, 4, 4);
      CAPTURE(c);
      CAPTURE(r.str());
      CHECK(parseExpression(p, r.str()) == r);
    }
  }
}
