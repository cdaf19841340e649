#include <doctest.h>

#include <colink/pol.hpp>
#include <colink/uq.hpp>

using namespace colink;
using namespace colink::polgen;

namespace {

Poly W(const PresPtr& p, std::initializer_list<GenId> w) {
  return Poly::fromWord(p, Word(w));
}

// a-run xor d-run, then b-run, then c-run (same index pattern for variant 0)
bool polNormal(const Poly& p) {
  for (const auto& [w, c] : p.terms()) {
    bool hasA = false, hasD = false;
    for (size_t i = 0; i < w.size(); ++i) {
      if (i && w[i] < w[i - 1]) return false;
      hasA |= w[i] == 0;
      hasD |= w[i] == 1;
    }
    if (hasA && hasD) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("pol presentations and variant plumbing") {
  PresPtr p = makePol(PolVariant::Plus);
  CHECK(p->id() == "Pol(+)");
  CHECK(p->family() == "pol");
  CHECK(p->genCount() == 4);
  CHECK(p->gen(a).name == "a");
  CHECK(p->gen(d).name == "d");
  CHECK(p->gen(b).name == "b");
  CHECK(p->gen(c).name == "c");
  CHECK(p == makePol(PolVariant::Plus));
  CHECK(makePol(PolVariant::Minus)->id() == "Pol(-)");
  CHECK(makePol(PolVariant::Zero)->id() == "Pol(0)");
  CHECK(makePol(PolVariant::Sl2c)->id() == "Pol(sl2c)");
  CHECK(polVariant(p) == PolVariant::Plus);
  CHECK(polVariant(makePol(PolVariant::Sl2c)) == PolVariant::Sl2c);
  CHECK(parsePolVariant("+") == PolVariant::Plus);
  CHECK(parsePolVariant("-1") == PolVariant::Minus);
  CHECK(parsePolVariant("0") == PolVariant::Zero);
  CHECK(parsePolVariant("sl2c") == PolVariant::Sl2c);
  CHECK_THROWS_AS((void)parsePolVariant("su2"), ParseError);
  CHECK_THROWS_AS((void)polVariant(makeUq(0, 0)), DomainError);
}

TEST_CASE("pol defining relations reach the PBW normal form") {
  PresPtr p = makePol(PolVariant::Sl2c);
  CHECK(W(p, {d, a}).str() == "1/q*b*c + 1");
  CHECK(W(p, {a, d}).str() == "q*b*c + 1");
  CHECK(W(p, {b, a}).str() == "1/q*a*b");
  CHECK(W(p, {c, a}).str() == "1/q*a*c");
  CHECK(W(p, {b, d}).str() == "q*d*b");
  CHECK(W(p, {c, d}).str() == "q*d*c");
  CHECK(W(p, {c, b}).str() == "b*c");
  // da - 1/q cb = 1 and ad - q bc = 1 collapse exactly
  CHECK(W(p, {d, a}) - W(p, {b, c}).scaleBy(Scalar::qPow(-1)) == Poly::one(p));
  CHECK(W(p, {a, d}) - W(p, {b, c}).scaleBy(Scalar::qPow(1)) == Poly::one(p));
}

TEST_CASE("pol variant 0 relations and rendering") {
  PresPtr p = makePol(PolVariant::Zero);
  CHECK(W(p, {a0, a0s}) == Poly::one(p));
  CHECK(W(p, {a0s, a0}) == Poly::one(p));
  CHECK(W(p, {a0s, a0s}).str() == "a0^-2");
  CHECK(W(p, {b0, a0}).str() == "1/q*a0*b0");
  CHECK(W(p, {b0, a0s}).str() == "q*a0^-1*b0");
  CHECK(W(p, {b0s, b0}).str() == "b0*b0s");
  CHECK(W(p, {b0s, a0}).str() == "1/q*a0*b0s");
}

TEST_CASE("pol random elements land on normal monomials") {
  for (PolVariant v : {PolVariant::Plus, PolVariant::Zero, PolVariant::Sl2c}) {
    PresPtr p = makePol(v);
    Sampler s(deriveSeed(0xA11, polVariantStr(v)));
    for (int i = 0; i < 40; ++i) {
      Poly x = s.randomPoly(p, 6, 4);
      CHECK(polNormal(x));
      CHECK(polNormal(x * x));
    }
  }
}

TEST_CASE("pol stars per variant") {
  PresPtr plus = makePol(PolVariant::Plus);
  CHECK(Poly::genPoly(plus, a).star() == Poly::genPoly(plus, d));
  CHECK(Poly::genPoly(plus, d).star() == Poly::genPoly(plus, a));
  CHECK(Poly::genPoly(plus, b).star().str() == "-1/q*c");
  CHECK(Poly::genPoly(plus, c).star().str() == "-q*b");
  PresPtr minus = makePol(PolVariant::Minus);
  CHECK(Poly::genPoly(minus, b).star().str() == "1/q*c");
  CHECK(Poly::genPoly(minus, c).star().str() == "q*b");
  PresPtr zero = makePol(PolVariant::Zero);
  CHECK(Poly::genPoly(zero, a0).star() == Poly::genPoly(zero, a0s));
  CHECK(Poly::genPoly(zero, b0).star() == Poly::genPoly(zero, b0s));
  CHECK_THROWS_AS((void)Poly::genPoly(makePol(PolVariant::Sl2c), b).star(),
                  DomainError);
  // involution on random elements
  for (PolVariant v : {PolVariant::Plus, PolVariant::Minus, PolVariant::Zero}) {
    PresPtr p = makePol(v);
    Sampler s(deriveSeed(0xA12, polVariantStr(v)));
    for (int i = 0; i < 25; ++i) {
      Poly x = s.randomPoly(p, 5);
      CHECK(x.star().star() == x);
    }
  }
}

TEST_CASE("pol coproduct on generators") {
  PresPtr p = makePol(PolVariant::Plus);
  CHECK(deltaPol(Poly::genPoly(p, a)).str() == "a (x) a + c (x) b");
  CHECK(deltaPol(Poly::genPoly(p, d)).str() == "d (x) d + b (x) c");
  CHECK(deltaPol(Poly::genPoly(p, b)).str() == "d (x) b + b (x) a");
  CHECK(deltaPol(Poly::genPoly(p, c)).str() == "a (x) c + c (x) d");
  CHECK(deltaPol(Poly::one(p)) == Tensor2::unit({p, p}));
  PresPtr z = makePol(PolVariant::Zero);
  CHECK(deltaPol(Poly::genPoly(z, a0)).str() == "a0 (x) a0");
  CHECK(deltaPol(Poly::genPoly(z, a0s)).str() == "a0^-1 (x) a0^-1");
  CHECK(deltaPol(Poly::genPoly(z, b0)).str() == "a0^-1 (x) b0 + b0 (x) a0");
  CHECK(deltaPol(Poly::genPoly(z, b0s)).str() == "a0 (x) b0s + b0s (x) a0^-1");
}

TEST_CASE("pol coproduct is well defined on the ideal") {
  // Delta(da - 1/q cb) = 1 (x) 1 certifies compatibility with the rules
  PresPtr p = makePol(PolVariant::Sl2c);
  Poly rel = W(p, {d, a}) - W(p, {b, c}).scaleBy(Scalar::qPow(-1));
  CHECK(deltaPol(rel) == Tensor2::unit({p, p}));
  Poly rel2 = W(p, {a, d}) - W(p, {b, c}).scaleBy(Scalar::qPow(1));
  CHECK(deltaPol(rel2) == Tensor2::unit({p, p}));
  for (PolVariant v : {PolVariant::Plus, PolVariant::Minus, PolVariant::Zero,
                       PolVariant::Sl2c}) {
    PresPtr q = makePol(v);
    CHECK(!checkRelationsPreserved(q, polDeltaImages(v),
                                   Tensor2::unit({q, q})));
  }
}

TEST_CASE("pol counit") {
  PresPtr p = makePol(PolVariant::Plus);
  CHECK(counitPol(Poly::genPoly(p, a)) == Scalar(1));
  CHECK(counitPol(Poly::genPoly(p, d)) == Scalar(1));
  CHECK(counitPol(Poly::genPoly(p, b)).isZero());
  CHECK(counitPol(Poly::genPoly(p, c)).isZero());
  CHECK(counitPol(W(p, {d, a})) == Scalar(1));
  CHECK(counitPol(W(p, {a, a, d})) == Scalar(1));
  PresPtr z = makePol(PolVariant::Zero);
  CHECK(counitPol(Poly::genPoly(z, a0s)) == Scalar(1));
  CHECK(counitPol(Poly::genPoly(z, b0s)).isZero());
}

TEST_CASE("pol antipode values and axiom instances") {
  PresPtr p = makePol(PolVariant::Plus);
  Poly ga = Poly::genPoly(p, a), gb = Poly::genPoly(p, b);
  Poly gc = Poly::genPoly(p, c), gd = Poly::genPoly(p, d);
  CHECK(antipodePol(ga) == gd);
  CHECK(antipodePol(gd) == ga);
  CHECK(antipodePol(gb).str() == "-q*b");
  CHECK(antipodePol(gc).str() == "-1/q*c");
  // m(S (x) id)Delta(a) = S(a)a + S(c)b = da - 1/q cb = 1
  CHECK(antipodePol(ga) * ga + antipodePol(gc) * gb == Poly::one(p));
  // m(id (x) S)Delta(a) = aS(a) + cS(b) = ad - q cb = 1
  CHECK(ga * antipodePol(ga) + gc * antipodePol(gb) == Poly::one(p));
  // anti-multiplicative: S(da) = S(a)S(d) = da
  CHECK(antipodePol(W(p, {d, a})) == W(p, {d, a}));
  CHECK(antipodePol(W(p, {b, c})) == W(p, {b, c}));

  PresPtr z = makePol(PolVariant::Zero);
  Poly za = Poly::genPoly(z, a0), zb = Poly::genPoly(z, b0);
  CHECK(antipodePol(za) == Poly::genPoly(z, a0s));
  CHECK(antipodePol(zb).str() == "-q*b0");
  CHECK(antipodePol(Poly::genPoly(z, b0s)).str() == "-1/q*b0s");
  // axiom on Delta(b0): S(b0)a0 + a0b0 = 0
  CHECK((antipodePol(zb) * za + za * zb).isZero());
}

TEST_CASE("pol coproduct is a star homomorphism") {
  for (PolVariant v : {PolVariant::Plus, PolVariant::Minus, PolVariant::Zero}) {
    PresPtr p = makePol(v);
    for (GenId g = 0; g < 4; ++g) {
      Poly x = Poly::genPoly(p, g);
      CHECK(deltaPol(x.star()) == deltaPol(x).star());
    }
  }
}

TEST_CASE("pol coassociativity spot checks") {
  PresPtr p = makePol(PolVariant::Minus);
  auto dim = polDeltaImages(PolVariant::Minus);
  Tensor2 unit = Tensor2::unit({p, p});
  for (const Poly& x : {W(p, {a, b}), W(p, {d, c, b}), W(p, {a, d}) * W(p, {b, c})}) {
    Tensor3 lhs = expandLeg(deltaPol(x), 0, dim, unit);
    Tensor3 rhs = expandLeg(deltaPol(x), 1, dim, unit);
    CHECK(lhs == rhs);
  }
}

TEST_CASE("pol transport onto the starred quotient conventions") {
  // the letter map x -> x_mu from the sl2c algebra is a homomorphism onto
  // each starred variant; transport by name realizes it
  PresPtr sl = makePol(PolVariant::Sl2c);
  PresPtr plus = makePol(PolVariant::Plus);
  CHECK(transport(Poly::genPoly(sl, a), plus) == Poly::genPoly(plus, a));
  CHECK(transport(W(sl, {d, a}), plus) == W(plus, {d, a}));
  Sampler s(0xA13);
  for (int i = 0; i < 20; ++i) {
    Poly x = s.randomPoly(sl, 4), y = s.randomPoly(sl, 4);
    CHECK(transport(x * y, plus) == transport(x, plus) * transport(y, plus));
  }
}

TEST_CASE("pol hopf suites pass for every variant") {
  for (PolVariant v : {PolVariant::Plus, PolVariant::Minus, PolVariant::Zero,
                       PolVariant::Sl2c}) {
    Report r = checkPolHopf(v, 25, 3, 0x90f);
    INFO(r.text());
    CHECK(r.allPassed());
    CHECK(r.entries().size() == (makePol(v)->hasStar() ? 10 : 7));
  }
}

TEST_CASE("pol delta0 support grid") {
  Report r = checkDeltaZeroGrid(2, 3, 3);
  INFO(r.text());
  CHECK(r.allPassed());
  CHECK(r.entries().size() == 80);
  // one grid instance frozen: m=-2, k=l=1 has the four predicted keys
  PresPtr z = makePol(PolVariant::Zero);
  Tensor2 t = deltaPol(W(z, {a0s, a0s, b0, b0s}));
  CHECK(t.termCount() == 4);
  CHECK(t.str() ==
        "a0^-2 (x) a0^-2*b0*b0s + q*a0^-3*b0s (x) a0^-3*b0 + "
        "a0^-2*b0*b0s (x) a0^-2 + 1/q*a0^-1*b0 (x) a0^-1*b0s");
}
