#include <doctest.h>

#include <colink/algebra.hpp>
#include <colink/confluence.hpp>
#include <colink/rng.hpp>
#include <colink/tensor.hpp>

using namespace colink;

namespace {

// q-commuting pair with star swap: vu -> q uv, u* = v.  The defining
// relation is star-invariant, so star is a well-defined antihomomorphism.
PresPtr qpair() {
  PresentationBuilder b("demo.qpair");
  GenId u = b.addGen("u");
  GenId v = b.addGen("v");
  b.setStar(u, v);
  b.setStar(v, u);
  b.addRule({v, u}, {{Scalar::qPow(1), {u, v}}}, "vu");
  return b.build("demo.qpair");
}

// invertible pair rendered with signed exponents
PresPtr kpair() {
  PresentationBuilder b("demo.kpair");
  GenId ki = b.addGen("Ki");
  GenId k = b.addGen("K");
  b.setRender(k, "K", false);
  b.setRender(ki, "K", true);
  b.setStar(k, k);
  b.setStar(ki, ki);
  b.addRule({k, ki}, {{Scalar(1), {}}}, "KKi");
  b.addRule({ki, k}, {{Scalar(1), {}}}, "KiK");
  return b.build("demo.kpair");
}

// missing ca-rule: the overlap cba resolves two ways
PresPtr brokenTriple() {
  PresentationBuilder b("demo.broken");
  GenId a = b.addGen("a");
  GenId bb = b.addGen("b");
  GenId c = b.addGen("c");
  b.addRule({bb, a}, {{Scalar(1), {a, bb}}}, "ba");
  b.addRule({c, bb}, {{Scalar(1), {bb, c}}}, "cb");
  return b.build("demo.broken");
}

}  // namespace

TEST_SUITE("freealg") {

TEST_CASE("normal form orders q-commuting words") {
  auto p = qpair();
  GenId u = *p->genByName("u"), v = *p->genByName("v");
  Poly vu = Poly::fromWord(p, {v, u});
  CHECK(vu.termCount() == 1);
  CHECK(vu.coefficientOf({u, v}) == Scalar::qPow(1));
  // v^2 u -> q^2 v u v -> q^4 u v^2
  Poly vvu = Poly::fromWord(p, {v, v, u});
  CHECK(vvu.coefficientOf({u, v, v}) == Scalar::qPow(2));
  CHECK(vvu.str() == "q^2*u*v^2");
}

TEST_CASE("inverse pair collapses and renders signed powers") {
  auto p = kpair();
  GenId k = *p->genByName("K"), ki = *p->genByName("Ki");
  Poly sum = Poly::genPoly(p, k) + Poly::genPoly(p, ki);
  Poly sq = sum * sum;
  // (K + K^-1)^2 = K^2 + 2 + K^-2
  CHECK(sq.termCount() == 3);
  CHECK(sq.coefficientOf({k, k}) == Scalar(1));
  CHECK(sq.coefficientOf({}) == Scalar(2));
  CHECK(sq.coefficientOf({ki, ki}) == Scalar(1));
  CHECK(sq.str() == "K^2 + K^-2 + 2");
  Poly kik = Poly::fromWord(p, {ki, k, k, ki, ki});
  CHECK(kik.str() == "K^-1");
}

TEST_CASE("multiplication is associative and unital") {
  auto p = qpair();
  Sampler rng(deriveSeed(0xC0FFEE, "assoc"));
  for (int trial = 0; trial < 30; ++trial) {
    Poly a = rng.randomPoly(p, 3, 2);
    Poly b = rng.randomPoly(p, 3, 2);
    Poly c = rng.randomPoly(p, 3, 2);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * Poly::one(p) == a);
    CHECK(Poly::one(p) * a == a);
    CHECK((a + b) * c == a * c + b * c);
  }
}

TEST_CASE("normal form is idempotent") {
  auto p = qpair();
  Sampler rng(deriveSeed(0xC0FFEE, "idem"));
  for (int trial = 0; trial < 30; ++trial) {
    Poly a = rng.randomPoly(p, 4, 2);
    Poly again = Poly::fromTerms(p, std::map<Word, Scalar>(a.terms()));
    CHECK(a == again);
  }
}

TEST_CASE("star is an antilinear antihomomorphism and involution") {
  auto p = qpair();
  Sampler rng(deriveSeed(0xC0FFEE, "star"));
  for (int trial = 0; trial < 30; ++trial) {
    Poly a = rng.randomPoly(p, 3, 2);
    Poly b = rng.randomPoly(p, 3, 2);
    CHECK((a * b).star() == b.star() * a.star());
    CHECK(a.star().star() == a);
    CHECK((a + b).star() == a.star() + b.star());
  }
}

TEST_CASE("star with coefficients keeps the involution law") {
  // w* = -q^-1 x forces x* = -q w for (x*)* = x
  PresentationBuilder b("demo.starcoeff");
  GenId w = b.addGen("w");
  GenId x = b.addGen("x");
  b.setStar(w, x, -Scalar::qPow(-1));
  b.setStar(x, w, -Scalar::qPow(1));
  b.addRule({x, w}, {{Scalar::qPow(2), {w, x}}}, "xw");
  auto p = b.build("demo.starcoeff");
  Poly pw = Poly::genPoly(p, 0);
  CHECK(pw.star().coefficientOf({1}) == -Scalar::qPow(-1));
  CHECK(pw.star().star() == pw);
  Poly mix = Poly::fromWord(p, {0, 1}) + Poly::fromWord(p, {1, 1});
  CHECK(mix.star().star() == mix);
}

TEST_CASE("builder rejects malformed data") {
  SUBCASE("weight below one") {
    PresentationBuilder b("demo.bad");
    CHECK_THROWS_AS(b.addGen("g", 0), DomainError);
  }
  SUBCASE("rule must decrease the order") {
    PresentationBuilder b("demo.bad");
    GenId u = b.addGen("u");
    GenId v = b.addGen("v");
    b.addRule({u, v}, {{Scalar(1), {v, u}}}, "uv");
    CHECK_THROWS_AS(b.build("demo.bad"), DomainError);
  }
  SUBCASE("duplicate leading words") {
    PresentationBuilder b("demo.bad");
    GenId u = b.addGen("u");
    GenId v = b.addGen("v");
    b.addRule({v, u}, {{Scalar(1), {u, v}}}, "r1");
    b.addRule({v, u}, {{Scalar::qPow(1), {u, v}}}, "r2");
    CHECK_THROWS_AS(b.build("demo.bad"), DomainError);
  }
  SUBCASE("star must be an involution") {
    PresentationBuilder b("demo.bad");
    GenId u = b.addGen("u");
    GenId v = b.addGen("v");
    b.setStar(u, v, Scalar::qPow(1));
    b.setStar(v, u, Scalar::qPow(1));  // composite is q^2, not 1
    CHECK_THROWS_AS(b.build("demo.bad"), DomainError);
  }
}

TEST_CASE("rewriting budget is enforced") {
  auto p = qpair();
  GenId u = *p->genByName("u"), v = *p->genByName("v");
  Word w;
  for (int i = 0; i < 6; ++i) w.push_back(v);
  for (int i = 0; i < 6; ++i) w.push_back(u);
  CHECK_THROWS_AS(Poly::fromWord(p, w, Scalar(1), 5), BudgetError);
  CHECK_NOTHROW(Poly::fromWord(p, w, Scalar(1), 100));
}

TEST_CASE("confluence check accepts the complete systems") {
  Report rep = checkRuleConfluence(qpair());
  rep.merge(checkRuleConfluence(kpair()));
  CHECK(rep.allPassed());
}

TEST_CASE("confluence check reports the missing-overlap witness") {
  Report rep = checkRuleConfluence(brokenTriple());
  CHECK_FALSE(rep.allPassed());
  bool sawWitness = false;
  for (const auto& e : rep.entries())
    if (e.status == Status::Fail && e.witness.find("c*b*a") != std::string::npos)
      sawWitness = true;
  CHECK(sawWitness);
}

TEST_CASE("gaussian binomials satisfy the q-Pascal recursion") {
  // [r k] = [r-1 k-1] + q^(2k) [r-1 k]  (base q^2)
  for (int r = 1; r <= 6; ++r)
    for (int k = 1; k < r; ++k)
      CHECK(qbinomial(r, k) ==
            qbinomial(r - 1, k - 1) + Scalar::qPow(2 * k) * qbinomial(r - 1, k));
  CHECK(qbinomial(2, 1) == Scalar(1) + Scalar::qPow(2));
  CHECK(qbinomial(4, 2) == Scalar(1) + Scalar::qPow(2) +
                               Scalar(2) * Scalar::qPow(4) + Scalar::qPow(6) +
                               Scalar::qPow(8));
}

TEST_CASE("binomial expansion of a q-commuting sum") {
  Report rep = qbinomialIdentityCheck(5);
  CHECK(rep.allPassed());
  CHECK(rep.entries().size() == 5);
}

TEST_CASE("transport maps by generator name") {
  auto p = qpair();
  PresentationBuilder b("demo.qpair.free");
  b.addGen("u");
  b.addGen("v");
  auto freeP = b.build("demo.qpair.free");
  GenId u = 0, v = 1;
  Poly raw = Poly::fromWord(freeP, {v, u});  // no rules: stays vu
  CHECK(raw.coefficientOf({v, u}) == Scalar(1));
  Poly moved = transport(raw, p);
  CHECK(moved.coefficientOf({u, v}) == Scalar::qPow(1));
}

TEST_CASE("generator images extend to homs and antihoms") {
  auto p = qpair();
  GenId u = *p->genByName("u"), v = *p->genByName("v");
  Poly pu = Poly::genPoly(p, u), pv = Poly::genPoly(p, v);
  Sampler rng(deriveSeed(0xC0FFEE, "hom"));
  for (int trial = 0; trial < 20; ++trial) {
    Poly a = rng.randomPoly(p, 3, 2);
    CHECK(applyHom(a, {pu, pv}, Poly::one(p)) == a);
  }
  // u -> v, v -> u reverses the relation only anti-multiplicatively:
  // the antihom sends vu = q^2 uv to uv |-> image q^2 vu, consistent.
  auto bad = checkRelationsPreserved(p, {pv, pu}, Poly::one(p), false);
  CHECK(bad.has_value());
  auto good = checkRelationsPreserved(p, {pv, pu}, Poly::one(p), true);
  CHECK_FALSE(good.has_value());
}

TEST_CASE("ext coefficients ride the same rule tables") {
  auto p = qpair();
  GenId u = *p->genByName("u"), v = *p->genByName("v");
  XPoly xv = XPoly::fromWord(p, {v, u}, ExtScalar::rt());
  CHECK(xv.coefficientOf({u, v}) == ExtScalar::rt() * ExtScalar(Scalar::qPow(1)));
  Poly plain = Poly::fromWord(p, {v, u});
  XPoly lifted = liftToExt(plain);
  CHECK(lifted.coefficientOf({u, v}) == ExtScalar(Scalar::qPow(1)));
  CHECK((xv * xv).termCount() == 1);
}

TEST_CASE("rendering styles") {
  auto p = qpair();
  GenId u = *p->genByName("u"), v = *p->genByName("v");
  CHECK(Poly(p).str() == "0");
  CHECK(Poly::one(p).str() == "1");
  CHECK((-Poly::one(p)).str() == "-1");
  Poly m = Poly::fromWord(p, {u, u, v}) - Poly::genPoly(p, u) * Scalar(3) +
           Poly::constant(p, Scalar::lambda());
  CHECK(m.str() == "u^2*v - 3*u + q/(q^2 - 1)");
}

}

TEST_SUITE("tensor") {

TEST_CASE("componentwise products and flips") {
  auto p = qpair();
  GenId u = *p->genByName("u"), v = *p->genByName("v");
  Poly pu = Poly::genPoly(p, u), pv = Poly::genPoly(p, v);
  Tensor2 t = tensorOf(pu, pv) + tensorOf(pv, pu);
  Tensor2 tt = t * t;
  // (u x v + v x u)^2 = u^2 x v^2 + 2q uv x uv + v^2 x u^2
  CHECK(tt.termCount() == 3);
  std::array<Word, 2> mid{Word{u, v}, Word{u, v}};
  CHECK(tt.coefficientOf(mid) == Scalar(2) * Scalar::qPow(1));
  CHECK(t.swapped() == t);
  Tensor2 asym = tensorOf(pu, pv);
  CHECK_FALSE(asym.swapped() == asym);
  CHECK(asym.swapped() == tensorOf(pv, pu));
}

TEST_CASE("leg maps and contractions") {
  auto p = qpair();
  GenId u = *p->genByName("u"), v = *p->genByName("v");
  Poly pu = Poly::genPoly(p, u), pv = Poly::genPoly(p, v);
  Tensor2 t = tensorOf(pu * pu, pv);
  // map leg 0 by u -> v, v -> u (an antihom of the pair)
  Tensor2 m = mapLeg(t, 0, {pv, pu}, p, true);
  CHECK(m == tensorOf(pv * pv, pv));
  // contract leg 1 with the counit-like functional v -> 1
  Poly c = contractLeg2(t, 1, [&](const Word& w) {
    return Scalar(w.size() == 1 && w[0] == v ? 1 : 0);
  });
  CHECK(c == pu * pu);
}

TEST_CASE("expanding a leg by generator images") {
  auto p = qpair();
  GenId u = *p->genByName("u"), v = *p->genByName("v");
  Poly pu = Poly::genPoly(p, u), pv = Poly::genPoly(p, v);
  // grouplike-style images g -> g x g
  std::vector<Tensor2> im{tensorOf(pu, pu), tensorOf(pv, pv)};
  Tensor2 unit = tensorOf(Poly::one(p), Poly::one(p));
  Tensor2 start = tensorOf(pu * pv, Poly::one(p));
  Tensor3 out = expandLeg(start, 0, im, unit);
  std::array<Word, 3> key{Word{u, v}, Word{u, v}, Word{}};
  CHECK(out.termCount() == 1);
  CHECK(out.coefficientOf(key) == Scalar(1));
  // associativity of the expansion: expanding either leg of g x g agrees
  Tensor2 dg = tensorOf(pu, pu);
  CHECK(expandLeg(dg, 0, im, unit) == expandLeg(dg, 1, im, unit));
}

TEST_CASE("tensor star reverses nothing across legs but stars each") {
  auto p = qpair();
  GenId u = *p->genByName("u"), v = *p->genByName("v");
  Tensor2 t = tensorOf(Poly::genPoly(p, u), Poly::genPoly(p, v));
  Tensor2 s = t.star();
  CHECK(s == tensorOf(Poly::genPoly(p, v), Poly::genPoly(p, u)));
  CHECK(s.star() == t);
}

}
