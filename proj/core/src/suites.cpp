#include "colink/suites.hpp"

#include <fmt/format.h>

#include <atomic>
#include <chrono>
#include <functional>
#include <map>
#include <thread>

#include "colink/coaction.hpp"
#include "colink/confluence.hpp"
#include "colink/homspace.hpp"
#include "colink/pairing.hpp"
#include "colink/pol.hpp"
#include "colink/rng.hpp"
#include "colink/uq.hpp"

namespace colink {

namespace {

using Item = std::function<Report()>;

constexpr PolVariant kVariants[] = {PolVariant::Plus, PolVariant::Minus,
                                    PolVariant::Zero, PolVariant::Sl2c};

std::vector<int> labelUnion(const SuiteOptions& o) {
  std::vector<int> ls;
  for (int l : {-1, 0, 1}) {
    bool inMu = std::find(o.mus.begin(), o.mus.end(), l) != o.mus.end();
    bool inNu = std::find(o.nus.begin(), o.nus.end(), l) != o.nus.end();
    if (inMu || inNu) ls.push_back(l);
  }
  return ls;
}

template <class F>
void forGrid(const SuiteOptions& o, F&& f) {
  for (int mu : o.mus)
    for (int nu : o.nus)
      for (const Rational& tau : o.taus) f(mu, nu, tau);
}

void addConfluence(std::vector<Item>& out, const SuiteOptions& o) {
  for (int mu : o.mus)
    for (int nu : o.nus)
      out.push_back([=] { return checkRuleConfluence(makeUq(mu, nu)); });
  for (PolVariant v : kVariants)
    out.push_back([=] { return checkRuleConfluence(makePol(v)); });
  forGrid(o, [&](int mu, int nu, const Rational& tau) {
    out.push_back([=] { return checkRuleConfluence(makeQuotient(mu, nu, tau)); });
    out.push_back([=] { return checkRuleConfluence(makeB(mu, nu, tau)); });
    out.push_back([=] { return checkRuleConfluence(makeD(mu, nu, tau)); });
  });
}

void addHopf(std::vector<Item>& out, const SuiteOptions& o) {
  std::vector<int> labels = labelUnion(o);
  out.push_back([=] { return checkUqHopf(labels); });
  for (PolVariant v : kVariants)
    out.push_back([=] { return checkPolHopf(v, o.samples, o.degree, o.seed); });
  out.push_back([] { return checkDeltaZeroGrid(2, 2, 2); });
  for (int mu : labels)
    for (int ups : labels)
      out.push_back([=] {
        Report rep;
        PresPtr uq = makeUq(mu, mu);
        for (GenId g = 0; g < uq->genCount(); ++g)
          rep.merge(checkAntipodeIdentities(Poly::genPoly(uq, g), ups));
        Sampler smp(deriveSeed(
            o.seed, fmt::format("suite.antipode.{}.{}", mu, ups)));
        for (int i = 0; i < o.samples; ++i)
          rep.merge(checkAntipodeIdentities(
              smp.randomPoly(uq, o.degree), ups));
        return rep;
      });
}

void addWeakHopf(std::vector<Item>& out, const SuiteOptions& o) {
  const std::vector<std::vector<int>> systems = {
      {-1, 0}, {0, 1}, {-1, 1}, {-1, 0, 1}};
  for (const auto& labels : systems)
    out.push_back([=] {
      CoLinking sys(labels);
      return checkWeakHopfAxioms(sys, o.samples, o.degree, o.seed);
    });
}

void addCasimir(std::vector<Item>& out, const SuiteOptions& o) {
  std::vector<int> labels = labelUnion(o);
  out.push_back([=] { return checkCasimir(labels); });
  forGrid(o, [&](int mu, int nu, const Rational& tau) {
    out.push_back(
        [=] { return checkQuotient(mu, nu, tau, o.samples, o.degree, o.seed); });
  });
}

void addHomspace(std::vector<Item>& out, const SuiteOptions& o) {
  forGrid(o, [&](int mu, int nu, const Rational& tau) {
    out.push_back(
        [=] { return checkBEmbedding(mu, nu, tau, o.samples, o.degree, o.seed); });
    out.push_back([=] {
      return checkActionConsistency(mu, nu, tau, o.samples, o.degree, o.seed);
    });
    out.push_back(
        [=] { return checkTheta(mu, nu, tau, o.samples, o.degree, o.seed); });
  });
}

void addVRep(std::vector<Item>& out, const SuiteOptions& o) {
  forGrid(o, [&](int mu, int nu, const Rational& tau) {
    out.push_back([=] { return checkVRep(mu, nu, tau, o.vrepWindow); });
  });
}

void addPairing(std::vector<Item>& out, const SuiteOptions& o) {
  for (int mu : o.mus)
    out.push_back([=] { return checkPairing(mu, o.samples, o.degree, o.seed); });
  // exact Gram ranks of the degree-limited pairing window; the mu = 0
  // deficits are a window artifact, frozen as computed
  static const std::map<std::pair<int, int>, size_t> expected = {
      {{1, 1}, 12},  {{-1, 1}, 12},  {{0, 1}, 10},
      {{1, 2}, 45},  {{-1, 2}, 45},  {{0, 2}, 37}};
  for (int deg : {1, 2})
    for (int mu : o.mus)
      out.push_back([=] {
        Report rep;
        size_t rank = pairingGramRank(mu, deg);
        size_t want = expected.at({mu, deg});
        std::string par = fmt::format("mu={} degree={}", labelStr(mu), deg);
        if (rank == want)
          rep.pass("pairing.gram.rank", par, fmt::format("rank {}", rank));
        else
          rep.fail("pairing.gram.rank", par,
                   fmt::format("rank {} expected {}", rank, want));
        return rep;
      });
}

void addCoaction(std::vector<Item>& out, const SuiteOptions& o) {
  forGrid(o, [&](int mu, int nu, const Rational& tau) {
    out.push_back([=] { return checkGamma(mu, nu, tau); });
    out.push_back(
        [=] { return checkComodule(mu, nu, tau, o.samples, o.degree, o.seed); });
    out.push_back([=] {
      return checkInfinitesimal(mu, nu, tau, o.samples, o.degree, o.seed);
    });
  });
  for (PolVariant v : kVariants)
    out.push_back([=] { return checkSpin1(v); });
}

void addErgodic(std::vector<Item>& out, const SuiteOptions& o) {
  forGrid(o, [&](int mu, int nu, const Rational& tau) {
    out.push_back([=] { return checkErgodic(mu, nu, tau, o.ergodicDegree); });
  });
}

void addCoideal(std::vector<Item>& out, const SuiteOptions& o) {
  forGrid(o, [&](int mu, int nu, const Rational& tau) {
    out.push_back([=] { return checkCoideal(mu, nu, tau); });
  });
}

void addClassify(std::vector<Item>& out, const SuiteOptions& o) {
  for (int mu : o.mus)
    for (int nu : o.nus)
      for (int nuP : o.nus)
        out.push_back([=, taus = o.taus] {
          Report rep;
          for (const Rational& tau : taus)
            for (const Rational& tauP : taus)
              rep.merge(classifyIso(mu, nu, tau, nuP, tauP).report);
          return rep;
        });
}

std::vector<Item> buildItems(const std::string& name, const SuiteOptions& o) {
  if (o.mus.empty() || o.nus.empty() || o.taus.empty())
    throw DomainError("empty parameter grid");
  std::vector<Item> items;
  bool all = name == "all";
  bool known = all;
  auto want = [&](const char* n) {
    if (name != n && !all) return false;
    known = true;
    return true;
  };
  if (want("confluence")) addConfluence(items, o);
  if (want("hopf")) addHopf(items, o);
  if (want("weakhopf")) addWeakHopf(items, o);
  if (want("casimir")) addCasimir(items, o);
  if (want("homspace")) addHomspace(items, o);
  if (want("vrep")) addVRep(items, o);
  if (want("pairing")) addPairing(items, o);
  if (want("coaction")) addCoaction(items, o);
  if (want("ergodic")) addErgodic(items, o);
  if (want("coideal")) addCoideal(items, o);
  if (want("classify")) addClassify(items, o);
  if (!known) throw DomainError(fmt::format("unknown suite '{}'", name));
  return items;
}

}  // namespace

const std::vector<std::string>& suiteNames() {
  static const std::vector<std::string> names = {
      "confluence", "hopf",    "weakhopf", "casimir",  "homspace", "vrep",
      "pairing",    "coaction", "ergodic",  "coideal", "classify", "all"};
  return names;
}

bool knownSuite(const std::string& name) {
  const auto& ns = suiteNames();
  return std::find(ns.begin(), ns.end(), name) != ns.end();
}

Report runSuite(const std::string& name, const SuiteOptions& opt) {
  std::vector<Item> items = buildItems(name, opt);
  std::vector<Report> parts(items.size());
  std::atomic<size_t> cursor{0};
  auto work = [&] {
    for (size_t i; (i = cursor.fetch_add(1)) < items.size();) {
      auto t0 = std::chrono::steady_clock::now();
      Report r = items[i]();
      std::chrono::duration<double, std::milli> el =
          std::chrono::steady_clock::now() - t0;
      r.stampMs(el.count());
      parts[i] = std::move(r);
    }
  };
  int workers = std::max(1, opt.workers);
  if (workers == 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(static_cast<size_t>(workers));
    for (int i = 0; i < workers; ++i) pool.emplace_back(work);
    for (auto& t : pool) t.join();
  }
  Report all;
  for (Report& r : parts) all.merge(std::move(r));
  all.sortById();
  return all;
}

}  // namespace colink
