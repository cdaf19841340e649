#include <CLI11.hpp>
#include <fmt/format.h>
#include <json.hpp>

#include <cstdio>
#include <string>

#include <colink/coaction.hpp>
#include <colink/homspace.hpp>
#include <colink/pairing.hpp>
#include <colink/parse.hpp>
#include <colink/pol.hpp>
#include <colink/suites.hpp>
#include <colink/uq.hpp>

namespace {

constexpr const char* kTool = "colink 1.0.0";
constexpr const char* kSchema = "colink-report/1";

using colink::ParseError;
using colink::Poly;
using colink::PresPtr;

// mu-list;nu-list;tau-list with comma-separated entries, e.g. "+,0;-;-2,0,2"
void applyGrid(const std::string& grid, colink::SuiteOptions& opt) {
  std::vector<std::string> parts;
  size_t from = 0;
  for (size_t at; (at = grid.find(';', from)) != std::string::npos; from = at + 1)
    parts.push_back(grid.substr(from, at - from));
  parts.push_back(grid.substr(from));
  if (parts.size() != 3)
    throw ParseError("invalid grid: expected mu-list;nu-list;tau-list", 0);
  auto split = [](const std::string& s) {
    std::vector<std::string> out;
    size_t b = 0;
    for (size_t at; (at = s.find(',', b)) != std::string::npos; b = at + 1)
      out.push_back(s.substr(b, at - b));
    out.push_back(s.substr(b));
    return out;
  };
  opt.mus.clear();
  opt.nus.clear();
  opt.taus.clear();
  for (const std::string& t : split(parts[0])) opt.mus.push_back(colink::parseLabel(t));
  for (const std::string& t : split(parts[1])) opt.nus.push_back(colink::parseLabel(t));
  for (const std::string& t : split(parts[2]))
    opt.taus.push_back(colink::rationalFromString(t));
}

nlohmann::ordered_json reportJson(const std::string& suite,
                                  const colink::SuiteOptions& opt,
                                  const colink::Report& rep) {
  nlohmann::ordered_json doc;
  doc["schema"] = kSchema;
  doc["tool"] = kTool;
  doc["suite"] = suite;
  doc["seed"] = opt.seed;
  nlohmann::ordered_json grid;
  for (int mu : opt.mus) grid["mu"].push_back(colink::labelStr(mu));
  for (int nu : opt.nus) grid["nu"].push_back(colink::labelStr(nu));
  for (const auto& tau : opt.taus)
    grid["tau"].push_back(colink::rationalToString(tau));
  doc["options"] = {{"degree", opt.degree},
                    {"samples", opt.samples},
                    {"ergodic_degree", opt.ergodicDegree},
                    {"vrep_window", opt.vrepWindow},
                    {"workers", opt.workers},
                    {"grid", grid}};
  auto& checks = doc["checks"] = nlohmann::ordered_json::array();
  for (const colink::CheckEntry& e : rep.entries()) {
    nlohmann::ordered_json c;
    c["id"] = e.id;
    c["params"] = e.params;
    c["status"] = e.status == colink::Status::Pass   ? "pass"
                  : e.status == colink::Status::Fail ? "fail"
                                                     : "skipped";
    c["detail"] = e.detail;
    c["witness"] = e.witness;
    c["ms"] = e.ms;
    checks.push_back(std::move(c));
  }
  doc["summary"] = {{"pass", rep.passCount()},
                    {"fail", rep.failCount()},
                    {"skipped", rep.skipCount()},
                    {"total", rep.entries().size()}};
  return doc;
}

// context families with a coproduct endomorphism the delta command accepts
bool isUqContext(const PresPtr& p) { return p->family() == "uq"; }
bool isPolContext(const PresPtr& p) { return p->family() == "pol"; }

void printPoly(const Poly& p) { std::puts(p.str().c_str()); }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact symbolic checks for a two-parameter quantized family"};
  app.require_subcommand(1);
  app.set_version_flag("--version", kTool);

  std::string ctxText, exprText, exprText2, upsText, sideText = "left";
  std::string muText, paramsText;

  auto* eval = app.add_subcommand("eval", "parse and normal-form an expression");
  eval->add_option("--ctx", ctxText, "context, e.g. Uq(+,-) or B(0,+;1)")->required();
  eval->add_option("expr", exprText, "expression")->required();

  auto* nf = app.add_subcommand("nf", "normal form with the monomial listing");
  nf->add_option("--ctx", ctxText)->required();
  nf->add_option("expr", exprText)->required();

  auto* delta = app.add_subcommand("delta", "coproduct of an expression");
  delta->add_option("--ctx", ctxText, "Uq or Pol context")->required();
  auto* upsOpt = delta->add_option("--ups", upsText, "middle label (Uq only)");
  delta->add_option("expr", exprText)->required();

  auto* antipode = app.add_subcommand("antipode", "antipode of an expression");
  antipode->add_option("--ctx", ctxText, "Uq or Pol context")->required();
  antipode->add_option("expr", exprText)->required();

  auto* act = app.add_subcommand("act", "adjoint-type action on a module algebra");
  act->add_option("--ctx", ctxText, "Uq, A, or B context")->required();
  act->add_option("--side", sideText, "left or right")
      ->check(CLI::IsMember({"left", "right"}));
  act->add_option("actor", exprText, "acting element (a Uq expression)")->required();
  act->add_option("target", exprText2, "module element")->required();

  auto* pair = app.add_subcommand("pair", "pairing of a Uq and a Pol expression");
  pair->add_option("--mu", muText, "label +, -, or 0")->required();
  pair->add_option("uq-expr", exprText)->required();
  pair->add_option("pol-expr", exprText2)->required();

  auto* gamma = app.add_subcommand("gamma", "coaction of B in B (x) Pol");
  gamma->add_option("--params", paramsText, "mu,nu,tau")->required();
  gamma->add_option("expr", exprText, "B expression")->required();

  colink::SuiteOptions opt;
  std::string suiteName, gridText, formatText = "text";
  auto* verify = app.add_subcommand("verify", "run a verification suite");
  verify->add_option("--suite", suiteName, "one of the registered suites")->required();
  auto* degOpt = verify->add_option("--degree", opt.degree, "random-sample degree");
  verify->add_option("--samples", opt.samples, "random elements per check");
  verify->add_option("--seed", opt.seed, "base seed");
  verify->add_option("--grid", gridText, "mu-list;nu-list;tau-list");
  verify->add_option("--format", formatText)->check(CLI::IsMember({"text", "json"}));
  verify->add_option("--workers", opt.workers, "worker thread count")
      ->envname("COLINK_WORKERS");

  auto* list = app.add_subcommand("list", "registered contexts and suites");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (eval->parsed()) {
      printPoly(colink::parseExpression(colink::parseContext(ctxText), exprText));
      return 0;
    }

    if (nf->parsed()) {
      PresPtr ctx = colink::parseContext(ctxText);
      Poly p = colink::parseExpression(ctx, exprText);
      printPoly(p);
      fmt::print("terms: {}\n", p.termCount());
      for (const auto& [w, c] : p.terms())
        fmt::print("  {:<24} {}\n", ctx->renderWord(w), c.str());
      return 0;
    }

    if (delta->parsed()) {
      PresPtr ctx = colink::parseContext(ctxText);
      Poly p = colink::parseExpression(ctx, exprText);
      if (isUqContext(ctx)) {
        int ups = upsOpt->count() ? colink::parseLabel(upsText)
                                  : colink::uqLabels(ctx).second;
        std::puts(colink::deltaUq(p, ups).str().c_str());
        return 0;
      }
      if (isPolContext(ctx)) {
        if (upsOpt->count())
          throw ParseError("--ups only applies to Uq contexts", 0);
        std::puts(colink::deltaPol(p).str().c_str());
        return 0;
      }
      throw ParseError("delta needs a Uq or Pol context", 0);
    }

    if (antipode->parsed()) {
      PresPtr ctx = colink::parseContext(ctxText);
      Poly p = colink::parseExpression(ctx, exprText);
      if (isUqContext(ctx)) {
        printPoly(colink::antipodeUq(p));
        return 0;
      }
      if (isPolContext(ctx)) {
        printPoly(colink::antipodePol(p));
        return 0;
      }
      throw ParseError("antipode needs a Uq or Pol context", 0);
    }

    if (act->parsed()) {
      PresPtr ctx = colink::parseContext(ctxText);
      bool left = sideText == "left";
      const std::string& fam = ctx->family();
      int mu, nu;
      if (fam == "uq") {
        std::tie(mu, nu) = colink::uqLabels(ctx);
      } else if (fam == "casimir") {
        auto [m, n, tau] = colink::quotientParams(ctx);
        mu = m, nu = n;
      } else if (fam == "bspace") {
        auto [m, n, tau] = colink::bParams(ctx);
        mu = m, nu = n;
        if (!left) throw ParseError("B carries a left action only", 0);
      } else {
        throw ParseError("act needs a Uq, A, or B context", 0);
      }
      PresPtr actor = colink::makeUq(left ? mu : nu, left ? mu : nu);
      Poly x = colink::parseExpression(actor, exprText);
      Poly y = colink::parseExpression(ctx, exprText2);
      if (fam == "uq")
        printPoly(left ? colink::muActionLeft(x, y) : colink::muActionRight(y, x));
      else if (fam == "casimir")
        printPoly(left ? colink::quotientActionLeft(x, y)
                       : colink::quotientActionRight(y, x));
      else
        printPoly(colink::actionOnB(x, y));
      return 0;
    }

    if (pair->parsed()) {
      int mu = colink::parseLabel(muText);
      Poly x = colink::parseExpression(colink::makeUq(mu, mu), exprText);
      Poly y = colink::parseExpression(
          colink::makePol(colink::polVariantForLabel(mu)), exprText2);
      std::puts(colink::pairUqPol(x, y).str().c_str());
      return 0;
    }

    if (gamma->parsed()) {
      colink::SuiteOptions g;
      std::string triple = paramsText;
      for (char& c : triple)
        if (c == ',') c = ';';
      applyGrid(triple, g);
      if (g.mus.size() != 1 || g.nus.size() != 1 || g.taus.size() != 1)
        throw ParseError("--params needs exactly mu,nu,tau", 0);
      PresPtr bp = colink::makeB(g.mus[0], g.nus[0], g.taus[0]);
      Poly p = colink::parseExpression(bp, exprText);
      std::puts(colink::gammaOf(p).str().c_str());
      return 0;
    }

    if (list->parsed()) {
      std::puts("contexts:");
      for (const std::string& f : colink::contextFamilies())
        fmt::print("  {}\n", f);
      std::puts("suites:");
      for (const std::string& s : colink::suiteNames()) fmt::print("  {}\n", s);
      return 0;
    }

    // verify
    if (!colink::knownSuite(suiteName))
      throw ParseError(fmt::format("unknown suite '{}'", suiteName), 0);
    opt.ergodicDegree = suiteName == "ergodic" ? 6 : 4;
    if (degOpt->count()) opt.ergodicDegree = opt.degree;
    if (!gridText.empty()) applyGrid(gridText, opt);
    if (opt.workers < 1 || opt.degree < 0 || opt.samples < 0)
      throw ParseError("options must be nonnegative, workers positive", 0);

    colink::Report rep = colink::runSuite(suiteName, opt);
    if (formatText == "json") {
      fmt::print("{}\n", reportJson(suiteName, opt, rep).dump(2));
    } else {
      fmt::print("suite {} (seed {})\n{}", suiteName, opt.seed, rep.text());
    }
    return rep.allPassed() ? 0 : 1;
  } catch (const ParseError& e) {
    fmt::print(stderr, "error: {} (position {})\n", e.what(), e.pos);
    return 2;
  } catch (const colink::Error& e) {
    fmt::print(stderr, "error: {}\n", e.what());
    return 1;
  }
}
