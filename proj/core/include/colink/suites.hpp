// Verification-suite registry: each suite expands to independent check items
// over a parameter grid, executed by a small worker pool; entries are sorted
// by (id, params) before emission, so reports are scheduling-independent.
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "colink/report.hpp"
#include "colink/scalar.hpp"

namespace colink {

struct SuiteOptions {
  std::vector<int> mus{-1, 0, 1};
  std::vector<int> nus{-1, 0, 1};
  std::vector<Rational> taus{Rational(-2), Rational(-1), Rational(0),
                             Rational(1), Rational(2)};
  int degree = 3;   // random-sample degree
  int samples = 5;  // random elements per randomized check
  uint64_t seed = 2026;
  int ergodicDegree = 6;  // the all-suite default is lowered by the CLI
  int vrepWindow = 4;
  int workers = 1;
};

const std::vector<std::string>& suiteNames();  // includes "all"
bool knownSuite(const std::string& name);

// throws DomainError on an unknown suite name or an empty grid
Report runSuite(const std::string& name, const SuiteOptions& opt);

}  // namespace colink
