// Deterministic sampling for property checks.  Draws use mt19937_64 with
// modulo reduction (std distributions vary across standard libraries); check
// seeds derive from the base seed and the check id so results are independent
// of scheduling.
#pragma once

#include <random>
#include <string_view>

#include "colink/algebra.hpp"

namespace colink {

inline uint64_t deriveSeed(uint64_t base, std::string_view tag) {
  uint64_t h = 1469598103934665603ull ^ base;
  for (unsigned char c : tag) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

class Sampler {
 public:
  explicit Sampler(uint64_t seed) : eng_(seed) {}

  uint64_t next(uint64_t bound) { return bound ? eng_() % bound : 0; }
  long nextSigned(long mag) {
    return static_cast<long>(next(2 * static_cast<uint64_t>(mag) + 1)) - mag;
  }

  // random element: up to maxTerms words of length <= maxLen with small
  // integer times q-power coefficients; may be zero after reduction
  Poly randomPoly(const PresPtr& p, int maxLen, int maxTerms = 3,
                  long coeffBound = 3) {
    Poly out(p);
    size_t nt = 1 + next(static_cast<uint64_t>(maxTerms));
    for (size_t t = 0; t < nt; ++t) {
      size_t len = next(static_cast<uint64_t>(maxLen) + 1);
      Word w;
      w.reserve(len);
      for (size_t i = 0; i < len; ++i)
        w.push_back(static_cast<GenId>(next(p->genCount())));
      long mag = 1 + static_cast<long>(next(static_cast<uint64_t>(coeffBound)));
      Scalar c = Scalar(next(2) ? mag : -mag) *
                 Scalar::qPow(static_cast<int>(next(3)) - 1);
      out += Poly::fromWord(p, std::move(w), c);
    }
    return out;
  }

  // as randomPoly but guaranteed nonzero
  Poly randomNonzero(const PresPtr& p, int maxLen, int maxTerms = 3,
                     long coeffBound = 3) {
    for (int tries = 0; tries < 32; ++tries) {
      Poly r = randomPoly(p, maxLen, maxTerms, coeffBound);
      if (!r.isZero()) return r;
    }
    return Poly::one(p);
  }

 private:
  std::mt19937_64 eng_;
};

}  // namespace colink
