// Diamond-lemma verification: enumerate overlap and inclusion ambiguities of
// the rule set, resolve both ways, and compare normal forms.
#pragma once

#include "colink/algebra.hpp"
#include "colink/report.hpp"

namespace colink {

// maxLen bounds the superposition words considered (>= longest rule lhs)
Report checkRuleConfluence(const PresPtr& pres, size_t maxLen = 8,
                           uint64_t budget = Presentation::kDefaultBudget);

// verifies (v+w)^r = sum_k qbin(r,k; q^2) w^k v^(r-k) for 1 <= r <= rmax in the
// two-generator presentation with v*w -> q^2 w*v (orientation fixed by the
// r = 2 expansion w^2 + (1+q^2) w v + v^2)
Report qbinomialIdentityCheck(int rmax);

// Gaussian binomial coefficient [r choose k] in the variable q^2
Scalar qbinomial(int r, int k);

}  // namespace colink
