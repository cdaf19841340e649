// Expression grammar over any registered presentation: generators by name,
// the scalar letters q and s, integer literals, + - * / ^ and parentheses.
// Results are normal-formed.  parse(p.str()) == p for every polynomial p.
#pragma once

#include <string_view>
#include <vector>

#include "colink/algebra.hpp"

namespace colink {

// Context descriptors: Uq(mu,nu), A(mu,nu;tau), B(mu,nu;tau), D(mu,nu;tau),
// Pol(v) with labels in {+,-,0}, tau a rational literal, v in {+,-,0,sl2c}.
// Whitespace-insensitive; errors carry the offending position.
PresPtr parseContext(std::string_view text);

// one descriptive line per registered family, for the list command
std::vector<std::string> contextFamilies();

// q and s always denote scalars; ^ takes a signed integer exponent.
// Negative powers work on scalars and on generators with a declared
// inverse partner (K, a0 and their partners); / needs a scalar divisor.
Poly parseExpression(const PresPtr& ctx, std::string_view text);

}  // namespace colink
