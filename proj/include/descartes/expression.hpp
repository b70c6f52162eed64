#pragma once

#include <string_view>

#include "descartes/rational.hpp"

namespace descartes {

/// Evaluates an exact rational expression.
///
///     expr   := term (('+' | '-') term)*
///     term   := unary (('*' | '/') unary)*
///     unary  := '-' unary | power
///     power  := atom ('^' integer)?
///     atom   := integer | '(' expr ')' | name '(' expr ')'
///
/// Functions: sigma(n) divisor sum, abund(n) = sigma(n)/n, f(p) = p^2/sigma(p^2),
/// omega(n) number of distinct prime factors. Function arguments must
/// evaluate to positive integers. Throws std::invalid_argument on malformed
/// input.
Rational evaluate(std::string_view expression);

}  // namespace descartes
