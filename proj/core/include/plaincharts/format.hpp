#pragma once

#include <plaincharts/polynomial.hpp>

#include <string>

namespace plaincharts {

/// Parses the expression grammar
///   expr   := ('+'|'-')? term (('+'|'-') term)*
///   term   := factor ('*' factor)*
///   factor := base ('^' uint)?
///   base   := identifier | rational-literal | '(' expr ')'
/// Identifiers are letters followed by letters, digits or underscores.
/// There is no implicit multiplication: "2x" is a parse error.
Polynomial parse_polynomial(const std::string& text, const PolyRingPtr& ring);

/// Canonical string: terms in descending grevlex order, explicit '*' and
/// '^', exact rational coefficients ("3/2"). Parses back to the same
/// polynomial.
std::string to_string(const Polynomial& p);

} // namespace plaincharts
