#pragma once

#include "bifib/multipoly.hpp"

#include <string>
#include <string_view>

namespace bifib {

/**
 * Text form of polynomials:
 *
 *   poly   := term (('+'|'-') term)*
 *   term   := coeff ('*' factor)* | factor ('*' factor)*
 *   factor := var ('^' int)?
 *   var    := 'x'|'y'|'s'|'g'|'a'|'z1'|'z2'
 *   coeff  := int | '(' int ('+'|'-') int 'i' ')'
 *   int    := '-'? [0-9]+
 *
 * Whitespace is insignificant. Rendering emits terms in canonical order
 * with " + " / " - " separators; a coefficient of exactly 1 is suppressed
 * except on constant terms, and Gaussian coefficients are always
 * parenthesized. parse(render(p)) == p for every canonical polynomial.
 */
MultiPoly parse_poly(std::string_view text);
std::string render_poly(const MultiPoly& p);

/// Rational literals "p" or "p/q" used by the CLI.
Rat parse_rational(std::string_view text);
std::string render_rational(const Rat& r);

/// Gaussian rationals render like Gaussian coefficients, with rational parts.
std::string render_value(const GaussianRational& v);

}  // namespace bifib
