#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "locweil/poly.hpp"

namespace locweil {

/// x0..x{count-1}
std::vector<std::string> projective_names(std::size_t count);
/// u0..u{count-1}
std::vector<std::string> affine_names(std::size_t count);

/// Parses the polynomial grammar:
///
///   expr    := term (('+' | '-') term)*
///   term    := unary ('*' unary)*
///   unary   := ('-' | '+') unary | power
///   power   := primary ('^' integer)?
///   primary := integer ('/' integer)? | 'sqrt' '(' ['-'] integer ')' | name | '(' expr ')'
///
/// Implicit multiplication is rejected. Whitespace is insignificant.
/// Throws ParseError with the byte offset of the offending token.
Polynomial parse_polynomial(std::string_view text, const std::vector<std::string>& variables);

/// Homogeneous parse in x0..x{num_vars-1}; inhomogeneous input is a ParseError.
Form parse_form(std::string_view text, std::size_t num_vars);

/// A single coefficient: integer, fraction, sqrt literal or an expression of them.
FieldElement parse_coefficient(std::string_view text);

/// Variable names used across `texts`. Names of the form x<k> or u<k> expand to the
/// full range 0..max k; any other identifiers are returned sorted.
std::vector<std::string> infer_variables(std::span<const std::string> texts);

/// Splits "(a, b, c)" or "a, b, c" at top-level commas.
std::vector<std::string> split_list(std::string_view text);

}  // namespace locweil
