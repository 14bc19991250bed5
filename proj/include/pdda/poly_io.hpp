#pragma once

#include <string>
#include <vector>

#include "pdda/rational.hpp"

namespace pdda {

// Text grammar used everywhere: terms separated by +/-; a term is `coeff`,
// `coeff*mono` or `mono`; `coeff` is an integer or `a/b`; `mono` is a
// `*`-joined product of `X<k>` factors with optional `^e` (e signed in
// Laurent contexts). `T<k>` is accepted as an alias for `X<k>`. Whitespace
// is ignored; variables are 1-indexed.
Polynomial parse_polynomial(const std::string& text, FieldSpec field, int nvars,
                            bool allow_laurent = true);

// Comma-separated list of polynomials.
std::vector<Polynomial> parse_polynomial_list(const std::string& text, FieldSpec field, int nvars,
                                              bool allow_laurent = false);

std::string to_string(const Scalar& s);
std::string to_string(const Polynomial& p, char letter = 'X');
std::string to_string(const RationalExpression& r, char letter = 'X');

}  // namespace pdda
