#pragma once

#include "certify/ring.hpp"

#include <string>

namespace certify {

/// Thrown on malformed input; `pos` is a 0-based offset into the text.
class ParseError : public Error {
public:
    ParseError(const std::string& msg, std::size_t pos)
        : Error(msg + " (at offset " + std::to_string(pos) + ")"), pos(pos) {}
    std::size_t pos;
};

/// Grammar:
///   expr   := ['-'] term (('+'|'-') term)*
///   term   := factor ('*' factor)*
///   factor := base ('^' int)?
///   base   := rationalLit | 'i' | ident | '(' expr ')'
/// Whitespace is insignificant; negative exponents are admitted only on
/// invertible variables (and on constants / parenthesized units).
LaurentPoly parse_poly(const std::string& text, const Spec& ring);

/// Scalar literals in the same syntax, e.g. "-1/2*i".
GR parse_scalar(const std::string& text);

}  // namespace certify
