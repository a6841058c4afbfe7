#ifndef LIEMULT_PARSE_HPP
#define LIEMULT_PARSE_HPP

#include <string>

#include "liemult/freealg.hpp"
#include "liemult/quotient.hpp"

namespace liemult {

/// Expression grammar shared by every textual surface:
///   expr    := term (('+'|'-') term)*
///   term    := factor ('*' factor)*
///   factor  := '-' factor | primary ('^' uint)?
///   primary := number | name | '(' expr ')' | '[' expr (',' expr)+ ']'
///   number  := uint ('/' uint)?
/// Brackets are left-normed: [a,b,c] = [[a,b],c].

/// Parses an element of the free associative algebra over the alphabet.
NCPoly parse_ncpoly(const std::string& text, const AlphabetPtr& alphabet,
                    const FieldSpec& fs);

/// Same grammar, but products of two non-constant subexpressions are
/// rejected, so the result is a Lie element by construction.
NCPoly parse_lie_element(const std::string& text, const AlphabetPtr& alphabet,
                         const FieldSpec& fs);

/// Parses an element of U(L/I) over the quotient basis names.
UQElement parse_uq_element(const std::string& text, const PresentationPtr& pres);

/// Parses a linear combination of basis names ("e1 + 2*e2", "0") as used by
/// projection and bracket-table lines.
LinComb parse_lincomb(const std::string& text, const PresentationPtr& pres);

} // namespace liemult

#endif
