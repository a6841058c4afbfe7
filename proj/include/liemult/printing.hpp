#ifndef LIEMULT_PRINTING_HPP
#define LIEMULT_PRINTING_HPP

#include <string>
#include <utility>
#include <vector>

#include "liemult/scalar.hpp"

namespace liemult {
namespace detail {

/// Groups consecutive repeated letters: {"x","x","y"} -> "x^2*y".
inline std::string power_group(const std::vector<std::string>& letters) {
    std::string out;
    std::size_t i = 0;
    while (i < letters.size()) {
        std::size_t j = i;
        while (j < letters.size() && letters[j] == letters[i])
            ++j;
        if (!out.empty())
            out += "*";
        out += letters[i];
        if (j - i > 1)
            out += "^" + std::to_string(j - i);
        i = j;
    }
    return out;
}

/// Joins (monomial, coefficient) pairs into "2*x - y + 1" form. A pair with
/// an empty monomial string is a constant term.
inline std::string
join_terms(const std::vector<std::pair<std::string, Scalar>>& terms) {
    if (terms.empty())
        return "0";
    std::string out;
    bool first = true;
    for (const auto& [mono, c] : terms) {
        bool neg = false;
        std::string mag = c.to_string();
        if (c.field().kind == FieldKind::Rationals && sgn(c.rational()) < 0) {
            neg = true;
            mag = mpq_class(-c.rational()).get_str();
        }
        std::string piece;
        if (mono.empty())
            piece = mag;
        else if (mag == "1")
            piece = mono;
        else
            piece = mag + "*" + mono;
        if (first) {
            out = neg ? "-" + piece : piece;
            first = false;
        } else {
            out += neg ? " - " : " + ";
            out += piece;
        }
    }
    return out;
}

} // namespace detail
} // namespace liemult

#endif
