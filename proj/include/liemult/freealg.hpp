#ifndef LIEMULT_FREEALG_HPP
#define LIEMULT_FREEALG_HPP

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "liemult/scalar.hpp"

namespace liemult {

/// Ordered generator names. The list order is the tie-break order used by
/// every canonical ordering downstream.
class Alphabet {
  public:
    explicit Alphabet(std::vector<std::string> names);

    std::uint32_t size() const { return static_cast<std::uint32_t>(names_.size()); }
    const std::string& name(std::uint32_t i) const;
    std::optional<std::uint32_t> index_of(const std::string& name) const;
    const std::vector<std::string>& names() const { return names_; }
    bool operator==(const Alphabet& o) const { return names_ == o.names_; }

  private:
    std::vector<std::string> names_;
    std::map<std::string, std::uint32_t> index_;
};

using AlphabetPtr = std::shared_ptr<const Alphabet>;

/// A word in the free monoid on the alphabet; the empty word is 1.
using Word = std::vector<std::uint32_t>;

/// Degree first, then lexicographically in the alphabet order.
struct DegLexLess {
    bool operator()(const Word& a, const Word& b) const {
        if (a.size() != b.size())
            return a.size() < b.size();
        return a < b;
    }
};

class NCPoly;

/// Components u_x of p = sum_x x * u_x, keyed by the leading generator.
struct LeftDecomposition {
    std::map<std::uint32_t, NCPoly> components;
};

/// Sparse noncommutative polynomial over the alphabet: an element of the
/// free associative algebra. Zero coefficients are never stored.
class NCPoly {
  public:
    NCPoly(AlphabetPtr alphabet, FieldSpec field)
        : alphabet_(std::move(alphabet)), field_(field) {}

    static NCPoly constant(AlphabetPtr a, const Scalar& c);
    static NCPoly one(AlphabetPtr a, const FieldSpec& fs);
    static NCPoly generator(AlphabetPtr a, const FieldSpec& fs, std::uint32_t i);
    static NCPoly monomial(AlphabetPtr a, Word w, Scalar c);

    const AlphabetPtr& alphabet() const { return alphabet_; }
    const FieldSpec& field() const { return field_; }
    const std::map<Word, Scalar, DegLexLess>& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }
    /// Max word length over stored terms; nullopt for the zero polynomial.
    std::optional<int> degree() const;
    Scalar coefficient(const Word& w) const;
    /// Coefficient of the empty word.
    Scalar augmentation() const { return coefficient(Word{}); }

    /// Accumulates c onto the coefficient of w, dropping zero results.
    void add_term(const Word& w, const Scalar& c);

    NCPoly operator-() const;
    friend NCPoly operator+(const NCPoly& p, const NCPoly& q);
    friend NCPoly operator-(const NCPoly& p, const NCPoly& q);
    friend NCPoly operator*(const NCPoly& p, const NCPoly& q);
    friend NCPoly operator*(const Scalar& c, const NCPoly& p);
    NCPoly& operator+=(const NCPoly& o) { return *this = *this + o; }
    NCPoly& operator-=(const NCPoly& o) { return *this = *this - o; }
    bool operator==(const NCPoly& o) const;

    /// Unique decomposition p = sum_x x * u_x of an element with zero
    /// constant term.
    LeftDecomposition left_decompose() const;

    std::string to_string() const;

  private:
    AlphabetPtr alphabet_;
    FieldSpec field_;
    std::map<Word, Scalar, DegLexLess> terms_;

    void check_compatible(const NCPoly& o) const;
};

} // namespace liemult

#endif
