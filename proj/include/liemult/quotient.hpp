#ifndef LIEMULT_QUOTIENT_HPP
#define LIEMULT_QUOTIENT_HPP

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "liemult/freealg.hpp"

namespace liemult {

enum class QuotientKind { StructureConstants, FreeAbelian };

/// Sparse linear combination of quotient basis elements.
using LinComb = std::map<std::uint32_t, Scalar>;

constexpr int kDefaultMaxDegree = 12;

/// The quotient Lie algebra L/I: a finite basis with structure constants
/// (all zero for the FreeAbelian kind) plus the projection of each free
/// generator onto that basis.
class QuotientPresentation {
  public:
    QuotientPresentation(QuotientKind kind, std::vector<std::string> basis,
                         FieldSpec field, AlphabetPtr alphabet,
                         int max_degree = kDefaultMaxDegree);

    /// Records [e_i, e_j] = value exactly as given; validate() checks the
    /// table afterwards.
    void set_bracket(std::uint32_t i, std::uint32_t j, LinComb value);
    void set_projection(std::uint32_t generator, LinComb image);

    /// Antisymmetry and Jacobi, verified exhaustively; throws domain_error
    /// naming the first violated triple.
    void validate() const;

    QuotientKind kind() const { return kind_; }
    std::uint32_t dim() const { return static_cast<std::uint32_t>(basis_.size()); }
    const std::vector<std::string>& basis_names() const { return basis_; }
    const std::string& basis_name(std::uint32_t k) const;
    std::optional<std::uint32_t> basis_index(const std::string& name) const;
    const FieldSpec& field() const { return field_; }
    const AlphabetPtr& alphabet() const { return alphabet_; }
    int max_degree() const { return max_degree_; }

    const LinComb& projection(std::uint32_t generator) const;
    /// [e_i, e_j] with antisymmetric completion of the stored table.
    LinComb bracket_of(std::uint32_t i, std::uint32_t j) const;
    bool commutative() const;

    bool same_as(const QuotientPresentation& o) const;

  private:
    QuotientKind kind_;
    std::vector<std::string> basis_;
    std::map<std::string, std::uint32_t> basis_index_;
    FieldSpec field_;
    AlphabetPtr alphabet_;
    int max_degree_;
    std::map<std::pair<std::uint32_t, std::uint32_t>, LinComb> table_;
    std::vector<LinComb> projection_;
};

using PresentationPtr = std::shared_ptr<const QuotientPresentation>;

/// Nondecreasing sequence of basis indices; empty = 1. For the FreeAbelian
/// kind this doubles as the exponent vector read in unary.
struct PBWMonomial {
    std::vector<std::uint32_t> indices;

    int degree() const { return static_cast<int>(indices.size()); }
    bool operator==(const PBWMonomial&) const = default;
};

struct PBWDegLexLess {
    bool operator()(const PBWMonomial& a, const PBWMonomial& b) const {
        if (a.indices.size() != b.indices.size())
            return a.indices.size() < b.indices.size();
        return a.indices < b.indices;
    }
};

/// Element of U(L/I) in PBW normal form: sparse map from ordered monomials
/// to scalars, no zeros stored.
class UQElement {
  public:
    explicit UQElement(PresentationPtr pres);

    static UQElement constant(PresentationPtr pres, const Scalar& c);
    static UQElement one(PresentationPtr pres);
    static UQElement basis_element(PresentationPtr pres, std::uint32_t k);
    static UQElement from_lincomb(PresentationPtr pres, const LinComb& lc);

    const PresentationPtr& presentation() const { return pres_; }
    const FieldSpec& field() const { return pres_->field(); }
    const std::map<PBWMonomial, Scalar, PBWDegLexLess>& terms() const {
        return terms_;
    }

    bool is_zero() const { return terms_.empty(); }
    /// Max monomial length; nullopt for 0.
    std::optional<int> degree() const;
    Scalar coefficient(const PBWMonomial& m) const;
    Scalar constant_coefficient() const { return coefficient(PBWMonomial{}); }

    /// Accumulates c onto the coefficient of a monomial already in normal
    /// form, dropping zero results.
    void add_term(const PBWMonomial& m, const Scalar& c);

    UQElement operator-() const;
    friend UQElement operator+(const UQElement& a, const UQElement& b);
    friend UQElement operator-(const UQElement& a, const UQElement& b);
    friend UQElement operator*(const UQElement& a, const UQElement& b);
    friend UQElement operator*(const Scalar& c, const UQElement& a);
    UQElement& operator+=(const UQElement& o) { return *this = *this + o; }
    UQElement& operator-=(const UQElement& o) { return *this = *this - o; }
    bool operator==(const UQElement& o) const;

    std::string to_string() const;

  private:
    PresentationPtr pres_;
    std::map<PBWMonomial, Scalar, PBWDegLexLess> terms_;

    void check_compatible(const UQElement& o) const;
};

enum class RewriteOrder { Leftmost, Rightmost };

/// PBW normal form of an arbitrary product of basis elements, by repeated
/// rewriting of adjacent out-of-order pairs. The result is independent of
/// the rewrite order.
UQElement straighten(const PresentationPtr& pres,
                     const std::vector<std::uint32_t>& word,
                     RewriteOrder order = RewriteOrder::Leftmost);

/// Product in U(L/I): concatenate monomials, then straighten.
UQElement uq_mul(const UQElement& a, const UQElement& b);

/// The algebra homomorphism U(L) -> U(L/I) substituting each generator by
/// its projection image.
UQElement project(const PresentationPtr& pres, const NCPoly& p);

inline std::optional<int> uq_degree(const UQElement& a) { return a.degree(); }

} // namespace liemult

#endif
