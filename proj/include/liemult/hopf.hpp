#ifndef LIEMULT_HOPF_HPP
#define LIEMULT_HOPF_HPP

#include <vector>

#include "liemult/quotient.hpp"

namespace liemult {

struct TupleDegLexLess {
    bool operator()(const std::vector<PBWMonomial>& a,
                    const std::vector<PBWMonomial>& b) const {
        PBWDegLexLess less;
        for (std::size_t i = 0; i < a.size() && i < b.size(); ++i) {
            if (less(a[i], b[i]))
                return true;
            if (less(b[i], a[i]))
                return false;
        }
        return a.size() < b.size();
    }
};

/// Element of the m-fold tensor power of U(L/I): sparse map from m-tuples
/// of PBW monomials to scalars.
class TensorElement {
  public:
    TensorElement(PresentationPtr pres, int arity);

    /// 1 (x) ... (x) 1.
    static TensorElement unit(PresentationPtr pres, int arity);
    /// Tensor product of the components, expanded multilinearly.
    static TensorElement pure(const std::vector<UQElement>& components);
    /// Arity-1 wrapper.
    static TensorElement from_uq(const UQElement& a);

    const PresentationPtr& presentation() const { return pres_; }
    int arity() const { return arity_; }
    const std::map<std::vector<PBWMonomial>, Scalar, TupleDegLexLess>&
    terms() const {
        return terms_;
    }

    bool is_zero() const { return terms_.empty(); }
    /// Max total degree over tuples; nullopt for 0.
    std::optional<int> degree() const;
    Scalar coefficient(const std::vector<PBWMonomial>& tuple) const;
    void add_term(const std::vector<PBWMonomial>& tuple, const Scalar& c);

    /// The arity-1 content; rejects other arities.
    UQElement as_uq() const;

    TensorElement operator-() const;
    friend TensorElement operator+(const TensorElement& a, const TensorElement& b);
    friend TensorElement operator-(const TensorElement& a, const TensorElement& b);
    friend TensorElement operator*(const Scalar& c, const TensorElement& a);
    TensorElement& operator+=(const TensorElement& o) { return *this = *this + o; }
    TensorElement& operator-=(const TensorElement& o) { return *this = *this - o; }
    bool operator==(const TensorElement& o) const;

    std::string to_string() const;

  private:
    PresentationPtr pres_;
    int arity_;
    std::map<std::vector<PBWMonomial>, Scalar, TupleDegLexLess> terms_;

    void check_compatible(const TensorElement& o) const;
};

/// Coproduct: the algebra map with every basis element primitive,
/// delta(e) = e(x)1 + 1(x)e.
TensorElement coproduct(const UQElement& a);

/// Iterated coproduct with target arity m: arity 1 is the identity, arity 2
/// the coproduct, and each further step applies the coproduct to the first
/// tensor slot.
TensorElement iterated_coproduct(const UQElement& a, int m);

/// Coefficient of the empty monomial.
Scalar counit(const UQElement& a);

/// Antipode: the anti-automorphism with S(e) = -e on basis elements; a PBW
/// monomial of length m maps to (-1)^m times its reversal, straightened.
UQElement antipode(const UQElement& a);

/// Componentwise product of tensor elements of equal arity.
TensorElement tensor_mul(const TensorElement& s, const TensorElement& t);

/// t * iterated_coproduct(u, arity of t).
TensorElement diagonal_action(const TensorElement& t, const UQElement& u);

/// The Hopf-module collapse (x)^n -> (x)^(n-1):
/// h1(x)...(x)hn -> (h1(x)...(x)h_{n-1}) * Delta^(n-1)(S(hn)).
TensorElement hopf_collapse(const TensorElement& t);

} // namespace liemult

#endif
