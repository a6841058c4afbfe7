#ifndef LIEMULT_MULTIPLICATOR_HPP
#define LIEMULT_MULTIPLICATOR_HPP

#include <span>
#include <string>
#include <vector>

#include "liemult/freelie.hpp"
#include "liemult/hopf.hpp"
#include "liemult/magnus.hpp"

namespace liemult {

/// One witness parameter: an element l of the augmentation ideal of U(L/I)
/// together with an explicit lift to U(L) that projects onto it.
struct WitnessFamilyEntry {
    UQElement element;
    NCPoly lift;
};

/// The data of a witness family [alpha * l, alpha, ..., alpha].
struct WitnessSpec {
    PresentationPtr pres;
    NCPoly alpha;
    std::vector<std::uint32_t> slots; // (x_1, ..., x_n)
    std::vector<WitnessFamilyEntry> family;

    int n() const { return static_cast<int>(slots.size()); }
    /// alpha in the ideal, nonzero first leaf image, n >= 2, every family
    /// element in the augmentation ideal with a matching lift.
    void validate() const;
};

/// C(n, k) computed exactly over the integers, then mapped into the field.
Scalar binomial_scalar(int n, int k, const FieldSpec& fs);

/// Expansion of a bracket tree with n leaves in the ideal into the n-fold
/// tensor power: [A,B] -> A(x)B - B(x)A recursively, then the leaf landing
/// in slot j is replaced by its Magnus image at the slot generator x_j.
TensorElement tensor_expand(const PresentationPtr& pres, const BracketTree& tree,
                            std::span<const std::uint32_t> slots);

/// sum_i (-1)^i C(n-1,i) (x)^i b (x) a (x)^{n-1-i} b.
TensorElement cartan_weyl(const UQElement& a, const UQElement& b, int n);

/// Collapsed image of the witness [alpha * lift, alpha, ..., alpha].
TensorElement pipeline_image(const WitnessSpec& w, const WitnessFamilyEntry& entry);

/// sum_i (-1)^i C(n-1,i) (x)^i 1 (x) l (x)^{n-2-i} 1
///   + (-1)^{n-1} Delta^(n-1)(S(l)).
TensorElement closed_f(const UQElement& l, int n);

/// Apply the counit to every coordinate except slot j.
UQElement eps_slot(const TensorElement& t, int j);

enum class CaseLabel { I, II, III, IV };
std::string case_name(CaseLabel label);
CaseLabel classify_case(const FieldSpec& fs, int n, bool commutative_quotient);

struct CheckVerdict {
    bool pass = false;
    std::string detail;
};

/// Nonvanishing of closed_f for nonscalar l when the characteristic does
/// not divide n and n > 2; guard failures report "case mismatch".
CheckVerdict case1_kernel_check(const UQElement& l, int n);

/// Exact rank certificate for a witness family.
struct RankReport {
    int family_size = 0;
    int rows = 0;
    int cols = 0;
    int rank = 0;
    std::vector<std::optional<int>> degrees; // degree profile of the images
    std::vector<std::string> images;         // printed images
    CaseLabel label = CaseLabel::II;
    bool used_pipeline = true;
    std::string verdict;
};

/// Builds the matrix of family images (pipeline or closed form), eliminates
/// exactly over the instance field, and reports rank and degree profile.
RankReport family_rank(const WitnessSpec& w, bool use_pipeline);

/// Asserts strictly increasing image degrees along the family.
CheckVerdict degree_growth_check(const WitnessSpec& w, bool use_pipeline);

/// Exact rank of a sparse matrix given as tensor-element rows.
int exact_rank(const std::vector<TensorElement>& rows);

} // namespace liemult

#endif
