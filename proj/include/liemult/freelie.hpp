#ifndef LIEMULT_FREELIE_HPP
#define LIEMULT_FREELIE_HPP

#include <memory>
#include <span>
#include <vector>

#include "liemult/freealg.hpp"

namespace liemult {

/// Commutator ab - ba, the Lie bracket realized inside the free
/// associative algebra.
NCPoly bracket(const NCPoly& a, const NCPoly& b);

/// Left-normed bracket [...[[a1,a2],a3],...,am]; a single leaf is itself.
NCPoly left_normed(std::span<const NCPoly> leaves);

/// Wordwise left-to-right bracketing x1...xm -> [...[x1,x2],...,xm],
/// extended linearly. Input must be homogeneous.
NCPoly dynkin_map(const NCPoly& p);

/// Dynkin criterion: true iff every homogeneous component p_m satisfies
/// dynkin_map(p_m) = m * p_m. Needs char 0 or char > deg(p); otherwise
/// throws criterion_unavailable.
bool is_lie_element(const NCPoly& p);

/// Right action of U(L) on Lie elements: a word acts by folding brackets
/// left to right, the unit acts trivially, extended linearly in u.
NCPoly adjoint_action(const NCPoly& a, const NCPoly& u);

/// Binary bracketing shape over NCPoly leaves: the constructive form of
/// elements of the ideal powers I^n.
class BracketTree {
  public:
    static BracketTree leaf(NCPoly p);
    static BracketTree bracket(BracketTree left, BracketTree right);

    bool is_leaf() const;
    const NCPoly& leaf_value() const;
    BracketTree left() const;
    BracketTree right() const;
    int leaf_count() const;

    /// Iterated commutator expansion in U(L).
    NCPoly expand() const;

  private:
    BracketTree() = default;
    struct Node;
    std::shared_ptr<const Node> node_;
};

/// Left-normed tree [...[[l1,l2],l3],...,lm] over the given leaves.
BracketTree left_normed_tree(std::span<const NCPoly> leaves);

} // namespace liemult

#endif
