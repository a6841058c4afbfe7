#include "liemult/freelie.hpp"

#include <map>

namespace liemult {

NCPoly bracket(const NCPoly& a, const NCPoly& b) { return a * b - b * a; }

NCPoly left_normed(std::span<const NCPoly> leaves) {
    if (leaves.empty())
        throw domain_error("left_normed needs at least one leaf");
    NCPoly acc = leaves[0];
    for (std::size_t i = 1; i < leaves.size(); ++i)
        acc = bracket(acc, leaves[i]);
    return acc;
}

NCPoly dynkin_map(const NCPoly& p) {
    if (p.is_zero())
        return p;
    const auto deg = *p.degree();
    NCPoly out(p.alphabet(), p.field());
    for (const auto& [w, c] : p.terms()) {
        if (static_cast<int>(w.size()) != deg)
            throw domain_error("dynkin_map needs a homogeneous input");
        if (w.empty())
            throw domain_error("dynkin_map needs degree >= 1");
        NCPoly acc = NCPoly::generator(p.alphabet(), p.field(), w[0]);
        for (std::size_t i = 1; i < w.size(); ++i)
            acc = bracket(acc, NCPoly::generator(p.alphabet(), p.field(), w[i]));
        out += c * acc;
    }
    return out;
}

bool is_lie_element(const NCPoly& p) {
    if (p.is_zero())
        return true;
    const int deg = *p.degree();
    const std::uint64_t ch = p.field().characteristic();
    if (ch != 0 && static_cast<std::uint64_t>(deg) >= ch)
        throw criterion_unavailable(
            "Dynkin criterion unavailable: characteristic " +
            std::to_string(ch) + " <= degree " + std::to_string(deg) +
            "; supply the element as a bracket tree instead");
    // split into homogeneous components
    std::map<int, NCPoly> comps;
    for (const auto& [w, c] : p.terms()) {
        int m = static_cast<int>(w.size());
        auto it = comps.find(m);
        if (it == comps.end())
            it = comps.emplace(m, NCPoly(p.alphabet(), p.field())).first;
        it->second.add_term(w, c);
    }
    for (const auto& [m, comp] : comps) {
        if (m == 0)
            return false; // nonzero constant component is never Lie
        if (!(dynkin_map(comp) ==
              Scalar::from_int(m, p.field()) * comp))
            return false;
    }
    return true;
}

NCPoly adjoint_action(const NCPoly& a, const NCPoly& u) {
    NCPoly out(a.alphabet(), a.field());
    for (const auto& [w, c] : u.terms()) {
        NCPoly acc = a;
        for (std::uint32_t letter : w)
            acc = bracket(acc, NCPoly::generator(a.alphabet(), a.field(), letter));
        out += c * acc;
    }
    return out;
}

struct BracketTree::Node {
    // leaf payload, or children for an internal bracket
    std::shared_ptr<const NCPoly> value;
    std::shared_ptr<const Node> lhs, rhs;
    int leaves = 1;
};

BracketTree BracketTree::leaf(NCPoly p) {
    auto n = std::make_shared<Node>();
    n->value = std::make_shared<const NCPoly>(std::move(p));
    n->leaves = 1;
    BracketTree t;
    t.node_ = std::move(n);
    return t;
}

BracketTree BracketTree::bracket(BracketTree left, BracketTree right) {
    auto n = std::make_shared<Node>();
    n->lhs = std::move(left.node_);
    n->rhs = std::move(right.node_);
    n->leaves = n->lhs->leaves + n->rhs->leaves;
    BracketTree t;
    t.node_ = std::move(n);
    return t;
}

bool BracketTree::is_leaf() const { return node_->value != nullptr; }

const NCPoly& BracketTree::leaf_value() const {
    if (!is_leaf())
        throw domain_error("not a leaf");
    return *node_->value;
}

BracketTree BracketTree::left() const {
    if (is_leaf())
        throw domain_error("leaf has no children");
    BracketTree t;
    t.node_ = node_->lhs;
    return t;
}

BracketTree BracketTree::right() const {
    if (is_leaf())
        throw domain_error("leaf has no children");
    BracketTree t;
    t.node_ = node_->rhs;
    return t;
}

int BracketTree::leaf_count() const { return node_->leaves; }

NCPoly BracketTree::expand() const {
    if (is_leaf())
        return leaf_value();
    return liemult::bracket(left().expand(), right().expand());
}

BracketTree left_normed_tree(std::span<const NCPoly> leaves) {
    if (leaves.empty())
        throw domain_error("left_normed_tree needs at least one leaf");
    BracketTree t = BracketTree::leaf(leaves[0]);
    for (std::size_t i = 1; i < leaves.size(); ++i)
        t = BracketTree::bracket(t, BracketTree::leaf(leaves[i]));
    return t;
}

} // namespace liemult
