#include "liemult/multiplicator.hpp"

#include <map>

namespace liemult {

namespace {

struct SignedLeaves {
    int sign;
    std::vector<const NCPoly*> leaves;
};

// [A,B] -> A(x)B - B(x)A on leaf sequences, recursively.
std::vector<SignedLeaves> expand_leaves(const BracketTree& tree) {
    if (tree.is_leaf())
        return {{1, {&tree.leaf_value()}}};
    auto lhs = expand_leaves(tree.left());
    auto rhs = expand_leaves(tree.right());
    std::vector<SignedLeaves> out;
    out.reserve(2 * lhs.size() * rhs.size());
    for (const auto& l : lhs) {
        for (const auto& r : rhs) {
            SignedLeaves fwd{l.sign * r.sign, l.leaves};
            fwd.leaves.insert(fwd.leaves.end(), r.leaves.begin(), r.leaves.end());
            out.push_back(std::move(fwd));
            SignedLeaves rev{-l.sign * r.sign, r.leaves};
            rev.leaves.insert(rev.leaves.end(), l.leaves.begin(), l.leaves.end());
            out.push_back(std::move(rev));
        }
    }
    return out;
}

} // namespace

Scalar binomial_scalar(int n, int k, const FieldSpec& fs) {
    if (k < 0 || k > n)
        return Scalar::zero(fs);
    mpz_class b;
    mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(n),
                 static_cast<unsigned long>(k));
    return Scalar::from_mpz(b, fs);
}

void WitnessSpec::validate() const {
    if (n() < 2)
        throw domain_error("witness needs n >= 2 slots");
    for (std::uint32_t x : slots)
        if (x >= pres->alphabet()->size())
            throw domain_error("slot generator index out of range");
    if (!project(pres, alpha).is_zero())
        throw domain_error("alpha is not in the ideal: " + alpha.to_string() +
                           " projects to " + project(pres, alpha).to_string());
    if (leaf_image(pres, alpha, slots[0]).is_zero())
        throw domain_error("leaf image of alpha at the first slot generator '" +
                           pres->alphabet()->name(slots[0]) + "' is zero");
    for (std::size_t i = 0; i < family.size(); ++i) {
        const auto& entry = family[i];
        if (!counit(entry.element).is_zero())
            throw domain_error("family member " + std::to_string(i + 1) +
                               " is not in the augmentation ideal: " +
                               entry.element.to_string());
        if (!(project(pres, entry.lift) == entry.element))
            throw domain_error("family member " + std::to_string(i + 1) +
                               ": lift " + entry.lift.to_string() +
                               " does not project to " +
                               entry.element.to_string());
    }
}

TensorElement tensor_expand(const PresentationPtr& pres, const BracketTree& tree,
                            std::span<const std::uint32_t> slots) {
    const int n = static_cast<int>(slots.size());
    if (tree.leaf_count() != n)
        throw domain_error("bracket tree has " + std::to_string(tree.leaf_count()) +
                           " leaves but " + std::to_string(n) +
                           " slot generators were given");
    // precompute the Magnus image of each distinct leaf
    std::map<const NCPoly*, MagnusImage> images;
    auto collect = [&](auto&& self, const BracketTree& t) -> void {
        if (t.is_leaf()) {
            const NCPoly* leaf = &t.leaf_value();
            if (!images.count(leaf))
                images.emplace(leaf, magnus_phi(pres, *leaf));
            return;
        }
        self(self, t.left());
        self(self, t.right());
    };
    collect(collect, tree);

    TensorElement out(pres, n);
    for (const auto& summand : expand_leaves(tree)) {
        std::vector<UQElement> comps;
        comps.reserve(slots.size());
        for (std::size_t j = 0; j < slots.size(); ++j)
            comps.push_back(images.at(summand.leaves[j]).component(slots[j]));
        Scalar sign = Scalar::from_int(summand.sign, pres->field());
        out += sign * TensorElement::pure(comps);
    }
    return out;
}

TensorElement cartan_weyl(const UQElement& a, const UQElement& b, int n) {
    if (n < 2)
        throw domain_error("cartan_weyl needs n >= 2");
    const auto& pres = a.presentation();
    TensorElement out(pres, n);
    for (int i = 0; i <= n - 1; ++i) {
        std::vector<UQElement> comps;
        comps.reserve(static_cast<std::size_t>(n));
        for (int j = 0; j < i; ++j)
            comps.push_back(b);
        comps.push_back(a);
        for (int j = 0; j < n - 1 - i; ++j)
            comps.push_back(b);
        Scalar coeff = binomial_scalar(n - 1, i, pres->field());
        if (i % 2)
            coeff = -coeff;
        out += coeff * TensorElement::pure(comps);
    }
    return out;
}

TensorElement pipeline_image(const WitnessSpec& w, const WitnessFamilyEntry& entry) {
    if (!(project(w.pres, entry.lift) == entry.element))
        throw domain_error("lift " + entry.lift.to_string() +
                           " does not project to " + entry.element.to_string());
    NCPoly alpha_l = adjoint_action(w.alpha, entry.lift);
    std::vector<NCPoly> leaves;
    leaves.reserve(static_cast<std::size_t>(w.n()));
    leaves.push_back(std::move(alpha_l));
    for (int i = 1; i < w.n(); ++i)
        leaves.push_back(w.alpha);
    BracketTree tree = left_normed_tree(leaves);
    return hopf_collapse(tensor_expand(w.pres, tree, w.slots));
}

TensorElement closed_f(const UQElement& l, int n) {
    if (n < 2)
        throw domain_error("closed_f needs n >= 2");
    const auto& pres = l.presentation();
    TensorElement out(pres, n - 1);
    for (int i = 0; i <= n - 2; ++i) {
        std::vector<UQElement> comps;
        comps.reserve(static_cast<std::size_t>(n - 1));
        for (int j = 0; j < i; ++j)
            comps.push_back(UQElement::one(pres));
        comps.push_back(l);
        for (int j = 0; j < n - 2 - i; ++j)
            comps.push_back(UQElement::one(pres));
        Scalar coeff = binomial_scalar(n - 1, i, pres->field());
        if (i % 2)
            coeff = -coeff;
        out += coeff * TensorElement::pure(comps);
    }
    Scalar last = Scalar::one(pres->field());
    if ((n - 1) % 2)
        last = -last;
    out += last * iterated_coproduct(antipode(l), n - 1);
    return out;
}

UQElement eps_slot(const TensorElement& t, int j) {
    if (j < 0 || j >= t.arity())
        throw domain_error("eps_slot index " + std::to_string(j) +
                           " out of range for arity " +
                           std::to_string(t.arity()));
    const auto& pres = t.presentation();
    UQElement out(pres);
    for (const auto& [tuple, c] : t.terms()) {
        bool keep = true;
        for (int k = 0; k < t.arity(); ++k) {
            if (k != j && !tuple[static_cast<std::size_t>(k)].indices.empty()) {
                keep = false; // counit kills nonempty monomials
                break;
            }
        }
        if (keep)
            out.add_term(tuple[static_cast<std::size_t>(j)], c);
    }
    return out;
}

std::string case_name(CaseLabel label) {
    switch (label) {
    case CaseLabel::I:
        return "I";
    case CaseLabel::II:
        return "II";
    case CaseLabel::III:
        return "III";
    case CaseLabel::IV:
        return "IV";
    }
    return "?";
}

CaseLabel classify_case(const FieldSpec& fs, int n, bool commutative_quotient) {
    const std::uint64_t ch = fs.characteristic();
    const bool char_divides_n =
        ch != 0 && static_cast<std::uint64_t>(n) % ch == 0;
    if (!char_divides_n && n > 2)
        return CaseLabel::I;
    if (ch != 2)
        return CaseLabel::II;
    if (!commutative_quotient)
        return CaseLabel::III;
    return CaseLabel::IV;
}

CheckVerdict case1_kernel_check(const UQElement& l, int n) {
    const FieldSpec& fs = l.field();
    const std::uint64_t ch = fs.characteristic();
    if (n <= 2)
        return {false, "case mismatch: n must exceed 2, got " + std::to_string(n)};
    if (ch != 0 && static_cast<std::uint64_t>(n) % ch == 0)
        return {false, "case mismatch: characteristic " + std::to_string(ch) +
                           " divides n = " + std::to_string(n)};
    if (l.is_zero())
        return {false, "case mismatch: l must be nonzero"};
    if (!counit(l).is_zero())
        return {false,
                "case mismatch: l must lie in the augmentation ideal, got " +
                    l.to_string()};
    TensorElement f = closed_f(l, n);
    std::string detail;
    UQElement s = antipode(l);
    Scalar tail = Scalar::one(fs);
    if ((n - 1) % 2)
        tail = -tail;
    for (int j = 0; j <= n - 2; ++j) {
        Scalar coeff = binomial_scalar(n - 1, j, fs);
        if (j % 2)
            coeff = -coeff;
        UQElement slot_value = coeff * l + tail * s;
        if (!detail.empty())
            detail += "; ";
        detail += "slot " + std::to_string(j) + ": " + slot_value.to_string();
    }
    if (f.is_zero())
        return {false, "closed_f(l) = 0 for nonscalar l = " + l.to_string() +
                           " (slot equations: " + detail + ")"};
    return {true, "closed_f(l) != 0 for l = " + l.to_string() +
                      "; slot equations " + detail};
}

int exact_rank(const std::vector<TensorElement>& rows) {
    // column-ordered exact Gaussian elimination on sparse rows
    using RowMap = std::map<std::vector<PBWMonomial>, Scalar, TupleDegLexLess>;
    std::vector<RowMap> pivots; // normalized, in pivot-column order
    std::vector<std::vector<PBWMonomial>> pivot_cols;
    int rank = 0;
    for (const auto& row : rows) {
        RowMap work(row.terms().begin(), row.terms().end());
        for (std::size_t p = 0; p < pivots.size(); ++p) {
            auto it = work.find(pivot_cols[p]);
            if (it == work.end())
                continue;
            Scalar factor = it->second;
            for (const auto& [col, v] : pivots[p]) {
                auto w = work.find(col);
                Scalar delta = factor * v;
                if (w == work.end()) {
                    work.emplace(col, -delta);
                } else {
                    w->second -= delta;
                    if (w->second.is_zero())
                        work.erase(w);
                }
            }
        }
        if (work.empty())
            continue;
        // normalize on the leading column
        const auto lead = work.begin()->first;
        Scalar inv = work.begin()->second.inv();
        for (auto& [col, v] : work)
            v = inv * v;
        // keep pivot list sorted by leading column for determinism
        std::size_t at = 0;
        TupleDegLexLess less;
        while (at < pivot_cols.size() && less(pivot_cols[at], lead))
            ++at;
        pivots.insert(pivots.begin() + static_cast<std::ptrdiff_t>(at), work);
        pivot_cols.insert(pivot_cols.begin() + static_cast<std::ptrdiff_t>(at), lead);
        ++rank;
    }
    return rank;
}

RankReport family_rank(const WitnessSpec& w, bool use_pipeline) {
    w.validate();
    RankReport report;
    report.label = classify_case(w.pres->field(), w.n(), w.pres->commutative());
    report.used_pipeline = use_pipeline;
    report.family_size = static_cast<int>(w.family.size());
    std::vector<TensorElement> rows;
    rows.reserve(w.family.size());
    for (std::size_t i = 0; i < w.family.size(); ++i) {
        try {
            TensorElement img = use_pipeline
                                    ? pipeline_image(w, w.family[i])
                                    : closed_f(w.family[i].element, w.n());
            report.degrees.push_back(img.degree());
            report.images.push_back(img.to_string());
            rows.push_back(std::move(img));
        } catch (const resource_error& e) {
            throw resource_error("family member " + std::to_string(i + 1) +
                                 " (" + w.family[i].element.to_string() +
                                 "): " + e.what());
        }
    }
    std::map<std::vector<PBWMonomial>, int, TupleDegLexLess> columns;
    for (const auto& row : rows)
        for (const auto& [tuple, c] : row.terms())
            columns.emplace(tuple, 0);
    report.rows = static_cast<int>(rows.size());
    report.cols = static_cast<int>(columns.size());
    report.rank = exact_rank(rows);
    report.verdict =
        "rank " + std::to_string(report.rank) + " of " +
        std::to_string(report.rows) + " images (" +
        (use_pipeline ? "pipeline" : "closed-form") + " route)";
    return report;
}

CheckVerdict degree_growth_check(const WitnessSpec& w, bool use_pipeline) {
    w.validate();
    std::string seq;
    bool increasing = true;
    std::optional<int> prev;
    bool have_prev = false;
    for (std::size_t i = 0; i < w.family.size(); ++i) {
        TensorElement img = use_pipeline ? pipeline_image(w, w.family[i])
                                         : closed_f(w.family[i].element, w.n());
        std::optional<int> d = img.degree();
        if (!seq.empty())
            seq += ", ";
        seq += d ? std::to_string(*d) : "undefined";
        if (have_prev && (!d || !prev || *d <= *prev))
            increasing = false;
        if (!d)
            increasing = false;
        prev = d;
        have_prev = true;
    }
    if (w.family.size() < 2)
        return {false, "degree growth needs at least two family members"};
    return {increasing, "image degree sequence: " + seq};
}

} // namespace liemult
