#include "liemult/hopf.hpp"

#include <algorithm>

#include "liemult/printing.hpp"

namespace liemult {

TensorElement::TensorElement(PresentationPtr pres, int arity)
    : pres_(std::move(pres)), arity_(arity) {
    if (arity_ < 1)
        throw domain_error("tensor arity must be >= 1");
}

TensorElement TensorElement::unit(PresentationPtr pres, int arity) {
    TensorElement t(pres, arity);
    t.add_term(std::vector<PBWMonomial>(static_cast<std::size_t>(arity)),
               Scalar::one(pres->field()));
    return t;
}

TensorElement TensorElement::pure(const std::vector<UQElement>& components) {
    if (components.empty())
        throw domain_error("tensor product needs at least one component");
    const auto& pres = components.front().presentation();
    TensorElement out(pres, static_cast<int>(components.size()));
    // cartesian expansion over the terms of each component
    std::vector<PBWMonomial> tuple(components.size());
    auto rec = [&](auto&& self, std::size_t slot, const Scalar& coeff) -> void {
        if (slot == components.size()) {
            out.add_term(tuple, coeff);
            return;
        }
        for (const auto& [m, c] : components[slot].terms()) {
            tuple[slot] = m;
            self(self, slot + 1, coeff * c);
        }
    };
    rec(rec, 0, Scalar::one(pres->field()));
    return out;
}

TensorElement TensorElement::from_uq(const UQElement& a) {
    TensorElement t(a.presentation(), 1);
    for (const auto& [m, c] : a.terms())
        t.add_term({m}, c);
    return t;
}

std::optional<int> TensorElement::degree() const {
    if (terms_.empty())
        return std::nullopt;
    int best = 0;
    for (const auto& [tuple, c] : terms_) {
        int d = 0;
        for (const auto& m : tuple)
            d += m.degree();
        best = std::max(best, d);
    }
    return best;
}

Scalar TensorElement::coefficient(const std::vector<PBWMonomial>& tuple) const {
    auto it = terms_.find(tuple);
    if (it == terms_.end())
        return Scalar::zero(pres_->field());
    return it->second;
}

void TensorElement::add_term(const std::vector<PBWMonomial>& tuple,
                             const Scalar& c) {
    if (static_cast<int>(tuple.size()) != arity_)
        throw domain_error("tuple length does not match tensor arity");
    if (c.is_zero())
        return;
    auto [it, inserted] = terms_.emplace(tuple, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero())
            terms_.erase(it);
    }
}

UQElement TensorElement::as_uq() const {
    if (arity_ != 1)
        throw domain_error("as_uq needs arity 1");
    UQElement out(pres_);
    for (const auto& [tuple, c] : terms_)
        out.add_term(tuple[0], c);
    return out;
}

void TensorElement::check_compatible(const TensorElement& o) const {
    if (arity_ != o.arity_)
        throw mismatch_error("tensor arity mismatch: " + std::to_string(arity_) +
                             " vs " + std::to_string(o.arity_));
    if (!pres_->same_as(*o.pres_))
        throw mismatch_error("quotient presentation mismatch");
}

TensorElement TensorElement::operator-() const {
    TensorElement r(pres_, arity_);
    for (const auto& [t, c] : terms_)
        r.terms_.emplace(t, -c);
    return r;
}

TensorElement operator+(const TensorElement& a, const TensorElement& b) {
    a.check_compatible(b);
    TensorElement r = a;
    for (const auto& [t, c] : b.terms_)
        r.add_term(t, c);
    return r;
}

TensorElement operator-(const TensorElement& a, const TensorElement& b) {
    return a + (-b);
}

TensorElement operator*(const Scalar& c, const TensorElement& a) {
    if (!(c.field() == a.pres_->field()))
        throw mismatch_error("scalar field mismatch");
    TensorElement r(a.pres_, a.arity_);
    if (c.is_zero())
        return r;
    for (const auto& [t, ac] : a.terms_)
        r.add_term(t, c * ac);
    return r;
}

bool TensorElement::operator==(const TensorElement& o) const {
    return arity_ == o.arity_ && pres_->same_as(*o.pres_) && terms_ == o.terms_;
}

std::string TensorElement::to_string() const {
    if (terms_.empty())
        return "0";
    std::string out;
    bool first = true;
    for (const auto& [tuple, c] : terms_) {
        std::string mono;
        for (std::size_t j = 0; j < tuple.size(); ++j) {
            if (j)
                mono += " ⊗ ";
            UQElement tmp(pres_);
            tmp.add_term(tuple[j], Scalar::one(pres_->field()));
            mono += tmp.to_string();
        }
        bool neg = false;
        std::string mag = c.to_string();
        if (c.field().kind == FieldKind::Rationals && sgn(c.rational()) < 0) {
            neg = true;
            mag = mpq_class(-c.rational()).get_str();
        }
        std::string piece = (mag == "1") ? mono : mag + "*" + mono;
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

TensorElement coproduct(const UQElement& a) {
    const auto& pres = a.presentation();
    TensorElement out(pres, 2);
    for (const auto& [m, c] : a.terms()) {
        TensorElement cur = TensorElement::unit(pres, 2);
        for (std::uint32_t k : m.indices) {
            UQElement e = UQElement::basis_element(pres, k);
            TensorElement primitive =
                TensorElement::pure({e, UQElement::one(pres)}) +
                TensorElement::pure({UQElement::one(pres), e});
            cur = tensor_mul(cur, primitive);
        }
        out += c * cur;
    }
    return out;
}

TensorElement iterated_coproduct(const UQElement& a, int m) {
    if (m < 1)
        throw domain_error("iterated coproduct needs target arity >= 1");
    if (m == 1)
        return TensorElement::from_uq(a);
    if (m == 2)
        return coproduct(a);
    const auto& pres = a.presentation();
    TensorElement prev = iterated_coproduct(a, m - 1);
    TensorElement out(pres, m);
    for (const auto& [tuple, c] : prev.terms()) {
        UQElement head(pres);
        head.add_term(tuple[0], Scalar::one(pres->field()));
        TensorElement split = coproduct(head);
        for (const auto& [pair, pc] : split.terms()) {
            std::vector<PBWMonomial> widened;
            widened.reserve(tuple.size() + 1);
            widened.push_back(pair[0]);
            widened.push_back(pair[1]);
            widened.insert(widened.end(), tuple.begin() + 1, tuple.end());
            out.add_term(widened, c * pc);
        }
    }
    return out;
}

Scalar counit(const UQElement& a) { return a.constant_coefficient(); }

UQElement antipode(const UQElement& a) {
    const auto& pres = a.presentation();
    UQElement out(pres);
    for (const auto& [m, c] : a.terms()) {
        std::vector<std::uint32_t> rev(m.indices.rbegin(), m.indices.rend());
        Scalar sign = (m.indices.size() % 2 == 0)
                          ? Scalar::one(pres->field())
                          : -Scalar::one(pres->field());
        out += (c * sign) * straighten(pres, rev);
    }
    return out;
}

TensorElement tensor_mul(const TensorElement& s, const TensorElement& t) {
    s.check_compatible(t);
    const auto& pres = s.presentation();
    TensorElement out(pres, s.arity());
    for (const auto& [ta, ca] : s.terms()) {
        for (const auto& [tb, cb] : t.terms()) {
            std::vector<UQElement> comps;
            comps.reserve(ta.size());
            for (std::size_t j = 0; j < ta.size(); ++j) {
                std::vector<std::uint32_t> w = ta[j].indices;
                w.insert(w.end(), tb[j].indices.begin(), tb[j].indices.end());
                comps.push_back(straighten(pres, w));
            }
            out += (ca * cb) * TensorElement::pure(comps);
        }
    }
    return out;
}

TensorElement diagonal_action(const TensorElement& t, const UQElement& u) {
    return tensor_mul(t, iterated_coproduct(u, t.arity()));
}

TensorElement hopf_collapse(const TensorElement& t) {
    if (t.arity() < 2)
        throw domain_error("hopf_collapse needs arity >= 2");
    const auto& pres = t.presentation();
    const int n = t.arity();
    TensorElement out(pres, n - 1);
    for (const auto& [tuple, c] : t.terms()) {
        UQElement last(pres);
        last.add_term(tuple[n - 1], Scalar::one(pres->field()));
        TensorElement tail = iterated_coproduct(antipode(last), n - 1);
        TensorElement head(pres, n - 1);
        head.add_term(std::vector<PBWMonomial>(tuple.begin(), tuple.end() - 1), c);
        out += tensor_mul(head, tail);
    }
    return out;
}

} // namespace liemult
