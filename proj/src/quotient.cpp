#include "liemult/quotient.hpp"

#include <algorithm>

#include "liemult/printing.hpp"

namespace liemult {

namespace {

LinComb negated(const LinComb& lc) {
    LinComb out;
    for (const auto& [k, c] : lc)
        out.emplace(k, -c);
    return out;
}

void lin_add(LinComb& acc, const LinComb& inc, const Scalar& factor) {
    for (const auto& [k, c] : inc) {
        Scalar v = factor * c;
        auto [it, inserted] = acc.emplace(k, v);
        if (!inserted) {
            it->second += v;
            if (it->second.is_zero())
                acc.erase(it);
        }
    }
}

std::string lincomb_str(const QuotientPresentation& pres, const LinComb& lc) {
    std::vector<std::pair<std::string, Scalar>> terms;
    for (const auto& [k, c] : lc)
        terms.emplace_back(pres.basis_name(k), c);
    return detail::join_terms(terms);
}

} // namespace

QuotientPresentation::QuotientPresentation(QuotientKind kind,
                                           std::vector<std::string> basis,
                                           FieldSpec field, AlphabetPtr alphabet,
                                           int max_degree)
    : kind_(kind), basis_(std::move(basis)), field_(field),
      alphabet_(std::move(alphabet)), max_degree_(max_degree) {
    if (basis_.empty())
        throw domain_error("quotient basis must be nonempty");
    if (max_degree_ < 1)
        throw domain_error("max_degree must be >= 1");
    for (std::uint32_t k = 0; k < basis_.size(); ++k) {
        if (basis_[k].empty())
            throw domain_error("empty basis name");
        if (!basis_index_.emplace(basis_[k], k).second)
            throw domain_error("duplicate basis name '" + basis_[k] + "'");
    }
    projection_.resize(alphabet_->size());
}

const std::string& QuotientPresentation::basis_name(std::uint32_t k) const {
    if (k >= basis_.size())
        throw domain_error("basis index out of range");
    return basis_[k];
}

std::optional<std::uint32_t>
QuotientPresentation::basis_index(const std::string& name) const {
    auto it = basis_index_.find(name);
    if (it == basis_index_.end())
        return std::nullopt;
    return it->second;
}

void QuotientPresentation::set_bracket(std::uint32_t i, std::uint32_t j,
                                       LinComb value) {
    if (i >= dim() || j >= dim())
        throw domain_error("bracket index out of range");
    if (kind_ == QuotientKind::FreeAbelian && !value.empty())
        throw domain_error("free abelian quotient admits no nonzero brackets");
    for (const auto& [k, c] : value) {
        if (k >= dim())
            throw domain_error("bracket value index out of range");
        if (!(c.field() == field_))
            throw mismatch_error("bracket coefficient field mismatch");
    }
    table_[{i, j}] = std::move(value);
}

void QuotientPresentation::set_projection(std::uint32_t generator,
                                          LinComb image) {
    if (generator >= alphabet_->size())
        throw domain_error("projection generator index out of range");
    for (const auto& [k, c] : image) {
        if (k >= dim())
            throw domain_error("projection image index out of range");
        if (!(c.field() == field_))
            throw mismatch_error("projection coefficient field mismatch");
    }
    projection_[generator] = std::move(image);
}

const LinComb& QuotientPresentation::projection(std::uint32_t generator) const {
    if (generator >= alphabet_->size())
        throw domain_error("projection generator index out of range");
    return projection_[generator];
}

LinComb QuotientPresentation::bracket_of(std::uint32_t i, std::uint32_t j) const {
    if (i == j)
        return {};
    auto it = table_.find({i, j});
    if (it != table_.end())
        return it->second;
    it = table_.find({j, i});
    if (it != table_.end())
        return negated(it->second);
    return {};
}

bool QuotientPresentation::commutative() const {
    for (const auto& [key, value] : table_)
        if (!value.empty())
            return false;
    return true;
}

void QuotientPresentation::validate() const {
    // antisymmetry of the stored table
    for (const auto& [key, value] : table_) {
        auto [i, j] = key;
        if (i == j) {
            if (!value.empty())
                throw domain_error("antisymmetry violated: [" + basis_[i] +
                                   ", " + basis_[i] + "] = " +
                                   lincomb_str(*this, value) + " (must be 0)");
            continue;
        }
        auto rev = table_.find({j, i});
        if (rev != table_.end()) {
            LinComb sum = value;
            lin_add(sum, rev->second, Scalar::one(field_));
            if (!sum.empty())
                throw domain_error("antisymmetry violated at ([" + basis_[i] +
                                   ", " + basis_[j] + "], [" + basis_[j] +
                                   ", " + basis_[i] + "])");
        }
    }
    // Jacobi, exhaustively over basis triples
    auto brk = [&](const LinComb& a, std::uint32_t k) {
        LinComb out;
        for (const auto& [m, c] : a)
            lin_add(out, bracket_of(m, k), c);
        return out;
    };
    for (std::uint32_t i = 0; i < dim(); ++i) {
        for (std::uint32_t j = i + 1; j < dim(); ++j) {
            for (std::uint32_t k = j + 1; k < dim(); ++k) {
                LinComb acc = brk(bracket_of(i, j), k);
                lin_add(acc, brk(bracket_of(j, k), i), Scalar::one(field_));
                lin_add(acc, brk(bracket_of(k, i), j), Scalar::one(field_));
                if (!acc.empty())
                    throw domain_error(
                        "Jacobi identity violated on (" + basis_[i] + ", " +
                        basis_[j] + ", " + basis_[k] + "): residue " +
                        lincomb_str(*this, acc));
            }
        }
    }
}

bool QuotientPresentation::same_as(const QuotientPresentation& o) const {
    if (kind_ != o.kind_ || basis_ != o.basis_ || !(field_ == o.field_) ||
        !(*alphabet_ == *o.alphabet_) || max_degree_ != o.max_degree_)
        return false;
    // compare antisymmetrized tables and projections entrywise
    for (std::uint32_t i = 0; i < dim(); ++i) {
        for (std::uint32_t j = 0; j < dim(); ++j)
            if (bracket_of(i, j) != o.bracket_of(i, j))
                return false;
    }
    return projection_ == o.projection_;
}

UQElement::UQElement(PresentationPtr pres) : pres_(std::move(pres)) {}

UQElement UQElement::constant(PresentationPtr pres, const Scalar& c) {
    UQElement e(std::move(pres));
    e.add_term(PBWMonomial{}, c);
    return e;
}

UQElement UQElement::one(PresentationPtr pres) {
    const FieldSpec fs = pres->field();
    return constant(std::move(pres), Scalar::one(fs));
}

UQElement UQElement::basis_element(PresentationPtr pres, std::uint32_t k) {
    if (k >= pres->dim())
        throw domain_error("basis index out of range");
    UQElement e(pres);
    e.add_term(PBWMonomial{{k}}, Scalar::one(pres->field()));
    return e;
}

UQElement UQElement::from_lincomb(PresentationPtr pres, const LinComb& lc) {
    UQElement e(std::move(pres));
    for (const auto& [k, c] : lc)
        e.add_term(PBWMonomial{{k}}, c);
    return e;
}

std::optional<int> UQElement::degree() const {
    if (terms_.empty())
        return std::nullopt;
    return terms_.rbegin()->first.degree();
}

Scalar UQElement::coefficient(const PBWMonomial& m) const {
    auto it = terms_.find(m);
    if (it == terms_.end())
        return Scalar::zero(pres_->field());
    return it->second;
}

void UQElement::add_term(const PBWMonomial& m, const Scalar& c) {
    if (!(c.field() == pres_->field()))
        throw mismatch_error("coefficient field mismatch");
    if (!std::is_sorted(m.indices.begin(), m.indices.end()))
        throw domain_error("PBW monomial not in normal form");
    if (c.is_zero())
        return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero())
            terms_.erase(it);
    }
}

void UQElement::check_compatible(const UQElement& o) const {
    if (!pres_->same_as(*o.pres_))
        throw mismatch_error("quotient presentation mismatch");
}

UQElement UQElement::operator-() const {
    UQElement r(pres_);
    for (const auto& [m, c] : terms_)
        r.terms_.emplace(m, -c);
    return r;
}

UQElement operator+(const UQElement& a, const UQElement& b) {
    a.check_compatible(b);
    UQElement r = a;
    for (const auto& [m, c] : b.terms_)
        r.add_term(m, c);
    return r;
}

UQElement operator-(const UQElement& a, const UQElement& b) { return a + (-b); }

UQElement operator*(const UQElement& a, const UQElement& b) {
    return uq_mul(a, b);
}

UQElement operator*(const Scalar& c, const UQElement& a) {
    if (!(c.field() == a.field()))
        throw mismatch_error("scalar field mismatch");
    UQElement r(a.pres_);
    if (c.is_zero())
        return r;
    for (const auto& [m, ac] : a.terms_)
        r.add_term(m, c * ac);
    return r;
}

bool UQElement::operator==(const UQElement& o) const {
    return pres_->same_as(*o.pres_) && terms_ == o.terms_;
}

std::string UQElement::to_string() const {
    if (terms_.empty())
        return "0";
    std::vector<std::pair<std::string, Scalar>> out;
    auto mono_str = [&](const PBWMonomial& m) {
        std::vector<std::string> names;
        names.reserve(m.indices.size());
        for (std::uint32_t k : m.indices)
            names.push_back(pres_->basis_name(k));
        return detail::power_group(names);
    };
    for (auto it = terms_.rbegin(); it != terms_.rend();) {
        std::size_t len = it->first.indices.size();
        auto stop = it;
        while (stop != terms_.rend() && stop->first.indices.size() == len)
            ++stop;
        std::vector<std::pair<std::string, Scalar>> bucket;
        for (auto b = it; b != stop; ++b)
            bucket.emplace_back(mono_str(b->first), b->second);
        std::reverse(bucket.begin(), bucket.end());
        out.insert(out.end(), bucket.begin(), bucket.end());
        it = stop;
    }
    return detail::join_terms(out);
}

UQElement straighten(const PresentationPtr& pres,
                     const std::vector<std::uint32_t>& word,
                     RewriteOrder order) {
    if (static_cast<int>(word.size()) > pres->max_degree())
        throw resource_error("degree cap " + std::to_string(pres->max_degree()) +
                             " exceeded by a product of length " +
                             std::to_string(word.size()));
    for (std::uint32_t k : word)
        if (k >= pres->dim())
            throw domain_error("basis index out of range");
    UQElement out(pres);
    if (pres->commutative()) {
        // every rewrite is a plain swap, so the normal form is the sorted word
        PBWMonomial m{word};
        std::sort(m.indices.begin(), m.indices.end());
        out.add_term(m, Scalar::one(pres->field()));
        return out;
    }
    struct Pending {
        std::vector<std::uint32_t> w;
        Scalar c;
    };
    std::vector<Pending> stack;
    stack.push_back({word, Scalar::one(pres->field())});
    while (!stack.empty()) {
        Pending cur = std::move(stack.back());
        stack.pop_back();
        std::optional<std::size_t> pos;
        if (!cur.w.empty()) {
            if (order == RewriteOrder::Leftmost) {
                for (std::size_t k = 0; k + 1 < cur.w.size(); ++k) {
                    if (cur.w[k] > cur.w[k + 1]) {
                        pos = k;
                        break;
                    }
                }
            } else {
                for (std::size_t k = cur.w.size() - 1; k-- > 0;) {
                    if (cur.w[k] > cur.w[k + 1]) {
                        pos = k;
                        break;
                    }
                }
            }
        }
        if (!pos) {
            out.add_term(PBWMonomial{std::move(cur.w)}, cur.c);
            continue;
        }
        const std::size_t k = *pos;
        const std::uint32_t hi = cur.w[k], lo = cur.w[k + 1];
        // e_hi e_lo = e_lo e_hi + [e_hi, e_lo]
        std::vector<std::uint32_t> swapped = cur.w;
        std::swap(swapped[k], swapped[k + 1]);
        for (const auto& [b, coeff] : pres->bracket_of(hi, lo)) {
            std::vector<std::uint32_t> reduced = cur.w;
            reduced[k] = b;
            reduced.erase(reduced.begin() + static_cast<std::ptrdiff_t>(k) + 1);
            stack.push_back({std::move(reduced), cur.c * coeff});
        }
        stack.push_back({std::move(swapped), cur.c});
    }
    return out;
}

UQElement uq_mul(const UQElement& a, const UQElement& b) {
    if (!a.presentation()->same_as(*b.presentation()))
        throw mismatch_error("quotient presentation mismatch");
    const auto& pres = a.presentation();
    UQElement r(pres);
    for (const auto& [ma, ca] : a.terms()) {
        for (const auto& [mb, cb] : b.terms()) {
            std::vector<std::uint32_t> w = ma.indices;
            w.insert(w.end(), mb.indices.begin(), mb.indices.end());
            r += (ca * cb) * straighten(pres, w);
        }
    }
    return r;
}

UQElement project(const PresentationPtr& pres, const NCPoly& p) {
    if (!(*p.alphabet() == *pres->alphabet()))
        throw mismatch_error("alphabet mismatch");
    if (!(p.field() == pres->field()))
        throw mismatch_error("field mismatch");
    UQElement out(pres);
    for (const auto& [w, c] : p.terms()) {
        UQElement img = UQElement::constant(pres, c);
        for (std::uint32_t letter : w)
            img = uq_mul(img, UQElement::from_lincomb(pres, pres->projection(letter)));
        out += img;
    }
    return out;
}

} // namespace liemult
