#include "liemult/freealg.hpp"

#include <algorithm>

#include "liemult/printing.hpp"

namespace liemult {

Alphabet::Alphabet(std::vector<std::string> names) : names_(std::move(names)) {
    if (names_.empty())
        throw domain_error("alphabet must have at least one generator");
    for (std::uint32_t i = 0; i < names_.size(); ++i) {
        if (names_[i].empty())
            throw domain_error("empty generator name");
        if (!index_.emplace(names_[i], i).second)
            throw domain_error("duplicate generator name '" + names_[i] + "'");
    }
}

const std::string& Alphabet::name(std::uint32_t i) const {
    if (i >= names_.size())
        throw domain_error("generator index out of range");
    return names_[i];
}

std::optional<std::uint32_t> Alphabet::index_of(const std::string& name) const {
    auto it = index_.find(name);
    if (it == index_.end())
        return std::nullopt;
    return it->second;
}

NCPoly NCPoly::constant(AlphabetPtr a, const Scalar& c) {
    NCPoly p(std::move(a), c.field());
    p.add_term(Word{}, c);
    return p;
}

NCPoly NCPoly::one(AlphabetPtr a, const FieldSpec& fs) {
    return constant(std::move(a), Scalar::one(fs));
}

NCPoly NCPoly::generator(AlphabetPtr a, const FieldSpec& fs, std::uint32_t i) {
    if (i >= a->size())
        throw domain_error("generator index out of range");
    NCPoly p(std::move(a), fs);
    p.add_term(Word{i}, Scalar::one(fs));
    return p;
}

NCPoly NCPoly::monomial(AlphabetPtr a, Word w, Scalar c) {
    for (std::uint32_t i : w)
        if (i >= a->size())
            throw domain_error("generator index out of range");
    NCPoly p(std::move(a), c.field());
    p.add_term(w, c);
    return p;
}

std::optional<int> NCPoly::degree() const {
    if (terms_.empty())
        return std::nullopt;
    // terms are in deglex order, so the last word is longest
    return static_cast<int>(terms_.rbegin()->first.size());
}

Scalar NCPoly::coefficient(const Word& w) const {
    auto it = terms_.find(w);
    if (it == terms_.end())
        return Scalar::zero(field_);
    return it->second;
}

void NCPoly::add_term(const Word& w, const Scalar& c) {
    if (!(c.field() == field_))
        throw mismatch_error("coefficient field mismatch");
    if (c.is_zero())
        return;
    auto [it, inserted] = terms_.emplace(w, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero())
            terms_.erase(it);
    }
}

void NCPoly::check_compatible(const NCPoly& o) const {
    if (!(*alphabet_ == *o.alphabet_))
        throw mismatch_error("alphabet mismatch");
    if (!(field_ == o.field_))
        throw mismatch_error("scalar field mismatch");
}

NCPoly NCPoly::operator-() const {
    NCPoly r(alphabet_, field_);
    for (const auto& [w, c] : terms_)
        r.terms_.emplace(w, -c);
    return r;
}

NCPoly operator+(const NCPoly& p, const NCPoly& q) {
    p.check_compatible(q);
    NCPoly r = p;
    for (const auto& [w, c] : q.terms_)
        r.add_term(w, c);
    return r;
}

NCPoly operator-(const NCPoly& p, const NCPoly& q) { return p + (-q); }

NCPoly operator*(const NCPoly& p, const NCPoly& q) {
    p.check_compatible(q);
    NCPoly r(p.alphabet_, p.field_);
    for (const auto& [w1, c1] : p.terms_) {
        for (const auto& [w2, c2] : q.terms_) {
            Word w = w1;
            w.insert(w.end(), w2.begin(), w2.end());
            r.add_term(w, c1 * c2);
        }
    }
    return r;
}

NCPoly operator*(const Scalar& c, const NCPoly& p) {
    if (!(c.field() == p.field_))
        throw mismatch_error("scalar field mismatch");
    NCPoly r(p.alphabet_, p.field_);
    if (c.is_zero())
        return r;
    for (const auto& [w, pc] : p.terms_)
        r.add_term(w, c * pc);
    return r;
}

bool NCPoly::operator==(const NCPoly& o) const {
    return *alphabet_ == *o.alphabet_ && field_ == o.field_ &&
           terms_ == o.terms_;
}

LeftDecomposition NCPoly::left_decompose() const {
    if (!augmentation().is_zero())
        throw domain_error(
            "left decomposition needs a zero constant term, got " +
            augmentation().to_string());
    LeftDecomposition d;
    for (const auto& [w, c] : terms_) {
        std::uint32_t head = w.front();
        auto it = d.components.find(head);
        if (it == d.components.end())
            it = d.components.emplace(head, NCPoly(alphabet_, field_)).first;
        it->second.add_term(Word(w.begin() + 1, w.end()), c);
    }
    return d;
}

std::string NCPoly::to_string() const {
    if (terms_.empty())
        return "0";
    // descending degree, lexicographic within a degree
    std::vector<std::pair<std::string, Scalar>> out;
    auto word_names = [&](const Word& w) {
        std::vector<std::string> names;
        names.reserve(w.size());
        for (std::uint32_t i : w)
            names.push_back(alphabet_->name(i));
        return detail::power_group(names);
    };
    for (auto it = terms_.rbegin(); it != terms_.rend();) {
        std::size_t len = it->first.size();
        auto stop = it;
        while (stop != terms_.rend() && stop->first.size() == len)
            ++stop;
        // [it, stop) is one degree bucket in reverse lex order
        std::vector<std::pair<std::string, Scalar>> bucket;
        for (auto b = it; b != stop; ++b)
            bucket.emplace_back(word_names(b->first), b->second);
        std::reverse(bucket.begin(), bucket.end());
        out.insert(out.end(), bucket.begin(), bucket.end());
        it = stop;
    }
    return detail::join_terms(out);
}

} // namespace liemult
