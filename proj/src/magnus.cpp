#include "liemult/magnus.hpp"

namespace liemult {

UQElement MagnusImage::component(std::uint32_t x) const {
    if (x >= pres->alphabet()->size())
        throw domain_error("generator index out of range");
    auto it = components.find(x);
    if (it == components.end())
        return UQElement(pres);
    return it->second;
}

bool MagnusImage::is_zero() const {
    for (const auto& [x, u] : components)
        if (!u.is_zero())
            return false;
    return true;
}

bool MagnusImage::operator==(const MagnusImage& o) const {
    const std::uint32_t gens = pres->alphabet()->size();
    for (std::uint32_t x = 0; x < gens; ++x)
        if (!(component(x) == o.component(x)))
            return false;
    return true;
}

MagnusImage magnus_phi(const PresentationPtr& pres, const NCPoly& a) {
    if (!a.augmentation().is_zero())
        throw domain_error("magnus_phi rejects a nonzero constant term: " +
                           a.augmentation().to_string());
    if (!project(pres, a).is_zero())
        throw domain_error("magnus_phi needs an element of the ideal, but " +
                           a.to_string() + " has nonzero projection " +
                           project(pres, a).to_string());
    MagnusImage img{pres, {}};
    for (auto& [x, u] : a.left_decompose().components) {
        UQElement c = project(pres, u);
        if (!c.is_zero())
            img.components.emplace(x, std::move(c));
    }
    return img;
}

UQElement magnus_project(const MagnusImage& img, std::uint32_t x) {
    return img.component(x);
}

UQElement leaf_image(const PresentationPtr& pres, const NCPoly& a,
                     std::uint32_t x) {
    return magnus_phi(pres, a).component(x);
}

} // namespace liemult
