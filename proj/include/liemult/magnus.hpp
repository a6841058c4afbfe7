#ifndef LIEMULT_MAGNUS_HPP
#define LIEMULT_MAGNUS_HPP

#include <map>

#include "liemult/quotient.hpp"

namespace liemult {

/// Image of an ideal element under the embedding into
/// deltaU(L) (x)_{U(L)} U(L/I): finitely many coordinates
/// sum_x x (x) component(x), keyed by the generator x.
struct MagnusImage {
    PresentationPtr pres;
    std::map<std::uint32_t, UQElement> components;

    UQElement component(std::uint32_t x) const;
    bool is_zero() const;
    bool operator==(const MagnusImage& o) const;
};

/// phi(a): left-decompose a = sum_x x * u_x and project each coordinate.
/// Rejects elements with a nonzero constant term and elements outside the
/// ideal (nonzero projection).
MagnusImage magnus_phi(const PresentationPtr& pres, const NCPoly& a);

/// Coordinate projection p_x.
UQElement magnus_project(const MagnusImage& img, std::uint32_t x);

/// p_x(phi(a)), the scalar-algebra leaf value of the witness pipeline.
UQElement leaf_image(const PresentationPtr& pres, const NCPoly& a,
                     std::uint32_t x);

} // namespace liemult

#endif
