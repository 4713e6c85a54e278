#pragma once

#include "moduli/complex.hpp"

namespace moduli {

/// (gamma, beta, beta_tilde) = (tr[f,g] - 2, tr^2 f - 4, tr^2 g - 4).
struct PrincipalCharacter {
    Complex gamma{};
    Complex beta{};
    Complex beta_tilde{};

    friend bool operator==(const PrincipalCharacter&, const PrincipalCharacter&) = default;
};

/// A point (gamma, beta) of the two-dimensional slice; beta_tilde forgotten.
struct SlicePoint {
    Complex gamma{};
    Complex beta{};

    friend bool operator==(const SlicePoint&, const SlicePoint&) = default;
};

}  // namespace moduli
