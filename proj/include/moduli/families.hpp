#pragma once

#include <string>
#include <tuple>
#include <vector>

#include "moduli/moebius.hpp"
#include "moduli/principal_character.hpp"

namespace moduli {

/// Square-root and normalisation choices made while realising a character.
struct BranchNotes {
    bool parabolic_branch = false;  // |beta| <= tol: f = [[1,1],[0,1]]
    bool lambda_inverted = false;   // lambda replaced by -1/lambda to get |lambda| >= 1
    bool lambda_negated = false;    // other lift taken to get Im lambda >= 0
    bool lambda_reflected = false;  // unit lambda mapped into the first quadrant
    bool elementary = false;        // gamma = 0 or gamma = beta within tol

    friend bool operator==(const BranchNotes&, const BranchNotes&) = default;
};

/// Generators f, g with g an involution and character (gamma, beta, -4).
///
/// Diagonal branch: f = diag(lambda, 1/lambda), g = [[a, 1], [-(1+a^2), -a]].
/// Parabolic branch: f = [[1, 1], [0, 1]], g = [[i, 0], [a, -i]] with a = sqrt(gamma);
/// lambda is 0 there.
struct RealizedPair {
    MoebiusMap f;
    MoebiusMap g;
    Complex lambda{};
    Complex a{};
    BranchNotes notes;
};

/// Canonical representative of {lambda, -lambda, 1/lambda, -1/lambda}:
/// |lambda| >= 1, then Im lambda >= 0 (Re > 0 on the real axis), and for unit
/// lambda also Re lambda >= 0.
Complex canonical_lambda(Complex lambda, BranchNotes* notes = nullptr);

RealizedPair realize(const SlicePoint& pt, double tol = kDefaultTol);

/// (1 + a^2)(lambda^2 - 1)^2 / lambda^2. Throws Error(DegenerateLambda) for
/// lambda near 0 or +-1.
Complex gamma_normal_form(Complex lambda, Complex a);

/// c (c + 2i (lambda^2 - 1)/lambda), gamma for f = [[lambda, 1], [0, 1/lambda]],
/// g = [[i, 0], [c, -i]]. Throws Error(DegenerateLambda) for lambda near 0.
Complex parabolic_gamma_form(Complex lambda, Complex c);

// ---------------------------------------------------------------------------
// Figure-eight knot group and its (p, 0) orbifold Dehn fillings

/// (1 + i sqrt 3)/2
Complex figure_eight_parameter();

/// f = [[1,1],[0,1]], h = [[1,0],[a,1]] with a = figure_eight_parameter().
std::pair<MoebiusMap, MoebiusMap> figure_eight_generators();

/// Projective max-entry distance between h f h^-1 f h and f h f^-1 h f.
double relator_residual(const MoebiusMap& f, const MoebiusMap& h);

struct DehnFamilyPoint {
    int p = 7;
    Complex a_p{};
    MoebiusMap f_p;
    MoebiusMap h_p;
    Complex beta_p{};
    Complex gamma_p{};  // closed form a_p (a_p - 2 + 2 cos(2 pi/p))
    double relator_residual = 0.0;
    bool hyperbolic_regime = true;  // p >= 7
};

/// a_p = (3 - 2cos(2pi/p) - sqrt(-1 - 4cos(2pi/p) + 2cos(4pi/p)))/2, principal root.
Complex dehn_parameter(int p);

/// The limit of a_p^2 along the principal branch, (-1 - i sqrt 3)/2.
Complex dehn_gamma_limit();

/// Throws Error(InvalidOrder) for p < 3; 3 <= p < 7 is computed but flagged.
DehnFamilyPoint dehn_surgery_point(int p);

/// Points pmin..pmax in order; evaluated concurrently when threads > 1.
std::vector<DehnFamilyPoint> dehn_family(int pmin, int pmax, int threads = 1);

// ---------------------------------------------------------------------------

struct CanonicalPair {
    MoebiusMap f;
    MoebiusMap g;
    MoebiusMap conjugator;  // f' = C f C^-1, g' = C g C^-1
};

/// Conjugates so that f becomes [[1,1],[0,1]] (parabolic) or diag(lambda, 1/lambda)
/// with lambda = canonical_lambda(lambda). Throws Error(IsIdentity).
CanonicalPair canonicalize_pair(const MoebiusMap& f, const MoebiusMap& g, double tol = kDefaultTol);

}  // namespace moduli
