#pragma once

#include <array>
#include <optional>
#include <variant>
#include <vector>

#include "moduli/complex.hpp"
#include "moduli/principal_character.hpp"

namespace moduli {

inline constexpr double kDefaultTol = 1e-9;
inline constexpr int kDefaultPMax = 200;

/// Row-major 2x2 complex matrix with no determinant constraint.
using Matrix2 = std::array<Complex, 4>;

/// A Moebius transformation represented by an SL(2,C) lift.
///
/// Construction always rescales by the principal square root of the
/// determinant, so every instance satisfies ad - bc = 1 up to rounding.
/// Both lifts +M and -M describe the same transformation; everything exported
/// from this module is insensitive to that choice.
class MoebiusMap {
public:
    MoebiusMap() = default;  // identity
    MoebiusMap(Complex a, Complex b, Complex c, Complex d);
    explicit MoebiusMap(const Matrix2& m) : MoebiusMap(m[0], m[1], m[2], m[3]) {}

    static MoebiusMap identity() { return {}; }

    /// Keeps the entries verbatim; throws Error(SingularMatrix) unless
    /// |det - 1| < 1e-10. Used when reading back serialized lifts.
    static MoebiusMap from_unit_entries(const Matrix2& m);

    Complex a() const { return m_[0]; }
    Complex b() const { return m_[1]; }
    Complex c() const { return m_[2]; }
    Complex d() const { return m_[3]; }
    const Matrix2& entries() const { return m_; }

    Complex trace() const { return m_[0] + m_[3]; }
    Complex det() const { return m_[0] * m_[3] - m_[1] * m_[2]; }

    /// The other lift, -M.
    MoebiusMap negated() const;

    /// Evaluates (az+b)/(cz+d) for finite z (may return an infinite value).
    Complex apply(Complex z) const;

    friend bool operator==(const MoebiusMap&, const MoebiusMap&) = default;

private:
    struct Unchecked {};
    MoebiusMap(Unchecked, const Matrix2& m) : m_(m) {}
    friend MoebiusMap inverse(const MoebiusMap&);

    Matrix2 m_{Complex{1.0}, Complex{}, Complex{}, Complex{1.0}};
};

/// raw / sqrt(det raw). Throws Error(SingularMatrix) when |det| <= 1e-14.
MoebiusMap normalize(const Matrix2& raw);

MoebiusMap compose(const MoebiusMap& f, const MoebiusMap& g);
MoebiusMap inverse(const MoebiusMap& f);
inline MoebiusMap operator*(const MoebiusMap& f, const MoebiusMap& g) { return compose(f, g); }

/// h f h^-1
MoebiusMap conjugate(const MoebiusMap& f, const MoebiusMap& h);

/// [f,g] = f g f^-1 g^-1
MoebiusMap commutator(const MoebiusMap& f, const MoebiusMap& g);

Complex beta(const MoebiusMap& f);
Complex gamma(const MoebiusMap& f, const MoebiusMap& g);

/// Right-hand side of the Fricke trace identity
/// beta(f) + beta(g) + beta(fg) - tr f tr g tr fg + 8, an independent route to gamma.
Complex fricke_gamma(const MoebiusMap& f, const MoebiusMap& g);

/// Max-entry distance between f and g, minimised over the lift sign of g.
double projective_distance(const MoebiusMap& f, const MoebiusMap& g);

bool is_projective_identity(const MoebiusMap& f, double tol = kDefaultTol);

// ---------------------------------------------------------------------------
// Classification

namespace element {
struct Identity {
    friend bool operator==(Identity, Identity) = default;
};
struct Parabolic {
    friend bool operator==(Parabolic, Parabolic) = default;
};
/// Rotation by 2*pi*k/p; 1 <= k <= p/2, gcd(k,p) = 1.
struct EllipticRational {
    int k = 1;
    int p = 2;
    friend bool operator==(EllipticRational, EllipticRational) = default;
};
/// Elliptic whose rotation angle matched no k/p with p <= p_max.
struct EllipticIrrationalAngle {
    friend bool operator==(EllipticIrrationalAngle, EllipticIrrationalAngle) = default;
};
struct Loxodromic {
    friend bool operator==(Loxodromic, Loxodromic) = default;
};
}  // namespace element

using ElementClass = std::variant<element::Identity, element::Parabolic, element::EllipticRational,
                                  element::EllipticIrrationalAngle, element::Loxodromic>;

const char* kind_name(const ElementClass& c);

struct EllipticOrder {
    int k = 1;
    int p = 2;
    friend bool operator==(EllipticOrder, EllipticOrder) = default;
};

/// Smallest order p <= p_max with beta = -4 sin^2(k pi / p) within tol.
///
/// Candidates are the continued-fraction convergents and semiconvergents of
/// asin(sqrt(-beta/4))/pi, each re-verified against the closed form.
/// Throws Error(NotElliptic) when beta is not real within tol or lies
/// outside [-4, 0).
std::optional<EllipticOrder> elliptic_order(Complex beta_value, int p_max = kDefaultPMax,
                                            double tol = kDefaultTol);

/// Identity / parabolic (|beta| < tol) / elliptic (beta real in [-4,-tol]) /
/// loxodromic (everything else, i.e. beta outside [-4,0]).
ElementClass classify(const MoebiusMap& f, double tol = kDefaultTol, int p_max = kDefaultPMax);

// ---------------------------------------------------------------------------
// Fixed points on the Riemann sphere

struct SpherePoint {
    Complex z{};
    bool infinite = false;

    static SpherePoint at_infinity() { return {Complex{}, true}; }
    friend bool operator==(const SpherePoint&, const SpherePoint&) = default;
};

/// Chordal distance 2|z-w| / sqrt((1+|z|^2)(1+|w|^2)), extended to infinity.
double chordal_distance(const SpherePoint& p, const SpherePoint& q);

/// One point for parabolics, two otherwise. Throws Error(IsIdentity).
std::vector<SpherePoint> fixed_points(const MoebiusMap& f, double tol = kDefaultTol);

/// Fixed point sets disjoint with chordal separation >= tol.
bool fix_disjoint(const MoebiusMap& f, const MoebiusMap& h, double tol = kDefaultTol);

// ---------------------------------------------------------------------------
// Axis geometry

/// Complex distance delta + i theta between the axes of the generators.
struct AxisDistance {
    double delta = 0.0;  // >= 0
    double theta = 0.0;  // (-pi/2, pi/2]

    Complex value() const { return {delta, theta}; }
    friend bool operator==(const AxisDistance&, const AxisDistance&) = default;
};

/// Solves sinh^2(delta + i theta) = 4 gamma / (beta beta_tilde).
/// Throws Error(ParabolicGenerator) when |beta| or |beta_tilde| <= tol.
AxisDistance complex_distance(const PrincipalCharacter& chr, double tol = kDefaultTol);

}  // namespace moduli
