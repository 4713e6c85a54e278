#include "moduli/moebius.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "moduli/error.hpp"

namespace moduli {

namespace {

constexpr double kSingularDet = 1e-14;

Matrix2 multiply(const Matrix2& x, const Matrix2& y) {
    return {x[0] * y[0] + x[1] * y[2], x[0] * y[1] + x[1] * y[3],
            x[2] * y[0] + x[3] * y[2], x[2] * y[1] + x[3] * y[3]};
}

}  // namespace

MoebiusMap::MoebiusMap(Complex a, Complex b, Complex c, Complex d) : m_{a, b, c, d} {
    for (const Complex& e : m_)
        if (!is_finite(e)) throw Error(ErrorKind::NonFinite, "matrix entry is not finite");
    const Complex det = a * d - b * c;
    if (std::abs(det) <= kSingularDet) throw Error(ErrorKind::SingularMatrix, "|det| <= 1e-14");
    if (det != Complex{1.0}) {
        const Complex s = principal_sqrt(det);
        for (Complex& e : m_) e /= s;
    }
}

MoebiusMap MoebiusMap::from_unit_entries(const Matrix2& m) {
    for (const Complex& e : m)
        if (!is_finite(e)) throw Error(ErrorKind::NonFinite, "matrix entry is not finite");
    if (std::abs(m[0] * m[3] - m[1] * m[2] - 1.0) >= 1e-10)
        throw Error(ErrorKind::SingularMatrix, "entries do not have unit determinant");
    return MoebiusMap(Unchecked{}, m);
}

MoebiusMap MoebiusMap::negated() const { return MoebiusMap(Unchecked{}, {-m_[0], -m_[1], -m_[2], -m_[3]}); }

Complex MoebiusMap::apply(Complex z) const { return (m_[0] * z + m_[1]) / (m_[2] * z + m_[3]); }

MoebiusMap normalize(const Matrix2& raw) { return MoebiusMap(raw); }

MoebiusMap compose(const MoebiusMap& f, const MoebiusMap& g) { return MoebiusMap(multiply(f.entries(), g.entries())); }

MoebiusMap inverse(const MoebiusMap& f) { return MoebiusMap(MoebiusMap::Unchecked{}, {f.d(), -f.b(), -f.c(), f.a()}); }

MoebiusMap conjugate(const MoebiusMap& f, const MoebiusMap& h) { return h * f * inverse(h); }

MoebiusMap commutator(const MoebiusMap& f, const MoebiusMap& g) { return f * g * inverse(f) * inverse(g); }

Complex beta(const MoebiusMap& f) {
    const Complex t = f.trace();
    return t * t - 4.0;
}

// tr[f,g] - 2 = -det(fg - gf) in SL(2,C); the determinant form avoids the
// cancellation of forming the four-fold product first.
Complex gamma(const MoebiusMap& f, const MoebiusMap& g) {
    const Matrix2 fg = (f * g).entries(), gf = (g * f).entries();
    return (fg[1] - gf[1]) * (fg[2] - gf[2]) - (fg[0] - gf[0]) * (fg[3] - gf[3]);
}

Complex fricke_gamma(const MoebiusMap& f, const MoebiusMap& g) {
    const MoebiusMap fg = f * g;
    return beta(f) + beta(g) + beta(fg) - f.trace() * g.trace() * fg.trace() + 8.0;
}

double projective_distance(const MoebiusMap& f, const MoebiusMap& g) {
    double plus = 0.0;
    double minus = 0.0;
    for (std::size_t i = 0; i < 4; ++i) {
        plus = std::max(plus, std::abs(f.entries()[i] - g.entries()[i]));
        minus = std::max(minus, std::abs(f.entries()[i] + g.entries()[i]));
    }
    return std::min(plus, minus);
}

bool is_projective_identity(const MoebiusMap& f, double tol) {
    return projective_distance(f, MoebiusMap::identity()) < tol;
}

const char* kind_name(const ElementClass& c) {
    struct Visitor {
        const char* operator()(element::Identity) const { return "Identity"; }
        const char* operator()(element::Parabolic) const { return "Parabolic"; }
        const char* operator()(element::EllipticRational) const { return "EllipticRational"; }
        const char* operator()(element::EllipticIrrationalAngle) const { return "EllipticIrrationalAngle"; }
        const char* operator()(element::Loxodromic) const { return "Loxodromic"; }
    };
    return std::visit(Visitor{}, c);
}

std::optional<EllipticOrder> elliptic_order(Complex beta_value, int p_max, double tol) {
    const double re = beta_value.real();
    if (std::fabs(beta_value.imag()) > tol || re >= 0.0 || re < -4.0 - tol)
        throw Error(ErrorKind::NotElliptic, "beta is not in [-4, 0)");
    if (p_max < 2) throw Error(ErrorKind::InvalidArgument, "p_max must be >= 2");

    // beta = -4 sin^2(pi t) with t in (0, 1/2]
    const double s2 = std::clamp(-re / 4.0, 0.0, 1.0);
    const double t = std::asin(std::sqrt(s2)) / std::numbers::pi;

    auto matches = [&](long k, long p) {
        if (k < 1 || p < 2 || p > p_max) return false;
        const double s = std::sin(static_cast<double>(k) * std::numbers::pi / static_cast<double>(p));
        return std::fabs(re + 4.0 * s * s) < tol && std::fabs(beta_value.imag()) < tol;
    };

    // Convergents h/k of t; between consecutive convergents we also visit the
    // semiconvergents so candidate denominators increase monotonically.
    long h_prev = 1, k_prev = 0;   // h_{-1}/k_{-1}
    long h_curr = 0, k_curr = 1;   // h_{-2}/k_{-2} swapped in below
    double x = t;
    for (int iter = 0; iter < 64; ++iter) {
        const double floor_x = std::floor(x);
        const long a = static_cast<long>(floor_x);
        // semiconvergents (h_{n-2} + j h_{n-1}) / (k_{n-2} + j k_{n-1}), j = 1..a
        for (long j = 1; j <= a; ++j) {
            const long h = h_curr + j * h_prev;
            const long k = k_curr + j * k_prev;
            if (k > p_max) return std::nullopt;
            if (matches(h, k)) return EllipticOrder{static_cast<int>(h), static_cast<int>(k)};
        }
        const long h_next = h_curr + a * h_prev;
        const long k_next = k_curr + a * k_prev;
        h_curr = h_prev;
        k_curr = k_prev;
        h_prev = h_next;
        k_prev = k_next;
        const double frac = x - floor_x;
        if (frac < 1e-15) break;
        x = 1.0 / frac;
        if (!std::isfinite(x) || x > 1e15) break;
    }
    return std::nullopt;
}

ElementClass classify(const MoebiusMap& f, double tol, int p_max) {
    if (is_projective_identity(f, tol)) return element::Identity{};
    const Complex b = beta(f);
    if (std::abs(b) < tol) return element::Parabolic{};
    if (std::fabs(b.imag()) < tol && b.real() >= -4.0 - tol && b.real() <= -tol) {
        if (auto order = elliptic_order(b, p_max, tol)) return element::EllipticRational{order->k, order->p};
        return element::EllipticIrrationalAngle{};
    }
    return element::Loxodromic{};
}

double chordal_distance(const SpherePoint& p, const SpherePoint& q) {
    if (p.infinite && q.infinite) return 0.0;
    if (p.infinite) return 2.0 / std::sqrt(1.0 + std::norm(q.z));
    if (q.infinite) return 2.0 / std::sqrt(1.0 + std::norm(p.z));
    return 2.0 * std::abs(p.z - q.z) / std::sqrt((1.0 + std::norm(p.z)) * (1.0 + std::norm(q.z)));
}

std::vector<SpherePoint> fixed_points(const MoebiusMap& f, double tol) {
    if (is_projective_identity(f, tol)) throw Error(ErrorKind::IsIdentity, "identity fixes every point");
    // c z^2 + (d - a) z - b = 0, discriminant (d - a)^2 + 4bc = beta
    const Complex a = f.a(), b = f.b(), c = f.c(), d = f.d();
    const Complex disc = beta(f);
    const bool parabolic = std::abs(disc) < tol;
    if (std::abs(c) < tol) {
        if (parabolic) return {SpherePoint::at_infinity()};
        return {SpherePoint{b / (d - a), false}, SpherePoint::at_infinity()};
    }
    if (parabolic) return {SpherePoint{(a - d) / (2.0 * c), false}};
    const Complex root = principal_sqrt(disc);
    return {SpherePoint{(a - d + root) / (2.0 * c), false}, SpherePoint{(a - d - root) / (2.0 * c), false}};
}

bool fix_disjoint(const MoebiusMap& f, const MoebiusMap& h, double tol) {
    const auto pf = fixed_points(f, tol);
    const auto ph = fixed_points(h, tol);
    for (const auto& p : pf)
        for (const auto& q : ph)
            if (chordal_distance(p, q) < tol) return false;
    return true;
}

AxisDistance complex_distance(const PrincipalCharacter& chr, double tol) {
    if (std::abs(chr.beta) <= tol || std::abs(chr.beta_tilde) <= tol)
        throw Error(ErrorKind::ParabolicGenerator, "axis distance needs two non-parabolic generators");
    const Complex w = 4.0 * chr.gamma / (chr.beta * chr.beta_tilde);
    Complex z = std::asinh(principal_sqrt(w));
    // sinh^2 is even and pi*i periodic: fold into delta >= 0, theta in (-pi/2, pi/2]
    if (z.real() < 0.0 || (z.real() == 0.0 && z.imag() < 0.0)) z = -z;
    constexpr double half_pi = std::numbers::pi / 2.0;
    double theta = z.imag();
    while (theta <= -half_pi) theta += std::numbers::pi;
    while (theta > half_pi) theta -= std::numbers::pi;
    return {z.real(), theta};
}

}  // namespace moduli
