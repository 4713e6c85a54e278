#include "moduli/families.hpp"

#include <atomic>
#include <cmath>
#include <numbers>
#include <thread>

#include "moduli/error.hpp"

namespace moduli {

namespace {

constexpr double kUnitSlack = 1e-12;
const Complex kI{0.0, 1.0};

}  // namespace

Complex canonical_lambda(Complex lambda, BranchNotes* notes) {
    BranchNotes local;
    BranchNotes& n = notes ? *notes : local;
    if (std::abs(lambda) < 1.0 - kUnitSlack) {
        lambda = -1.0 / lambda;
        n.lambda_inverted = true;
    }
    if (lambda.imag() < 0.0 || (lambda.imag() == 0.0 && lambda.real() < 0.0)) {
        lambda = -lambda;
        n.lambda_negated = true;
    }
    if (std::fabs(std::abs(lambda) - 1.0) <= kUnitSlack && lambda.real() < 0.0) {
        lambda = -1.0 / lambda;
        n.lambda_reflected = true;
    }
    return lambda;
}

RealizedPair realize(const SlicePoint& pt, double tol) {
    RealizedPair out;
    out.notes.elementary = std::abs(pt.gamma) < tol || std::abs(pt.gamma - pt.beta) < tol;

    if (std::abs(pt.beta) <= tol) {
        out.notes.parabolic_branch = true;
        out.a = principal_sqrt(pt.gamma);
        out.f = MoebiusMap(1.0, 1.0, 0.0, 1.0);
        out.g = MoebiusMap(kI, 0.0, out.a, -kI);
        return out;
    }

    // lambda solves lambda^2 - sqrt(beta) lambda - 1 = 0
    const Complex root = (principal_sqrt(pt.beta) + principal_sqrt(pt.beta + 4.0)) / 2.0;
    out.lambda = canonical_lambda(root, &out.notes);
    // (lambda^2 - 1)^2 / lambda^2 = beta, so a^2 = gamma / beta - 1
    out.a = principal_sqrt((pt.gamma - pt.beta) / pt.beta);
    out.f = MoebiusMap(out.lambda, 0.0, 0.0, 1.0 / out.lambda);
    out.g = MoebiusMap(out.a, 1.0, -(1.0 + out.a * out.a), -out.a);
    return out;
}

Complex gamma_normal_form(Complex lambda, Complex a) {
    if (std::abs(lambda) < kUnitSlack || std::abs(lambda * lambda - 1.0) < kUnitSlack)
        throw Error(ErrorKind::DegenerateLambda, "lambda must avoid 0 and +-1");
    const Complex l2m1 = lambda * lambda - 1.0;
    return (1.0 + a * a) * l2m1 * l2m1 / (lambda * lambda);
}

Complex parabolic_gamma_form(Complex lambda, Complex c) {
    if (std::abs(lambda) < kUnitSlack) throw Error(ErrorKind::DegenerateLambda, "lambda must be nonzero");
    return c * (c + 2.0 * kI * (lambda * lambda - 1.0) / lambda);
}

// ---------------------------------------------------------------------------

Complex figure_eight_parameter() { return {0.5, std::sqrt(3.0) / 2.0}; }

std::pair<MoebiusMap, MoebiusMap> figure_eight_generators() {
    return {MoebiusMap(1.0, 1.0, 0.0, 1.0), MoebiusMap(1.0, 0.0, figure_eight_parameter(), 1.0)};
}

double relator_residual(const MoebiusMap& f, const MoebiusMap& h) {
    const MoebiusMap lhs = h * f * inverse(h) * f * h;
    const MoebiusMap rhs = f * h * inverse(f) * h * f;
    return projective_distance(lhs, rhs);
}

Complex dehn_parameter(int p) {
    const double c1 = std::cos(2.0 * std::numbers::pi / p);
    const double c2 = std::cos(4.0 * std::numbers::pi / p);
    return (3.0 - 2.0 * c1 - principal_sqrt(Complex{-1.0 - 4.0 * c1 + 2.0 * c2})) / 2.0;
}

Complex dehn_gamma_limit() { return {-0.5, -std::sqrt(3.0) / 2.0}; }

DehnFamilyPoint dehn_surgery_point(int p) {
    if (p < 3) throw Error(ErrorKind::InvalidOrder, "Dehn filling order must be >= 3");
    DehnFamilyPoint pt;
    pt.p = p;
    pt.hyperbolic_regime = p >= 7;
    pt.a_p = dehn_parameter(p);
    const Complex e = std::polar(1.0, std::numbers::pi / p);
    pt.f_p = MoebiusMap(e, 1.0, 0.0, 1.0 / e);
    pt.h_p = MoebiusMap(e, 0.0, pt.a_p, 1.0 / e);
    pt.beta_p = beta(pt.f_p);
    pt.gamma_p = pt.a_p * (-2.0 + pt.a_p + 2.0 * std::cos(2.0 * std::numbers::pi / p));
    pt.relator_residual = relator_residual(pt.f_p, pt.h_p);
    return pt;
}

std::vector<DehnFamilyPoint> dehn_family(int pmin, int pmax, int threads) {
    if (pmin < 3 || pmax < pmin) throw Error(ErrorKind::InvalidOrder, "need 3 <= pmin <= pmax");
    std::vector<DehnFamilyPoint> out(static_cast<std::size_t>(pmax - pmin + 1));
    std::atomic<int> next{pmin};
    auto worker = [&] {
        for (int p = next++; p <= pmax; p = next++) out[static_cast<std::size_t>(p - pmin)] = dehn_surgery_point(p);
    };
    if (threads <= 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
    }
    return out;
}

// ---------------------------------------------------------------------------

namespace {

// Sends z0 to 0 and z_inf to infinity.
MoebiusMap moving_to_zero_infinity(const SpherePoint& z0, const SpherePoint& z_inf) {
    if (z_inf.infinite) return MoebiusMap(1.0, -z0.z, 0.0, 1.0);
    if (z0.infinite) return MoebiusMap(0.0, 1.0, 1.0, -z_inf.z);
    return MoebiusMap(1.0, -z0.z, 1.0, -z_inf.z);
}

}  // namespace

CanonicalPair canonicalize_pair(const MoebiusMap& f, const MoebiusMap& g, double tol) {
    const auto pts = fixed_points(f, tol);  // throws IsIdentity

    if (pts.size() == 1) {
        // Send the fixed point to infinity, then scale the translation to 1.
        const MoebiusMap to_inf = pts[0].infinite ? MoebiusMap::identity() : MoebiusMap(0.0, -1.0, 1.0, -pts[0].z);
        const MoebiusMap f1 = conjugate(f, to_inf);
        const Complex t = f1.a().real() < 0.0 ? -f1.b() : f1.b();
        const Complex mu = principal_sqrt(1.0 / t);
        const MoebiusMap scale = mu == Complex{1.0} ? MoebiusMap::identity() : MoebiusMap(mu, 0.0, 0.0, 1.0 / mu);
        const MoebiusMap c = scale * to_inf;
        MoebiusMap fc = conjugate(f, c);
        if (fc.a().real() < 0.0) fc = fc.negated();
        return {fc, conjugate(g, c), c};
    }

    // Repelling-vs-attracting is decided through lambda: try both assignments
    // and keep the one whose diagonal entry is already canonical up to lift.
    for (int first = 0; first < 2; ++first) {
        const MoebiusMap c = moving_to_zero_infinity(pts[static_cast<std::size_t>(first)],
                                                     pts[static_cast<std::size_t>(1 - first)]);
        MoebiusMap fc = conjugate(f, c);
        const Complex lambda = fc.a();
        const Complex target = canonical_lambda(lambda);
        const double scale = 1e-8 * std::max(1.0, std::abs(lambda));
        if (std::abs(target - lambda) < scale) return {fc, conjugate(g, c), c};
        if (std::abs(target + lambda) < scale) return {fc.negated(), conjugate(g, c), c};
    }
    // One assignment yields lambda and the other 1/lambda, so this is only
    // reached when |lambda| sits on the unit-circle slack boundary.
    const MoebiusMap c = moving_to_zero_infinity(pts[0], pts[1]);
    return {conjugate(f, c), conjugate(g, c), c};
}

}  // namespace moduli
