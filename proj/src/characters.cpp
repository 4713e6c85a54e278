#include "moduli/characters.hpp"

#include <cmath>

#include "moduli/dynamics.hpp"
#include "moduli/error.hpp"

namespace moduli {

PrincipalCharacter character_of(const MoebiusMap& f, const MoebiusMap& g) {
    return {gamma(f, g), beta(f), beta(g)};
}

SlicePoint project(const PrincipalCharacter& chr) { return {chr.gamma, chr.beta}; }

std::pair<PrincipalCharacter, PrincipalCharacter> zext_characters(const SlicePoint& pt) {
    return {{pt.gamma, pt.beta, Complex{-4.0}}, {pt.beta - pt.gamma, pt.beta, Complex{-4.0}}};
}

PrincipalCharacter subgroup_character(const SlicePoint& pt) {
    return {pt.gamma * (pt.gamma - pt.beta), pt.beta, pt.beta};
}

namespace {

// Comparisons at a boundary value tolerate rounding in the compared quantity.
bool at_least(double value, double threshold) { return value >= threshold * (1.0 - 1e-12); }

}  // namespace

Margin jorgensen_ok(const SlicePoint& pt) {
    const double value = std::abs(pt.gamma) + std::abs(pt.beta);
    return {at_least(value, kJorgensenBound), value, value - kJorgensenBound};
}

Margin cao_ok(const SlicePoint& pt) {
    const double value = std::abs(pt.gamma * (pt.gamma - pt.beta));
    return {at_least(value, kCaoBound), value, value - kCaoBound};
}

const char* to_string(Verdict v) {
    switch (v) {
        case Verdict::NotKleinian: return "NotKleinian";
        case Verdict::ElementaryMatch: return "ElementaryMatch";
        case Verdict::LikelyNotDiscrete: return "LikelyNotDiscrete";
        case Verdict::Inconclusive: return "Inconclusive";
    }
    return "?";
}

const char* to_string(Outcome o) {
    switch (o) {
        case Outcome::Passed: return "passed";
        case Outcome::Failed: return "failed";
        case Outcome::Matched: return "matched";
        case Outcome::Skipped: return "skipped";
    }
    return "?";
}

namespace {

bool near(Complex x, Complex y, double tol) { return std::abs(x - y) < tol; }

bool in_elliptic_range(Complex b, double tol) {
    return std::fabs(b.imag()) < tol && b.real() >= -4.0 - tol && b.real() <= -tol;
}

std::optional<EllipticOrder> order_if_elliptic(Complex b, int p_max, double tol) {
    if (!in_elliptic_range(b, tol)) return std::nullopt;
    return elliptic_order(b, p_max, tol);
}

}  // namespace

std::string DihedralDiagnosis::label() const {
    switch (kind) {
        case DihedralKind::Finite: return "D" + std::to_string(p);
        case DihedralKind::Infinite: return "D_inf";
        case DihedralKind::Parabolic: return "parabolic";
    }
    return "?";
}

std::optional<DihedralDiagnosis> dihedral_check(const PrincipalCharacter& chr, double tol, int p_max) {
    const Complex minus_four{-4.0};

    // Two involutions: the product of the rotations has angle twice the angle between axes.
    if (near(chr.beta, minus_four, tol) && near(chr.beta_tilde, minus_four, tol)) {
        DihedralDiagnosis d;
        d.two_involutions = true;
        if (std::abs(chr.gamma) < tol) {
            d.kind = DihedralKind::Parabolic;
        } else if (auto order = order_if_elliptic(chr.gamma, p_max, tol)) {
            d.kind = DihedralKind::Finite;
            d.p = order->p;
            d.k = order->k;
        } else {
            d.kind = DihedralKind::Infinite;
        }
        return d;
    }

    // gamma = beta with an involution: g swaps the fixed points of f.
    const std::pair<Complex, Complex> orderings[] = {{chr.beta, chr.beta_tilde}, {chr.beta_tilde, chr.beta}};
    for (const auto& [b, bt] : orderings) {
        if (!near(bt, minus_four, tol) || !near(chr.gamma, b, tol)) continue;
        DihedralDiagnosis d;
        if (std::abs(b) < tol) {
            d.kind = DihedralKind::Parabolic;
        } else if (auto order = order_if_elliptic(b, p_max, tol)) {
            d.kind = DihedralKind::Finite;
            d.p = order->p;
            d.k = order->k;
        } else {
            d.kind = DihedralKind::Infinite;
        }
        return d;
    }
    return std::nullopt;
}

FilterReport discreteness_filter(const PrincipalCharacter& chr, const Config& config, bool with_dynamics) {
    config.validate();
    FilterReport report;
    auto decide = [&](Verdict v) {
        report.verdict = v;
        return report;
    };
    const double tol = config.tol;
    const SlicePoint pt = project(chr);

    // A vanishing commutator parameter means a common fixed point.
    const double abs_gamma = std::abs(chr.gamma);
    if (abs_gamma < tol) {
        report.evidence.push_back({"gamma-zero", abs_gamma, tol, Outcome::Failed});
        return decide(Verdict::NotKleinian);
    }
    report.evidence.push_back({"gamma-zero", abs_gamma, tol, Outcome::Passed});

    if (auto entry = match_exceptional(chr, tol, config.p_max)) {
        report.evidence.push_back({"exceptional-table", 1.0, tol, Outcome::Matched});
        report.entry = std::move(entry);
        return decide(Verdict::ElementaryMatch);
    }
    report.evidence.push_back({"exceptional-table", 0.0, tol, Outcome::Passed});

    if (auto diag = dihedral_check(chr, tol, config.p_max)) {
        report.evidence.push_back({"dihedral", 1.0, tol, Outcome::Matched});
        report.dihedral = diag;
        return decide(Verdict::ElementaryMatch);
    }
    report.evidence.push_back({"dihedral", 0.0, tol, Outcome::Passed});

    const Margin jorgensen = jorgensen_ok(pt);
    if (!jorgensen.ok) {
        report.evidence.push_back({"jorgensen", jorgensen.value, kJorgensenBound, Outcome::Failed});
        return decide(Verdict::NotKleinian);
    }
    report.evidence.push_back({"jorgensen", jorgensen.value, kJorgensenBound, Outcome::Passed});

    // The equal-trace bound applies to <f, g f g^-1> only when f is not
    // elliptic of order 2, 3, 4 or 6.
    const Margin cao = cao_ok(pt);
    const auto small_order = order_if_elliptic(chr.beta, 6, tol);
    if (small_order && small_order->p != 5) {
        report.evidence.push_back({"cao", cao.value, kCaoBound, Outcome::Skipped});
    } else if (!cao.ok) {
        report.evidence.push_back({"cao", cao.value, kCaoBound, Outcome::Failed});
        return decide(Verdict::NotKleinian);
    } else {
        report.evidence.push_back({"cao", cao.value, kCaoBound, Outcome::Passed});
    }

    if (with_dynamics) {
        const auto threshold = static_cast<double>(config.search_depth);
        if (auto cert = semigroup_search(chr.beta, chr.gamma, config.search_depth, config)) {
            report.evidence.push_back(
                {"orbit-search", static_cast<double>(cert->word.size()), threshold, Outcome::Failed});
            report.certificate = std::move(cert);
            return decide(Verdict::LikelyNotDiscrete);
        }
        report.evidence.push_back({"orbit-search", 0.0, threshold, Outcome::Passed});
    } else {
        report.evidence.push_back({"orbit-search", 0.0, 0.0, Outcome::Skipped});
    }
    return decide(Verdict::Inconclusive);
}

}  // namespace moduli
