// Principal characters of two-generator elementary discrete groups with a
// non-vanishing commutator parameter.

#include <cmath>
#include <numbers>
#include <numeric>

#include "moduli/characters.hpp"
#include "moduli/error.hpp"

namespace moduli {

const char* to_string(GroupName g) {
    switch (g) {
        case GroupName::A4: return "A4";
        case GroupName::S4: return "S4";
        case GroupName::A5: return "A5";
        case GroupName::Dihedral: return "D";
    }
    return "?";
}

const char* to_string(TableId t) {
    switch (t) {
        case TableId::Table1: return "table1";
        case TableId::Table2: return "table2";
        case TableId::Table3: return "table3";
        case TableId::DihedralFamily: return "dihedral-family";
    }
    return "?";
}

std::string ExceptionalEntry::group_label() const {
    if (group == GroupName::Dihedral) return "D" + std::to_string(dihedral_order);
    return to_string(group);
}

namespace {

const double kSqrt5 = std::sqrt(5.0);

// Closed forms appearing in the tables.
const double kGoldenMinus = (kSqrt5 - 3.0) / 2.0;   // (sqrt5 - 3)/2
const double kGoldenPlus = -(3.0 + kSqrt5) / 2.0;   // -(3 + sqrt5)/2
const double kBeta5k1 = (kSqrt5 - 5.0) / 2.0;       // -4 sin^2(pi/5)
const double kBeta5k2 = -(5.0 + kSqrt5) / 2.0;      // -4 sin^2(2pi/5)

ExceptionalEntry row(TableId table, int p, int k_p, int q, int k_q, double sin2, GroupName group,
                     double gamma, double beta, double beta_tilde) {
    ExceptionalEntry e;
    e.character = {Complex{gamma}, Complex{beta}, Complex{beta_tilde}};
    e.group = group;
    e.p = p;
    e.q = q;
    e.k_p = k_p;
    e.k_q = k_q;
    e.sin2_theta = sin2;
    e.table = table;
    if (group == GroupName::Dihedral) {
        e.dihedral_order = q;
        e.dihedral_k = k_q;
    }
    return e;
}

std::vector<ExceptionalEntry> build_table_rows() {
    using enum GroupName;
    using enum TableId;
    std::vector<ExceptionalEntry> rows;
    // Orders 2 and q: beta_tilde = -4.
    rows.push_back(row(Table1, 2, 1, 3, 1, 2.0 / 3.0, A4, -2.0, -3.0, -4.0));
    rows.push_back(row(Table1, 2, 1, 3, 1, 1.0 / 3.0, S4, -1.0, -3.0, -4.0));
    rows.push_back(row(Table1, 2, 1, 3, 1, (3.0 - kSqrt5) / 6.0, A5, kGoldenMinus, -3.0, -4.0));
    rows.push_back(row(Table1, 2, 1, 3, 1, (3.0 + kSqrt5) / 6.0, A5, kGoldenPlus, -3.0, -4.0));
    rows.push_back(row(Table1, 2, 1, 3, 1, 1.0, Dihedral, -3.0, -3.0, -4.0));
    rows.push_back(row(Table1, 2, 1, 4, 1, 0.5, S4, -1.0, -2.0, -4.0));
    rows.push_back(row(Table1, 2, 1, 4, 1, 1.0, Dihedral, -2.0, -2.0, -4.0));
    rows.push_back(row(Table1, 2, 1, 5, 1, (5.0 - kSqrt5) / 10.0, A5, kGoldenMinus, kBeta5k1, -4.0));
    rows.push_back(row(Table1, 2, 1, 5, 2, (5.0 - kSqrt5) / 10.0, A5, -1.0, kBeta5k2, -4.0));
    rows.push_back(row(Table1, 2, 1, 5, 1, (5.0 + kSqrt5) / 10.0, A5, -1.0, kBeta5k1, -4.0));
    rows.push_back(row(Table1, 2, 1, 5, 2, (5.0 + kSqrt5) / 10.0, A5, kGoldenPlus, kBeta5k2, -4.0));
    rows.push_back(row(Table1, 2, 1, 5, 1, 1.0, Dihedral, kBeta5k1, kBeta5k1, -4.0));
    rows.push_back(row(Table1, 2, 1, 5, 2, 1.0, Dihedral, kBeta5k2, kBeta5k2, -4.0));
    // Orders 3 and q: beta_tilde = -3.
    rows.push_back(row(Table2, 3, 1, 3, 1, 4.0 / 9.0, A5, -1.0, -3.0, -3.0));
    rows.push_back(row(Table2, 3, 1, 3, 1, 8.0 / 9.0, A4, -2.0, -3.0, -3.0));
    rows.push_back(row(Table2, 3, 1, 4, 1, 2.0 / 3.0, S4, -1.0, -2.0, -3.0));
    rows.push_back(row(Table2, 3, 1, 5, 1, (10.0 - 2.0 * kSqrt5) / 15.0, A5, kGoldenMinus, kBeta5k1, -3.0));
    rows.push_back(row(Table2, 3, 1, 5, 2, (10.0 - 2.0 * kSqrt5) / 15.0, A5, -1.0, kBeta5k2, -3.0));
    rows.push_back(row(Table2, 3, 1, 5, 1, (10.0 + 2.0 * kSqrt5) / 15.0, A5, -1.0, kBeta5k1, -3.0));
    rows.push_back(row(Table2, 3, 1, 5, 2, (10.0 + 2.0 * kSqrt5) / 15.0, A5, kGoldenPlus, kBeta5k2, -3.0));
    // Two generators of order 4, or of order 5.
    rows.push_back(row(Table3, 4, 1, 4, 1, 1.0, S4, -1.0, -2.0, -2.0));
    rows.push_back(row(Table3, 5, 1, 5, 1, 0.8, A5, kGoldenMinus, kBeta5k1, kBeta5k1));
    rows.push_back(row(Table3, 5, 1, 5, 2, 0.8, A5, -1.0, kBeta5k2, kBeta5k1));
    rows.push_back(row(Table3, 5, 2, 5, 2, 0.8, A5, kGoldenPlus, kBeta5k2, kBeta5k2));
    return rows;
}

double rotation_beta(int k, int n) {
    const double s = std::sin(static_cast<double>(k) * std::numbers::pi / static_cast<double>(n));
    return -4.0 * s * s;
}

// (-4 sin^2(k pi/n), -4, -4): two involutions whose axes meet at angle k pi/n.
ExceptionalEntry two_involution_member(int k, int n) {
    const double s = std::sin(static_cast<double>(k) * std::numbers::pi / static_cast<double>(n));
    ExceptionalEntry e = row(TableId::DihedralFamily, 2, 1, 2, 1, s * s, GroupName::Dihedral, rotation_beta(k, n),
                             -4.0, -4.0);
    e.dihedral_order = n;
    e.dihedral_k = k;
    return e;
}

// (-4 sin^2(k pi/n), -4 sin^2(k pi/n), -4): an involution meeting the order-n axis at a right angle.
ExceptionalEntry right_angle_member(int k, int n) {
    const double b = rotation_beta(k, n);
    return row(TableId::DihedralFamily, 2, 1, n, k, 1.0, GroupName::Dihedral, b, b, -4.0);
}

bool matches(const PrincipalCharacter& x, Complex gamma, Complex beta, Complex beta_tilde, double tol) {
    return std::abs(x.gamma - gamma) < tol && std::abs(x.beta - beta) < tol &&
           std::abs(x.beta_tilde - beta_tilde) < tol;
}

}  // namespace

const std::vector<ExceptionalEntry>& table_rows() {
    static const std::vector<ExceptionalEntry> rows = build_table_rows();
    return rows;
}

std::vector<ExceptionalEntry> exceptional_tables(int p_max) {
    std::vector<ExceptionalEntry> out = table_rows();
    for (int n = 2; n <= p_max; ++n)
        for (int k = 1; 2 * k <= n; ++k)
            if (std::gcd(k, n) == 1) out.push_back(two_involution_member(k, n));
    for (int n = 3; n <= p_max; ++n)
        for (int k = 1; 2 * k <= n; ++k)
            if (std::gcd(k, n) == 1) out.push_back(right_angle_member(k, n));
    return out;
}

PrincipalCharacter regenerate_table_entry(int p, int q, double sin2_theta, int k_p, int k_q) {
    if (p < 2 || q < 2) throw Error(ErrorKind::InvalidOrder, "orders must be >= 2");
    if (k_p < 1 || k_p >= p || std::gcd(k_p, p) != 1)
        throw Error(ErrorKind::InvalidOrder, "k_p must satisfy 1 <= k_p < p, gcd(k_p, p) = 1");
    if (k_q < 1 || k_q >= q || std::gcd(k_q, q) != 1)
        throw Error(ErrorKind::InvalidOrder, "k_q must satisfy 1 <= k_q < q, gcd(k_q, q) = 1");
    if (!(sin2_theta >= 0.0 && sin2_theta <= 1.0)) throw Error(ErrorKind::InvalidArgument, "sin^2 theta outside [0, 1]");
    const double beta = rotation_beta(k_q, q);
    const double beta_tilde = rotation_beta(k_p, p);
    return {Complex{-beta * beta_tilde * sin2_theta / 4.0}, Complex{beta}, Complex{beta_tilde}};
}

std::optional<ExceptionalEntry> match_exceptional(const PrincipalCharacter& chr, double tol, int p_max) {
    const std::pair<Complex, Complex> orderings[] = {{chr.beta, chr.beta_tilde}, {chr.beta_tilde, chr.beta}};
    for (const auto& [b, bt] : orderings)
        for (const ExceptionalEntry& e : table_rows())
            if (matches(e.character, chr.gamma, b, bt, tol)) return e;

    // Dihedral families, recognised through the rotation order instead of enumeration.
    auto real_in_range = [&](Complex z) {
        return std::fabs(z.imag()) < tol && z.real() >= -4.0 - tol && z.real() <= -tol;
    };
    for (const auto& [b, bt] : orderings) {
        if (std::abs(bt + 4.0) >= tol) continue;
        if (std::abs(b + 4.0) < tol && real_in_range(chr.gamma)) {
            if (auto order = elliptic_order(chr.gamma, p_max, tol)) {
                ExceptionalEntry e = two_involution_member(order->k, order->p);
                if (matches(e.character, chr.gamma, b, bt, tol)) return e;
            }
        }
        if (real_in_range(b) && std::abs(chr.gamma - b) < tol) {
            if (auto order = elliptic_order(b, p_max, tol); order && order->p >= 3) {
                ExceptionalEntry e = right_angle_member(order->k, order->p);
                if (matches(e.character, chr.gamma, b, bt, tol)) return e;
            }
        }
    }
    return std::nullopt;
}

}  // namespace moduli
