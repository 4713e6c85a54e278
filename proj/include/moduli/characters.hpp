#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "moduli/config.hpp"
#include "moduli/moebius.hpp"
#include "moduli/principal_character.hpp"

namespace moduli {

PrincipalCharacter character_of(const MoebiusMap& f, const MoebiusMap& g);

SlicePoint project(const PrincipalCharacter& chr);

/// The two Z2-extensions <f, phi> and <f, psi> of <f, g f g^-1>:
/// (gamma, beta, -4) and (beta - gamma, beta, -4).
std::pair<PrincipalCharacter, PrincipalCharacter> zext_characters(const SlicePoint& pt);

/// Character of <f, g f g^-1>: (gamma (gamma - beta), beta, beta).
PrincipalCharacter subgroup_character(const SlicePoint& pt);

// ---------------------------------------------------------------------------
// Exceptional (elementary discrete) characters

enum class GroupName { A4, S4, A5, Dihedral };
enum class TableId { Table1, Table2, Table3, DihedralFamily };

const char* to_string(GroupName g);
const char* to_string(TableId t);

/// One principal character of a two-generator elementary discrete group.
///
/// `orders` is (p, q): p is the order of the generator carrying beta_tilde and
/// q the order of the one carrying beta, with rotation numerators k_p and k_q.
/// For table rows the character is -beta beta_tilde sin2_theta / 4.
struct ExceptionalEntry {
    PrincipalCharacter character;
    GroupName group = GroupName::Dihedral;
    int dihedral_order = 0;  // n of D_n, Dihedral only
    int dihedral_k = 0;      // rotation numerator of the order-n element
    int p = 2;
    int q = 2;
    int k_p = 1;
    int k_q = 1;
    double sin2_theta = 1.0;
    TableId table = TableId::Table1;

    std::string group_label() const;  // "A4", "D3", ...
    friend bool operator==(const ExceptionalEntry&, const ExceptionalEntry&) = default;
};

/// Rows of the three exceptional tables (13 + 7 + 4), in table order.
const std::vector<ExceptionalEntry>& table_rows();

/// Table rows followed by the two dihedral families
///   (-4 sin^2(k pi/p), -4, -4)           p = 2..p_max
///   (-4 sin^2(k pi/p), -4 sin^2(k pi/p), -4)  p = 3..p_max
/// with 1 <= k <= p/2, gcd(k, p) = 1.
std::vector<ExceptionalEntry> exceptional_tables(int p_max = kDefaultPMax);

/// Builds (gamma, beta, beta_tilde) = (-beta beta_tilde sin2_theta / 4,
/// -4 sin^2(k_q pi/q), -4 sin^2(k_p pi/p)). Throws Error(InvalidOrder) for
/// p, q < 2, k out of range or not coprime, and sin2_theta outside [0, 1].
PrincipalCharacter regenerate_table_entry(int p, int q, double sin2_theta, int k_p, int k_q);

/// Exceptional entry equal to chr within tol (either ordering of beta and
/// beta_tilde). Table rows take precedence; the dihedral families are
/// recognised analytically for orders up to p_max.
std::optional<ExceptionalEntry> match_exceptional(const PrincipalCharacter& chr, double tol = kDefaultTol,
                                                  int p_max = kDefaultPMax);

// ---------------------------------------------------------------------------
// Necessary conditions

struct Margin {
    bool ok = false;
    double value = 0.0;   // quantity that was compared
    double margin = 0.0;  // value - threshold
};

inline constexpr double kJorgensenBound = 1.0;
inline constexpr double kCaoBound = 0.198;

/// |gamma| + |beta| >= 1
Margin jorgensen_ok(const SlicePoint& pt);

/// |gamma (gamma - beta)| >= 0.198
Margin cao_ok(const SlicePoint& pt);

enum class DihedralKind { Finite, Infinite, Parabolic };

struct DihedralDiagnosis {
    DihedralKind kind = DihedralKind::Infinite;
    int p = 0;  // Finite only
    int k = 0;
    bool two_involutions = false;  // both generators of order two

    std::string label() const;  // "D5", "D_inf", "parabolic"
    friend bool operator==(const DihedralDiagnosis&, const DihedralDiagnosis&) = default;
};

/// Dihedral structure forced by gamma = beta with an involution, or by two
/// involutions. Empty when neither pattern applies.
std::optional<DihedralDiagnosis> dihedral_check(const PrincipalCharacter& chr, double tol = kDefaultTol,
                                                int p_max = kDefaultPMax);

// ---------------------------------------------------------------------------
// Layered obstruction filter

enum class Verdict { NotKleinian, ElementaryMatch, LikelyNotDiscrete, Inconclusive };
enum class Outcome { Passed, Failed, Matched, Skipped };

const char* to_string(Verdict v);
const char* to_string(Outcome o);

struct Evidence {
    std::string test;
    double value = 0.0;
    double threshold = 0.0;
    Outcome outcome = Outcome::Passed;

    friend bool operator==(const Evidence&, const Evidence&) = default;
};

struct Certificate {
    std::string word;
    Complex final_value{};
    int iterations = 0;

    friend bool operator==(const Certificate&, const Certificate&) = default;
};

struct FilterReport {
    Verdict verdict = Verdict::Inconclusive;
    std::vector<Evidence> evidence;
    std::optional<ExceptionalEntry> entry;
    std::optional<DihedralDiagnosis> dihedral;
    std::optional<Certificate> certificate;

    friend bool operator==(const FilterReport&, const FilterReport&) = default;
};

/// Runs, in order: gamma = 0, exceptional tables, dihedral structure,
/// Jorgensen, Cao (skipped when f is elliptic of order 2, 3, 4 or 6) and,
/// when `with_dynamics`, the polynomial-semigroup orbit search.
/// The first failing or matching stage decides the verdict.
FilterReport discreteness_filter(const PrincipalCharacter& chr, const Config& config = {},
                                 bool with_dynamics = true);

}  // namespace moduli
