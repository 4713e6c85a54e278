#include "moduli/io.hpp"

#include <cmath>
#include <cstdio>
#include <ostream>
#include <stdexcept>

#include "moduli/error.hpp"

using nlohmann::json;

namespace nlohmann {

void adl_serializer<std::complex<double>>::to_json(json& j, const std::complex<double>& z) {
    j = json{{"re", z.real()}, {"im", z.imag()}};
}

void adl_serializer<std::complex<double>>::from_json(const json& j, std::complex<double>& z) {
    if (j.is_number()) {
        z = {j.get<double>(), 0.0};
        return;
    }
    z = {j.at("re").get<double>(), j.at("im").get<double>()};
}

}  // namespace nlohmann

namespace moduli {

namespace {

template <typename Enum, std::size_t N>
Enum enum_from(const std::string& name, const std::pair<Enum, const char*> (&table)[N]) {
    for (const auto& [value, label] : table)
        if (name == label) return value;
    throw std::invalid_argument("unknown enumerator '" + name + "'");
}

const std::pair<Verdict, const char*> kVerdicts[] = {{Verdict::NotKleinian, "NotKleinian"},
                                                     {Verdict::ElementaryMatch, "ElementaryMatch"},
                                                     {Verdict::LikelyNotDiscrete, "LikelyNotDiscrete"},
                                                     {Verdict::Inconclusive, "Inconclusive"}};
const std::pair<Outcome, const char*> kOutcomes[] = {{Outcome::Passed, "passed"},
                                                     {Outcome::Failed, "failed"},
                                                     {Outcome::Matched, "matched"},
                                                     {Outcome::Skipped, "skipped"}};
const std::pair<OrbitOutcome, const char*> kOrbitOutcomes[] = {
    {OrbitOutcome::ConvergedToZero, "ConvergedToZero"}, {OrbitOutcome::HitZeroExactly, "HitZeroExactly"},
    {OrbitOutcome::Escaped, "Escaped"},                 {OrbitOutcome::Cyclic, "Cyclic"},
    {OrbitOutcome::MaxIterations, "MaxIterations"}};
const std::pair<GroupName, const char*> kGroups[] = {
    {GroupName::A4, "A4"}, {GroupName::S4, "S4"}, {GroupName::A5, "A5"}, {GroupName::Dihedral, "D"}};
const std::pair<TableId, const char*> kTables[] = {{TableId::Table1, "table1"},
                                                   {TableId::Table2, "table2"},
                                                   {TableId::Table3, "table3"},
                                                   {TableId::DihedralFamily, "dihedral-family"}};
const std::pair<DihedralKind, const char*> kDihedralKinds[] = {
    {DihedralKind::Finite, "finite"}, {DihedralKind::Infinite, "infinite"}, {DihedralKind::Parabolic, "parabolic"}};

const char* label_of(DihedralKind k) {
    for (const auto& [value, label] : kDihedralKinds)
        if (value == k) return label;
    return "?";
}

}  // namespace

void to_json(json& j, const MoebiusMap& m) {
    j = json::array();
    for (const Complex& e : m.entries()) j.push_back(e);
}

void from_json(const json& j, MoebiusMap& m) {
    if (!j.is_array() || j.size() != 4) throw std::invalid_argument("matrix must be a 4-element array");
    Matrix2 raw;
    for (std::size_t i = 0; i < 4; ++i) raw[i] = j[i].get<Complex>();
    m = MoebiusMap::from_unit_entries(raw);
}

void to_json(json& j, const PrincipalCharacter& c) {
    j = json{{"gamma", c.gamma}, {"beta", c.beta}, {"beta_tilde", c.beta_tilde}};
}

void from_json(const json& j, PrincipalCharacter& c) {
    c.gamma = j.at("gamma").get<Complex>();
    c.beta = j.at("beta").get<Complex>();
    c.beta_tilde = j.at("beta_tilde").get<Complex>();
}

void to_json(json& j, const SlicePoint& p) { j = json{{"gamma", p.gamma}, {"beta", p.beta}}; }

void from_json(const json& j, SlicePoint& p) {
    p.gamma = j.at("gamma").get<Complex>();
    p.beta = j.at("beta").get<Complex>();
}

void to_json(json& j, const ElementClass& c) {
    j = json{{"kind", kind_name(c)}};
    if (const auto* e = std::get_if<element::EllipticRational>(&c)) {
        j["k"] = e->k;
        j["p"] = e->p;
    }
}

void from_json(const json& j, ElementClass& c) {
    const auto kind = j.at("kind").get<std::string>();
    if (kind == "Identity") c = element::Identity{};
    else if (kind == "Parabolic") c = element::Parabolic{};
    else if (kind == "EllipticRational") c = element::EllipticRational{j.at("k").get<int>(), j.at("p").get<int>()};
    else if (kind == "EllipticIrrationalAngle") c = element::EllipticIrrationalAngle{};
    else if (kind == "Loxodromic") c = element::Loxodromic{};
    else throw std::invalid_argument("unknown element class '" + kind + "'");
}

void to_json(json& j, const AxisDistance& d) { j = json{{"delta", d.delta}, {"theta", d.theta}}; }

void from_json(const json& j, AxisDistance& d) {
    d.delta = j.at("delta").get<double>();
    d.theta = j.at("theta").get<double>();
}

void to_json(json& j, const ExceptionalEntry& e) {
    j = json{{"character", e.character},
             {"group", to_string(e.group)},
             {"label", e.group_label()},
             {"orders", {e.p, e.q}},
             {"k", {e.k_p, e.k_q}},
             {"sin2_theta", e.sin2_theta},
             {"table", to_string(e.table)}};
    if (e.group == GroupName::Dihedral) {
        j["dihedral_order"] = e.dihedral_order;
        j["dihedral_k"] = e.dihedral_k;
    }
}

void from_json(const json& j, ExceptionalEntry& e) {
    e.character = j.at("character").get<PrincipalCharacter>();
    e.group = enum_from(j.at("group").get<std::string>(), kGroups);
    e.p = j.at("orders").at(0).get<int>();
    e.q = j.at("orders").at(1).get<int>();
    e.k_p = j.at("k").at(0).get<int>();
    e.k_q = j.at("k").at(1).get<int>();
    e.sin2_theta = j.at("sin2_theta").get<double>();
    e.table = enum_from(j.at("table").get<std::string>(), kTables);
    e.dihedral_order = j.value("dihedral_order", 0);
    e.dihedral_k = j.value("dihedral_k", 0);
}

void to_json(json& j, const DihedralDiagnosis& d) {
    j = json{{"kind", label_of(d.kind)},
             {"label", d.label()},
             {"p", d.p},
             {"k", d.k},
             {"two_involutions", d.two_involutions}};
}

void from_json(const json& j, DihedralDiagnosis& d) {
    d.kind = enum_from(j.at("kind").get<std::string>(), kDihedralKinds);
    d.p = j.at("p").get<int>();
    d.k = j.at("k").get<int>();
    d.two_involutions = j.at("two_involutions").get<bool>();
}

void to_json(json& j, const Evidence& e) {
    j = json{{"test", e.test}, {"value", e.value}, {"threshold", e.threshold}, {"outcome", to_string(e.outcome)}};
}

void from_json(const json& j, Evidence& e) {
    e.test = j.at("test").get<std::string>();
    e.value = j.at("value").get<double>();
    e.threshold = j.at("threshold").get<double>();
    e.outcome = enum_from(j.at("outcome").get<std::string>(), kOutcomes);
}

void to_json(json& j, const Certificate& c) {
    j = json{{"word", c.word}, {"final_value", c.final_value}, {"iterations", c.iterations}};
}

void from_json(const json& j, Certificate& c) {
    c.word = j.at("word").get<std::string>();
    c.final_value = j.at("final_value").get<Complex>();
    c.iterations = j.at("iterations").get<int>();
}

void to_json(json& j, const FilterReport& r) {
    j = json{{"verdict", to_string(r.verdict)}, {"evidence", r.evidence}};
    if (r.entry) j["entry"] = *r.entry;
    if (r.dihedral) j["dihedral"] = *r.dihedral;
    if (r.certificate) j["certificate"] = *r.certificate;
}

void from_json(const json& j, FilterReport& r) {
    r.verdict = enum_from(j.at("verdict").get<std::string>(), kVerdicts);
    r.evidence = j.at("evidence").get<std::vector<Evidence>>();
    r.entry.reset();
    r.dihedral.reset();
    r.certificate.reset();
    if (j.contains("entry")) r.entry = j["entry"].get<ExceptionalEntry>();
    if (j.contains("dihedral")) r.dihedral = j["dihedral"].get<DihedralDiagnosis>();
    if (j.contains("certificate")) r.certificate = j["certificate"].get<Certificate>();
}

void to_json(json& j, const OrbitRecord& r) {
    j = json{{"beta", r.beta}, {"word", r.word}, {"values", r.values}, {"outcome", to_string(r.outcome)}};
}

void from_json(const json& j, OrbitRecord& r) {
    r.beta = j.at("beta").get<Complex>();
    r.word = j.at("word").get<std::string>();
    r.values = j.at("values").get<std::vector<Complex>>();
    r.outcome = enum_from(j.at("outcome").get<std::string>(), kOrbitOutcomes);
}

void to_json(json& j, const BranchNotes& n) {
    j = json{{"parabolic_branch", n.parabolic_branch},
             {"lambda_inverted", n.lambda_inverted},
             {"lambda_negated", n.lambda_negated},
             {"lambda_reflected", n.lambda_reflected},
             {"elementary", n.elementary}};
}

void from_json(const json& j, BranchNotes& n) {
    n.parabolic_branch = j.at("parabolic_branch").get<bool>();
    n.lambda_inverted = j.at("lambda_inverted").get<bool>();
    n.lambda_negated = j.at("lambda_negated").get<bool>();
    n.lambda_reflected = j.at("lambda_reflected").get<bool>();
    n.elementary = j.at("elementary").get<bool>();
}

void to_json(json& j, const RealizedPair& p) {
    j = json{{"f", p.f}, {"g", p.g}, {"lambda", p.lambda}, {"a", p.a}, {"branch_notes", p.notes}};
}

void from_json(const json& j, RealizedPair& p) {
    p.f = j.at("f").get<MoebiusMap>();
    p.g = j.at("g").get<MoebiusMap>();
    p.lambda = j.at("lambda").get<Complex>();
    p.a = j.at("a").get<Complex>();
    p.notes = j.at("branch_notes").get<BranchNotes>();
}

void to_json(json& j, const DehnFamilyPoint& p) {
    j = json{{"p", p.p},
             {"a_p", p.a_p},
             {"f_p", p.f_p},
             {"h_p", p.h_p},
             {"beta_p", p.beta_p},
             {"gamma_p", p.gamma_p},
             {"relator_residual", p.relator_residual},
             {"hyperbolic_regime", p.hyperbolic_regime}};
}

// ---------------------------------------------------------------------------

void write_pgm(std::ostream& out, const Raster& raster) {
    out << "P5\n" << raster.width << ' ' << raster.height << "\n255\n";
    for (PixelCode c : raster.cells) out.put(static_cast<char>(static_cast<unsigned char>(c)));
}

namespace {

std::string real17(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

}  // namespace

void write_csv(std::ostream& out, const Raster& raster) {
    out << "x,y,re,im,code\n";
    for (int y = 0; y < raster.height; ++y) {
        for (int x = 0; x < raster.width; ++x) {
            const Complex g = raster.pixel_center(x, y);
            out << x << ',' << y << ',' << real17(g.real()) << ',' << real17(g.imag()) << ','
                << static_cast<int>(raster.at(x, y)) << '\n';
        }
    }
}

void write_dehn_csv(std::ostream& out, const std::vector<DehnFamilyPoint>& points) {
    out << "p,re_a_p,im_a_p,re_beta_p,im_beta_p,re_gamma_p,im_gamma_p,relator_residual,gamma_limit_distance\n";
    const Complex limit = dehn_gamma_limit();
    for (const DehnFamilyPoint& pt : points) {
        out << pt.p << ',' << real17(pt.a_p.real()) << ',' << real17(pt.a_p.imag()) << ','
            << real17(pt.beta_p.real()) << ',' << real17(pt.beta_p.imag()) << ',' << real17(pt.gamma_p.real())
            << ',' << real17(pt.gamma_p.imag()) << ',' << real17(pt.relator_residual) << ','
            << real17(std::abs(pt.gamma_p - limit)) << '\n';
    }
}

std::string render_row(const ExceptionalEntry& e) {
    const PrincipalCharacter& c = e.character;
    return "(" + format_complex_short(c.gamma) + "," + format_complex_short(c.beta) + "," +
           format_complex_short(c.beta_tilde) + ") " + e.group_label();
}

}  // namespace moduli
