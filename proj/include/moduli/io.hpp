#pragma once

#include <iosfwd>
#include <json.hpp>

#include "moduli/characters.hpp"
#include "moduli/dynamics.hpp"
#include "moduli/families.hpp"
#include "moduli/moebius.hpp"

// JSON schema: complex numbers are {"re": x, "im": y}; matrices are
// four-element row-major arrays of complex numbers. A bare JSON number is
// accepted wherever a complex number is read.

namespace nlohmann {
template <>
struct adl_serializer<std::complex<double>> {
    static void to_json(json& j, const std::complex<double>& z);
    static void from_json(const json& j, std::complex<double>& z);
};
}  // namespace nlohmann

namespace moduli {

void to_json(nlohmann::json& j, const MoebiusMap& m);
void from_json(const nlohmann::json& j, MoebiusMap& m);
void to_json(nlohmann::json& j, const PrincipalCharacter& c);
void from_json(const nlohmann::json& j, PrincipalCharacter& c);
void to_json(nlohmann::json& j, const SlicePoint& p);
void from_json(const nlohmann::json& j, SlicePoint& p);
void to_json(nlohmann::json& j, const ElementClass& c);
void from_json(const nlohmann::json& j, ElementClass& c);
void to_json(nlohmann::json& j, const AxisDistance& d);
void from_json(const nlohmann::json& j, AxisDistance& d);
void to_json(nlohmann::json& j, const ExceptionalEntry& e);
void from_json(const nlohmann::json& j, ExceptionalEntry& e);
void to_json(nlohmann::json& j, const DihedralDiagnosis& d);
void from_json(const nlohmann::json& j, DihedralDiagnosis& d);
void to_json(nlohmann::json& j, const Evidence& e);
void from_json(const nlohmann::json& j, Evidence& e);
void to_json(nlohmann::json& j, const Certificate& c);
void from_json(const nlohmann::json& j, Certificate& c);
void to_json(nlohmann::json& j, const FilterReport& r);
void from_json(const nlohmann::json& j, FilterReport& r);
void to_json(nlohmann::json& j, const OrbitRecord& r);
void from_json(const nlohmann::json& j, OrbitRecord& r);
void to_json(nlohmann::json& j, const BranchNotes& n);
void from_json(const nlohmann::json& j, BranchNotes& n);
void to_json(nlohmann::json& j, const RealizedPair& p);
void from_json(const nlohmann::json& j, RealizedPair& p);
void to_json(nlohmann::json& j, const DehnFamilyPoint& p);

/// Binary PGM (P5, maxval 255); each cell's gray level is its PixelCode value.
void write_pgm(std::ostream& out, const Raster& raster);

/// Header `x,y,re,im,code`, one row per pixel in raster order; code is the gray level.
void write_csv(std::ostream& out, const Raster& raster);

/// Header `p,re_a_p,im_a_p,re_beta_p,im_beta_p,re_gamma_p,im_gamma_p,relator_residual,gamma_limit_distance`.
void write_dehn_csv(std::ostream& out, const std::vector<DehnFamilyPoint>& points);

/// "(-2,-3,-4) A4" style rendering used by the table listing.
std::string render_row(const ExceptionalEntry& e);

}  // namespace moduli
