#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "moduli/characters.hpp"
#include "moduli/cli.hpp"
#include "moduli/dynamics.hpp"
#include "moduli/families.hpp"
#include "moduli/io.hpp"
#include "oracles.hpp"

using namespace moduli;
using nlohmann::json;
using C = Complex;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run cli(std::vector<std::string> args) {
    args.insert(args.begin(), "moduli");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    const int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

template <typename T>
T roundtrip(const T& value) {
    const json j = value;
    return json::parse(j.dump()).get<T>();
}

std::string slurp(const std::filesystem::path& p) {
    std::ifstream in(p, std::ios::binary);
    return {std::istreambuf_iterator<char>(in), {}};
}

std::filesystem::path temp_path(const std::string& name) {
    return std::filesystem::temp_directory_path() / ("moduli_test_" + name);
}

}  // namespace

TEST_CASE("JSON round-trips every exported type") {
    oracle::Sampler s(61);
    for (int i = 0; i < 200; ++i) {
        const MoebiusMap f = normalize(s.matrix());
        CHECK(roundtrip(f) == f);
        const PrincipalCharacter c{s.box(3), s.box(3), s.box(3)};
        CHECK(roundtrip(c) == c);
        const SlicePoint p{s.box(3), s.box(3)};
        CHECK(roundtrip(p) == p);
        const AxisDistance d = complex_distance(c);
        CHECK(roundtrip(d) == d);
        const RealizedPair r = realize(p);
        const RealizedPair back = roundtrip(r);
        CHECK(back.f == r.f);
        CHECK(back.g == r.g);
        CHECK(back.lambda == r.lambda);
        CHECK(back.a == r.a);
        CHECK(back.notes == r.notes);
    }
    for (const ElementClass& e : {ElementClass{element::Identity{}}, ElementClass{element::Parabolic{}},
                                  ElementClass{element::EllipticRational{2, 7}},
                                  ElementClass{element::EllipticIrrationalAngle{}}, ElementClass{element::Loxodromic{}}}) {
        json j;
        to_json(j, e);
        ElementClass back;
        from_json(json::parse(j.dump()), back);
        CHECK(back == e);
    }
    for (const ExceptionalEntry& e : exceptional_tables(12)) CHECK(roundtrip(e) == e);

    for (const PrincipalCharacter& c : {PrincipalCharacter{0.3, 0.2, -4}, PrincipalCharacter{-2, -3, -4},
                                        PrincipalCharacter{C(3, 4), -3, -4}, PrincipalCharacter{C(0.84375, 0.84375), 0, -4},
                                        PrincipalCharacter{0, 1, -4}, PrincipalCharacter{2.25, 2.25, -4}}) {
        const FilterReport r = discreteness_filter(c);
        CHECK(roundtrip(r) == r);
    }
    const OrbitRecord o = iterate(0, 0.5, "PQ");
    const OrbitRecord ob = roundtrip(o);
    CHECK(ob.values == o.values);
    CHECK(ob.word == o.word);
    CHECK(ob.outcome == o.outcome);
    CHECK(ob.beta == o.beta);
    const Certificate cert{"QPPP", C(1e-9, -2e-9), 13};
    CHECK(roundtrip(cert) == cert);
    const DihedralDiagnosis dd{DihedralKind::Finite, 7, 2, true};
    CHECK(roundtrip(dd) == dd);
}

TEST_CASE("JSON schema details") {
    const json j = C(1.5, -2);
    CHECK(j == json{{"re", 1.5}, {"im", -2.0}});
    CHECK(json(3.0).get<C>() == C(3, 0));
    const json m = MoebiusMap{1, 1, 0, 1};
    REQUIRE(m.is_array());
    CHECK(m.size() == 4);
    CHECK(json(discreteness_filter({-2, -3, -4}))["verdict"] == "ElementaryMatch");
    CHECK_THROWS(json::parse(R"({"verdict":"Maybe","evidence":[]})").get<FilterReport>());
}

TEST_CASE("render_row") {
    CHECK(render_row(table_rows().front()) == "(-2,-3,-4) A4");
}

TEST_CASE("cli: tables") {
    Run r = cli({"tables"});
    CHECK(r.code == 0);
    CHECK(r.out.find("(-2,-3,-4) A4") != std::string::npos);
    r = cli({"tables", "--json", "--rows-only"});
    CHECK(r.code == 0);
    CHECK(json::parse(r.out).size() == 24);
    r = cli({"--p-max", "10", "tables", "--json"});
    CHECK(json::parse(r.out).size() == exceptional_tables(10).size());
}

TEST_CASE("cli: classify, char, zext, distance") {
    Run r = cli({"classify", "--matrix", "1,1,0,1"});
    CHECK(r.code == 0);
    CHECK(json::parse(r.out)["kind"] == "Parabolic");
    r = cli({"classify", "--matrix", "0.5+0.8660254037844386i,0,0,0.5-0.8660254037844386i"});
    CHECK(json::parse(r.out)["kind"] == "EllipticRational");
    CHECK(json::parse(r.out)["p"] == 3);

    r = cli({"char", "--f", "1,0,0,1", "--g", "1,0,0,1"});
    CHECK(r.code == 0);
    const auto chr = json::parse(r.out).get<PrincipalCharacter>();
    CHECK(chr == PrincipalCharacter{0, 0, 0});

    r = cli({"zext", "--gamma", "-2", "--beta", "-3"});
    const json z = json::parse(r.out);
    CHECK(z["phi"].get<PrincipalCharacter>() == PrincipalCharacter{-2, -3, -4});
    CHECK(z["psi"].get<PrincipalCharacter>() == PrincipalCharacter{-1, -3, -4});

    r = cli({"distance", "--gamma", "1", "--beta", "2", "--beta-tilde", "2"});
    CHECK(r.code == 0);
    CHECK(json::parse(r.out)["delta"].get<double>() == doctest::Approx(std::asinh(1.0)));
}

TEST_CASE("cli: filter, orbit, realize") {
    Run r = cli({"filter", "--gamma", "0.3", "--beta", "0.2"});
    CHECK(r.code == 0);
    CHECK(json::parse(r.out)["verdict"] == "NotKleinian");
    r = cli({"filter", "--gamma", "-2", "--beta", "-3", "--beta-tilde", "-4"});
    CHECK(json::parse(r.out)["verdict"] == "ElementaryMatch");
    r = cli({"filter", "--gamma", "3+4i", "--beta", "-3"});
    CHECK(json::parse(r.out)["verdict"] == "Inconclusive");

    r = cli({"orbit", "--gamma", "0.5", "--beta", "0", "--word", "P"});
    CHECK(json::parse(r.out)["outcome"] == "ConvergedToZero");
    r = cli({"--max-iter", "3", "orbit", "--gamma", "0.9", "--beta", "0", "--word", "P"});
    CHECK(json::parse(r.out)["values"].size() == 4);

    r = cli({"realize", "--gamma", "-2", "--beta", "-3"});
    CHECK(r.code == 0);
    const json j = json::parse(r.out);
    const auto got = j["character"].get<PrincipalCharacter>();
    CHECK(std::abs(got.gamma - C(-2)) < 1e-12);
    CHECK(std::abs(got.beta_tilde - C(-4)) < 1e-12);
    const auto f = j["f"].get<MoebiusMap>(), g = j["g"].get<MoebiusMap>();
    CHECK(std::abs(gamma(f, g) - C(-2)) < 1e-12);
}

TEST_CASE("cli: scan writes identical PGM for any thread count") {
    const auto one = temp_path("one.pgm"), many = temp_path("many.pgm"), csv = temp_path("scan.csv");
    Run r = cli({"--threads", "1", "scan", "--beta", "0", "--window", "-3,3,-3,3", "--size", "40x30", "--out",
                 one.string(), "--csv", csv.string()});
    CHECK(r.code == 0);
    r = cli({"--threads", "5", "scan", "--beta", "0", "--size", "40x30", "--out", many.string()});
    CHECK(r.code == 0);
    const std::string a = slurp(one), b = slurp(many);
    CHECK(a == b);
    CHECK(a.rfind("P5\n40 30\n255\n", 0) == 0);
    CHECK(a.size() == std::string("P5\n40 30\n255\n").size() + 40 * 30);

    const std::string text = slurp(csv);
    CHECK(text.rfind("x,y,re,im,code\n", 0) == 0);
    CHECK(std::count(text.begin(), text.end(), '\n') == 1 + 40 * 30);

    ::setenv("MODULI_THREADS", "3", 1);
    r = cli({"scan", "--beta", "0", "--size", "40x30", "--out", many.string()});
    ::unsetenv("MODULI_THREADS");
    CHECK(r.code == 0);
    CHECK(slurp(many) == a);
    for (const auto& p : {one, many, csv}) std::filesystem::remove(p);
}

TEST_CASE("cli: dehn") {
    Run r = cli({"dehn", "--pmin", "7", "--pmax", "20"});
    CHECK(r.code == 0);
    std::istringstream in(r.out);
    std::string header, line;
    std::getline(in, header);
    CHECK(header == "p,re_a_p,im_a_p,re_beta_p,im_beta_p,re_gamma_p,im_gamma_p,relator_residual,gamma_limit_distance");
    int rows = 0;
    while (std::getline(in, line)) ++rows;
    CHECK(rows == 14);
}

TEST_CASE("cli: exit codes") {
    CHECK(cli({}).code == kExitUsage);
    CHECK(cli({"bogus"}).code == kExitUsage);
    CHECK(cli({"filter", "--gamma", "1"}).code == kExitUsage);
    CHECK(cli({"filter", "--gamma", "abc", "--beta", "0"}).code == kExitUsage);
    CHECK(cli({"--tol", "0.5", "tables"}).code == kExitUsage);
    CHECK(cli({"classify", "--matrix", "1,2,3"}).code == kExitUsage);

    Run r = cli({"classify", "--matrix", "1,2,2,4"});
    CHECK(r.code == kExitDomain);
    CHECK(r.err.find("SingularMatrix") != std::string::npos);
    CHECK(cli({"distance", "--gamma", "1", "--beta", "0", "--beta-tilde", "-4"}).code == kExitDomain);
    CHECK(cli({"dehn", "--pmin", "2", "--pmax", "5"}).code == kExitDomain);

    r = cli({"--help"});
    CHECK(r.code == 0);
    CHECK(r.out.find("--max-iter") != std::string::npos);
    CHECK(r.out.find("1000") != std::string::npos);
}
