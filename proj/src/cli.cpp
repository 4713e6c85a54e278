#include "moduli/cli.hpp"

#include <CLI11.hpp>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include "moduli/characters.hpp"
#include "moduli/config.hpp"
#include "moduli/dynamics.hpp"
#include "moduli/error.hpp"
#include "moduli/families.hpp"
#include "moduli/io.hpp"

namespace moduli {

namespace {

using nlohmann::json;

std::vector<std::string> split(const std::string& text, char sep) {
    std::vector<std::string> parts;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, sep)) parts.push_back(item);
    return parts;
}

Matrix2 parse_matrix(const std::string& text) {
    const auto parts = split(text, ',');
    if (parts.size() != 4) throw std::invalid_argument("matrix needs four comma-separated entries a,b,c,d");
    return {parse_complex(parts[0]), parse_complex(parts[1]), parse_complex(parts[2]), parse_complex(parts[3])};
}

Window parse_window(const std::string& text) {
    const auto parts = split(text, ',');
    if (parts.size() != 4) throw std::invalid_argument("window needs re_min,re_max,im_min,im_max");
    return {std::stod(parts[0]), std::stod(parts[1]), std::stod(parts[2]), std::stod(parts[3])};
}

std::pair<int, int> parse_size(const std::string& text) {
    const auto x = text.find_first_of("xX");
    if (x == std::string::npos) throw std::invalid_argument("size must look like WxH");
    return {std::stoi(text.substr(0, x)), std::stoi(text.substr(x + 1))};
}

std::ofstream open_output(const std::string& path) {
    std::ofstream file(path, std::ios::binary);
    if (!file) throw std::invalid_argument("cannot open '" + path + "' for writing");
    return file;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    Config config;
    CLI::App app{"Principal characters of two-generator Moebius groups"};
    app.require_subcommand(1);
    app.fallthrough();
    app.add_option("--tol", config.tol, "identity/parabolic/matching tolerance")->capture_default_str();
    app.add_option("--p-max", config.p_max, "largest elliptic order recognised")->capture_default_str();
    app.add_option("--max-iter", config.max_iter, "letters applied per orbit")->capture_default_str();
    app.add_option("--search-depth", config.search_depth, "longest word in the orbit search")->capture_default_str();
    app.add_option("--zero-eps", config.zero_eps, "radius for convergence to zero")->capture_default_str();
    app.add_option("--threads", config.threads, "worker threads, 0 = all cores (env MODULI_THREADS overrides)")
        ->capture_default_str();

    std::string matrix, f_text, g_text, gamma_text, beta_text, beta_tilde_text = "-4", word_text;
    std::string window_text = "-3,3,-3,3", size_text = "256x256", out_path, csv_path;
    bool as_json = false, rows_only = false, no_dynamics = false;
    int pmin = 7, pmax = 200;

    auto* classify_cmd = app.add_subcommand("classify", "classify a single transformation");
    classify_cmd->add_option("--matrix", matrix, "entries a,b,c,d")->required();

    auto* char_cmd = app.add_subcommand("char", "principal character of a generator pair");
    char_cmd->add_option("--f", f_text, "entries a,b,c,d of f")->required();
    char_cmd->add_option("--g", g_text, "entries a,b,c,d of g")->required();

    auto* zext_cmd = app.add_subcommand("zext", "both Z2-extension characters of a slice point");
    zext_cmd->add_option("--gamma", gamma_text)->required();
    zext_cmd->add_option("--beta", beta_text)->required();

    auto* filter_cmd = app.add_subcommand("filter", "run the discreteness obstruction filter");
    filter_cmd->add_option("--gamma", gamma_text)->required();
    filter_cmd->add_option("--beta", beta_text)->required();
    filter_cmd->add_option("--beta-tilde", beta_tilde_text)->capture_default_str();
    filter_cmd->add_flag("--no-dynamics", no_dynamics, "skip the orbit search stage");

    auto* orbit_cmd = app.add_subcommand("orbit", "iterate a word of p/q polynomials");
    orbit_cmd->add_option("--gamma", gamma_text)->required();
    orbit_cmd->add_option("--beta", beta_text)->required();
    orbit_cmd->add_option("--word", word_text, "letters P and Q, applied cyclically")->required();

    auto* scan_cmd = app.add_subcommand("scan", "rasterise a gamma slice at fixed beta");
    scan_cmd->add_option("--beta", beta_text)->required();
    scan_cmd->add_option("--window", window_text, "re_min,re_max,im_min,im_max")->capture_default_str();
    scan_cmd->add_option("--size", size_text, "WxH")->capture_default_str();
    scan_cmd->add_option("--out", out_path, "binary PGM output")->required();
    scan_cmd->add_option("--csv", csv_path, "optional CSV mirror");

    auto* tables_cmd = app.add_subcommand("tables", "list exceptional characters");
    tables_cmd->add_flag("--json", as_json, "emit a JSON array");
    tables_cmd->add_flag("--rows-only", rows_only, "omit the dihedral families");

    auto* dehn_cmd = app.add_subcommand("dehn", "figure-eight Dehn filling sweep");
    dehn_cmd->add_option("--pmin", pmin)->capture_default_str();
    dehn_cmd->add_option("--pmax", pmax)->capture_default_str();
    dehn_cmd->add_option("--out", out_path, "CSV output (stdout when omitted)");

    auto* realize_cmd = app.add_subcommand("realize", "matrices for (gamma, beta, -4)");
    realize_cmd->add_option("--gamma", gamma_text)->required();
    realize_cmd->add_option("--beta", beta_text)->required();

    auto* distance_cmd = app.add_subcommand("distance", "complex distance between generator axes");
    distance_cmd->add_option("--gamma", gamma_text)->required();
    distance_cmd->add_option("--beta", beta_text)->required();
    distance_cmd->add_option("--beta-tilde", beta_tilde_text)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (const char* env = std::getenv("MODULI_THREADS"); env && *env) config.threads = std::stoi(env);
        try {
            config.validate();
        } catch (const Error& e) {
            err << "usage error: " << e.what() << '\n';
            return kExitUsage;
        }

        auto emit = [&](const json& j) { out << j.dump(2) << '\n'; };

        if (*classify_cmd) {
            json j;
            to_json(j, classify(normalize(parse_matrix(matrix)), config.tol, config.p_max));
            emit(j);
        } else if (*char_cmd) {
            emit(character_of(normalize(parse_matrix(f_text)), normalize(parse_matrix(g_text))));
        } else if (*zext_cmd) {
            const auto [phi, psi] = zext_characters({parse_complex(gamma_text), parse_complex(beta_text)});
            emit(json{{"phi", phi}, {"psi", psi}});
        } else if (*filter_cmd) {
            const PrincipalCharacter chr{parse_complex(gamma_text), parse_complex(beta_text),
                                         parse_complex(beta_tilde_text)};
            emit(discreteness_filter(chr, config, !no_dynamics));
        } else if (*orbit_cmd) {
            OrbitOptions opt;
            opt.max_iter = config.max_iter;
            opt.zero_eps = config.zero_eps;
            emit(iterate(parse_complex(beta_text), parse_complex(gamma_text), word_text, opt));
        } else if (*scan_cmd) {
            const auto [w, h] = parse_size(size_text);
            const Raster raster = scan_slice(parse_complex(beta_text), parse_window(window_text), w, h, config);
            {
                auto file = open_output(out_path);
                write_pgm(file, raster);
            }
            if (!csv_path.empty()) {
                auto file = open_output(csv_path);
                write_csv(file, raster);
            }
            std::map<std::string, int> counts;
            for (PixelCode c : raster.cells) ++counts[to_string(c)];
            emit(json{{"width", w}, {"height", h}, {"pgm", out_path}, {"counts", counts}});
        } else if (*tables_cmd) {
            const auto entries = rows_only ? table_rows() : exceptional_tables(config.p_max);
            if (as_json) {
                emit(entries);
            } else {
                for (const auto& e : entries) out << render_row(e) << "  " << to_string(e.table) << '\n';
            }
        } else if (*dehn_cmd) {
            const auto points = dehn_family(pmin, pmax, config.effective_threads());
            if (out_path.empty()) {
                write_dehn_csv(out, points);
            } else {
                auto file = open_output(out_path);
                write_dehn_csv(file, points);
            }
        } else if (*realize_cmd) {
            const RealizedPair pair = realize({parse_complex(gamma_text), parse_complex(beta_text)}, config.tol);
            json j = pair;
            j["character"] = character_of(pair.f, pair.g);
            emit(j);
        } else if (*distance_cmd) {
            emit(complex_distance(
                {parse_complex(gamma_text), parse_complex(beta_text), parse_complex(beta_tilde_text)}, config.tol));
        }
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return kExitDomain;
    } catch (const std::exception& e) {
        err << "usage error: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitOk;
}

}  // namespace moduli
