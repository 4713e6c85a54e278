#include "moduli/dynamics.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>
#include <thread>

#include "moduli/error.hpp"

namespace moduli {

Complex p_apply(Complex beta, Complex z) { return z * (z - beta); }

Complex q_apply(Complex beta, Complex z) {
    const Complex w = 1.0 + beta - z;
    return z * w * w;
}

double escape_threshold(Complex beta) { return std::max(2.0, std::abs(beta) + 2.0); }

const char* to_string(OrbitOutcome o) {
    switch (o) {
        case OrbitOutcome::ConvergedToZero: return "ConvergedToZero";
        case OrbitOutcome::HitZeroExactly: return "HitZeroExactly";
        case OrbitOutcome::Escaped: return "Escaped";
        case OrbitOutcome::Cyclic: return "Cyclic";
        case OrbitOutcome::MaxIterations: return "MaxIterations";
    }
    return "?";
}

namespace {

constexpr double kUnit = std::numeric_limits<double>::epsilon();
constexpr double kIndistinct = 8.0;  // values within this many error bounds of 0 count as 0

// A value together with a first-order bound on its accumulated rounding error.
struct Tracked {
    Complex z;
    double err;
};

// One letter. A linear factor or result that is zero within its error bound
// is snapped to an exact 0: the exact orbit may land on 0 there.
Tracked snap(Tracked t) { return std::abs(t.z) <= kIndistinct * t.err ? Tracked{{}, 0.0} : t; }

Tracked apply_letter(char letter, Complex beta, Tracked t) {
    const double az = std::abs(t.z);
    if (letter == 'P') {
        const Complex w = t.z - beta;
        const double ew = t.err + kUnit * (az + std::abs(beta));
        if (std::abs(w) <= kIndistinct * ew) return {{}, 0.0};
        const Complex out = t.z * w;
        return snap({out, std::abs(w) * t.err + az * ew + t.err * ew + 4.0 * kUnit * std::abs(out)});
    }
    const Complex w = 1.0 + beta - t.z;
    const double ew = t.err + kUnit * (1.0 + std::abs(beta) + az);
    if (std::abs(w) <= kIndistinct * ew) return {{}, 0.0};
    const Complex out = t.z * w * w;
    const double aw = std::abs(w);
    return snap({out, aw * aw * t.err + 2.0 * az * aw * ew + (2.0 * aw + az) * ew * ew + 6.0 * kUnit * std::abs(out)});
}

void check_word(std::string_view word) {
    if (word.empty()) throw Error(ErrorKind::InvalidArgument, "empty word");
    for (char c : word)
        if (c != 'P' && c != 'Q') throw Error(ErrorKind::InvalidArgument, "word letters must be P or Q");
}

struct OrbitSummary {
    OrbitOutcome outcome = OrbitOutcome::MaxIterations;
    Complex last{};
    int steps = 0;
};

// Shared orbit loop; `values` may be null when only the outcome is needed.
//
// Cycle detection compares each new value with the last `history` values.
// Repelling cycles are only caught while rounding drift is still tiny, so the
// check is not restricted to equal word positions.
OrbitSummary run_orbit(Complex beta, Complex z, std::string_view word, const OrbitOptions& opt,
                       std::vector<Complex>* values) {
    const double escape = opt.escape_T > 0.0 ? opt.escape_T : escape_threshold(beta);
    const auto len = static_cast<int>(word.size());
    if (values) values->push_back(z);
    if (std::abs(z) > escape) return {OrbitOutcome::Escaped, z, 0};
    if (z == Complex{}) return {OrbitOutcome::HitZeroExactly, z, 0};

    const int window = std::max(opt.history, len);
    Tracked t{z, kUnit * std::abs(z)};
    std::vector<Complex> ring(static_cast<std::size_t>(window));
    ring[0] = z;
    double prev_mag = std::abs(z);
    int decreasing = 1;

    for (int n = 0; n < opt.max_iter; ++n) {
        t = apply_letter(word[static_cast<std::size_t>(n % len)], beta, t);
        z = t.z;
        const int steps = n + 1;
        if (values) values->push_back(z);
        const double mag = std::abs(z);
        if (!(mag <= escape)) return {OrbitOutcome::Escaped, z, steps};  // also catches NaN
        if (z == Complex{}) return {OrbitOutcome::HitZeroExactly, z, steps};
        decreasing = mag < prev_mag ? decreasing + 1 : 1;
        prev_mag = mag;
        if (mag < opt.zero_eps && decreasing >= opt.decreasing_tail) return {OrbitOutcome::ConvergedToZero, z, steps};

        for (int lag = 1; lag <= std::min(window, steps); ++lag)
            if (std::abs(z - ring[static_cast<std::size_t>((steps - lag) % window)]) < opt.revisit_radius)
                return {OrbitOutcome::Cyclic, z, steps};
        ring[static_cast<std::size_t>(steps % window)] = z;
    }
    return {OrbitOutcome::MaxIterations, z, opt.max_iter};
}

}  // namespace

OrbitRecord iterate(Complex beta, Complex gamma0, std::string_view word, const OrbitOptions& options) {
    check_word(word);
    if (options.max_iter < 1) throw Error(ErrorKind::InvalidArgument, "max_iter must be >= 1");
    OrbitRecord rec;
    rec.beta = beta;
    rec.word = std::string(word);
    rec.outcome = run_orbit(beta, gamma0, word, options, &rec.values).outcome;
    return rec;
}

std::optional<Certificate> orbit_verdict(const OrbitRecord& record) {
    if (record.outcome != OrbitOutcome::ConvergedToZero || record.values.empty()) return std::nullopt;
    return Certificate{record.word, record.values.back(), static_cast<int>(record.values.size()) - 1};
}

namespace {

bool is_proper_power(const std::string& w) {
    const std::size_t n = w.size();
    for (std::size_t d = 1; d < n; ++d) {
        if (n % d != 0) continue;
        bool periodic = true;
        for (std::size_t i = d; i < n && periodic; ++i) periodic = w[i] == w[i - d];
        if (periodic) return true;
    }
    return false;
}

}  // namespace

std::vector<std::string> search_words(int max_depth) {
    std::vector<std::string> words;
    for (int len = 1; len <= max_depth; ++len) {
        for (unsigned long bits = 0; bits < (1UL << len); ++bits) {
            std::string w(static_cast<std::size_t>(len), 'P');
            for (int i = 0; i < len; ++i)
                if (bits & (1UL << (len - 1 - i))) w[static_cast<std::size_t>(i)] = 'Q';
            if (!is_proper_power(w)) words.push_back(std::move(w));
        }
    }
    return words;
}

std::optional<Certificate> semigroup_search(Complex beta, Complex gamma0, int max_depth, const Config& config) {
    if (max_depth < 1) throw Error(ErrorKind::InvalidArgument, "max_depth must be >= 1");
    OrbitOptions opt;
    opt.max_iter = config.max_iter;
    opt.zero_eps = config.zero_eps;
    if (std::abs(gamma0) > escape_threshold(beta) || gamma0 == Complex{}) return std::nullopt;

    static const std::vector<std::string> default_words = search_words(8);
    const std::vector<std::string> custom = max_depth == 8 ? std::vector<std::string>{} : search_words(max_depth);
    const std::vector<std::string>& words = max_depth == 8 ? default_words : custom;

    for (const std::string& w : words) {
        const OrbitSummary s = run_orbit(beta, gamma0, w, opt, nullptr);
        if (s.outcome == OrbitOutcome::ConvergedToZero) return Certificate{w, s.last, s.steps};
    }
    return std::nullopt;
}

// ---------------------------------------------------------------------------

const char* to_string(PixelCode c) {
    switch (c) {
        case PixelCode::NotKleinianJorgensen: return "NotKleinianJorgensen";
        case PixelCode::OrbitCertificate: return "OrbitCertificate";
        case PixelCode::Exceptional: return "Exceptional";
        case PixelCode::Inconclusive: return "Inconclusive";
    }
    return "?";
}

PixelCode pixel_code(const FilterReport& report) {
    switch (report.verdict) {
        case Verdict::NotKleinian: return PixelCode::NotKleinianJorgensen;
        case Verdict::LikelyNotDiscrete: return PixelCode::OrbitCertificate;
        case Verdict::ElementaryMatch: return PixelCode::Exceptional;
        case Verdict::Inconclusive: return PixelCode::Inconclusive;
    }
    return PixelCode::Inconclusive;
}

Complex Raster::pixel_center(int x, int y) const {
    const double re = window.re_min + (x + 0.5) * (window.re_max - window.re_min) / width;
    const double im = window.im_max - (y + 0.5) * (window.im_max - window.im_min) / height;
    return {re, im};
}

Raster scan_slice(Complex beta, const Window& window, int width, int height, const Config& config) {
    config.validate();
    if (width < 1 || height < 1) throw Error(ErrorKind::InvalidArgument, "raster size must be positive");
    if (!(window.re_max > window.re_min) || !(window.im_max > window.im_min))
        throw Error(ErrorKind::InvalidArgument, "degenerate window");

    Raster raster;
    raster.beta = beta;
    raster.window = window;
    raster.width = width;
    raster.height = height;
    raster.cells.assign(static_cast<std::size_t>(width) * height, PixelCode::Inconclusive);

    std::atomic<int> next_row{0};
    auto worker = [&] {
        for (int y = next_row++; y < height; y = next_row++) {
            for (int x = 0; x < width; ++x) {
                const Complex g = raster.pixel_center(x, y);
                const FilterReport report = discreteness_filter({g, beta, Complex{-4.0}}, config, true);
                raster.cells[static_cast<std::size_t>(y) * width + x] = pixel_code(report);
            }
        }
    };

    const int threads = std::min(config.effective_threads(), height);
    if (threads <= 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        pool.reserve(static_cast<std::size_t>(threads));
        for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
    }
    return raster;
}

}  // namespace moduli
