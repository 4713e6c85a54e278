#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "moduli/characters.hpp"
#include "moduli/complex.hpp"
#include "moduli/config.hpp"

namespace moduli {

/// p_beta(z) = z (z - beta): gamma(f, g f g^-1) in terms of gamma(f, g).
Complex p_apply(Complex beta, Complex z);

/// q_beta(z) = z (1 + beta - z)^2: gamma(f, g f g^-1 f g) in terms of gamma(f, g).
Complex q_apply(Complex beta, Complex z);

/// max(2, |beta| + 2). Beyond it |p_beta(z)| >= 2|z| and |q_beta(z)| >= |z|.
double escape_threshold(Complex beta);

enum class OrbitOutcome { ConvergedToZero, HitZeroExactly, Escaped, Cyclic, MaxIterations };
const char* to_string(OrbitOutcome o);

/// Orbit of gamma under a word in {P, Q} applied letter by letter, cyclically.
/// values[n+1] is word[n % word.size()] applied to values[n].
struct OrbitRecord {
    Complex beta{};
    std::string word;
    std::vector<Complex> values;
    OrbitOutcome outcome = OrbitOutcome::MaxIterations;

    char letter(std::size_t n) const { return word[n % word.size()]; }
    friend bool operator==(const OrbitRecord&, const OrbitRecord&) = default;
};

struct OrbitOptions {
    int max_iter = 1000;
    double escape_T = 0.0;  // <= 0: escape_threshold(beta)
    double zero_eps = 1e-6;
    double revisit_radius = 1e-12;
    int history = 64;       // cycle-detection window, in values
    int decreasing_tail = 5;
};

/// Stops at the first of: |z| > escape_T (Escaped); z == 0 (HitZeroExactly);
/// |z| < zero_eps after `decreasing_tail` strictly decreasing magnitudes
/// (ConvergedToZero); return within revisit_radius of one of the last `history`
/// values (Cyclic); max_iter letters applied (MaxIterations).
///
/// Each value carries a first-order bound on its accumulated rounding error.
/// A letter whose linear factor (z - beta for P, 1 + beta - z for Q) or result
/// is zero within a few such bounds produces an exact zero: the exact orbit may
/// terminate there, so it must not be read as convergence.
///
/// Throws Error(InvalidArgument) for an empty word, letters other than P/Q,
/// or max_iter < 1.
OrbitRecord iterate(Complex beta, Complex gamma0, std::string_view word, const OrbitOptions& options = {});

/// A certificate exactly when the orbit converged to zero without reaching it.
std::optional<Certificate> orbit_verdict(const OrbitRecord& record);

/// Primitive words over {P, Q} of length 1..max_depth in shortlex order
/// (P < Q). Proper powers are omitted: their orbits are subsequences of the root's.
std::vector<std::string> search_words(int max_depth);

/// First certificate over search_words(max_depth), each word iterated with
/// the config's max_iter and zero_eps. Deterministic.
std::optional<Certificate> semigroup_search(Complex beta, Complex gamma0, int max_depth, const Config& config = {});

// ---------------------------------------------------------------------------
// Slice rasterisation

enum class PixelCode : std::uint8_t {
    NotKleinianJorgensen = 0,
    OrbitCertificate = 85,
    Exceptional = 170,
    Inconclusive = 255,
};
const char* to_string(PixelCode c);

PixelCode pixel_code(const FilterReport& report);

struct Window {
    double re_min = -3.0;
    double re_max = 3.0;
    double im_min = -3.0;
    double im_max = 3.0;
    friend bool operator==(const Window&, const Window&) = default;
};

/// Row 0 is the top (im_max) edge; cells are row-major.
struct Raster {
    Complex beta{};
    Window window;
    int width = 0;
    int height = 0;
    std::vector<PixelCode> cells;

    Complex pixel_center(int x, int y) const;
    PixelCode at(int x, int y) const { return cells[static_cast<std::size_t>(y) * width + x]; }
    friend bool operator==(const Raster&, const Raster&) = default;
};

/// Classifies each pixel centre gamma by discreteness_filter((gamma, beta, -4))
/// with the orbit stage enabled. Rows are shared out across config threads;
/// the result does not depend on the thread count.
/// Throws Error(InvalidArgument) for empty sizes or a degenerate window.
Raster scan_slice(Complex beta, const Window& window, int width, int height, const Config& config = {});

}  // namespace moduli
