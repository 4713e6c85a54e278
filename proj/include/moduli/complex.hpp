#pragma once

#include <complex>
#include <string>
#include <string_view>

namespace moduli {

using Complex = std::complex<double>;

inline bool is_finite(Complex z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

// Principal square root: branch cut on the negative real axis, Re >= 0, and
// +i*sqrt(|x|) for negative reals regardless of the sign of a zero imaginary part.
Complex principal_sqrt(Complex z);

/// Parses `a`, `bi`, `a+bi`, `a-bi`, `i`, `-i` (optional `j` suffix, scientific
/// notation accepted). Throws std::invalid_argument on malformed input.
Complex parse_complex(std::string_view text);

// Inverse of parse_complex at 17 significant digits (lossless for doubles).
std::string format_complex(Complex z);

// Short human-readable rendering (12 significant digits), used by table listings.
std::string format_complex_short(Complex z);

}  // namespace moduli
