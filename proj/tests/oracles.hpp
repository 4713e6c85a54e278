#pragma once
// Plain 2x2 complex arithmetic, independent of the library's MoebiusMap.

#include <array>
#include <cmath>
#include <complex>
#include <random>

namespace oracle {

using C = std::complex<double>;
using M = std::array<C, 4>;

inline M mul(const M& x, const M& y) {
    return {x[0] * y[0] + x[1] * y[2], x[0] * y[1] + x[1] * y[3],
            x[2] * y[0] + x[3] * y[2], x[2] * y[1] + x[3] * y[3]};
}
inline C det(const M& x) { return x[0] * x[3] - x[1] * x[2]; }
inline M inv(const M& x) {
    const C d = det(x);
    return {x[3] / d, -x[1] / d, -x[2] / d, x[0] / d};
}
inline C tr(const M& x) { return x[0] + x[3]; }

/// tr^2 / det - 4, independent of the determinant scaling.
inline C beta(const M& x) { return tr(x) * tr(x) / det(x) - C{4.0}; }

/// tr(x y x^-1 y^-1) - 2.
inline C gamma(const M& x, const M& y) { return tr(mul(mul(x, y), mul(inv(x), inv(y)))) - C{2.0}; }

inline double rel_err(C got, C want) { return std::abs(got - want) / (1.0 + std::abs(want)); }

struct Sampler {
    std::mt19937_64 rng;
    explicit Sampler(std::uint64_t seed) : rng(seed) {}
    double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng); }
    C box(double r) { return {uniform(-r, r), uniform(-r, r)}; }
    M matrix(double r = 1.0) {
        for (;;) {
            M m{box(r), box(r), box(r), box(r)};
            if (std::abs(det(m)) > 1e-3) return m;
        }
    }
};

}  // namespace oracle
