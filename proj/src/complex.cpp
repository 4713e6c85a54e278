#include "moduli/complex.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace moduli {

Complex principal_sqrt(Complex z) {
    if (z.imag() == 0.0) {
        if (z.real() >= 0.0) return {std::sqrt(z.real()), 0.0};
        return {0.0, std::sqrt(-z.real())};
    }
    return std::sqrt(z);
}

namespace {

// Reads a signed decimal/scientific real from the front of `s`, advancing it.
bool read_real(std::string_view& s, double& out) {
    std::size_t n = 0;
    if (n < s.size() && (s[n] == '+' || s[n] == '-')) ++n;
    const std::size_t digits_start = n;
    while (n < s.size() && (std::isdigit(static_cast<unsigned char>(s[n])) || s[n] == '.')) ++n;
    if (n == digits_start) return false;
    if (n < s.size() && (s[n] == 'e' || s[n] == 'E')) {
        std::size_t m = n + 1;
        if (m < s.size() && (s[m] == '+' || s[m] == '-')) ++m;
        const std::size_t exp_start = m;
        while (m < s.size() && std::isdigit(static_cast<unsigned char>(s[m]))) ++m;
        if (m > exp_start) n = m;
    }
    // from_chars rejects a leading '+'
    std::string_view token = s.substr(0, n);
    if (!token.empty() && token.front() == '+') token.remove_prefix(1);
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), out);
    if (ec != std::errc() || ptr != token.data() + token.size()) return false;
    s.remove_prefix(n);
    return true;
}

bool is_unit(char c) { return c == 'i' || c == 'j' || c == 'I' || c == 'J'; }

// Parses one signed term: a real, `<real>i`, or a bare `i`.
bool read_term(std::string_view& s, double& value, bool& imaginary) {
    double sign = 1.0;
    std::string_view probe = s;
    if (!probe.empty() && (probe.front() == '+' || probe.front() == '-')) {
        sign = probe.front() == '-' ? -1.0 : 1.0;
        probe.remove_prefix(1);
    }
    if (!probe.empty() && is_unit(probe.front())) {
        // bare i, or i*<real> is not supported
        value = sign;
        imaginary = true;
        probe.remove_prefix(1);
        s = probe;
        return true;
    }
    if (!read_real(s, value)) return false;
    imaginary = false;
    if (!s.empty() && s.front() == '*') s.remove_prefix(1);
    if (!s.empty() && is_unit(s.front())) {
        imaginary = true;
        s.remove_prefix(1);
    }
    return true;
}

}  // namespace

Complex parse_complex(std::string_view text) {
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
    if (text.empty()) throw std::invalid_argument("empty complex literal");

    const std::string original(text);
    double first = 0.0;
    bool first_imag = false;
    if (!read_term(text, first, first_imag)) throw std::invalid_argument("malformed complex literal '" + original + "'");
    if (text.empty()) return first_imag ? Complex{0.0, first} : Complex{first, 0.0};

    if (first_imag || (text.front() != '+' && text.front() != '-'))
        throw std::invalid_argument("malformed complex literal '" + original + "'");
    double second = 0.0;
    bool second_imag = false;
    if (!read_term(text, second, second_imag) || !second_imag || !text.empty())
        throw std::invalid_argument("malformed complex literal '" + original + "'");
    return {first, second};
}

namespace {

std::string format_real(double x, int digits) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*g", digits, x);
    return buf;
}

std::string format_with(Complex z, int digits) {
    const double re = z.real();
    const double im = z.imag();
    if (im == 0.0 && !std::signbit(im)) return format_real(re, digits);
    std::string out = format_real(re, digits);
    out += std::signbit(im) ? '-' : '+';
    out += format_real(std::fabs(im), digits);
    out += 'i';
    return out;
}

}  // namespace

std::string format_complex(Complex z) { return format_with(z, 17); }

std::string format_complex_short(Complex z) {
    // Suppress rounding residue so table rows render as integers where exact.
    auto clean = [](double x) { return std::fabs(x) < 1e-14 ? 0.0 : x; };
    return format_with({clean(z.real()), clean(z.imag())}, 12);
}

}  // namespace moduli
