#pragma once

#include <cstdint>
#include <numeric>
#include <string>
#include <string_view>

#include "warpstab/errors.hpp"

namespace warpstab {

/// Exact rational with canonical form: den > 0, gcd(|num|, den) = 1.
/// Table data stays exact; conversion to double happens only at the
/// comparison layer.
struct Rational {
    std::int64_t num = 0;
    std::int64_t den = 1;

    Rational() = default;
    Rational(std::int64_t n, std::int64_t d = 1) : num(n), den(d) { normalize(); }

    void normalize() {
        if (den == 0) throw DomainError("Rational: zero denominator");
        if (den < 0) { num = -num; den = -den; }
        const std::int64_t g = std::gcd(num < 0 ? -num : num, den);
        if (g > 1) { num /= g; den /= g; }
    }

    double to_double() const { return static_cast<double>(num) / static_cast<double>(den); }

    friend Rational operator*(const Rational& a, const Rational& b) {
        return Rational(a.num * b.num, a.den * b.den);
    }
    friend Rational operator*(const Rational& a, std::int64_t k) { return Rational(a.num * k, a.den); }
    friend Rational operator+(const Rational& a, const Rational& b) {
        return Rational(a.num * b.den + b.num * a.den, a.den * b.den);
    }
    friend Rational operator-(const Rational& a, const Rational& b) {
        return Rational(a.num * b.den - b.num * a.den, a.den * b.den);
    }
    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num == b.num && a.den == b.den;
    }
    friend bool operator<(const Rational& a, const Rational& b) {
        return a.num * b.den < b.num * a.den;
    }

    std::string str() const { return std::to_string(num) + "/" + std::to_string(den); }
};

/// Parses "p/q" or a bare integer "p".
inline Rational parse_rational(std::string_view text) {
    const auto slash = text.find('/');
    try {
        if (slash == std::string_view::npos)
            return Rational(std::stoll(std::string(text)));
        return Rational(std::stoll(std::string(text.substr(0, slash))),
                        std::stoll(std::string(text.substr(slash + 1))));
    } catch (const std::logic_error&) {
        throw DomainError("not a rational: '" + std::string(text) + "'");
    }
}

} // namespace warpstab
