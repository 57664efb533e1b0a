#pragma once

// Exact rational arithmetic for twist exponents. Everything in this library
// lives on the half-integer lattice, but the type is a general normalized
// fraction so intermediate arithmetic can never silently round.

#include <cstdint>
#include <numeric>
#include <ostream>
#include <stdexcept>
#include <string>

namespace branchlaw {

struct Rat {
    std::int64_t num = 0;
    std::int64_t den = 1;  // always > 0 after normalization

    constexpr Rat() = default;
    constexpr Rat(std::int64_t n) : num(n), den(1) {}
    constexpr Rat(std::int64_t n, std::int64_t d) : num(n), den(d) { normalize(); }

    constexpr void normalize() {
        if (den == 0) throw std::invalid_argument("rational with zero denominator");
        if (den < 0) { num = -num; den = -den; }
        const std::int64_t g = std::gcd(num < 0 ? -num : num, den);
        if (g > 1) { num /= g; den /= g; }
    }

    constexpr bool is_integer() const { return den == 1; }

    friend constexpr Rat operator+(Rat x, Rat y) { return Rat(x.num * y.den + y.num * x.den, x.den * y.den); }
    friend constexpr Rat operator-(Rat x, Rat y) { return Rat(x.num * y.den - y.num * x.den, x.den * y.den); }
    friend constexpr Rat operator*(Rat x, Rat y) { return Rat(x.num * y.num, x.den * y.den); }
    friend constexpr Rat operator-(Rat x) { return Rat(-x.num, x.den); }

    friend constexpr bool operator==(Rat x, Rat y) { return x.num == y.num && x.den == y.den; }
    friend constexpr bool operator!=(Rat x, Rat y) { return !(x == y); }
    friend constexpr bool operator<(Rat x, Rat y) { return x.num * y.den < y.num * x.den; }
    friend constexpr bool operator<=(Rat x, Rat y) { return !(y < x); }
    friend constexpr bool operator>(Rat x, Rat y) { return y < x; }
    friend constexpr bool operator>=(Rat x, Rat y) { return !(x < y); }
};

inline constexpr Rat half{1, 2};

inline std::string to_string(Rat x) {
    std::string s = std::to_string(x.num);
    if (x.den != 1) s += "/" + std::to_string(x.den);
    return s;
}

inline std::ostream& operator<<(std::ostream& os, Rat x) { return os << to_string(x); }

}  // namespace branchlaw
