#pragma once

// Speh representations u_rho(m,d): the datum (rho, m, d) plus an optional
// twist (for nu^x-shifted copies mid-computation) and a right extension k
// (the essentially-Speh variant). Expansions to segment data, levels,
// derivatives, and the hook multisegment sequence live here.

#include <optional>
#include <stdexcept>
#include <tuple>
#include <vector>

#include "errors.hpp"
#include "involution.hpp"
#include "segments.hpp"
#include "symbols.hpp"

namespace branchlaw {

struct SpehRep {
    CuspidalSymbol rho;
    Rat twist;  // 0 for a unitary Speh representation
    int m = 1;
    int d = 1;
    int k = 0;  // right extension; 0 unless essentially Speh

    SpehRep() = default;
    SpehRep(CuspidalSymbol r, int m_, int d_, int k_ = 0, Rat t = Rat(0))
        : rho(std::move(r)), twist(t), m(m_), d(d_), k(k_) {
        if (m < 1 || d < 1 || k < 0) throw std::invalid_argument("speh datum out of range");
    }

    std::int64_t dimension() const {
        return static_cast<std::int64_t>(rho.rank) * m * (d + k);
    }
    bool cuspidal() const { return m == 1 && d == 1 && k == 0; }

    friend bool operator==(const SpehRep& x, const SpehRep& y) {
        return x.rho == y.rho && x.twist == y.twist && x.m == y.m && x.d == y.d && x.k == y.k;
    }
    friend bool operator!=(const SpehRep& x, const SpehRep& y) { return !(x == y); }
    friend bool operator<(const SpehRep& x, const SpehRep& y) {
        return std::tie(x.rho, x.twist, x.m, x.d, x.k) <
               std::tie(y.rho, y.twist, y.m, y.d, y.k);
    }
};

inline SpehRep speh(CuspidalSymbol rho, int m, int d) { return SpehRep(std::move(rho), m, d); }

// The m segments nu^t Delta_rho(d), t = -(m-1)/2 .. (m-1)/2, each stretched
// by k extra points at its upper end in the essentially-Speh case.
inline Multisegment zelevinsky_data(const SpehRep& u) {
    Multisegment out;
    const Rat dspan{u.d - 1, 2};
    for (int i = 0; i < u.m; ++i) {
        const Rat t = u.twist + Rat(2 * i - (u.m - 1), 2);
        out.add(Segment(u.rho, t - dspan, t + dspan + Rat(u.k)));
    }
    return out;
}

// The transposed presentation: d segments nu^j Delta_rho(m). Undefined for
// the extended variant.
inline Multisegment langlands_data(const SpehRep& u) {
    if (u.k != 0) throw std::domain_error("langlands data undefined for extended speh");
    Multisegment out;
    const Rat mspan{u.m - 1, 2};
    for (int i = 0; i < u.d; ++i) {
        const Rat j = u.twist + Rat(2 * i - (u.d - 1), 2);
        out.add(Segment(u.rho, j - mspan, j + mspan));
    }
    return out;
}

inline std::int64_t level(const SpehRep& u) {
    if (u.k != 0) throw std::domain_error("level undefined for extended speh");
    return static_cast<std::int64_t>(u.rho.rank) * u.m;
}

// The d -> d-1 step; empty once the factor is reduced to nothing.
inline std::optional<SpehRep> highest_derivative(const SpehRep& u) {
    if (u.k != 0) throw std::domain_error("highest derivative undefined for extended speh");
    if (u.d == 1) return std::nullopt;
    return SpehRep(u.rho, u.m, u.d - 1, 0, u.twist);
}

// Partial derivative of a Speh representation. The multisegment is the
// literal segment data of the derivative; the twist records the conventional
// nu^{-1/2} (right) or nu^{+1/2} (left) normalization it carries relative to
// a unitary object, purely for presentation.
struct SpehDerivative {
    Rat twist;
    Multisegment data;
};

// Right derivative of group order rho.rank * j: the j lowest segments lose
// their upper endpoint. At j = m this is exactly the data of the nu^{-1/2}
// twist of u_rho(m, d-1).
inline SpehDerivative speh_right_derivative(const SpehRep& u, int j) {
    if (u.k != 0) throw std::domain_error("derivative undefined for extended speh");
    if (j < 0 || j > u.m) throw std::out_of_range("derivative count outside 0..m");
    if (j == 0) return {Rat(0), zelevinsky_data(u)};
    const std::vector<Segment> segs = zelevinsky_data(u).segments();  // sorted low to high
    Multisegment out;
    for (int i = 0; i < u.m; ++i) {
        if (i < j) {
            if (auto t = truncate_high(segs[static_cast<std::size_t>(i)])) out.add(*t);
        } else {
            out.add(segs[static_cast<std::size_t>(i)]);
        }
    }
    return {Rat(-1, 2), out};
}

// Mirror: the j highest segments lose their lower endpoint.
inline SpehDerivative speh_left_derivative(const SpehRep& u, int j) {
    if (u.k != 0) throw std::domain_error("derivative undefined for extended speh");
    if (j < 0 || j > u.m) throw std::out_of_range("derivative count outside 0..m");
    if (j == 0) return {Rat(0), zelevinsky_data(u)};
    const std::vector<Segment> segs = zelevinsky_data(u).segments();
    Multisegment out;
    for (int i = 0; i < u.m; ++i) {
        if (i >= u.m - j) {
            if (auto t = truncate_low(segs[static_cast<std::size_t>(i)])) out.add(*t);
        } else {
            out.add(segs[static_cast<std::size_t>(i)]);
        }
    }
    return {Rat(1, 2), out};
}

// The descending sequence of hook-shaped multisegments attached to (rho,m,d):
// entry i pairs the singletons below (m-d)/2 starting at -(m+d-2)/2 + i with
// the single segment [(m-d)/2, (m+d-2)/2 - i]; there are min(m,d) entries.
inline std::vector<Multisegment> hook_multisegments(const CuspidalSymbol& rho, int m, int d) {
    if (m < 1 || d < 1) throw std::invalid_argument("hook parameters must be positive");
    const Rat lo{-(m + d - 2), 2};
    const Rat hi{m + d - 2, 2};
    const Rat mid{m - d, 2};
    std::vector<Multisegment> out;
    const int passes = std::min(m, d);
    for (int i = 0; i < passes; ++i) {
        Multisegment ms;
        for (Rat e = lo + Rat(i); e <= mid - Rat(1); e = e + Rat(1)) ms.add(Segment(rho, e, e));
        ms.add(Segment(rho, mid, hi - Rat(i)));
        out.push_back(std::move(ms));
    }
    return out;
}

enum class Positivity { GPositive, GNegative, Balanced, Neither };

// Classify a support by comparing multiplicities at nu^a and nu^{-a} on each
// cuspidal line: never smaller on the positive side means G-positive,
// mirrored for G-negative, both means balanced.
inline Positivity support_positivity(const Support& sup) {
    bool pos = true, neg = true;
    for (const ShiftedCuspidal& c : sup) {
        if (c.exponent.num == 0) continue;
        const ShiftedCuspidal mirror{c.base, -c.exponent};
        std::size_t here = 0, there = 0;
        for (const ShiftedCuspidal& x : sup) {
            if (x == c) ++here;
            if (x == mirror) ++there;
        }
        if (c.exponent > Rat(0) && here > there) neg = false;
        if (c.exponent < Rat(0) && here > there) pos = false;
    }
    if (pos && neg) return Positivity::Balanced;
    if (pos) return Positivity::GPositive;
    if (neg) return Positivity::GNegative;
    return Positivity::Neither;
}

}  // namespace branchlaw
