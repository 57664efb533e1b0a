#pragma once

// Segments on cuspidal lines and multisets of them. A segment [a..b]@rho is
// the interval of twists nu^a rho, ..., nu^b rho with b - a a non-negative
// integer. Linking and the no-precedence normal form follow the standard
// combinatorics for general linear groups.

#include <algorithm>
#include <map>
#include <optional>
#include <stdexcept>
#include <tuple>
#include <vector>

#include "rational.hpp"
#include "symbols.hpp"

namespace branchlaw {

struct Segment {
    CuspidalSymbol base;
    Rat a;
    Rat b;

    Segment() = default;
    Segment(CuspidalSymbol rho, Rat lo, Rat hi) : base(std::move(rho)), a(lo), b(hi) {
        if (!(b - a).is_integer() || b < a)
            throw std::invalid_argument("segment endpoints must differ by a non-negative integer");
    }

    std::int64_t length() const { return (b - a).num + 1; }

    friend bool operator==(const Segment& x, const Segment& y) {
        return x.base == y.base && x.a == y.a && x.b == y.b;
    }
    friend bool operator!=(const Segment& x, const Segment& y) { return !(x == y); }
    friend bool operator<(const Segment& x, const Segment& y) {
        return std::tie(x.base, x.a, x.b) < std::tie(y.base, y.a, y.b);
    }
};

inline Segment shift_segment(const Segment& s, Rat t) { return Segment(s.base, s.a + t, s.b + t); }

// Drop the highest twist: [a..b] -> [a..b-1], empty when the segment is a point.
inline std::optional<Segment> truncate_high(const Segment& s) {
    if (s.a == s.b) return std::nullopt;
    return Segment(s.base, s.a, s.b - Rat(1));
}

// Drop the lowest twist: [a..b] -> [a+1..b], empty when the segment is a point.
inline std::optional<Segment> truncate_low(const Segment& s) {
    if (s.a == s.b) return std::nullopt;
    return Segment(s.base, s.a + Rat(1), s.b);
}

// Segments interact only when they sit on the same integer coset of the same
// cuspidal line.
inline bool same_coset(const Segment& x, const Segment& y) {
    return x.base == y.base && (x.a - y.a).is_integer();
}

inline bool segment_contains(const Segment& outer, const Segment& inner) {
    return same_coset(outer, inner) && outer.a <= inner.a && inner.b <= outer.b;
}

inline bool linked(const Segment& x, const Segment& y) {
    if (!same_coset(x, y)) return false;
    if (segment_contains(x, y) || segment_contains(y, x)) return false;
    // Union is again a segment: the intervals overlap or are adjacent.
    return std::max(x.a, y.a) <= std::min(x.b, y.b) + Rat(1);
}

inline bool precedes(const Segment& x, const Segment& y) { return linked(x, y) && x.a < y.a; }

// A multiset of segments, stored sorted so multiset equality is plain
// vector equality.
class Multisegment {
public:
    Multisegment() = default;
    explicit Multisegment(std::vector<Segment> segs) : segs_(std::move(segs)) {
        std::sort(segs_.begin(), segs_.end());
    }

    void add(Segment s) {
        auto it = std::upper_bound(segs_.begin(), segs_.end(), s);
        segs_.insert(it, std::move(s));
    }

    // Remove one copy of s; false when absent.
    bool remove_one(const Segment& s) {
        auto it = std::lower_bound(segs_.begin(), segs_.end(), s);
        if (it == segs_.end() || *it != s) return false;
        segs_.erase(it);
        return true;
    }

    bool empty() const { return segs_.empty(); }
    std::size_t size() const { return segs_.size(); }
    const std::vector<Segment>& segments() const { return segs_; }
    auto begin() const { return segs_.begin(); }
    auto end() const { return segs_.end(); }

    friend bool operator==(const Multisegment& x, const Multisegment& y) {
        return x.segs_ == y.segs_;
    }
    friend bool operator!=(const Multisegment& x, const Multisegment& y) { return !(x == y); }
    friend bool operator<(const Multisegment& x, const Multisegment& y) {
        return x.segs_ < y.segs_;
    }

private:
    std::vector<Segment> segs_;
};

inline Multisegment shift_multisegment(const Multisegment& ms, Rat t) {
    std::vector<Segment> out;
    out.reserve(ms.size());
    for (const Segment& s : ms) out.push_back(shift_segment(s, t));
    return Multisegment(std::move(out));
}

// Key identifying the integer coset of a cuspidal line that a segment lives
// on: the base symbol together with the fractional part of its endpoints.
struct CosetKey {
    CuspidalSymbol base;
    Rat frac;  // a - floor(a), in [0,1)

    friend bool operator==(const CosetKey& x, const CosetKey& y) {
        return x.base == y.base && x.frac == y.frac;
    }
    friend bool operator<(const CosetKey& x, const CosetKey& y) {
        if (x.base != y.base) return x.base < y.base;
        return x.frac < y.frac;
    }
};

inline CosetKey coset_key(const Segment& s) {
    std::int64_t fl = s.a.num >= 0 ? s.a.num / s.a.den
                                   : -((-s.a.num + s.a.den - 1) / s.a.den);
    return CosetKey{s.base, s.a - Rat(fl)};
}

// Order with linked pairs never in "precedes" position: group by coset, then
// upper endpoint descending, then lower endpoint descending. Within one
// coset, x before y with b(x) >= b(y) rules out precedes(x, y) outright, so
// the sorted sequence realizes the standard normal form.
inline std::vector<Segment> zelevinsky_sort(const Multisegment& ms) {
    std::vector<Segment> out(ms.begin(), ms.end());
    std::sort(out.begin(), out.end(), [](const Segment& x, const Segment& y) {
        const CosetKey kx = coset_key(x), ky = coset_key(y);
        if (!(kx == ky)) return kx < ky;
        if (x.b != y.b) return y.b < x.b;
        return y.a < x.a;
    });
    return out;
}

// Cuspidal support as a sorted multiset of twisted cuspidals.
using Support = std::vector<ShiftedCuspidal>;

inline Support support(const Multisegment& ms) {
    Support out;
    for (const Segment& s : ms)
        for (Rat e = s.a; e <= s.b; e = e + Rat(1)) out.emplace_back(s.base, e);
    std::sort(out.begin(), out.end());
    return out;
}

inline Support shift_support(const Support& sup, Rat t) {
    Support out;
    out.reserve(sup.size());
    for (const ShiftedCuspidal& c : sup) out.emplace_back(c.base, c.exponent + t);
    std::sort(out.begin(), out.end());
    return out;
}

// Multiset containment of sorted supports.
inline bool support_contains(const Support& big, const Support& small) {
    std::size_t i = 0;
    for (const ShiftedCuspidal& c : small) {
        while (i < big.size() && big[i] < c) ++i;
        if (i == big.size() || !(big[i] == c)) return false;
        ++i;
    }
    return true;
}

// The unique multisegment with pairwise unlinked segments and the given
// support: peel maximal runs starting from the lowest twist present on each
// coset. Standard bijection between supports and unlinked multisegments.
inline Multisegment generic_from_support(const Support& sup) {
    std::map<CosetKey, std::map<Rat, int>> by_coset;
    for (const ShiftedCuspidal& c : sup) {
        Segment point(c.base, c.exponent, c.exponent);
        by_coset[coset_key(point)][c.exponent] += 1;
    }
    Multisegment out;
    for (auto& [key, counts] : by_coset) {
        for (;;) {
            auto it = std::find_if(counts.begin(), counts.end(),
                                   [](const auto& kv) { return kv.second > 0; });
            if (it == counts.end()) break;
            const Rat start = it->first;
            Rat end = start;
            for (Rat e = start;; e = e + Rat(1)) {
                auto ce = counts.find(e);
                if (ce == counts.end() || ce->second == 0) break;
                ce->second -= 1;
                end = e;
            }
            out.add(Segment(key.base, start, end));
        }
    }
    return out;
}

}  // namespace branchlaw
