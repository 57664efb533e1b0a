#pragma once

// Segment-level necessary condition for the branching predicate. Two
// multisegments pass when their segments pair off so each pair satisfies one
// of four half-shift relations, with length-one segments allowed to go
// unmatched (their truncation is empty).

#include <cstdint>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "segments.hpp"

namespace branchlaw {

enum class WeakRole { P, Q, A, B };

inline const char* to_string(WeakRole r) {
    switch (r) {
        case WeakRole::P: return "p";
        case WeakRole::Q: return "q";
        case WeakRole::A: return "a";
        default: return "b";
    }
}

struct WeakPair {
    Segment from_m;
    Segment from_n;
    WeakRole role = WeakRole::P;
};

struct WeaklyRelevantWitness {
    std::vector<WeakPair> pairs;
    std::vector<Segment> free_m;  // length one, truncated away
    std::vector<Segment> free_n;  // length one, truncated away
};

namespace detail {

// The partner each role demands of an m-side segment, if any.
inline bool weak_role_holds(const Segment& dm, const Segment& dn, WeakRole r) {
    const Rat minus_half(-1, 2);
    const Rat plus_half(1, 2);
    switch (r) {
        case WeakRole::P: {
            auto t = truncate_low(dm);
            return t && shift_segment(*t, minus_half) == dn;
        }
        case WeakRole::Q: {
            auto t = truncate_high(dn);
            return t && shift_segment(*t, plus_half) == dm;
        }
        case WeakRole::A:
            return shift_segment(dm, minus_half) == dn;
        default:
            return shift_segment(dm, plus_half) == dn;
    }
}

struct WeakState {
    std::vector<Segment> ms, ns;
    std::uint64_t avail = 0;
    std::vector<std::pair<int, WeakRole>> choice;  // -1 = unmatched
    std::set<std::pair<std::size_t, std::uint64_t>> failed;

    bool leftovers_ok() const {
        for (std::size_t j = 0; j < ns.size(); ++j)
            if ((avail >> j) & 1u)
                if (ns[j].length() != 1) return false;
        return true;
    }

    bool search(std::size_t i) {
        if (i == ms.size()) return leftovers_ok();
        if (failed.count({i, avail})) return false;
        for (WeakRole r : {WeakRole::P, WeakRole::Q, WeakRole::A, WeakRole::B}) {
            for (std::size_t j = 0; j < ns.size(); ++j) {
                if (!((avail >> j) & 1u) || !weak_role_holds(ms[i], ns[j], r)) continue;
                avail &= ~(std::uint64_t{1} << j);
                choice[i] = {static_cast<int>(j), r};
                if (search(i + 1)) return true;
                avail |= std::uint64_t{1} << j;
                break;  // further partners with this role are identical copies
            }
        }
        if (ms[i].length() == 1) {
            choice[i] = {-1, WeakRole::P};
            if (search(i + 1)) return true;
        }
        failed.insert({i, avail});
        return false;
    }
};

}  // namespace detail

inline std::optional<WeaklyRelevantWitness> weakly_relevant(const Multisegment& m,
                                                            const Multisegment& n) {
    if (n.size() > 64) throw std::invalid_argument("matcher supports at most 64 segments");
    detail::WeakState st;
    st.ms.assign(m.begin(), m.end());
    st.ns.assign(n.begin(), n.end());
    st.avail = st.ns.size() == 64 ? ~std::uint64_t{0}
                                  : ((std::uint64_t{1} << st.ns.size()) - 1);
    st.choice.assign(st.ms.size(), {-1, WeakRole::P});
    if (!st.search(0)) return std::nullopt;

    WeaklyRelevantWitness w;
    std::vector<bool> used(st.ns.size(), false);
    for (std::size_t i = 0; i < st.ms.size(); ++i) {
        const auto& [j, role] = st.choice[i];
        if (j < 0) {
            w.free_m.push_back(st.ms[i]);
        } else {
            used[static_cast<std::size_t>(j)] = true;
            w.pairs.push_back({st.ms[i], st.ns[static_cast<std::size_t>(j)], role});
        }
    }
    for (std::size_t j = 0; j < st.ns.size(); ++j)
        if (!used[j]) w.free_n.push_back(st.ns[j]);
    return w;
}

}  // namespace branchlaw
