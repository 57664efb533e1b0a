#pragma once

// The Moeglin-Waldspurger involution on multisegments. Segments on distinct
// cosets never interact, so the multisegment is split by coset and the
// descending-chain procedure runs on each piece independently.

#include <functional>
#include <map>
#include <vector>

#include "segments.hpp"

namespace branchlaw {

// Chooses among candidate segments that tie exactly (same lower and upper
// endpoint) at one step of the procedure. The result is provably independent
// of this choice because tied candidates are identical segments; the hook
// exists so tests can exercise that independence.
using TieBreaker = std::function<std::size_t(std::size_t n_candidates)>;

namespace detail {

inline Multisegment dual_one_coset(std::vector<Segment> work, const TieBreaker& tie) {
    Multisegment out;
    while (!work.empty()) {
        // Start a descending chain at the highest upper endpoint present.
        Rat cur = work.front().b;
        for (const Segment& s : work) cur = std::max(cur, s.b);

        std::vector<std::size_t> consumed;
        Rat top = cur, low = cur, prev_a{};
        bool first = true;
        for (;;) {
            // Among segments ending at cur (and starting strictly left of the
            // previous pick, after the first step), take a maximal start.
            bool found = false;
            Rat best_a{};
            for (const Segment& s : work)
                if (s.b == cur && (first || s.a < prev_a) && (!found || best_a < s.a)) {
                    found = true;
                    best_a = s.a;
                }
            if (!found) break;
            std::vector<std::size_t> pool;
            for (std::size_t i = 0; i < work.size(); ++i)
                if (work[i].b == cur && work[i].a == best_a) pool.push_back(i);
            const std::size_t pick = tie ? tie(pool.size()) : 0;
            consumed.push_back(pool.at(pick));
            prev_a = best_a;
            low = cur;
            first = false;
            cur = cur - Rat(1);
        }
        out.add(Segment(work.front().base, low, top));

        // Eat the consumed upper endpoints and drop segments that emptied.
        std::vector<bool> hit(work.size(), false);
        for (std::size_t i : consumed) hit[i] = true;
        std::vector<Segment> next;
        next.reserve(work.size());
        for (std::size_t i = 0; i < work.size(); ++i) {
            if (!hit[i]) {
                next.push_back(work[i]);
            } else if (auto t = truncate_high(work[i])) {
                next.push_back(*t);
            }
        }
        work = std::move(next);
    }
    return out;
}

}  // namespace detail

inline Multisegment zelevinsky_dual(const Multisegment& ms, const TieBreaker& tie = {}) {
    std::map<CosetKey, std::vector<Segment>> by_coset;
    for (const Segment& s : ms) by_coset[coset_key(s)].push_back(s);
    Multisegment out;
    for (auto& [key, segs] : by_coset)
        for (const Segment& s : detail::dual_one_coset(std::move(segs), tie)) out.add(s);
    return out;
}

}  // namespace branchlaw
