#pragma once

// Brute-force reference implementations used only by the tests. Each works
// from first principles on plain data so that agreement with the library is
// meaningful: the derivative-splitting oracle below recomputes segment grids
// point by point, and the support-partition oracle enumerates every
// multisegment with a given support.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "branchlaw/rational.hpp"
#include "branchlaw/segments.hpp"

namespace oracle {

using branchlaw::Rat;

// ----- derivative-splitting oracle --------------------------------------

using Point = std::pair<std::string, Rat>;  // (line name, exponent)
using PointBag = std::vector<Point>;        // sorted

struct PlainFactor {
    std::string line;
    int rank = 1;
    Rat twist;
    int m = 1;
    int d = 1;
};

// All exponent points of the factor's m-by-d grid after a derivative of the
// given row count: a right derivative drops the top point of the j rows with
// the smallest centers, a left derivative the bottom point of the j rows
// with the largest centers.
inline PointBag factor_points_after(const PlainFactor& f, int j, bool right) {
    PointBag out;
    for (int i = 0; i < f.m; ++i) {
        const Rat center = f.twist + Rat(2 * i - (f.m - 1), 2);
        const bool hit = right ? (i < j) : (i >= f.m - j);
        int lo = 0, hi = f.d - 1;
        if (hit) {
            if (right) --hi; else ++lo;
        }
        for (int s = lo; s <= hi; ++s)
            out.emplace_back(f.line, center + Rat(2 * s - (f.d - 1), 2));
    }
    std::sort(out.begin(), out.end());
    return out;
}

namespace detail {

// Every reachable (total group-theoretic order, combined point bag) pair for
// one side, by direct product enumeration of per-factor row counts.
inline std::map<std::int64_t, std::set<PointBag>> side_table(
    const std::vector<PlainFactor>& fs, bool right) {
    std::map<std::int64_t, std::set<PointBag>> table;
    std::vector<int> js(fs.size(), 0);
    std::function<void(std::size_t, std::int64_t, PointBag)> walk =
        [&](std::size_t i, std::int64_t order, PointBag bag) {
            if (i == fs.size()) {
                std::sort(bag.begin(), bag.end());
                table[order].insert(std::move(bag));
                return;
            }
            for (int j = 0; j <= fs[i].m; ++j) {
                PointBag next = bag;
                PointBag mine = factor_points_after(fs[i], j, right);
                next.insert(next.end(), mine.begin(), mine.end());
                walk(i + 1, order + static_cast<std::int64_t>(fs[i].rank) * j,
                     std::move(next));
            }
        };
    walk(0, 0, {});
    return table;
}

inline PointBag shift_bag(PointBag bag, Rat t) {
    for (Point& p : bag) p.second = p.second + t;
    return bag;
}

}  // namespace detail

// The k >= 1 for which some splitting of right orders over the first side
// (summing to k) and left orders over the second (summing to k-1) leaves
// equal supports, the first side's shifted up by one half.
inline std::set<std::int64_t> candidate_indices(const std::vector<PlainFactor>& ms,
                                                const std::vector<PlainFactor>& ns) {
    const auto m_table = detail::side_table(ms, true);
    const auto n_table = detail::side_table(ns, false);
    std::set<std::int64_t> out;
    for (const auto& [k, bags] : m_table) {
        if (k < 1) continue;
        const auto it = n_table.find(k - 1);
        if (it == n_table.end()) continue;
        for (const PointBag& bag : bags) {
            if (it->second.count(detail::shift_bag(bag, Rat(1, 2)))) {
                out.insert(k);
                break;
            }
        }
    }
    return out;
}

// ----- support-partition oracle ------------------------------------------

// Every multisegment whose support is exactly the given multiset. The first
// remaining point is minimal within its own cuspidal line, so some segment
// must begin there; branch over that segment's length.
inline std::set<branchlaw::Multisegment> all_multisegments_with_support(
    const branchlaw::Support& support) {
    std::set<branchlaw::Multisegment> out;
    std::function<void(std::vector<branchlaw::ShiftedCuspidal>, branchlaw::Multisegment)>
        walk = [&](std::vector<branchlaw::ShiftedCuspidal> left,
                   branchlaw::Multisegment acc) {
            if (left.empty()) {
                out.insert(std::move(acc));
                return;
            }
            const branchlaw::ShiftedCuspidal start = left.front();
            for (int len = 1;; ++len) {
                std::vector<branchlaw::ShiftedCuspidal> rest = left;
                bool ok = true;
                for (int s = 0; s < len; ++s) {
                    const branchlaw::ShiftedCuspidal want{start.base,
                                                          start.exponent + Rat(s)};
                    auto it = std::find(rest.begin(), rest.end(), want);
                    if (it == rest.end()) {
                        ok = false;
                        break;
                    }
                    rest.erase(it);
                }
                if (!ok) break;
                branchlaw::Multisegment bigger = acc;
                bigger.add(branchlaw::Segment(start.base, start.exponent,
                                              start.exponent + Rat(len - 1)));
                walk(std::move(rest), std::move(bigger));
            }
        };
    std::vector<branchlaw::ShiftedCuspidal> pts(support.begin(), support.end());
    std::sort(pts.begin(), pts.end());
    walk(std::move(pts), branchlaw::Multisegment());
    return out;
}

inline bool pairwise_unlinked(const branchlaw::Multisegment& ms) {
    std::vector<branchlaw::Segment> v(ms.begin(), ms.end());
    for (std::size_t i = 0; i < v.size(); ++i)
        for (std::size_t j = i + 1; j < v.size(); ++j)
            if (branchlaw::linked(v[i], v[j])) return false;
    return true;
}

// The unique pairwise-unlinked multisegment with the given support; throws
// if none or several exist (the tests rely on uniqueness holding).
inline branchlaw::Multisegment unlinked_from_support(const branchlaw::Support& support) {
    std::set<branchlaw::Multisegment> found;
    for (const branchlaw::Multisegment& ms : all_multisegments_with_support(support))
        if (pairwise_unlinked(ms)) found.insert(ms);
    if (found.size() != 1)
        throw std::logic_error("expected exactly one unlinked multisegment, got " +
                               std::to_string(found.size()));
    return *found.begin();
}

}  // namespace oracle
