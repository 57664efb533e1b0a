#pragma once

// Degree predictors for branching beyond multiplicity one. The candidate
// filter collects every degree k at which some splitting of derivative
// orders leaves matching cuspidal supports; the generic-side rule pins the
// unique possibly-nonzero degree when at least one input is generic.

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <vector>

#include "arthur.hpp"
#include "errors.hpp"
#include "speh.hpp"

namespace branchlaw {

namespace detail {

// All reachable (total derivative order, combined support) pairs across the
// factors of one side. Orders are group-theoretic, rank times row count;
// supports are deduplicated per order to keep the table small.
inline std::map<std::int64_t, std::set<Support>> derivative_support_table(
    const ArthurTypeRep& x, bool right) {
    std::map<std::int64_t, std::set<Support>> table;
    table[0].insert(Support{});
    for (const SpehRep& f : x) {
        std::map<std::int64_t, std::set<Support>> grown;
        for (int j = 0; j <= f.m; ++j) {
            const SpehDerivative der =
                right ? speh_right_derivative(f, j) : speh_left_derivative(f, j);
            const Support mine = support(der.data);
            const std::int64_t order = static_cast<std::int64_t>(f.rho.rank) * j;
            for (const auto& [total, supports] : table)
                for (const Support& s : supports) {
                    Support merged = s;
                    merged.insert(merged.end(), mine.begin(), mine.end());
                    std::sort(merged.begin(), merged.end());
                    grown[total + order].insert(std::move(merged));
                }
        }
        table = std::move(grown);
    }
    return table;
}

}  // namespace detail

// Degrees k >= 1 admitting a splitting: right orders over m summing to k,
// left orders over n summing to k-1, with the m-side support shifted up by
// one half equal to the n-side support. A superset of the degrees that can
// actually contribute.
inline std::set<std::int64_t> candidate_derivative_indices(const ArthurTypeRep& m,
                                                           const ArthurTypeRep& n) {
    if (m.dimension() != n.dimension() + 1)
        throw DimensionError("candidate filter requires corank 1");
    const auto m_table = detail::derivative_support_table(m, true);
    const auto n_table = detail::derivative_support_table(n, false);
    std::set<std::int64_t> out;
    for (const auto& [k, supports] : m_table) {
        if (k < 1) continue;
        const auto it = n_table.find(k - 1);
        if (it == n_table.end()) continue;
        for (const Support& s : supports) {
            if (it->second.count(shift_support(s, Rat(1, 2)))) {
                out.insert(k);
                break;
            }
        }
    }
    return out;
}

namespace detail {

// The generic factorization of a support, as Speh factors: each segment
// [a,b] on the line of rho becomes u_rho(b-a+1, 1) twisted to its midpoint.
inline std::vector<SpehRep> generic_factors_of_support(const Support& s) {
    std::vector<SpehRep> out;
    for (const Segment& seg : generic_from_support(s)) {
        const Rat mid = (seg.a + seg.b) * Rat(1, 2);
        out.push_back(SpehRep(seg.base, static_cast<int>(seg.length()), 1, 0, mid));
    }
    return out;
}

// Whether the generic side contains the generic envelope of the other
// side's highest derivative, with a tempered remainder.
inline bool generic_side_admits(const ArthurTypeRep& generic_side,
                                const ArthurTypeRep& other) {
    ArthurTypeRep rest = generic_side;
    for (const SpehRep& need :
         generic_factors_of_support(cuspidal_support(highest_derivative(other))))
        if (!rest.remove_one(need)) return false;
    for (const SpehRep& f : rest)
        if (f.twist != Rat(0)) return false;
    return true;
}

}  // namespace detail

// The unique degree that can carry a nonzero extension when at least one of
// the two inputs is generic; empty when the existence test fails.
inline std::optional<std::int64_t> generic_ext_index(const ArthurTypeRep& m,
                                                     const ArthurTypeRep& n) {
    if (m.dimension() != n.dimension() + 1)
        throw DimensionError("generic degree rule requires corank 1");
    if (m.generic() && n.generic()) return n.dimension() + 1;
    if (m.generic()) {
        if (!detail::generic_side_admits(m, n)) return std::nullopt;
        return level(n) + 1;
    }
    if (n.generic()) {
        if (!detail::generic_side_admits(n, m)) return std::nullopt;
        return level(m);
    }
    throw std::domain_error("generic degree rule needs a generic side");
}

}  // namespace branchlaw
