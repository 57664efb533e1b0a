#pragma once

// Recursive decider for the branching predicate. Each step peels the factor
// of largest m+d: if it lives on the big side, its highest derivative must
// appear on the small side (nothing to remove at d = 1) and both are swapped
// out for a fresh cuspidal placeholder; if it lives on the small side, a
// rank-2 cuspidal is minted onto that side and the two representations trade
// places. Cuspidal-only pairs are always relevant.

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "arthur.hpp"
#include "errors.hpp"

namespace branchlaw {

struct RecursionStep {
    int case_id = 1;  // 1 = peel from the big side, 2 = swap sides
    std::optional<SpehRep> removed_m;
    std::optional<SpehRep> removed_n;
    std::optional<SpehRep> minted;
};

struct RecursionOutcome {
    bool relevant = false;
    std::vector<RecursionStep> trace;
};

namespace detail {

// First factor attaining the largest m+d, in the representation's canonical
// order; 0 on an empty representation (below any real factor's value of 2).
inline int max_depth(const ArthurTypeRep& x, std::size_t& argmax) {
    int best = 0;
    argmax = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        const SpehRep& f = x.factors()[i];
        if (f.m + f.d > best) {
            best = f.m + f.d;
            argmax = i;
        }
    }
    return best;
}

}  // namespace detail

inline RecursionOutcome decide_recursive(ArthurTypeRep m, ArthurTypeRep n) {
    if (m.dimension() != n.dimension() + 1)
        throw DimensionError("recursive decider requires corank 1");
    RecursionOutcome out;
    for (;;) {
        if (m.all_cuspidal() && n.all_cuspidal()) {
            out.relevant = true;
            return out;
        }
        std::size_t im = 0, in = 0;
        const int depth_m = detail::max_depth(m, im);
        const int depth_n = detail::max_depth(n, in);
        if (depth_m >= depth_n) {
            const SpehRep p1 = m.factors()[im];
            std::optional<SpehRep> removed_n;
            if (p1.d >= 2) {
                const SpehRep want(p1.rho, p1.m, p1.d - 1, 0, p1.twist);
                if (!n.remove_one(want)) {
                    out.trace.push_back({1, p1, std::nullopt, std::nullopt});
                    out.relevant = false;
                    return out;
                }
                removed_n = want;
            }
            const SpehRep fresh(mint_fresh_symbol(p1.rho.rank * p1.m, m, n), 1, 1);
            m.remove_one(p1);
            m.add(fresh);
            out.trace.push_back({1, p1, removed_n, fresh});
        } else {
            const SpehRep fresh(mint_fresh_symbol(2, m, n), 1, 1);
            ArthurTypeRep grown = n;
            grown.add(fresh);
            n = std::move(m);
            m = std::move(grown);
            out.trace.push_back({2, std::nullopt, std::nullopt, fresh});
        }
    }
}

}  // namespace branchlaw
