#pragma once

// Exhaustive enumeration of Arthur-type representations over a finite
// alphabet of Speh factors, used by the verification suites. Enumeration is
// canonical: factors are chosen with non-decreasing alphabet index, so each
// multiset appears exactly once and the output order is deterministic.

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "arthur.hpp"

namespace branchlaw {

struct FactorAlphabet {
    std::vector<CuspidalSymbol> lines;
    std::vector<Rat> twists{Rat(0)};
    // Admit a factor only if every exponent in its segment data lies within
    // [window_lo, window_hi].
    Rat window_lo{-1};
    Rat window_hi{1};
};

// Two rank-1 lines, one self-dual and one with a distinct partner, unit
// exponent window: dense in small dimensions and exercises dualization.
inline FactorAlphabet default_alphabet() {
    FactorAlphabet a;
    a.lines.push_back(CuspidalSymbol("1", 1));
    a.lines.push_back(CuspidalSymbol("2", 1, "2^"));
    return a;
}

// Every admissible factor of dimension <= max_dim over the alphabet. The
// extreme exponents of a factor's data sit at twist +- (m+d-2)/2.
inline std::vector<SpehRep> factor_universe(const FactorAlphabet& a,
                                            std::int64_t max_dim) {
    std::vector<SpehRep> out;
    for (const CuspidalSymbol& line : a.lines)
        for (const Rat& t : a.twists)
            for (int m = 1; static_cast<std::int64_t>(line.rank) * m <= max_dim; ++m)
                for (int d = 1;
                     static_cast<std::int64_t>(line.rank) * m * d <= max_dim; ++d) {
                    const Rat reach{m + d - 2, 2};
                    if (t + reach > a.window_hi || t - reach < a.window_lo) continue;
                    out.push_back(SpehRep(line, m, d, 0, t));
                }
    std::sort(out.begin(), out.end());
    return out;
}

namespace detail {

inline void enumerate_from(const std::vector<SpehRep>& universe, std::size_t first,
                           std::int64_t dim_left, ArthurTypeRep& acc,
                           const std::function<void(const ArthurTypeRep&)>& sink) {
    if (dim_left == 0) {
        sink(acc);
        return;
    }
    for (std::size_t i = first; i < universe.size(); ++i) {
        if (universe[i].dimension() > dim_left) continue;
        acc.add(universe[i]);
        enumerate_from(universe, i, dim_left - universe[i].dimension(), acc, sink);
        acc.remove_one(universe[i]);
    }
}

}  // namespace detail

// Every multiset of alphabet factors with total dimension exactly dim.
inline void enumerate_arthur_reps(std::int64_t dim, const FactorAlphabet& alphabet,
                                  const std::function<void(const ArthurTypeRep&)>& sink) {
    if (dim < 0) return;
    const std::vector<SpehRep> universe = factor_universe(alphabet, dim);
    ArthurTypeRep acc;
    detail::enumerate_from(universe, 0, dim, acc, sink);
}

inline std::vector<ArthurTypeRep> enumerate_arthur_reps(std::int64_t dim,
                                                        const FactorAlphabet& alphabet) {
    std::vector<ArthurTypeRep> out;
    enumerate_arthur_reps(dim, alphabet, [&](const ArthurTypeRep& x) { out.push_back(x); });
    return out;
}

}  // namespace branchlaw
