#pragma once

// Model taxonomy and the reduction of every model problem to the basic
// corank-1 problem. Reductions only ever augment a side by a freshly minted
// cuspidal and dualize; both moves preserve the branching answer, which is
// why the final answer can be read off the original pair directly.

#include <string>
#include <utility>
#include <vector>

#include "arthur.hpp"
#include "errors.hpp"
#include "relevance.hpp"

namespace branchlaw::models {

enum class ModelKind { Basic, Bessel, FourierJacobi, RankinSelberg, EqualRankFJ };

struct ModelSpec {
    ModelKind kind = ModelKind::Basic;
    // Bessel/FourierJacobi use (m1, m2, r); RankinSelberg keeps its single m
    // in m2 (it is the m1 = 0 Bessel); Basic and EqualRankFJ take none.
    int m1 = 0;
    int m2 = 0;
    int r = 0;
};

struct BranchingProblem {
    ArthurTypeRep big;
    ArthurTypeRep small;
    ModelSpec model;
};

struct ReductionStep {
    std::string rule;
    std::string note;
};

struct Reduction {
    BranchingProblem problem;
    std::vector<ReductionStep> trace;
};

// Checks the model's parameter ranges and its dimension equations against
// the two representations; throws naming the violated equation.
inline void validate(const BranchingProblem& p) {
    const std::int64_t big = p.big.dimension();
    const std::int64_t small = p.small.dimension();
    const ModelSpec& m = p.model;
    if (m.m1 < 0 || m.m2 < 0 || m.r < 0)
        throw DimensionError("model parameters must be non-negative");
    switch (m.kind) {
        case ModelKind::Basic:
            if (big != small + 1)
                throw DimensionError("basic model requires big dim = small dim + 1");
            return;
        case ModelKind::Bessel:
            if (big != m.m1 + m.m2 + m.r + 1)
                throw DimensionError("bessel model requires big dim = m1 + m2 + r + 1");
            if (small != m.r)
                throw DimensionError("bessel model requires small dim = r");
            return;
        case ModelKind::RankinSelberg:
            if (big != m.m2 + m.r + 1)
                throw DimensionError("rankin-selberg model requires big dim = m + r + 1");
            if (small != m.r)
                throw DimensionError("rankin-selberg model requires small dim = r");
            return;
        case ModelKind::FourierJacobi:
            if (m.m1 < 1 || m.m2 < 1 || m.r < 1)
                throw DimensionError("fourier-jacobi model requires m1, m2, r >= 1");
            if (big != m.m1 + m.m2 + m.r)
                throw DimensionError("fourier-jacobi model requires big dim = m1 + m2 + r");
            if (small != m.r)
                throw DimensionError("fourier-jacobi model requires small dim = r");
            return;
        default:
            if (big != small)
                throw DimensionError("equal-rank model requires equal dimensions");
            return;
    }
}

// Rewrites the problem as a basic one. Bessel and Rankin-Selberg transfer in
// one step; Fourier-Jacobi first trades the model for its mirror on the
// dualized pair, then transfers; the equal-rank variant only augments by a
// character. The answer is preserved at every step.
inline Reduction reduce_to_basic(const BranchingProblem& p) {
    validate(p);
    Reduction out;
    out.problem.model = ModelSpec{ModelKind::Basic, 0, 0, 0};
    switch (p.model.kind) {
        case ModelKind::Basic:
            out.problem = p;
            return out;
        case ModelKind::Bessel:
        case ModelKind::RankinSelberg: {
            const int rank = p.model.m1 + p.model.m2 + 2;
            const SpehRep sigma(mint_fresh_symbol(rank, p.big, p.small), 1, 1);
            out.problem.big = dualize(p.small);
            out.problem.big.add(sigma);
            out.problem.small = dualize(p.big);
            out.trace.push_back(
                {"bessel-to-basic",
                 "augment the dualized small side by a fresh cuspidal of rank " +
                     std::to_string(rank) + " and pair it with the dualized big side"});
            return out;
        }
        case ModelKind::FourierJacobi: {
            out.trace.push_back(
                {"fj-dual-swap",
                 "trade the model for its mirror with the two index parameters "
                 "exchanged, on the dualized pair"});
            const int rank = p.model.m1 + p.model.m2 + 1;
            const SpehRep sigma(mint_fresh_symbol(rank, p.big, p.small), 1, 1);
            out.problem.big = p.small;
            out.problem.big.add(sigma);
            out.problem.small = p.big;
            out.trace.push_back(
                {"fj-transfer",
                 "augment the small side by a fresh cuspidal of rank " +
                     std::to_string(rank) +
                     "; the two dualizations cancel against the first step"});
            return out;
        }
        default: {
            const SpehRep chi(mint_fresh_symbol(1, p.big, p.small), 1, 1);
            out.problem.big = p.big;
            out.problem.big.add(chi);
            out.problem.small = p.small;
            out.trace.push_back(
                {"equal-rank-augment",
                 "augment the big side by a fresh character to reach corank 1"});
            return out;
        }
    }
}

// The branching answer itself is model-independent once the dimension
// equations hold: it is the matching predicate on the original pair.
inline bool model_answer(const BranchingProblem& p) {
    validate(p);
    return relevant(p.big, p.small).has_value();
}

struct ExtFacts {
    bool hom_dim_at_most_one = true;
    bool ext_finite = true;
    bool ext_vanishes_above_zero = false;
};

// Constant bounds, plus the vanishing flag that needs both sides generic.
inline ExtFacts multiplicity_and_ext_facts(const BranchingProblem& p) {
    validate(p);
    return ExtFacts{true, true, p.big.generic() && p.small.generic()};
}

}  // namespace branchlaw::models
