#pragma once

// The matching decider for the branching predicate: two Arthur-type
// representations are relevant when their factors admit a pairing in which
// each matched factor is the highest derivative of its partner and every
// unmatched factor is tempered. Two implementations: an exhaustive
// backtracking reference and a bipartite-matching accelerator; tests hold
// them equal.

#include <cstdint>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "arthur.hpp"
#include "errors.hpp"

namespace branchlaw {

struct RelevanceWitness {
    // first = factor of M, second = factor of N = first^-
    std::vector<std::pair<SpehRep, SpehRep>> p_pairs;
    // first = factor of M = second^-, second = factor of N
    std::vector<std::pair<SpehRep, SpehRep>> q_pairs;
    std::vector<SpehRep> free_m;
    std::vector<SpehRep> free_n;
};

// Re-check a witness against its defining equations and against the pair it
// claims to partition.
inline bool validate_witness(const RelevanceWitness& w, const ArthurTypeRep& m,
                             const ArthurTypeRep& n) {
    ArthurTypeRep m_used, n_used;
    for (const auto& [u, v] : w.p_pairs) {
        auto h = u.d >= 2 ? highest_derivative(u) : std::nullopt;
        if (!h || *h != v) return false;
        m_used.add(u);
        n_used.add(v);
    }
    for (const auto& [u, v] : w.q_pairs) {
        auto h = v.d >= 2 ? highest_derivative(v) : std::nullopt;
        if (!h || *h != u) return false;
        m_used.add(u);
        n_used.add(v);
    }
    for (const SpehRep& u : w.free_m) {
        if (u.d != 1) return false;
        m_used.add(u);
    }
    for (const SpehRep& v : w.free_n) {
        if (v.d != 1) return false;
        n_used.add(v);
    }
    return m_used == m && n_used == n;
}

namespace detail {

struct MatchState {
    const std::vector<SpehRep>* mf;
    const std::vector<SpehRep>* nf;
    std::uint64_t avail;                     // bit j set = N-factor j unused
    std::vector<int> choice;                 // per M index: -1 free, else N index
    std::set<std::pair<std::size_t, std::uint64_t>> failed;
};

inline bool leftovers_tempered(const MatchState& st) {
    for (std::size_t j = 0; j < st.nf->size(); ++j)
        if ((st.avail >> j) & 1u)
            if ((*st.nf)[j].d != 1) return false;
    return true;
}

inline bool match_from(MatchState& st, std::size_t i) {
    if (i == st.mf->size()) return leftovers_tempered(st);
    if (st.failed.count({i, st.avail})) return false;
    const SpehRep& u = (*st.mf)[i];

    auto try_partner = [&](const SpehRep& want) -> bool {
        for (std::size_t j = 0; j < st.nf->size(); ++j) {
            if (!((st.avail >> j) & 1u) || (*st.nf)[j] != want) continue;
            st.avail &= ~(std::uint64_t{1} << j);
            st.choice[i] = static_cast<int>(j);
            if (match_from(st, i + 1)) return true;
            st.avail |= std::uint64_t{1} << j;
            break;  // identical copies are interchangeable; one try suffices
        }
        return false;
    };

    if (u.d >= 2 && try_partner(SpehRep(u.rho, u.m, u.d - 1, 0, u.twist))) return true;
    if (try_partner(SpehRep(u.rho, u.m, u.d + 1, 0, u.twist))) return true;
    if (u.d == 1) {
        st.choice[i] = -1;
        if (match_from(st, i + 1)) return true;
    }
    st.failed.insert({i, st.avail});
    return false;
}

inline RelevanceWitness assemble_witness(const std::vector<SpehRep>& mf,
                                         const std::vector<SpehRep>& nf,
                                         const std::vector<int>& choice) {
    RelevanceWitness w;
    std::vector<bool> n_used(nf.size(), false);
    for (std::size_t i = 0; i < mf.size(); ++i) {
        if (choice[i] < 0) {
            w.free_m.push_back(mf[i]);
            continue;
        }
        const SpehRep& v = nf[static_cast<std::size_t>(choice[i])];
        n_used[static_cast<std::size_t>(choice[i])] = true;
        if (mf[i].d == v.d + 1) {
            w.p_pairs.emplace_back(mf[i], v);
        } else {
            w.q_pairs.emplace_back(mf[i], v);
        }
    }
    for (std::size_t j = 0; j < nf.size(); ++j)
        if (!n_used[j]) w.free_n.push_back(nf[j]);
    return w;
}

}  // namespace detail

// Reference decider: backtracking over role assignments with a failure memo
// keyed on (position, availability).
inline std::optional<RelevanceWitness> relevant(const ArthurTypeRep& m,
                                                const ArthurTypeRep& n) {
    if (n.size() > 64) throw std::invalid_argument("matcher supports at most 64 factors");
    detail::MatchState st;
    st.mf = &m.factors();
    st.nf = &n.factors();
    st.avail = n.size() == 64 ? ~std::uint64_t{0}
                              : ((std::uint64_t{1} << n.size()) - 1);
    st.choice.assign(m.size(), -1);
    if (!detail::match_from(st, 0)) return std::nullopt;
    return detail::assemble_witness(*st.mf, *st.nf, st.choice);
}

namespace detail {

// Augmenting search used by the accelerator. Matching an M node already
// taken by a tempered N node may simply evict it; tempered nodes do not need
// saturation.
struct KuhnState {
    const std::vector<SpehRep>* mf;
    const std::vector<SpehRep>* nf;
    std::vector<std::vector<std::size_t>> adj_m;  // per M index: adjacent N indices
    std::vector<int> match_m;                     // per M index: N index or -1
    std::vector<int> match_n;                     // per N index: M index or -1
    std::vector<bool> seen_m, seen_n;

    bool edge(std::size_t i, std::size_t j) const {
        const SpehRep& u = (*mf)[i];
        const SpehRep& v = (*nf)[j];
        return u.rho == v.rho && u.twist == v.twist && u.m == v.m &&
               (u.d == v.d + 1 || v.d == u.d + 1);
    }

    bool augment_from_m(std::size_t i) {
        for (std::size_t j : adj_m[i]) {
            if (seen_n[j]) continue;
            seen_n[j] = true;
            if (match_n[j] < 0 || augment_from_m(static_cast<std::size_t>(match_n[j]))) {
                match_n[j] = static_cast<int>(i);
                match_m[i] = static_cast<int>(j);
                return true;
            }
        }
        return false;
    }

    bool augment_from_n(std::size_t j) {
        for (std::size_t i = 0; i < mf->size(); ++i) {
            if (seen_m[i] || !edge(i, j)) continue;
            seen_m[i] = true;
            const int j2 = match_m[i];
            if (j2 < 0 || (*nf)[static_cast<std::size_t>(j2)].d == 1 ||
                augment_from_n(static_cast<std::size_t>(j2))) {
                if (j2 >= 0 && match_n[static_cast<std::size_t>(j2)] == static_cast<int>(i))
                    match_n[static_cast<std::size_t>(j2)] = -1;
                match_m[i] = static_cast<int>(j);
                match_n[j] = static_cast<int>(i);
                return true;
            }
        }
        return false;
    }
};

}  // namespace detail

// Accelerated decider: saturate the non-tempered factors of M, then of N, by
// augmenting paths. Agrees with the reference on every input (tested).
inline std::optional<RelevanceWitness> relevant_fast(const ArthurTypeRep& m,
                                                     const ArthurTypeRep& n) {
    detail::KuhnState ks;
    ks.mf = &m.factors();
    ks.nf = &n.factors();
    ks.adj_m.assign(m.size(), {});
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = 0; j < n.size(); ++j)
            if (ks.edge(i, j)) ks.adj_m[i].push_back(j);
    ks.match_m.assign(m.size(), -1);
    ks.match_n.assign(n.size(), -1);

    for (std::size_t i = 0; i < m.size(); ++i) {
        if (m.factors()[i].d == 1) continue;
        ks.seen_n.assign(n.size(), false);
        if (!ks.augment_from_m(i)) return std::nullopt;
    }
    for (std::size_t j = 0; j < n.size(); ++j) {
        if (n.factors()[j].d == 1 || ks.match_n[j] >= 0) continue;
        ks.seen_m.assign(m.size(), false);
        if (!ks.augment_from_n(j)) return std::nullopt;
    }

    std::vector<int> choice(m.size(), -1);
    for (std::size_t i = 0; i < m.size(); ++i) choice[i] = ks.match_m[i];
    RelevanceWitness w = detail::assemble_witness(*ks.mf, *ks.nf, choice);
    for (const SpehRep& u : w.free_m)
        if (u.d != 1) return std::nullopt;
    return w;
}

// Both sides of the displayed degree formula for a relevant corank-1 pair:
// the tempered dimensions on the minus-one side, and on the other side minus
// nothing. Agreement of the two is equivalent to corank 1.
inline std::int64_t ext_index_formula_check(const RelevanceWitness& w) {
    std::int64_t from_m = -1, from_n = 0;
    for (const auto& [u, v] : w.p_pairs) from_m += static_cast<std::int64_t>(u.rho.rank) * u.m;
    for (const SpehRep& u : w.free_m) from_m += static_cast<std::int64_t>(u.rho.rank) * u.m;
    for (const auto& [u, v] : w.q_pairs) from_n += static_cast<std::int64_t>(v.rho.rank) * v.m;
    for (const SpehRep& v : w.free_n) from_n += static_cast<std::int64_t>(v.rho.rank) * v.m;
    if (from_m != from_n)
        throw DimensionError("degree formula sides disagree; witness pair is not of corank 1");
    return from_m;
}

}  // namespace branchlaw
