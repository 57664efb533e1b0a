#pragma once

// Arthur-type representations: finite multisets of Speh factors, together
// with the equivalent parameter form, support computations, duals, and the
// product-level derivative bookkeeping.

#include <algorithm>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "errors.hpp"
#include "speh.hpp"

namespace branchlaw {

// A product of Speh representations. Stored sorted: equality is multiset
// equality, which is exactly the commutativity and unique-factorization
// statement for such products.
class ArthurTypeRep {
public:
    ArthurTypeRep() = default;
    explicit ArthurTypeRep(std::vector<SpehRep> fs) : factors_(std::move(fs)) {
        for (const SpehRep& f : factors_)
            if (f.k != 0) throw std::invalid_argument("arthur-type factors must have k = 0");
        std::sort(factors_.begin(), factors_.end());
    }

    void add(SpehRep f) {
        if (f.k != 0) throw std::invalid_argument("arthur-type factors must have k = 0");
        auto it = std::upper_bound(factors_.begin(), factors_.end(), f);
        factors_.insert(it, std::move(f));
    }

    bool remove_one(const SpehRep& f) {
        auto it = std::lower_bound(factors_.begin(), factors_.end(), f);
        if (it == factors_.end() || *it != f) return false;
        factors_.erase(it);
        return true;
    }

    bool empty() const { return factors_.empty(); }
    std::size_t size() const { return factors_.size(); }
    const std::vector<SpehRep>& factors() const { return factors_; }
    auto begin() const { return factors_.begin(); }
    auto end() const { return factors_.end(); }

    std::int64_t dimension() const {
        std::int64_t n = 0;
        for (const SpehRep& f : factors_) n += f.dimension();
        return n;
    }

    bool all_cuspidal() const {
        return std::all_of(factors_.begin(), factors_.end(),
                           [](const SpehRep& f) { return f.cuspidal(); });
    }
    // Generic: trivial Arthur SL2 part throughout, i.e. every factor tempered.
    bool generic() const {
        return std::all_of(factors_.begin(), factors_.end(),
                           [](const SpehRep& f) { return f.d == 1; });
    }

    friend bool operator==(const ArthurTypeRep& x, const ArthurTypeRep& y) {
        return x.factors_ == y.factors_;
    }
    friend bool operator!=(const ArthurTypeRep& x, const ArthurTypeRep& y) { return !(x == y); }
    friend bool operator<(const ArthurTypeRep& x, const ArthurTypeRep& y) {
        return x.factors_ < y.factors_;
    }

private:
    std::vector<SpehRep> factors_;
};

// The parameter form: each factor u_rho(m,d) seen as the summand
// rho (x) Sym^{m-1} (x) Sym^{d-1}.
struct ArthurSummand {
    CuspidalSymbol rho;
    int tempered_m = 1;
    int arthur_d = 1;

    friend bool operator==(const ArthurSummand& x, const ArthurSummand& y) {
        return x.rho == y.rho && x.tempered_m == y.tempered_m && x.arthur_d == y.arthur_d;
    }
    friend bool operator<(const ArthurSummand& x, const ArthurSummand& y) {
        return std::tie(x.rho, x.tempered_m, x.arthur_d) <
               std::tie(y.rho, y.tempered_m, y.arthur_d);
    }
};

struct ArthurParameter {
    std::vector<ArthurSummand> summands;  // kept sorted

    std::int64_t dimension() const {
        std::int64_t n = 0;
        for (const ArthurSummand& s : summands)
            n += static_cast<std::int64_t>(s.rho.rank) * s.tempered_m * s.arthur_d;
        return n;
    }
    friend bool operator==(const ArthurParameter& x, const ArthurParameter& y) {
        return x.summands == y.summands;
    }
};

inline ArthurParameter arthur_parameter(const ArthurTypeRep& x) {
    ArthurParameter p;
    for (const SpehRep& f : x)
        p.summands.push_back(ArthurSummand{f.rho, f.m, f.d});
    std::sort(p.summands.begin(), p.summands.end());
    return p;
}

inline ArthurTypeRep arthur_type_rep(const ArthurParameter& p) {
    ArthurTypeRep x;
    for (const ArthurSummand& s : p.summands) x.add(SpehRep(s.rho, s.tempered_m, s.arthur_d));
    return x;
}

// Union of the factors' segment data: the multisegment the deciders hand to
// the weak-relevance predicate.
inline Multisegment zelevinsky_union(const ArthurTypeRep& x) {
    Multisegment out;
    for (const SpehRep& f : x)
        for (const Segment& s : zelevinsky_data(f)) out.add(s);
    return out;
}

inline Support cuspidal_support(const Multisegment& ms) { return support(ms); }
inline Support cuspidal_support(const SpehRep& u) { return support(zelevinsky_data(u)); }
inline Support cuspidal_support(const ArthurTypeRep& x) {
    return support(zelevinsky_union(x));
}

// Set-valued variant (distinct points only).
inline Support cuspidal_support_set(const Support& sup) {
    Support out = sup;
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

// Membership in the line closure: same cuspidal line, integer twist apart.
inline bool cupp_z_contains(const Support& sup, const ShiftedCuspidal& c) {
    return std::any_of(sup.begin(), sup.end(), [&](const ShiftedCuspidal& x) {
        return x.base == c.base && (x.exponent - c.exponent).is_integer();
    });
}

inline std::int64_t level(const ArthurTypeRep& x) {
    std::int64_t n = 0;
    for (const SpehRep& f : x) n += level(f);
    return n;
}

// Factorwise d -> d-1, dropping factors that vanish.
inline ArthurTypeRep highest_derivative(const ArthurTypeRep& x) {
    ArthurTypeRep out;
    for (const SpehRep& f : x)
        if (auto h = highest_derivative(f)) out.add(*h);
    return out;
}

inline SpehRep dualize(const SpehRep& f) {
    return SpehRep(f.rho.dual(), f.m, f.d, f.k, -f.twist);
}

inline ArthurTypeRep dualize(const ArthurTypeRep& x) {
    ArthurTypeRep out;
    for (const SpehRep& f : x) out.add(dualize(f));
    return out;
}

// Deterministic fresh cuspidal lines for the recursion and the model
// reductions: #f1, #f2, ... at the first index colliding with no line (or
// dual partner line) already in scope. Minted symbols are self-dual.
inline std::set<std::string> line_names_in_scope(const ArthurTypeRep& x) {
    std::set<std::string> names;
    for (const SpehRep& f : x) {
        names.insert(f.rho.name);
        if (f.rho.partner) names.insert(*f.rho.partner);
    }
    return names;
}

inline CuspidalSymbol mint_fresh_symbol(int rank, const std::set<std::string>& taken) {
    for (int i = 1;; ++i) {
        std::string name = "#f" + std::to_string(i);
        if (!taken.count(name)) return CuspidalSymbol(std::move(name), rank);
    }
}

inline CuspidalSymbol mint_fresh_symbol(int rank, const ArthurTypeRep& a,
                                        const ArthurTypeRep& b) {
    std::set<std::string> taken = line_names_in_scope(a);
    std::set<std::string> more = line_names_in_scope(b);
    taken.insert(more.begin(), more.end());
    return mint_fresh_symbol(rank, taken);
}

}  // namespace branchlaw
