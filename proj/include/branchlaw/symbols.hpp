#pragma once

// Cuspidal lines. A CuspidalSymbol is an abstract unitary supercuspidal of
// some rank; the engine never needs more than its identity, its rank, and
// the identity of its contragredient. Twists by |det|^s are tracked as an
// exact rational exponent alongside the symbol.

#include <optional>
#include <string>
#include <tuple>
#include <utility>

#include "rational.hpp"

namespace branchlaw {

struct CuspidalSymbol {
    std::string name;
    int rank = 1;
    // Name of the contragredient line when it differs from this one. Empty
    // means self-dual. Excluded from equality so dual(dual(x)) == x even
    // though the two carry mirror-image partner fields.
    std::optional<std::string> partner;

    CuspidalSymbol() = default;
    CuspidalSymbol(std::string n, int r) : name(std::move(n)), rank(r) {}
    CuspidalSymbol(std::string n, int r, std::string p)
        : name(std::move(n)), rank(r), partner(std::move(p)) {}

    bool self_dual() const { return !partner.has_value(); }

    CuspidalSymbol dual() const {
        if (!partner) return *this;
        return CuspidalSymbol(*partner, rank, name);
    }

    friend bool operator==(const CuspidalSymbol& x, const CuspidalSymbol& y) {
        return x.name == y.name && x.rank == y.rank;
    }
    friend bool operator!=(const CuspidalSymbol& x, const CuspidalSymbol& y) { return !(x == y); }
    friend bool operator<(const CuspidalSymbol& x, const CuspidalSymbol& y) {
        return std::tie(x.name, x.rank) < std::tie(y.name, y.rank);
    }
};

// A cuspidal twisted by |det|^exponent: one point on a cuspidal line.
struct ShiftedCuspidal {
    CuspidalSymbol base;
    Rat exponent;

    ShiftedCuspidal() = default;
    ShiftedCuspidal(CuspidalSymbol b, Rat e) : base(std::move(b)), exponent(e) {}

    friend bool operator==(const ShiftedCuspidal& x, const ShiftedCuspidal& y) {
        return x.base == y.base && x.exponent == y.exponent;
    }
    friend bool operator<(const ShiftedCuspidal& x, const ShiftedCuspidal& y) {
        if (x.base != y.base) return x.base < y.base;
        return x.exponent < y.exponent;
    }
};

}  // namespace branchlaw
